// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twohilb/matrix.hpp"

using namespace twohilb;

namespace {

const Complex I(0.0, 1.0);

ComplexMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

// Row-reduction rank over C, independent of the SVD route.
int gaussian_rank(ComplexMatrix m, double tol = 1e-9) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        double best = tol;
        for (int r = rank; r < m.rows(); ++r)
            if (std::abs(m(r, col)) > best) {
                best = std::abs(m(r, col));
                pivot = r;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols(); ++c) std::swap(m(rank, c), m(pivot, c));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            Complex factor = m(r, col) / m(rank, col);
            for (int c = 0; c < m.cols(); ++c) m(r, c) -= factor * m(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("kron identity and scalar cases") {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK(approx_eq(kron(i2, i2), ComplexMatrix::identity(4), 0.0));

    std::mt19937 rng(7);
    ComplexMatrix b = random_matrix(3, 2, rng);
    CHECK(approx_eq(kron(ComplexMatrix{{2.0}}, b), Complex(2.0, 0.0) * b, 0.0));
}

TEST_CASE("kron of the flip with the identity permutes basis pairs") {
    // Enumerated by hand from the index formula (i1,i2) -> i1*2 + i2.
    ComplexMatrix x{{0, 1}, {1, 0}};
    ComplexMatrix expected{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    CHECK(approx_eq(kron(x, ComplexMatrix::identity(2)), expected, 0.0));
}

TEST_CASE("kron associativity on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> d(1, 4);
        ComplexMatrix a = random_matrix(d(rng), d(rng), rng);
        ComplexMatrix b = random_matrix(d(rng), d(rng), rng);
        ComplexMatrix c = random_matrix(d(rng), d(rng), rng);
        CHECK(approx_eq(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-12));
    }
}

TEST_CASE("direct sum placement and edge cases") {
    CHECK(direct_sum({}).rows() == 0);
    CHECK(direct_sum({}).cols() == 0);
    CHECK(approx_eq(direct_sum({ComplexMatrix{{1.0}}, ComplexMatrix{{1.0}}}),
                    ComplexMatrix::identity(2), 0.0));

    ComplexMatrix a(2, 1);
    a(0, 0) = 1.0;
    a(1, 0) = 2.0;
    ComplexMatrix b(1, 2);
    b(0, 0) = 3.0;
    b(0, 1) = 4.0;
    ComplexMatrix expected{{1, 0, 0}, {2, 0, 0}, {0, 3, 4}};
    CHECK(approx_eq(direct_sum({a, b}), expected, 0.0));
}

TEST_CASE("direct sum of products is the product of direct sums") {
    std::mt19937 rng(13);
    ComplexMatrix a1 = random_matrix(2, 3, rng), a2 = random_matrix(1, 2, rng);
    ComplexMatrix b1 = random_matrix(3, 2, rng), b2 = random_matrix(2, 2, rng);
    CHECK(approx_eq(direct_sum({a1, a2}) * direct_sum({b1, b2}),
                    direct_sum({a1 * b1, a2 * b2}), 1e-12));
}

TEST_CASE("dagger basics") {
    CHECK(approx_eq(dagger(ComplexMatrix::identity(3)), ComplexMatrix::identity(3), 0.0));
    CHECK(approx_eq(dagger(ComplexMatrix{{I}}), ComplexMatrix{{-I}}, 0.0));

    std::mt19937 rng(17);
    ComplexMatrix a = random_matrix(3, 2, rng);
    ComplexMatrix b = random_matrix(2, 4, rng);
    CHECK(approx_eq(dagger(dagger(a)), a, 0.0));
    CHECK(approx_eq(dagger(a * b), dagger(b) * dagger(a), 1e-12));
    ComplexMatrix c = random_matrix(2, 3, rng);
    CHECK(approx_eq(dagger(kron(a, c)), kron(dagger(a), dagger(c)), 0.0));
}

TEST_CASE("approx_eq tolerance semantics") {
    ComplexMatrix a{{1.0}};
    CHECK(approx_eq(a, a, 0.0));
    CHECK(!approx_eq(ComplexMatrix(2, 2), ComplexMatrix(3, 3), 100.0));
    CHECK(approx_eq(a, ComplexMatrix{{1.0 + 5e-10}}, 1e-9));
    CHECK(!approx_eq(a, ComplexMatrix{{1.0 + 5e-10}}, 1e-10));
}

TEST_CASE("isometry vs unitary") {
    CHECK(is_unitary(ComplexMatrix::identity(5)));
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix col(4, 1);
    col(0, 0) = s;
    col(3, 0) = s;
    CHECK(is_isometry(col));
    CHECK(!is_unitary(col));
}

TEST_CASE("nullspace of full-rank and zero matrices") {
    CHECK(nullspace_basis(ComplexMatrix::identity(2)).cols() == 0);
    ComplexMatrix kernel = nullspace_basis(ComplexMatrix(2, 2));
    CHECK(kernel.cols() == 2);
    CHECK(is_unitary(kernel, 1e-12));
}

TEST_CASE("nullspace columns are orthonormal, annihilated, and count the corank") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> d(1, 6);
        int rows = d(rng), cols = d(rng);
        ComplexMatrix a = random_matrix(rows, cols, rng);
        if (trial % 3 == 0) {
            // Force rank deficiency by copying a column.
            if (cols >= 2)
                for (int i = 0; i < rows; ++i) a(i, cols - 1) = a(i, 0);
        }
        ComplexMatrix k = nullspace_basis(a);
        if (k.cols() > 0) {
            CHECK(is_isometry(k, 1e-9));
            CHECK(approx_eq(a * k, ComplexMatrix(rows, k.cols()), 1e-9));
        }
        CHECK(gaussian_rank(a) + k.cols() == cols);
    }
}

TEST_CASE("nullspace of the shared-environment difference map") {
    // For two copies of the basis-copying interaction on C^2, the
    // consistent joint states are spanned by |00> and |11>.
    ComplexMatrix delta(4, 2);
    delta(0, 0) = 1.0;
    delta(3, 1) = 1.0;
    ComplexMatrix lhs = kron(delta, ComplexMatrix::identity(2));
    ComplexMatrix rhs =
        kron(tensor_swap(2, 2), ComplexMatrix::identity(2)) * kron(ComplexMatrix::identity(2), delta);
    ComplexMatrix k = nullspace_basis(lhs - rhs);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 2);
    CHECK(is_isometry(k, 1e-12));
    // Projector onto the kernel equals |00><00| + |11><11|.
    ComplexMatrix proj = k * dagger(k);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 1.0;
    expected(3, 3) = 1.0;
    CHECK(approx_eq(proj, expected, 1e-12));
}

TEST_CASE("tensor swap") {
    CHECK(approx_eq(tensor_swap(1, 5), ComplexMatrix::identity(5), 0.0));
    ComplexMatrix expected{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    CHECK(approx_eq(tensor_swap(2, 2), expected, 0.0));
    CHECK(approx_eq(tensor_swap(3, 3) * tensor_swap(3, 3), ComplexMatrix::identity(9), 0.0));
}

TEST_CASE("tensor swap conjugates kron factors") {
    std::mt19937 rng(29);
    ComplexMatrix a = random_matrix(2, 3, rng);
    ComplexMatrix b = random_matrix(3, 2, rng);
    ComplexMatrix lhs = tensor_swap(a.rows(), b.rows()) * kron(a, b);
    ComplexMatrix rhs = kron(b, a) * tensor_swap(a.cols(), b.cols());
    CHECK(approx_eq(lhs, rhs, 1e-12));
}

TEST_CASE("zero-dimensional matrices compose") {
    ComplexMatrix tall(1, 0);
    ComplexMatrix wide(0, 1);
    ComplexMatrix product = tall * wide;  // 1x1 zero
    CHECK(product.rows() == 1);
    CHECK(product.cols() == 1);
    CHECK(product(0, 0) == Complex(0.0, 0.0));
    CHECK(kron(tall, ComplexMatrix::identity(3)).rows() == 3);
    CHECK(kron(tall, ComplexMatrix::identity(3)).cols() == 0);
    CHECK(direct_sum({tall, wide}).rows() == 1);
    CHECK(direct_sum({tall, wide}).cols() == 1);
}

TEST_CASE("random unitaries are unitary") {
    std::mt19937 rng(31);
    for (int n : {1, 2, 3, 5}) CHECK(is_unitary(random_unitary(n, rng), 1e-10));
}
