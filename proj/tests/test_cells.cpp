// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twohilb/cells.hpp"
#include "twohilb/generators.hpp"

using namespace twohilb;

namespace {

ComplexMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

OneCell random_one_cell(TwoHilbObject a, TwoHilbObject b, int max_dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<std::vector<int>> dims(b.size, std::vector<int>(a.size));
    for (auto& row : dims)
        for (int& d : row) d = dim(rng);
    return OneCell(a, b, std::move(dims));
}

TwoCell random_two_cell(const OneCell& src, const OneCell& tgt, std::mt19937& rng) {
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j)
            entries.push_back(random_matrix(tgt.dim(i, j), src.dim(i, j), rng));
    return TwoCell(src, tgt, std::move(entries));
}

// An invertible square random entry set on a single boundary.
TwoCell random_invertible_endo(const OneCell& f, std::mt19937& rng) {
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            ComplexMatrix m = random_matrix(f.dim(i, j), f.dim(i, j), rng);
            for (int k = 0; k < m.rows(); ++k) m(k, k) += 3.0;  // keep it nonsingular
            entries.push_back(std::move(m));
        }
    return TwoCell(f, f, std::move(entries));
}

TwoCell invert_entrywise(const TwoCell& alpha) {
    // Gauss-Jordan per entry; fine at these sizes.
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < alpha.rows(); ++i)
        for (int j = 0; j < alpha.cols(); ++j) {
            ComplexMatrix m = alpha.entry(i, j);
            const int n = m.rows();
            ComplexMatrix inv = ComplexMatrix::identity(n);
            for (int col = 0; col < n; ++col) {
                int pivot = col;
                for (int r = col; r < n; ++r)
                    if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
                for (int c = 0; c < n; ++c) {
                    std::swap(m(col, c), m(pivot, c));
                    std::swap(inv(col, c), inv(pivot, c));
                }
                Complex p = m(col, col);
                for (int c = 0; c < n; ++c) {
                    m(col, c) /= p;
                    inv(col, c) /= p;
                }
                for (int r = 0; r < n; ++r) {
                    if (r == col) continue;
                    Complex f = m(r, col);
                    for (int c = 0; c < n; ++c) {
                        m(r, c) -= f * m(col, c);
                        inv(r, c) -= f * inv(col, c);
                    }
                }
            }
            entries.push_back(std::move(inv));
        }
    return TwoCell(alpha.target(), alpha.source(), std::move(entries));
}

}  // namespace

TEST_CASE("one-cell composition matches the dimension product") {
    CHECK(hcomp1(witness_right(3), witness_left(3)) == OneCell::scalar(3));

    OneCell wlwr = hcomp1(witness_left(2), witness_right(2));
    CHECK(wlwr.rows() == 2);
    CHECK(wlwr.cols() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(wlwr.dim(i, j) == 1);

    std::mt19937 rng(3);
    OneCell f = random_one_cell(TwoHilbObject(2), TwoHilbObject(3), 3, rng);
    CHECK(hcomp1(OneCell::identity(TwoHilbObject(3)), f) == f);
    CHECK(hcomp1(f, OneCell::identity(TwoHilbObject(2))) == f);
}

TEST_CASE("one-cell composition rejects object mismatch") {
    CHECK_THROWS_AS(hcomp1(witness_left(2), witness_left(2)), TypeError);
}

TEST_CASE("adjoint transposes dims") {
    CHECK(adjoint1(witness_left(4)) == witness_right(4));
    OneCell f(TwoHilbObject(3), TwoHilbObject(2), {{1, 2, 0}, {3, 1, 4}});
    OneCell fdag = adjoint1(f);
    CHECK(fdag.rows() == 3);
    CHECK(fdag.cols() == 2);
    CHECK(fdag.dim(0, 1) == 3);
    CHECK(adjoint1(fdag) == f);
}

TEST_CASE("vertical composition laws") {
    std::mt19937 rng(5);
    OneCell f = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 3, rng);
    OneCell g = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 3, rng);
    OneCell h = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 3, rng);
    OneCell k = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 3, rng);
    TwoCell a = random_two_cell(f, g, rng);
    TwoCell b = random_two_cell(g, h, rng);
    TwoCell c = random_two_cell(h, k, rng);
    CHECK(eq2(vcomp(identity_2(g), a), a, 0.0));
    CHECK(eq2(vcomp(a, identity_2(f)), a, 0.0));
    CHECK(eq2(vcomp(vcomp(c, b), a), vcomp(c, vcomp(b, a)), 1e-9));
}

TEST_CASE("horizontal composition of identities is the identity of the composite") {
    std::mt19937 rng(9);
    OneCell f = random_one_cell(TwoHilbObject(2), TwoHilbObject(3), 2, rng);
    OneCell g = random_one_cell(TwoHilbObject(3), TwoHilbObject(2), 2, rng);
    CHECK(eq2(hcomp2(identity_2(g), identity_2(f)), identity_2(hcomp1(g, f)), 0.0));
}

TEST_CASE("whiskered creation gives the kron form of the teleport right side") {
    TwoCell rhs = hcomp2(create_cell(4), identity_2(OneCell::scalar(2)));
    CHECK(rhs.source() == OneCell::scalar(2));
    CHECK(rhs.target() == OneCell::scalar(8));
    ComplexMatrix expected = kron(ComplexMatrix::ones_column(4), ComplexMatrix::identity(2));
    CHECK(approx_eq(rhs.entry(0, 0), expected, 0.0));
}

TEST_CASE("identity 2-cells follow the boundary dims, including zero entries") {
    OneCell wl = witness_left(2);
    TwoCell id_wl = identity_2(wl);
    for (int i = 0; i < 2; ++i) CHECK(approx_eq(id_wl.entry(i, 0), ComplexMatrix{{1.0}}, 0.0));

    OneCell with_zero(TwoHilbObject(1), TwoHilbObject(2), {{0}, {3}});
    TwoCell id_z = identity_2(with_zero);
    CHECK(id_z.entry(0, 0).rows() == 0);
    CHECK(id_z.entry(0, 0).cols() == 0);
    CHECK(approx_eq(id_z.entry(1, 0), ComplexMatrix::identity(3), 0.0));
}

TEST_CASE("dagger of 2-cells") {
    std::mt19937 rng(15);
    OneCell f = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 2, rng);
    OneCell g = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 2, rng);
    TwoCell a = random_two_cell(f, g, rng);
    CHECK(eq2(dagger2(identity_2(f)), identity_2(f), 0.0));
    CHECK(eq2(dagger2(dagger2(a)), a, 0.0));
    CHECK(eq2(dagger2(copy_cell(3)), compare_cell(3), 0.0));

    // dagger reverses vertical order and preserves horizontal order.
    TwoCell b = random_two_cell(g, f, rng);
    CHECK(eq2(dagger2(vcomp(b, a)), vcomp(dagger2(a), dagger2(b)), 1e-12));
    OneCell h = random_one_cell(TwoHilbObject(2), TwoHilbObject(3), 2, rng);
    OneCell k = random_one_cell(TwoHilbObject(2), TwoHilbObject(3), 2, rng);
    TwoCell inner = random_two_cell(h, k, rng);
    OneCell p = random_one_cell(TwoHilbObject(3), TwoHilbObject(2), 2, rng);
    OneCell q = random_one_cell(TwoHilbObject(3), TwoHilbObject(2), 2, rng);
    TwoCell outer = random_two_cell(p, q, rng);
    CHECK(eq2(dagger2(hcomp2(outer, inner)), hcomp2(dagger2(outer), dagger2(inner)), 1e-12));
}

TEST_CASE("interchange law on random composable quadruples") {
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> size(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
        TwoHilbObject a(size(rng)), b(size(rng)), c(size(rng));
        OneCell f0 = random_one_cell(a, b, 3, rng);
        OneCell f1 = random_one_cell(a, b, 3, rng);
        OneCell f2 = random_one_cell(a, b, 3, rng);
        OneCell g0 = random_one_cell(b, c, 3, rng);
        OneCell g1 = random_one_cell(b, c, 3, rng);
        OneCell g2 = random_one_cell(b, c, 3, rng);
        TwoCell alpha = random_two_cell(f0, f1, rng);
        TwoCell alpha2 = random_two_cell(f1, f2, rng);
        TwoCell beta = random_two_cell(g0, g1, rng);
        TwoCell beta2 = random_two_cell(g1, g2, rng);
        TwoCell lhs = vcomp(hcomp2(beta2, alpha2), hcomp2(beta, alpha));
        TwoCell rhs = hcomp2(vcomp(beta2, beta), vcomp(alpha2, alpha));
        CHECK(max_entry_diff(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("endomorphism inverses are two-sided") {
    std::mt19937 rng(27);
    for (int trial = 0; trial < 10; ++trial) {
        OneCell f = random_one_cell(TwoHilbObject(2), TwoHilbObject(2), 3, rng);
        TwoCell sigma = random_invertible_endo(f, rng);
        TwoCell tau = invert_entrywise(sigma);
        bool left = eq2(vcomp(sigma, tau), identity_2(f), 1e-8);
        bool right = eq2(vcomp(tau, sigma), identity_2(f), 1e-8);
        CHECK(left == right);
        CHECK(left);
    }
}

TEST_CASE("scalar multiplication") {
    TwoCell rhs = hcomp2(create_cell(4), identity_2(OneCell::scalar(2)));
    CHECK(eq2(scalar_mul(Complex(1.0, 0.0), rhs), rhs, 0.0));
    TwoCell zero = scalar_mul(Complex(0.0, 0.0), rhs);
    CHECK(max_abs_diff(zero.entry(0, 0), ComplexMatrix(8, 2)) == 0.0);
}

TEST_CASE("eq2 distinguishes boundaries") {
    TwoCell a = identity_2(OneCell::scalar(2));
    TwoCell b = identity_2(OneCell::scalar(3));
    CHECK(eq2(a, a, 0.0));
    CHECK(!eq2(a, b, 100.0));
}

TEST_CASE("adjunction cells for a scalar 1-cell") {
    auto [sigma, tau] = adjunction_cells(OneCell::scalar(2));
    ComplexMatrix expected_sigma(4, 1);
    expected_sigma(0, 0) = 1.0;
    expected_sigma(3, 0) = 1.0;
    CHECK(approx_eq(sigma.entry(0, 0), expected_sigma, 0.0));
    CHECK(approx_eq(tau.entry(0, 0), dagger(expected_sigma), 0.0));
}

TEST_CASE("adjunction cells of the left witness are the create/compare pair") {
    const int n = 3;
    auto [sigma, tau] = adjunction_cells(witness_left(n));
    CHECK(eq2(sigma, create_cell(n), 0.0));
    CHECK(eq2(tau, compare_cell(n), 0.0));
}

TEST_CASE("adjunction cells of an identity 1-cell are identities") {
    OneCell id = OneCell::identity(TwoHilbObject(3));
    auto [sigma, tau] = adjunction_cells(id);
    CHECK(eq2(sigma, identity_2(id), 0.0));
    CHECK(eq2(tau, identity_2(id), 0.0));
}

TEST_CASE("associator is an identity permutation on scalar chains") {
    OneCell q = OneCell::scalar(2);
    TwoCell a = associator(q, q, q);
    CHECK(approx_eq(a.entry(0, 0), ComplexMatrix::identity(8), 0.0));

    // Singleton middle summand: witness chain around an identity.
    TwoCell b = associator(witness_left(2), OneCell::identity(TwoHilbObject(2)),
                           witness_right(2));
    CHECK(approx_eq(b.entry(0, 0), ComplexMatrix::identity(2), 0.0));
}

TEST_CASE("associator entries are unitary permutations") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(1, 3);
        TwoHilbObject a(size(rng)), b(size(rng)), c(size(rng)), d(size(rng));
        OneCell f = random_one_cell(a, b, 2, rng);
        OneCell g = random_one_cell(b, c, 2, rng);
        OneCell h = random_one_cell(c, d, 2, rng);
        TwoCell assoc = associator(f, g, h);
        for (int i = 0; i < assoc.rows(); ++i)
            for (int j = 0; j < assoc.cols(); ++j) {
                const ComplexMatrix& e = assoc.entry(i, j);
                if (e.rows() == 0) continue;
                CHECK(is_unitary(e, 1e-12));
                for (int r = 0; r < e.rows(); ++r)
                    for (int col = 0; col < e.cols(); ++col) {
                        double v = std::abs(e(r, col));
                        CHECK((v < 1e-12 || std::abs(v - 1.0) < 1e-12));
                    }
            }
    }
}

TEST_CASE("associator mediates the two bracketings of a triple composite") {
    std::mt19937 rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> size(1, 3);
        TwoHilbObject a(size(rng)), b(size(rng)), c(size(rng)), d(size(rng));
        OneCell f0 = random_one_cell(a, b, 2, rng), f1 = random_one_cell(a, b, 2, rng);
        OneCell g0 = random_one_cell(b, c, 2, rng), g1 = random_one_cell(b, c, 2, rng);
        OneCell h0 = random_one_cell(c, d, 2, rng), h1 = random_one_cell(c, d, 2, rng);
        TwoCell alpha = random_two_cell(f0, f1, rng);
        TwoCell beta = random_two_cell(g0, g1, rng);
        TwoCell gamma = random_two_cell(h0, h1, rng);
        TwoCell left = hcomp2(hcomp2(gamma, beta), alpha);
        TwoCell right = hcomp2(gamma, hcomp2(beta, alpha));
        TwoCell mediated = vcomp(associator(f1, g1, h1), vcomp(left, dagger2(associator(f0, g0, h0))));
        CHECK(eq2(mediated, right, 1e-9));
    }
}

TEST_CASE("snake equations from adjunction data") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 12; ++trial) {
        std::uniform_int_distribution<int> size(1, 3);
        TwoHilbObject a(size(rng)), b(size(rng));
        OneCell f = random_one_cell(a, b, 3, rng);
        OneCell fdag = adjoint1(f);
        auto [sigma, tau] = adjunction_cells(f);

        TwoCell s1 = vcomp(hcomp2(tau, identity_2(f)),
                           vcomp(dagger2(associator(f, fdag, f)), hcomp2(identity_2(f), sigma)));
        CHECK(eq2(s1, identity_2(f), 1e-12));

        TwoCell s2 = vcomp(hcomp2(identity_2(fdag), tau),
                           vcomp(associator(fdag, f, fdag), hcomp2(sigma, identity_2(fdag))));
        CHECK(eq2(s2, identity_2(fdag), 1e-12));
    }
}

TEST_CASE("two-cell construction validates entry shapes") {
    OneCell f = OneCell::scalar(2);
    CHECK_THROWS(TwoCell(f, f, {ComplexMatrix(3, 2)}));
    CHECK_THROWS_AS(vcomp(identity_2(OneCell::scalar(2)), identity_2(OneCell::scalar(3))),
                    TypeError);
}
