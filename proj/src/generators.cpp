// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/generators.hpp"

#include <cmath>
#include <numbers>

namespace twohilb {

OrthonormalBasis::OrthonormalBasis(int dimension_, std::vector<ComplexMatrix> vectors_,
                                   double tol)
    : dimension(dimension_), vectors(std::move(vectors_)) {
    if (static_cast<int>(vectors.size()) != dimension)
        throw std::invalid_argument("basis must have `dimension` vectors");
    ComplexMatrix gram(dimension, dimension);
    for (int i = 0; i < dimension; ++i) {
        if (vectors[i].rows() != dimension || vectors[i].cols() != 1)
            throw std::invalid_argument("basis vectors must be dimension x 1 columns");
        for (int j = 0; j < dimension; ++j)
            gram(i, j) = frobenius_inner(vectors[i], vectors[j]);
    }
    if (!approx_eq(gram, ComplexMatrix::identity(dimension), tol))
        throw std::invalid_argument("basis is not orthonormal within tolerance");
}

OrthonormalBasis OrthonormalBasis::computational(int d) {
    std::vector<ComplexMatrix> vs;
    for (int k = 0; k < d; ++k) vs.push_back(ComplexMatrix::basis_column(d, k));
    return OrthonormalBasis(d, std::move(vs));
}

OrthonormalBasis OrthonormalBasis::plus_minus() {
    const double s = 1.0 / std::sqrt(2.0);
    return OrthonormalBasis(2, {ComplexMatrix{{s}, {s}}, ComplexMatrix{{s}, {-s}}});
}

OrthonormalBasis OrthonormalBasis::bell() {
    const double s = 1.0 / std::sqrt(2.0);
    return OrthonormalBasis(4, {ComplexMatrix{{s}, {0}, {0}, {s}},
                                ComplexMatrix{{s}, {0}, {0}, {-s}},
                                ComplexMatrix{{0}, {s}, {s}, {0}},
                                ComplexMatrix{{0}, {s}, {-s}, {0}}});
}

OrthonormalBasis OrthonormalBasis::fourier(int d) {
    std::vector<ComplexMatrix> vs;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int k = 0; k < d; ++k) {
        ComplexMatrix v(d, 1);
        for (int a = 0; a < d; ++a) {
            const double angle = 2.0 * std::numbers::pi * k * a / d;
            v(a, 0) = norm * Complex(std::cos(angle), std::sin(angle));
        }
        vs.push_back(std::move(v));
    }
    return OrthonormalBasis(d, std::move(vs));
}

OrthonormalBasis OrthonormalBasis::from_unitary(const ComplexMatrix& u, double tol) {
    if (u.rows() != u.cols()) throw std::invalid_argument("basis unitary must be square");
    std::vector<ComplexMatrix> vs;
    for (int k = 0; k < u.cols(); ++k) {
        ComplexMatrix v(u.rows(), 1);
        for (int i = 0; i < u.rows(); ++i) v(i, 0) = u(i, k);
        vs.push_back(std::move(v));
    }
    return OrthonormalBasis(u.rows(), std::move(vs), tol);
}

ComplexMatrix OrthonormalBasis::change_of_basis() const {
    ComplexMatrix m(dimension, dimension);
    for (int i = 0; i < dimension; ++i)
        for (int a = 0; a < dimension; ++a) m(i, a) = std::conj(vectors[i](a, 0));
    return m;
}

ProjectorFamily::ProjectorFamily(int ambient_, std::vector<ComplexMatrix> projectors_,
                                 double tol)
    : ambient(ambient_), projectors(std::move(projectors_)) {
    ComplexMatrix sum(ambient, ambient);
    for (size_t k = 0; k < projectors.size(); ++k) {
        const ComplexMatrix& p = projectors[k];
        if (p.rows() != ambient || p.cols() != ambient)
            throw std::invalid_argument("projector has wrong ambient dimension");
        if (!approx_eq(p * p, p, tol) || !approx_eq(dagger(p), p, tol))
            throw std::invalid_argument("family member is not an orthogonal projector");
        for (size_t l = 0; l < k; ++l)
            if (!approx_eq(projectors[l] * p, ComplexMatrix(ambient, ambient), tol))
                throw std::invalid_argument("projectors are not pairwise orthogonal");
        sum = sum + p;
    }
    if (!approx_eq(sum, ComplexMatrix::identity(ambient), tol))
        throw std::invalid_argument("projectors do not sum to the identity");
}

OneCell witness_left(int n) {
    if (n < 1) throw std::invalid_argument("witness requires n >= 1");
    std::vector<std::vector<int>> dims(n, std::vector<int>{1});
    return OneCell(TwoHilbObject(1), TwoHilbObject(n), std::move(dims));
}

OneCell witness_right(int n) {
    if (n < 1) throw std::invalid_argument("witness requires n >= 1");
    return OneCell(TwoHilbObject(n), TwoHilbObject(1), {std::vector<int>(n, 1)});
}

TwoCell copy_cell(int n) {
    OneCell src = OneCell::identity(TwoHilbObject(n));
    OneCell tgt = hcomp1(witness_left(n), witness_right(n));  // n x n all-ones
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            entries.push_back(i == j ? ComplexMatrix{{1.0}} : ComplexMatrix(1, 0));
    return TwoCell(std::move(src), std::move(tgt), std::move(entries));
}

TwoCell compare_cell(int n) { return dagger2(copy_cell(n)); }

TwoCell create_cell(int n) {
    if (n < 1) throw std::invalid_argument("create requires n >= 1");
    OneCell src = OneCell::identity(TwoHilbObject(1));
    OneCell tgt = hcomp1(witness_right(n), witness_left(n));  // [[n]]
    return TwoCell(std::move(src), std::move(tgt), {ComplexMatrix::ones_column(n)});
}

TwoCell delete_cell(int n) { return dagger2(create_cell(n)); }

TwoCell nondegenerate_measurement(const OrthonormalBasis& basis) {
    const int d = basis.dimension;
    OneCell src = OneCell::scalar(d);
    OneCell tgt = hcomp1(witness_right(d), witness_left(d));
    return TwoCell(std::move(src), std::move(tgt), {basis.change_of_basis()});
}

TwoCell projective_measurement(const ProjectorFamily& family, double tol) {
    const int d = family.ambient;
    const int n = static_cast<int>(family.projectors.size());
    std::vector<ComplexMatrix> row_blocks;
    std::vector<std::vector<int>> ranks;
    for (const ComplexMatrix& p : family.projectors) {
        ComplexMatrix image = nullspace_basis(ComplexMatrix::identity(d) - p);
        row_blocks.push_back(dagger(image));
        ranks.push_back({image.cols()});
    }
    ComplexMatrix entry = vstack(row_blocks);
    if (!is_unitary(entry, tol))
        throw std::invalid_argument("projective measurement entry failed unitarity");
    OneCell modified(TwoHilbObject(1), TwoHilbObject(n), std::move(ranks));
    OneCell tgt = hcomp1(witness_right(n), modified);
    return TwoCell(OneCell::scalar(d), std::move(tgt), {std::move(entry)});
}

TwoCell controlled_operation(const std::vector<ComplexMatrix>& maps) {
    const int n = static_cast<int>(maps.size());
    if (n < 1) throw std::invalid_argument("controlled operation needs at least one map");
    const int d = maps[0].rows();
    for (const auto& m : maps)
        if (m.rows() != d || m.cols() != d)
            throw std::invalid_argument("controlled maps must be square of equal size");
    OneCell boundary = hcomp1(witness_left(n), OneCell::scalar(d));  // n x 1 of d
    std::vector<ComplexMatrix> entries(maps.begin(), maps.end());
    return TwoCell(boundary, boundary, std::move(entries));
}

TwoCell controlled_phase(const ComplexMatrix& phases, double tol) {
    const int n = phases.rows(), m = phases.cols();
    if (n < 1 || m < 1) throw std::invalid_argument("phase matrix must be nonempty");
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            if (std::abs(std::abs(phases(i, j)) - 1.0) > tol)
                throw std::invalid_argument("controlled phase entries must be unit modulus");
            entries.push_back(ComplexMatrix{{phases(i, j)}});
        }
    OneCell boundary = hcomp1(witness_left(n), witness_right(m));  // n x m all-ones
    return TwoCell(boundary, boundary, std::move(entries));
}

TwoCell bell_state(int d) {
    if (d < 1) throw std::invalid_argument("bell_state requires d >= 1");
    OneCell src = OneCell::identity(TwoHilbObject(1));
    OneCell tgt = hcomp1(OneCell::scalar(d), OneCell::scalar(d));  // [[d^2]]
    ComplexMatrix psi(d * d, 1);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int i = 0; i < d; ++i) psi(i * d + i, 0) = norm;
    return TwoCell(std::move(src), std::move(tgt), {std::move(psi)});
}

TwoCell bell_measurement() {
    OneCell src = hcomp1(OneCell::scalar(2), OneCell::scalar(2));
    OneCell tgt = hcomp1(witness_right(4), witness_left(4));
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix m{{s, 0, 0, s}, {s, 0, 0, -s}, {0, s, s, 0}, {0, s, -s, 0}};
    return TwoCell(std::move(src), std::move(tgt), {std::move(m)});
}

TwoCell bell_corrections() {
    return controlled_operation({ComplexMatrix{{1, 0}, {0, 1}}, ComplexMatrix{{1, 0}, {0, -1}},
                                 ComplexMatrix{{0, 1}, {1, 0}}, ComplexMatrix{{0, 1}, {-1, 0}}});
}

std::vector<ComplexMatrix> weyl_corrections(int d) {
    if (d < 1) throw std::invalid_argument("weyl kit requires d >= 1");
    std::vector<ComplexMatrix> maps;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            // shift^a * phase^b:  |k> -> w^(bk) |k+a mod d>
            ComplexMatrix w(d, d);
            for (int k = 0; k < d; ++k) {
                const double angle = 2.0 * std::numbers::pi * b * k / d;
                w((k + a) % d, k) = Complex(std::cos(angle), std::sin(angle));
            }
            maps.push_back(std::move(w));
        }
    return maps;
}

TwoCell weyl_measurement(int d) { return matched_measurement(weyl_corrections(d)); }

TwoCell matched_measurement(const std::vector<ComplexMatrix>& corrections) {
    const int n = static_cast<int>(corrections.size());
    if (n < 1) throw std::invalid_argument("matched_measurement needs at least one map");
    const int d = corrections[0].rows();
    if (n != d * d)
        throw std::invalid_argument("matched_measurement needs d^2 maps of size d");
    const double t = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix m(n, d * d);
    for (int k = 0; k < n; ++k) {
        const ComplexMatrix& c = corrections[k];
        if (c.rows() != d || c.cols() != d)
            throw std::invalid_argument("matched_measurement maps must be d x d");
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(k, i * d + j) = t * std::conj(c(i, j));
    }
    if (!is_unitary(m))
        throw std::invalid_argument("correction family does not induce an orthonormal basis");
    OneCell src = hcomp1(OneCell::scalar(d), OneCell::scalar(d));
    OneCell tgt = hcomp1(witness_right(n), witness_left(n));
    return TwoCell(std::move(src), std::move(tgt), {std::move(m)});
}

}  // namespace twohilb
