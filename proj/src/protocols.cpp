// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/protocols.hpp"

#include <cmath>
#include <limits>

#include "twohilb/frobenius.hpp"

namespace twohilb {

namespace {

/// Insert a fresh witness pair in the middle of the witness composite
/// [[n]] => [[n^2]]; the single entry is the basis-copy map |k> -> |kk>.
TwoCell copy_insertion(int n) {
    return hcomp2(identity_2(witness_right(n)),
                  hcomp2(copy_cell(n), identity_2(witness_left(n))));
}

/// Whisker a 2-cell over the outer factor of a scalar-sector composite
/// [[outer]] o [[inner]], keeping the inner factor fixed.
TwoCell on_outer(const TwoCell& alpha, int inner_dim) {
    return hcomp2(alpha, identity_2(OneCell::scalar(inner_dim)));
}

TwoCell on_inner(int outer_dim, const TwoCell& alpha) {
    return hcomp2(identity_2(OneCell::scalar(outer_dim)), alpha);
}

}  // namespace

BoundaryLegs measurement_legs(int d, int n) {
    return BoundaryLegs{OneCell::scalar(d), OneCell::scalar(d), witness_left(n),
                        witness_right(n)};
}

BoundaryLegs controlled_legs(int n, int d) {
    return BoundaryLegs{OneCell::scalar(d), witness_left(n), OneCell::scalar(d),
                        witness_left(n)};
}

BoundaryLegs witness_pair_legs(int n) {
    return BoundaryLegs{witness_left(n), witness_right(n), witness_left(n), witness_right(n)};
}

TwoCell bend(const TwoCell& alpha, const BoundaryLegs& legs) {
    const OneCell& h = legs.source_inner;
    const OneCell& j = legs.source_outer;
    const OneCell& f = legs.target_inner;
    const OneCell& g = legs.target_outer;
    if (!(hcomp1(j, h) == alpha.source()) || !(hcomp1(g, f) == alpha.target()))
        throw TypeError("boundary legs do not compose to the 2-cell's boundary");

    const OneCell jdag = adjoint1(j);
    const OneCell fdag = adjoint1(f);
    const OneCell hf = hcomp1(h, fdag);
    const TwoCell sigma_j = adjunction_cells(j).first;
    const TwoCell tau_f = adjunction_cells(f).second;

    // (H o F^) => (J^ o J) o (H o F^)
    TwoCell u1 = hcomp2(sigma_j, identity_2(hf));
    // => J^ o (J o (H o F^))
    TwoCell u2 = associator(hf, j, jdag);
    // => J^ o ((J o H) o F^)
    TwoCell u3 = hcomp2(identity_2(jdag), dagger2(associator(fdag, h, j)));
    // => J^ o ((G o F) o F^)
    TwoCell u4 = hcomp2(identity_2(jdag), hcomp2(alpha, identity_2(fdag)));
    // => J^ o (G o (F o F^))
    TwoCell u5 = hcomp2(identity_2(jdag), associator(fdag, f, g));
    // => J^ o (G o id) = J^ o G
    TwoCell u6 = hcomp2(identity_2(jdag), hcomp2(identity_2(g), tau_f));

    return vcomp(u6, vcomp(u5, vcomp(u4, vcomp(u3, vcomp(u2, u1)))));
}

bool is_horizontally_invertible(const TwoCell& alpha, const BoundaryLegs& legs, double tol) {
    TwoCell bent = bend(alpha, legs);
    for (int i = 0; i < bent.rows(); ++i)
        for (int j = 0; j < bent.cols(); ++j) {
            const ComplexMatrix& e = bent.entry(i, j);
            if (e.rows() != e.cols()) return false;
            if (e.rows() == 0) continue;
            auto sv = singular_values(e);
            if (sv.back() <= tol) return false;
        }
    return true;
}

bool is_horizontally_unitary(const TwoCell& alpha, const BoundaryLegs& legs, double tol) {
    TwoCell bent = bend(alpha, legs);
    // Fit one common scale c > 0 over all entries, then require every entry
    // to be c times a unitary.
    double sq_sum = 0.0;
    int dim_sum = 0;
    for (int i = 0; i < bent.rows(); ++i)
        for (int j = 0; j < bent.cols(); ++j) {
            const ComplexMatrix& e = bent.entry(i, j);
            if (e.rows() != e.cols()) return false;
            sq_sum += frobenius_inner(e, e).real();
            dim_sum += e.rows();
        }
    if (dim_sum == 0) return true;
    const double c = std::sqrt(sq_sum / dim_sum);
    if (c <= tol) return false;
    const Complex inv(1.0 / c, 0.0);
    for (int i = 0; i < bent.rows(); ++i)
        for (int j = 0; j < bent.cols(); ++j) {
            if (bent.entry(i, j).rows() == 0) continue;
            if (!is_unitary(inv * bent.entry(i, j), tol)) return false;
        }
    return true;
}

std::pair<Complex, double> fit_scalar(const TwoCell& lhs, const TwoCell& rhs) {
    if (!(lhs.source() == rhs.source()) || !(lhs.target() == rhs.target()))
        return {Complex(0.0, 0.0), std::numeric_limits<double>::infinity()};
    Complex num(0.0, 0.0);
    double den = 0.0;
    for (int i = 0; i < lhs.rows(); ++i)
        for (int j = 0; j < lhs.cols(); ++j) {
            num += frobenius_inner(rhs.entry(i, j), lhs.entry(i, j));
            den += frobenius_inner(rhs.entry(i, j), rhs.entry(i, j)).real();
        }
    const Complex s = den > 0.0 ? num / den : Complex(0.0, 0.0);
    return {s, max_entry_diff(lhs, scalar_mul(s, rhs))};
}

CheckReport check_teleportation(const TwoCell& measurement, const TwoCell& correction, int n,
                                double tol) {
    CheckReport report;
    report.name = "teleportation";
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) throw std::invalid_argument("teleportation requires n = d^2");

    const TwoCell q_id = identity_2(OneCell::scalar(d));
    TwoCell step1 = hcomp2(q_id, bell_state(d));
    TwoCell step2 = hcomp2(measurement, q_id);
    TwoCell step3 = hcomp2(identity_2(witness_right(n)), correction);
    TwoCell lhs = vcomp(step3, vcomp(step2, step1));
    TwoCell rhs = hcomp2(create_cell(n), q_id);

    auto [s, residual] = fit_scalar(lhs, rhs);
    report.fitted_scalar = s;
    report.max_entry_error = residual;
    const double expected = 1.0 / std::sqrt(static_cast<double>(n));
    report.passed = residual <= tol && std::abs(s - Complex(expected, 0.0)) <= tol;
    return report;
}

CheckReport check_dense_coding(const TwoCell& correction, const TwoCell& measurement, int n,
                               double tol) {
    CheckReport report;
    report.name = "dense-coding";
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) throw std::invalid_argument("dense coding requires n = d^2");

    const TwoCell wl_id = identity_2(witness_left(n));
    TwoCell step1 = hcomp2(wl_id, bell_state(d));
    TwoCell step2 = hcomp2(correction, identity_2(OneCell::scalar(d)));
    TwoCell step3 = hcomp2(wl_id, measurement);
    TwoCell lhs = vcomp(step3, vcomp(step2, step1));
    TwoCell rhs = hcomp2(copy_cell(n), wl_id);

    auto [s, residual] = fit_scalar(lhs, rhs);
    report.fitted_scalar = s;
    report.max_entry_error = residual;
    report.passed = residual <= tol && std::abs(s - Complex(1.0, 0.0)) <= tol;
    return report;
}

CheckReport check_complementarity_physical(const OrthonormalBasis& red,
                                           const OrthonormalBasis& green, const TwoCell& phi,
                                           double tol) {
    CheckReport report;
    report.name = "complementarity-physical";
    if (red.dimension != green.dimension)
        throw std::invalid_argument("bases must share a dimension");
    const int n = red.dimension;

    TwoCell mr = nondegenerate_measurement(red);
    TwoCell mg = nondegenerate_measurement(green);

    // Measure red, copy the record, encode the copy back in red, measure
    // that system in green.
    TwoCell lhs = vcomp(on_outer(mg, n),
                        vcomp(on_outer(dagger2(mr), n), vcomp(copy_insertion(n), mr)));

    // Measure red, create a fresh green record, link them by the phase.
    TwoCell created = hcomp2(create_cell(n), identity_2(hcomp1(witness_right(n), witness_left(n))));
    TwoCell phased = hcomp2(identity_2(witness_right(n)),
                            hcomp2(phi, identity_2(witness_left(n))));
    const double norm = 1.0 / std::sqrt(static_cast<double>(n));
    TwoCell rhs = scalar_mul(Complex(norm, 0.0), vcomp(phased, vcomp(created, mr)));

    auto [s, residual] = fit_scalar(lhs, rhs);
    report.fitted_scalar = s;
    report.max_entry_error = residual;
    report.passed = residual <= tol && std::abs(s - Complex(1.0, 0.0)) <= tol;
    return report;
}

std::optional<ComplexMatrix> find_controlled_phase(const OrthonormalBasis& red,
                                                   const OrthonormalBasis& green, double tol) {
    if (red.dimension != green.dimension)
        throw std::invalid_argument("bases must share a dimension");
    const int n = red.dimension;
    ComplexMatrix overlaps = green.change_of_basis() * dagger(red.change_of_basis());
    ComplexMatrix phases = std::sqrt(static_cast<double>(n)) * overlaps;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(std::abs(phases(i, j)) - 1.0) > tol) return std::nullopt;
    return phases;
}

CheckReport check_complementarity_cd(const OrthonormalBasis& red, const OrthonormalBasis& green,
                                     double tol) {
    CheckReport report;
    report.name = "complementarity-cd";
    if (red.dimension != green.dimension)
        throw std::invalid_argument("bases must share a dimension");
    const int n = red.dimension;

    FrobeniusData fr = transport_frobenius(dagger(red.change_of_basis()), induced_frobenius(n));
    FrobeniusData fg = transport_frobenius(dagger(green.change_of_basis()), induced_frobenius(n));

    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix comult_g = dagger(fg.mult);
    const ComplexMatrix comult_r = dagger(fr.mult);
    const ComplexMatrix counit_g = dagger(fg.unit);

    // Diamond: split the input in green, split a fresh red unit, fuse the
    // crossed pair in green (then delete), fuse the rest in red.
    ComplexMatrix a1 = kron(comult_g, comult_r * fr.unit);
    ComplexMatrix a2 = kron(kron(id, tensor_swap(n, n)), id);
    ComplexMatrix a3 = kron(counit_g * fg.mult, fr.mult);
    ComplexMatrix diamond = a3 * (a2 * a1);

    ComplexMatrix lhs = Complex(static_cast<double>(n), 0.0) * diamond;
    ComplexMatrix rhs = fr.unit * counit_g;

    report.max_entry_error = max_abs_diff(lhs, rhs);
    report.passed = report.max_entry_error <= tol;
    return report;
}

CheckReport check_erasure(const OrthonormalBasis& red, const OrthonormalBasis& green,
                          double tol) {
    CheckReport report;
    report.name = "erasure";
    if (red.dimension != green.dimension)
        throw std::invalid_argument("bases must share a dimension");
    const int n = red.dimension;

    TwoCell mr = nondegenerate_measurement(red);
    TwoCell mg = nondegenerate_measurement(green);

    TwoCell pipeline = vcomp(on_outer(mg, n),
                             vcomp(on_outer(dagger2(mr), n),
                                   vcomp(copy_insertion(n), vcomp(mr, dagger2(mg)))));
    TwoCell first = vcomp(on_inner(n, delete_cell(n)), pipeline);
    TwoCell last = identity_2(hcomp1(witness_right(n), witness_left(n)));

    auto [s, residual] = fit_scalar(first, last);
    report.fitted_scalar = s;
    report.max_entry_error = residual;
    report.passed = residual <= tol && std::abs(s - Complex(1.0, 0.0)) <= tol;
    return report;
}

}  // namespace twohilb
