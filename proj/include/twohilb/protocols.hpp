// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>

#include "twohilb/cells.hpp"
#include "twohilb/generators.hpp"

namespace twohilb {

/// Outcome of an equation-level protocol check. When a scalar fit is
/// declared, `passed` holds iff the residual after the least-squares fit is
/// within tolerance and the fitted scalar matches its expected value.
struct CheckReport {
    std::string name;
    bool passed = false;
    double max_entry_error = 0.0;
    Complex fitted_scalar{1.0, 0.0};
};

/// Presentation of a 2-cell's boundary as two-leg composites:
/// source = hcomp1(source_outer, source_inner),
/// target = hcomp1(target_outer, target_inner).
struct BoundaryLegs {
    OneCell source_inner;
    OneCell source_outer;
    OneCell target_inner;
    OneCell target_outer;
};

/// Legs of a measurement 2-cell Q_d o Q_d => W_R(n) o W_L(n).
BoundaryLegs measurement_legs(int d, int n);
/// Legs of a controlled operation on hcomp1(W_L(n), Q_d).
BoundaryLegs controlled_legs(int n, int d);
/// Legs of a prepare-then-measure composite between two witness pairs.
BoundaryLegs witness_pair_legs(int n);

/// The bent composite: the inner target leg is bent down to the source,
/// the outer source leg is bent up to the target, both with the canonical
/// unit/counit cells. Maps
///   hcomp1(source_inner, adjoint1(target_inner))
///     => hcomp1(adjoint1(source_outer), target_outer).
TwoCell bend(const TwoCell& alpha, const BoundaryLegs& legs);

/// True when every entry of the bent composite is square and nonsingular.
bool is_horizontally_invertible(const TwoCell& alpha, const BoundaryLegs& legs,
                                double tol = kDefaultTol);

/// True when the bent composite is unitary up to one common positive
/// scalar across all entries.
bool is_horizontally_unitary(const TwoCell& alpha, const BoundaryLegs& legs,
                             double tol = kDefaultTol);

/// Least-squares scalar fit: s minimizing ||lhs - s*rhs||, with the
/// residual after the fit.
std::pair<Complex, double> fit_scalar(const TwoCell& lhs, const TwoCell& rhs);

/// Teleportation equation with an n-outcome measurement (n = d^2) and a
/// controlled correction on W_L(n) o Q_d. Passes iff the composite equals
/// s * (create(n) o id_Q) with s = 1/sqrt(n) within tol.
CheckReport check_teleportation(const TwoCell& measurement, const TwoCell& correction, int n,
                                double tol = kDefaultTol);

/// Dense coding equation; expected fitted scalar 1 (the normalization is
/// absorbed into the shared-state preparation).
CheckReport check_dense_coding(const TwoCell& correction, const TwoCell& measurement, int n,
                               double tol = kDefaultTol);

/// Physical complementarity: measure in `red`, copy, re-encode in `red`,
/// measure in `green`; equals (1/sqrt n) x (create o phase-linked pair).
CheckReport check_complementarity_physical(const OrthonormalBasis& red,
                                           const OrthonormalBasis& green, const TwoCell& phi,
                                           double tol = kDefaultTol);

/// Reads the candidate controlled phase off the composed overlap matrix;
/// present iff all entries are unit modulus within tol. Row index is the
/// second (green) measurement outcome.
std::optional<ComplexMatrix> find_controlled_phase(const OrthonormalBasis& red,
                                                   const OrthonormalBasis& green,
                                                   double tol = kDefaultTol);

/// The one-categorical complementarity condition on the transported
/// Frobenius structures: n * (diamond composite) = unit-red o counit-green.
CheckReport check_complementarity_cd(const OrthonormalBasis& red, const OrthonormalBasis& green,
                                     double tol = kDefaultTol);

/// Prepared-then-erased protocol: prepare in green, measure in red, copy,
/// re-encode in red, measure in green, then delete the red record. Equals
/// the identity on the green witness composite.
CheckReport check_erasure(const OrthonormalBasis& red, const OrthonormalBasis& green,
                          double tol = kDefaultTol);

}  // namespace twohilb
