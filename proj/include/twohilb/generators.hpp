// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "twohilb/cells.hpp"
#include "twohilb/matrix.hpp"

namespace twohilb {

/// An ordered orthonormal basis of C^d, stored as d column vectors.
struct OrthonormalBasis {
    int dimension = 0;
    std::vector<ComplexMatrix> vectors;

    OrthonormalBasis(int dimension, std::vector<ComplexMatrix> vectors,
                     double tol = kDefaultTol);

    static OrthonormalBasis computational(int d);
    /// The plus/minus basis of C^2.
    static OrthonormalBasis plus_minus();
    static OrthonormalBasis bell();
    static OrthonormalBasis fourier(int d);
    /// Basis given by the columns of a unitary.
    static OrthonormalBasis from_unitary(const ComplexMatrix& u, double tol = kDefaultTol);

    /// The change-of-basis matrix whose row i is the adjoint of vector i.
    ComplexMatrix change_of_basis() const;
};

/// A complete family of pairwise-orthogonal projectors on C^d.
struct ProjectorFamily {
    int ambient = 0;
    std::vector<ComplexMatrix> projectors;

    ProjectorFamily(int ambient, std::vector<ComplexMatrix> projectors,
                    double tol = kDefaultTol);
};

/// Hilb -> Hilb^n, the n x 1 all-ones column of C's.
OneCell witness_left(int n);
/// Hilb^n -> Hilb, the 1 x n all-ones row of C's.
OneCell witness_right(int n);

/// id_{Hilb^n} => W_L(n) o W_R(n): diagonal entries [[1]], off-diagonal
/// maps out of the zero space.
TwoCell copy_cell(int n);
/// dagger of copy.
TwoCell compare_cell(int n);
/// id_Hilb => W_R(n) o W_L(n): single all-ones column.
TwoCell create_cell(int n);
/// dagger of create.
TwoCell delete_cell(int n);

/// Unitary 2-cell [[d]] => W_R(d) o W_L(d) with the change-of-basis entry.
/// Orthonormality is enforced when the basis is constructed.
TwoCell nondegenerate_measurement(const OrthonormalBasis& basis);

/// Unitary 2-cell [[d]] => hcomp1(W_R(n), T) where T is the n x 1 cell
/// whose entry i is rank(P_i); rows are grouped by an orthonormal basis of
/// each projector image (taken as ker(I - P_i)).
TwoCell projective_measurement(const ProjectorFamily& family, double tol = kDefaultTol);

/// Endomorphism of hcomp1(W_L(n), Q_d) with entry k = maps[k].
TwoCell controlled_operation(const std::vector<ComplexMatrix>& maps);

/// Endomorphism of hcomp1(W_L(rows), W_R(cols)) with entry (i,j) the
/// 1 x 1 phase [[phases(i,j)]]. All phases must be unit modulus.
TwoCell controlled_phase(const ComplexMatrix& phases, double tol = kDefaultTol);

/// id_Hilb => Q_d o Q_d with entry (1/sqrt d) sum_i |ii>.
TwoCell bell_state(int d);
/// The fixed qubit Bell-basis measurement, Q_2 o Q_2 => W_R(4) o W_L(4).
TwoCell bell_measurement();
/// The four qubit corrections as a controlled operation on W_L(4) o Q_2.
TwoCell bell_corrections();

/// Generalized d-dimensional shift-and-phase kit: d^2 unitary corrections
/// whose flattenings form an orthogonal basis, plus the matched measurement.
std::vector<ComplexMatrix> weyl_corrections(int d);
TwoCell weyl_measurement(int d);

/// Measurement whose basis vectors are the flattened conjugates of the
/// given unitary correction maps, scaled so the rows are orthonormal.
TwoCell matched_measurement(const std::vector<ComplexMatrix>& corrections);

}  // namespace twohilb
