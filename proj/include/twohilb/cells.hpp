// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twohilb/matrix.hpp"

namespace twohilb {

/// Composition-type mismatch between cells.
struct TypeError : std::runtime_error {
    explicit TypeError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An object Hilb^n, identified by n >= 1.
struct TwoHilbObject {
    int size = 1;
    explicit TwoHilbObject(int n) : size(n) {
        if (n < 1) throw std::invalid_argument("object size must be >= 1");
    }
    friend bool operator==(TwoHilbObject a, TwoHilbObject b) { return a.size == b.size; }
    friend bool operator!=(TwoHilbObject a, TwoHilbObject b) { return !(a == b); }
};

/// A 1-cell Hilb^n -> Hilb^m, i.e. an m x n matrix of Hilbert-space
/// dimensions. Entry (i,j) >= 0; zero entries are legal.
class OneCell {
public:
    OneCell(TwoHilbObject source, TwoHilbObject target, std::vector<std::vector<int>> dims);

    static OneCell identity(TwoHilbObject a);
    /// The 1-cell Hilb -> Hilb with the single entry [[d]].
    static OneCell scalar(int d);

    TwoHilbObject source() const { return source_; }
    TwoHilbObject target() const { return target_; }
    int rows() const { return target_.size; }
    int cols() const { return source_.size; }
    int dim(int i, int j) const { return dims_[static_cast<size_t>(i) * cols() + j]; }

    friend bool operator==(const OneCell& a, const OneCell& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.dims_ == b.dims_;
    }
    friend bool operator!=(const OneCell& a, const OneCell& b) { return !(a == b); }

private:
    TwoHilbObject source_;
    TwoHilbObject target_;
    std::vector<int> dims_;  // row-major, rows() x cols()
};

/// A 2-cell between two parallel 1-cells: a matrix of linear maps, entry
/// (i,j) of shape target.dim(i,j) x source.dim(i,j).
class TwoCell {
public:
    TwoCell(OneCell source, OneCell target, std::vector<ComplexMatrix> entries);

    const OneCell& source() const { return source_; }
    const OneCell& target() const { return target_; }
    int rows() const { return source_.rows(); }
    int cols() const { return source_.cols(); }
    const ComplexMatrix& entry(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols() + j];
    }

private:
    OneCell source_;
    OneCell target_;
    std::vector<ComplexMatrix> entries_;  // row-major
};

/// g after f; dims compose by the matrix product with (+,*) on dimensions.
OneCell hcomp1(const OneCell& g, const OneCell& f);

/// Transposed dims with source and target swapped.
OneCell adjoint1(const OneCell& f);

TwoCell identity_2(const OneCell& f);

/// Horizontal composite with alpha on the inside: the result maps
/// hcomp1(beta.source, alpha.source) => hcomp1(beta.target, alpha.target).
/// Entry (i,j) is the direct sum over the middle index k, in increasing
/// order, of kron(beta(i,k), alpha(k,j)).
TwoCell hcomp2(const TwoCell& beta, const TwoCell& alpha);

/// Entrywise composition; alpha is applied first.
TwoCell vcomp(const TwoCell& beta, const TwoCell& alpha);

/// Entrywise adjoint with source and target swapped.
TwoCell dagger2(const TwoCell& alpha);

TwoCell scalar_mul(Complex c, const TwoCell& alpha);

/// Largest entrywise absolute difference; +infinity when the boundary
/// dims differ.
double max_entry_diff(const TwoCell& a, const TwoCell& b);

bool eq2(const TwoCell& a, const TwoCell& b, double tol = kDefaultTol);

/// Unit and counit presenting the adjunction f -| adjoint1(f):
/// sigma: id_<source> => f^ o f and tau: f o f^ => id_<target>, assembled
/// from standard-basis unit/counit maps entrywise.
std::pair<TwoCell, TwoCell> adjunction_cells(const OneCell& f);

/// Permutation-entried 2-cell re-bracketing (h o g) o f => h o (g o f)
/// for the composable chain h o g o f (f innermost). Unitary in every entry.
TwoCell associator(const OneCell& f, const OneCell& g, const OneCell& h);

}  // namespace twohilb
