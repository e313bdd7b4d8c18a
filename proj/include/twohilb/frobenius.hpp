// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include "twohilb/generators.hpp"
#include "twohilb/matrix.hpp"

namespace twohilb {

/// A candidate commutative dagger-Frobenius algebra in the scalar sector:
/// multiplication d x d^2 and unit d x 1. Laws are checked by
/// check_frobenius, not enforced at construction.
struct FrobeniusData {
    int carrier = 0;
    ComplexMatrix mult;
    ComplexMatrix unit;

    FrobeniusData(int carrier, ComplexMatrix mult, ComplexMatrix unit);
};

struct FrobeniusReport {
    bool assoc = false;
    bool unit = false;
    bool comm = false;
    bool frobenius = false;
    bool special = false;
    bool all() const { return assoc && unit && comm && frobenius && special; }
};

/// A module over a Frobenius algebra: action m x (d*m).
struct ModuleData {
    FrobeniusData algebra;
    int space = 0;
    ComplexMatrix action;

    ModuleData(FrobeniusData algebra, int space, ComplexMatrix action);
};

struct ModuleReport {
    bool assoc = false;
    bool unit = false;
    bool all() const { return assoc && unit; }
};

/// The classical structure copying the standard basis: mult |i>(x)|j> =
/// delta_ij |i>, unit the all-ones column.
FrobeniusData induced_frobenius(int n);

/// Conjugate the whole structure along a unitary u (columns = old carrier).
FrobeniusData transport_frobenius(const ComplexMatrix& u, const FrobeniusData& a,
                                  double tol = kDefaultTol);

FrobeniusReport check_frobenius(const FrobeniusData& a, double tol = kDefaultTol);

/// Module induced by a projective measurement: the algebra on n points acts
/// on the ambient space by |i>(x)|phi> -> P_i |phi>.
ModuleData module_from_measurement(const ProjectorFamily& family);

ModuleReport check_module(const ModuleData& m, double tol = kDefaultTol);

}  // namespace twohilb
