// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/frobenius.hpp"

namespace twohilb {

FrobeniusData::FrobeniusData(int carrier_, ComplexMatrix mult_, ComplexMatrix unit_)
    : carrier(carrier_), mult(std::move(mult_)), unit(std::move(unit_)) {
    if (mult.rows() != carrier || mult.cols() != carrier * carrier)
        throw std::invalid_argument("mult must be d x d^2");
    if (unit.rows() != carrier || unit.cols() != 1)
        throw std::invalid_argument("unit must be d x 1");
}

ModuleData::ModuleData(FrobeniusData algebra_, int space_, ComplexMatrix action_)
    : algebra(std::move(algebra_)), space(space_), action(std::move(action_)) {
    if (action.rows() != space || action.cols() != algebra.carrier * space)
        throw std::invalid_argument("action must be m x (d*m)");
}

FrobeniusData induced_frobenius(int n) {
    if (n < 1) throw std::invalid_argument("carrier must be >= 1");
    ComplexMatrix mult(n, n * n);
    for (int i = 0; i < n; ++i) mult(i, i * n + i) = 1.0;
    return FrobeniusData(n, std::move(mult), ComplexMatrix::ones_column(n));
}

FrobeniusData transport_frobenius(const ComplexMatrix& u, const FrobeniusData& a, double tol) {
    if (u.cols() != a.carrier) throw std::invalid_argument("unitary columns must match carrier");
    if (!is_unitary(u, tol)) throw std::invalid_argument("transport requires a unitary");
    ComplexMatrix udag = dagger(u);
    ComplexMatrix mult = u * a.mult * kron(udag, udag);
    ComplexMatrix unit = u * a.unit;
    return FrobeniusData(u.rows(), std::move(mult), std::move(unit));
}

FrobeniusReport check_frobenius(const FrobeniusData& a, double tol) {
    const int d = a.carrier;
    const ComplexMatrix id = ComplexMatrix::identity(d);
    const ComplexMatrix& m = a.mult;
    FrobeniusReport r;
    r.assoc = approx_eq(m * kron(m, id), m * kron(id, m), tol);
    r.unit = approx_eq(m * kron(a.unit, id), id, tol) && approx_eq(m * kron(id, a.unit), id, tol);
    r.comm = approx_eq(m * tensor_swap(d, d), m, tol);
    // One-sided Frobenius law; commutativity makes the mirrored form follow.
    r.frobenius =
        approx_eq(kron(id, m) * kron(dagger(m), id), dagger(m) * m, tol);
    r.special = approx_eq(m * dagger(m), id, tol);
    return r;
}

ModuleData module_from_measurement(const ProjectorFamily& family) {
    const int n = static_cast<int>(family.projectors.size());
    const int m = family.ambient;
    ComplexMatrix action = hstack(family.projectors);
    return ModuleData(induced_frobenius(n), m, std::move(action));
}

ModuleReport check_module(const ModuleData& mod, double tol) {
    const int d = mod.algebra.carrier;
    const int m = mod.space;
    const ComplexMatrix id_m = ComplexMatrix::identity(m);
    const ComplexMatrix id_d = ComplexMatrix::identity(d);
    ModuleReport r;
    r.assoc = approx_eq(mod.action * kron(id_d, mod.action),
                        mod.action * kron(mod.algebra.mult, id_m), tol);
    r.unit = approx_eq(mod.action * kron(mod.algebra.unit, id_m), id_m, tol);
    return r;
}

}  // namespace twohilb
