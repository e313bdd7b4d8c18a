// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/decoherence.hpp"

namespace twohilb {

ClassicalDataType::ClassicalDataType(int dim_, ComplexMatrix delta_, ComplexMatrix epsilon_)
    : dim(dim_), delta(std::move(delta_)), epsilon(std::move(epsilon_)) {
    if (delta.rows() != dim * dim || delta.cols() != dim)
        throw std::invalid_argument("delta must be dim^2 x dim");
    if (epsilon.rows() != 1 || epsilon.cols() != dim)
        throw std::invalid_argument("epsilon must be 1 x dim");
}

InteractionSystem::InteractionSystem(int sys_dim_, ClassicalDataType env_, ComplexMatrix tau_)
    : sys_dim(sys_dim_), env(std::move(env_)), tau(std::move(tau_)) {
    if (tau.rows() != env.dim * sys_dim || tau.cols() != sys_dim)
        throw std::invalid_argument("tau must be (env.dim * sys_dim) x sys_dim");
}

ClassicalDataType standard_cdt(int n) {
    if (n < 1) throw std::invalid_argument("classical data type requires dim >= 1");
    ComplexMatrix delta(n * n, n);
    for (int i = 0; i < n; ++i) delta(i * n + i, i) = 1.0;
    ComplexMatrix epsilon(1, n);
    for (int i = 0; i < n; ++i) epsilon(0, i) = 1.0;
    return ClassicalDataType(n, std::move(delta), std::move(epsilon));
}

ComonoidReport check_comonoid(const ClassicalDataType& c, double tol) {
    const int n = c.dim;
    const ComplexMatrix id = ComplexMatrix::identity(n);
    ComonoidReport r;
    r.coassoc = approx_eq(kron(c.delta, id) * c.delta, kron(id, c.delta) * c.delta, tol);
    r.counit = approx_eq(kron(c.epsilon, id) * c.delta, id, tol) &&
               approx_eq(kron(id, c.epsilon) * c.delta, id, tol);
    r.cocomm = approx_eq(tensor_swap(n, n) * c.delta, c.delta, tol);
    return r;
}

ClassicalStructureReport check_classical_structure(const ClassicalDataType& c, double tol) {
    const int n = c.dim;
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix mult = dagger(c.delta);
    ClassicalStructureReport r;
    r.comonoid = check_comonoid(c, tol);
    r.frobenius = approx_eq(kron(id, mult) * kron(c.delta, id), c.delta * mult, tol);
    r.special = approx_eq(mult * c.delta, id, tol);
    return r;
}

InteractionReport check_interaction(const InteractionSystem& sys, double tol) {
    const int s = sys.sys_dim;
    const int e = sys.env.dim;
    const ComplexMatrix id_s = ComplexMatrix::identity(s);
    const ComplexMatrix id_e = ComplexMatrix::identity(e);
    InteractionReport r;
    r.coaction =
        approx_eq(kron(sys.env.delta, id_s) * sys.tau, kron(id_e, sys.tau) * sys.tau, tol);
    r.nondisturbance = approx_eq(kron(sys.env.epsilon, id_s) * sys.tau, id_s, tol);
    return r;
}

bool interactions_commute(const InteractionSystem& a, const InteractionSystem& b, double tol) {
    if (a.sys_dim != b.sys_dim)
        throw std::invalid_argument("interactions must share the system dimension");
    const int s = a.sys_dim;
    const int ea = a.env.dim;
    const int eb = b.env.dim;
    // a then b, environments ending as (E_a, E_b, S).
    ComplexMatrix lhs = kron(ComplexMatrix::identity(ea), b.tau) * a.tau;
    // b then a, then swap the environments into the same order.
    ComplexMatrix rhs = kron(tensor_swap(eb, ea), ComplexMatrix::identity(s)) *
                        (kron(ComplexMatrix::identity(eb), a.tau) * b.tau);
    return approx_eq(lhs, rhs, tol);
}

TensorOverEnvironment tensor_over_environment(const InteractionSystem& a,
                                              const InteractionSystem& b, double tol) {
    if (!(a.env == b.env))
        throw std::invalid_argument("tensor over the environment needs a shared environment");
    const int s = a.sys_dim;
    const int sp = b.sys_dim;
    const int e = a.env.dim;
    const ComplexMatrix id_sp = ComplexMatrix::identity(sp);
    const ComplexMatrix id_s = ComplexMatrix::identity(s);
    const ComplexMatrix id_e = ComplexMatrix::identity(e);

    ComplexMatrix lhs = kron(a.tau, id_sp);
    ComplexMatrix rhs = kron(tensor_swap(s, e), id_sp) * kron(id_s, b.tau);
    ComplexMatrix embedding = nullspace_basis(lhs - rhs, tol);

    const int k = embedding.cols();
    ComplexMatrix induced_tau = kron(id_e, dagger(embedding)) * (lhs * embedding);
    InteractionSystem induced(k, a.env, std::move(induced_tau));
    return TensorOverEnvironment{std::move(embedding), std::move(induced)};
}

InteractionSystem buffered_interaction(const InteractionSystem& buffer, int s_dim) {
    if (s_dim < 1) throw std::invalid_argument("system dimension must be >= 1");
    ComplexMatrix tau = kron(buffer.tau, ComplexMatrix::identity(s_dim));
    return InteractionSystem(buffer.sys_dim * s_dim, buffer.env, std::move(tau));
}

bool is_protected(const ComplexMatrix& f, const InteractionSystem& from,
                  const InteractionSystem& to, double tol) {
    if (!(from.env == to.env))
        throw std::invalid_argument("protected dynamics must share the environment");
    if (f.rows() != to.sys_dim || f.cols() != from.sys_dim)
        throw std::invalid_argument("dynamics shape does not match the systems");
    ComplexMatrix lhs = to.tau * f;
    ComplexMatrix rhs = kron(ComplexMatrix::identity(from.env.dim), f) * from.tau;
    return approx_eq(lhs, rhs, tol);
}

std::optional<std::vector<ComplexMatrix>> controlled_form(const ComplexMatrix& f, int env_dim,
                                                          int s_dim, double tol) {
    if (f.rows() != env_dim * s_dim || f.cols() != env_dim * s_dim)
        throw std::invalid_argument("map must act on E (x) S");
    ClassicalDataType env = standard_cdt(env_dim);
    ComplexMatrix tau = kron(env.delta, ComplexMatrix::identity(s_dim));
    InteractionSystem sys(env_dim * s_dim, env, std::move(tau));
    if (!is_protected(f, sys, sys, tol)) return std::nullopt;
    std::vector<ComplexMatrix> blocks;
    for (int k = 0; k < env_dim; ++k) {
        ComplexMatrix block(s_dim, s_dim);
        for (int i = 0; i < s_dim; ++i)
            for (int j = 0; j < s_dim; ++j) block(i, j) = f(k * s_dim + i, k * s_dim + j);
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace twohilb
