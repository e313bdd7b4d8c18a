// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <vector>

#include "twohilb/matrix.hpp"

namespace twohilb {

/// A Hilbert space with copying and deleting maps. Laws are verified by
/// the check operations below, not at construction.
struct ClassicalDataType {
    int dim = 0;
    ComplexMatrix delta;    // dim^2 x dim
    ComplexMatrix epsilon;  // 1 x dim

    ClassicalDataType(int dim, ComplexMatrix delta, ComplexMatrix epsilon);

    friend bool operator==(const ClassicalDataType& a, const ClassicalDataType& b) {
        return a.dim == b.dim && max_abs_diff(a.delta, b.delta) == 0.0 &&
               max_abs_diff(a.epsilon, b.epsilon) == 0.0;
    }
};

/// A system S coupled to an environment E by an interaction map
/// tau: S -> E (x) S.
struct InteractionSystem {
    int sys_dim = 0;
    ClassicalDataType env;
    ComplexMatrix tau;  // (env.dim * sys_dim) x sys_dim

    InteractionSystem(int sys_dim, ClassicalDataType env, ComplexMatrix tau);
};

struct ComonoidReport {
    bool coassoc = false;
    bool counit = false;
    bool cocomm = false;
    bool all() const { return coassoc && counit && cocomm; }
};

struct ClassicalStructureReport {
    ComonoidReport comonoid;
    bool frobenius = false;
    bool special = false;
    bool all() const { return comonoid.all() && frobenius && special; }
};

struct InteractionReport {
    bool coaction = false;       // copying the record = interacting twice
    bool nondisturbance = false;  // deleting the record undoes the interaction
    bool all() const { return coaction && nondisturbance; }
};

/// Copying and deleting of the standard basis.
ClassicalDataType standard_cdt(int n);

ComonoidReport check_comonoid(const ClassicalDataType& c, double tol = kDefaultTol);
ClassicalStructureReport check_classical_structure(const ClassicalDataType& c,
                                                   double tol = kDefaultTol);

InteractionReport check_interaction(const InteractionSystem& sys, double tol = kDefaultTol);

/// Whether the two interaction maps on the same system can be applied in
/// either order, up to the environment swap.
bool interactions_commute(const InteractionSystem& a, const InteractionSystem& b,
                          double tol = kDefaultTol);

/// The joint states of S (x) S' transferring identical data to a shared
/// environment: an isometric embedding of the equalizer subspace plus the
/// induced interaction on it.
struct TensorOverEnvironment {
    ComplexMatrix embedding;
    InteractionSystem induced;
};
TensorOverEnvironment tensor_over_environment(const InteractionSystem& a,
                                              const InteractionSystem& b,
                                              double tol = kNullspaceTol);

/// Interaction on B (x) S where only the buffer B talks to the environment.
InteractionSystem buffered_interaction(const InteractionSystem& buffer, int s_dim);

/// Dynamics commuting with the environmental interactions.
bool is_protected(const ComplexMatrix& f, const InteractionSystem& from,
                  const InteractionSystem& to, double tol = kDefaultTol);

/// If f on E (x) S is protected for the basis-copying interaction on E,
/// returns the n operations it applies conditioned on the E value.
std::optional<std::vector<ComplexMatrix>> controlled_form(const ComplexMatrix& f, int env_dim,
                                                          int s_dim, double tol = kDefaultTol);

}  // namespace twohilb
