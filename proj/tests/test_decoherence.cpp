// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "twohilb/decoherence.hpp"

using namespace twohilb;

namespace {

ComplexMatrix random_matrix(int rows, int cols, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

// Interaction obtained by conjugating a buffered copy interaction with a
// random unitary on the system.
InteractionSystem random_interaction(int buffer_dim, int extra_dim, std::mt19937& rng) {
    ClassicalDataType env = standard_cdt(buffer_dim);
    InteractionSystem base(buffer_dim, env, env.delta);
    InteractionSystem joint = buffered_interaction(base, extra_dim);
    ComplexMatrix u = random_unitary(joint.sys_dim, rng);
    ComplexMatrix tau = kron(ComplexMatrix::identity(env.dim), u) * joint.tau * dagger(u);
    return InteractionSystem(joint.sys_dim, env, std::move(tau));
}

}  // namespace

TEST_CASE("standard classical data types") {
    ClassicalDataType one = standard_cdt(1);
    CHECK(approx_eq(one.delta, ComplexMatrix{{1.0}}, 0.0));
    CHECK(approx_eq(one.epsilon, ComplexMatrix{{1.0}}, 0.0));

    ClassicalDataType two = standard_cdt(2);
    ComplexMatrix expected(4, 2);
    expected(0, 0) = 1.0;
    expected(3, 1) = 1.0;
    CHECK(approx_eq(two.delta, expected, 0.0));

    for (int n = 1; n <= 6; ++n) {
        CHECK(check_comonoid(standard_cdt(n)).all());
        CHECK(check_classical_structure(standard_cdt(n)).all());
    }
}

TEST_CASE("scaled copying breaks the counit law") {
    ClassicalDataType c = standard_cdt(2);
    ClassicalDataType scaled(2, Complex(2.0, 0.0) * c.delta, c.epsilon);
    ComonoidReport r = check_comonoid(scaled);
    CHECK(!r.counit);
    CHECK(r.coassoc);
    CHECK(r.cocomm);
}

TEST_CASE("permuting the copied basis preserves all laws") {
    ClassicalDataType c = standard_cdt(3);
    ComplexMatrix perm(3, 3);
    perm(0, 1) = perm(1, 2) = perm(2, 0) = 1.0;
    ClassicalDataType permuted(3, kron(perm, perm) * c.delta * dagger(perm),
                               c.epsilon * dagger(perm));
    CHECK(check_classical_structure(permuted).all());
}

TEST_CASE("interaction laws") {
    // Trivial environment: tau is the canonical identification.
    ClassicalDataType trivial = standard_cdt(1);
    InteractionSystem t(3, trivial, ComplexMatrix::identity(3));
    CHECK(check_interaction(t).all());

    // Copying is a self-interaction.
    for (int n = 1; n <= 6; ++n) {
        ClassicalDataType c = standard_cdt(n);
        CHECK(check_interaction(InteractionSystem(n, c, c.delta)).all());
    }

    // Dropping the normalization breaks the non-disturbance law.
    ClassicalDataType c = standard_cdt(2);
    InteractionSystem bad(2, c, Complex(2.0, 0.0) * c.delta);
    InteractionReport r = check_interaction(bad);
    CHECK(!r.nondisturbance);
}

TEST_CASE("commuting interactions") {
    ClassicalDataType c = standard_cdt(2);
    InteractionSystem copy_self(2, c, c.delta);

    InteractionSystem trivial(2, standard_cdt(1), ComplexMatrix::identity(2));
    CHECK(interactions_commute(copy_self, trivial));
    CHECK(interactions_commute(copy_self, copy_self));

    // Copying in two unbiased bases does not commute.
    const double s = 1.0 / std::sqrt(2.0);
    ComplexMatrix h{{s, s}, {s, -s}};
    ComplexMatrix tau_pm = kron(ComplexMatrix::identity(2), dagger(h)) * c.delta * h;
    InteractionSystem copy_pm(2, c, std::move(tau_pm));
    CHECK(check_interaction(copy_pm).all());
    CHECK(!interactions_commute(copy_self, copy_pm));
}

TEST_CASE("tensor over the environment of two copy interactions") {
    ClassicalDataType c = standard_cdt(2);
    InteractionSystem a(2, c, c.delta);
    TensorOverEnvironment t = tensor_over_environment(a, a);
    CHECK(t.induced.sys_dim == 2);
    CHECK(is_isometry(t.embedding, 1e-12));
    CHECK(check_interaction(t.induced).all());
    // The embedded subspace is spanned by the two matched product states.
    ComplexMatrix proj = t.embedding * dagger(t.embedding);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 1.0;
    expected(3, 3) = 1.0;
    CHECK(approx_eq(proj, expected, 1e-12));
}

TEST_CASE("tensor over a trivial environment embeds everything") {
    ClassicalDataType trivial = standard_cdt(1);
    InteractionSystem a(2, trivial, ComplexMatrix::identity(2));
    InteractionSystem b(3, trivial, ComplexMatrix::identity(3));
    TensorOverEnvironment t = tensor_over_environment(a, b);
    CHECK(t.induced.sys_dim == 6);
    CHECK(check_interaction(t.induced).all());
}

TEST_CASE("induced interactions pass the laws for random inputs") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 5; ++trial) {
        InteractionSystem a = random_interaction(2, 2, rng);
        InteractionSystem b = random_interaction(2, 1 + trial % 2, rng);
        CHECK(check_interaction(a).all());
        CHECK(check_interaction(b).all());
        TensorOverEnvironment t = tensor_over_environment(a, b);
        CHECK(check_interaction(t.induced).all());
    }
}

TEST_CASE("buffered interactions protect the inner factor") {
    ClassicalDataType c = standard_cdt(2);
    InteractionSystem buffer(2, c, c.delta);

    InteractionSystem same = buffered_interaction(buffer, 1);
    CHECK(approx_eq(same.tau, buffer.tau, 0.0));

    InteractionSystem joint = buffered_interaction(buffer, 2);
    CHECK(check_interaction(joint).all());

    std::mt19937 rng(63);
    for (int k = 0; k < 10; ++k) {
        ComplexMatrix f = random_matrix(2, 2, rng);
        CHECK(is_protected(kron(ComplexMatrix::identity(2), f), joint, joint));
    }
}

TEST_CASE("protection catches basis-mixing dynamics") {
    ClassicalDataType c = standard_cdt(2);
    InteractionSystem copy_self(2, c, c.delta);
    CHECK(is_protected(ComplexMatrix::identity(2), copy_self, copy_self));
    ComplexMatrix x{{0, 1}, {1, 0}};
    CHECK(!is_protected(x, copy_self, copy_self));
}

TEST_CASE("controlled form extracts diagonal blocks") {
    ComplexMatrix z{{1, 0}, {0, -1}};
    ComplexMatrix f = direct_sum({ComplexMatrix::identity(2), z});
    auto blocks = controlled_form(f, 2, 2);
    REQUIRE(blocks.has_value());
    CHECK(approx_eq((*blocks)[0], ComplexMatrix::identity(2), 0.0));
    CHECK(approx_eq((*blocks)[1], z, 0.0));

    auto id_blocks = controlled_form(ComplexMatrix::identity(4), 2, 2);
    REQUIRE(id_blocks.has_value());
    CHECK(approx_eq((*id_blocks)[0], ComplexMatrix::identity(2), 0.0));

    CHECK(!controlled_form(tensor_swap(2, 2), 2, 2).has_value());
}

TEST_CASE("controlled form agrees with protection on random matrices") {
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 2, d = 2;
        ComplexMatrix f(n * d, n * d);
        const bool block_diagonal = coin(rng) == 1;
        for (int bi = 0; bi < n; ++bi)
            for (int bj = 0; bj < n; ++bj) {
                if (block_diagonal && bi != bj) continue;
                ComplexMatrix block = random_matrix(d, d, rng);
                for (int i = 0; i < d; ++i)
                    for (int j = 0; j < d; ++j) f(bi * d + i, bj * d + j) = block(i, j);
            }
        ClassicalDataType env = standard_cdt(n);
        InteractionSystem sys(n * d, env, kron(env.delta, ComplexMatrix::identity(d)));
        CHECK(controlled_form(f, n, d).has_value() == is_protected(f, sys, sys));
    }
}
