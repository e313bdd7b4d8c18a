// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/checks.hpp"

#include <cmath>
#include <random>

#include "twohilb/decoherence.hpp"
#include "twohilb/frobenius.hpp"

namespace twohilb {

namespace {

constexpr unsigned kSeed = 0x2b1d5eedU;

CheckReport named(const std::string& name, bool passed, double err) {
    CheckReport r;
    r.name = name;
    r.passed = passed;
    r.max_entry_error = err;
    return r;
}

TwoCell random_two_cell(const OneCell& src, const OneCell& tgt, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ComplexMatrix> entries;
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) {
            ComplexMatrix m(tgt.dim(i, j), src.dim(i, j));
            for (int r = 0; r < m.rows(); ++r)
                for (int c = 0; c < m.cols(); ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
            entries.push_back(std::move(m));
        }
    return TwoCell(src, tgt, std::move(entries));
}

OneCell random_one_cell(TwoHilbObject a, TwoHilbObject b, int max_dim, std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<std::vector<int>> dims(b.size, std::vector<int>(a.size));
    for (auto& row : dims)
        for (int& d : row) d = dim(rng);
    return OneCell(a, b, std::move(dims));
}

std::pair<TwoCell, TwoCell> teleport_kit(int n) {
    if (n == 4) return {bell_measurement(), bell_corrections()};
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) throw std::invalid_argument("teleportation kit requires n = d^2");
    return {weyl_measurement(d), controlled_operation(weyl_corrections(d))};
}

std::pair<OrthonormalBasis, OrthonormalBasis> complementary_pair(int n) {
    if (n == 2)
        return {OrthonormalBasis::computational(2), OrthonormalBasis::plus_minus()};
    return {OrthonormalBasis::computational(n), OrthonormalBasis::fourier(n)};
}

std::vector<CheckReport> check_teleportation_suite(int n, double tol) {
    if (n == 0) n = 4;
    auto [m, u] = teleport_kit(n);
    return {check_teleportation(m, u, n, tol)};
}

std::vector<CheckReport> check_dense_coding_suite(int n, double tol) {
    if (n == 0) n = 4;
    auto [m, u] = teleport_kit(n);
    return {check_dense_coding(u, m, n, tol)};
}

std::vector<CheckReport> check_complementarity_suite(int n, double tol) {
    if (n == 0) n = 2;
    auto [red, green] = complementary_pair(n);
    std::vector<CheckReport> out;

    auto phases = find_controlled_phase(red, green, tol);
    if (!phases) {
        out.push_back(named("complementarity-physical", false,
                            std::numeric_limits<double>::infinity()));
    } else {
        out.push_back(check_complementarity_physical(red, green, controlled_phase(*phases), tol));
    }
    out.push_back(check_complementarity_cd(red, green, tol));

    // Negative control: a basis measured against itself is maximally
    // correlated, so both conditions must fail.
    OrthonormalBasis comp = OrthonormalBasis::computational(n);
    bool physical_fails = !find_controlled_phase(comp, comp, tol).has_value();
    if (physical_fails && n >= 1) {
        // The equation must keep failing even with a phase forced in.
        ComplexMatrix ones(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ones(i, j) = 1.0;
        CheckReport forced =
            check_complementarity_physical(comp, comp, controlled_phase(ones), tol);
        physical_fails = !forced.passed;
    }
    CheckReport cd_control = check_complementarity_cd(comp, comp, tol);
    out.push_back(named("complementarity-negative-control",
                        physical_fails && !cd_control.passed, cd_control.max_entry_error));
    return out;
}

std::vector<CheckReport> check_erasure_suite(int n, double tol) {
    if (n == 0) n = 2;
    auto [red, green] = complementary_pair(n);
    return {check_erasure(red, green, tol)};
}

std::vector<CheckReport> check_witness_axioms(double tol) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= 6; ++n) {
        const OneCell wl = witness_left(n);
        const OneCell wr = witness_right(n);
        const TwoCell id_wl = identity_2(wl);
        const TwoCell id_wr = identity_2(wr);
        const TwoCell cr = create_cell(n);
        const TwoCell del = delete_cell(n);
        const TwoCell cp = copy_cell(n);
        const TwoCell cm = compare_cell(n);
        double err = 0.0;

        // Bends of the left witness straighten out.
        TwoCell y1 = vcomp(hcomp2(cm, id_wl),
                           vcomp(dagger2(associator(wl, wr, wl)), hcomp2(id_wl, cr)));
        err = std::max(err, max_entry_diff(y1, id_wl));
        TwoCell y4 = vcomp(hcomp2(id_wl, del),
                           vcomp(associator(wl, wr, wl), hcomp2(cp, id_wl)));
        err = std::max(err, max_entry_diff(y4, id_wl));

        // Bends of the right witness straighten out.
        TwoCell y2 = vcomp(hcomp2(id_wr, cm),
                           vcomp(associator(wr, wl, wr), hcomp2(cr, id_wr)));
        err = std::max(err, max_entry_diff(y2, id_wr));
        TwoCell y3 = vcomp(hcomp2(del, id_wr),
                           vcomp(dagger2(associator(wr, wl, wr)), hcomp2(id_wr, cp)));
        err = std::max(err, max_entry_diff(y3, id_wr));

        // Copying then comparing deletes the hole.
        TwoCell hole = vcomp(cm, cp);
        err = std::max(err, max_entry_diff(hole, identity_2(OneCell::identity(TwoHilbObject(n)))));

        out.push_back(named("witness-axioms-n" + std::to_string(n), err <= tol, err));
    }
    return out;
}

std::vector<CheckReport> check_frobenius_suite(double tol) {
    std::vector<CheckReport> out;
    for (int n = 1; n <= 6; ++n) {
        FrobeniusReport r = check_frobenius(induced_frobenius(n), tol);
        out.push_back(named("frobenius-induced-n" + std::to_string(n), r.all(), 0.0));
    }
    std::mt19937 rng(kSeed);
    bool transported_ok = true;
    for (int k = 0; k < 10; ++k) {
        const int n = 2 + k % 4;
        ComplexMatrix u = random_unitary(n, rng);
        FrobeniusReport r = check_frobenius(transport_frobenius(u, induced_frobenius(n)), tol);
        transported_ok = transported_ok && r.all();
    }
    out.push_back(named("frobenius-transported", transported_ok, 0.0));

    bool modules_ok = true;
    {
        // Rank-one family from a random basis on C^2.
        ComplexMatrix u = random_unitary(2, rng);
        std::vector<ComplexMatrix> ps;
        for (int k = 0; k < 2; ++k) {
            ComplexMatrix v(2, 1);
            for (int i = 0; i < 2; ++i) v(i, 0) = u(i, k);
            ps.push_back(v * dagger(v));
        }
        modules_ok =
            modules_ok &&
            check_module(module_from_measurement(ProjectorFamily(2, std::move(ps))), tol).all();
    }
    {
        ProjectorFamily trivial(3, {ComplexMatrix::identity(3)});
        modules_ok = modules_ok && check_module(module_from_measurement(trivial), tol).all();
    }
    {
        ComplexMatrix p0(4, 4), p1(4, 4);
        p0(0, 0) = p0(1, 1) = 1.0;
        p1(2, 2) = p1(3, 3) = 1.0;
        ProjectorFamily pf(4, {p0, p1});
        modules_ok = modules_ok && check_module(module_from_measurement(pf), tol).all();
    }
    out.push_back(named("frobenius-modules", modules_ok, 0.0));
    return out;
}

std::vector<CheckReport> check_interchange(double tol) {
    std::mt19937 rng(kSeed);
    std::uniform_int_distribution<int> size(1, 3);
    double err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        TwoHilbObject a(size(rng)), b(size(rng)), c(size(rng));
        OneCell f0 = random_one_cell(a, b, 3, rng);
        OneCell f1 = random_one_cell(a, b, 3, rng);
        OneCell f2 = random_one_cell(a, b, 3, rng);
        OneCell g0 = random_one_cell(b, c, 3, rng);
        OneCell g1 = random_one_cell(b, c, 3, rng);
        OneCell g2 = random_one_cell(b, c, 3, rng);
        TwoCell alpha = random_two_cell(f0, f1, rng);
        TwoCell alpha2 = random_two_cell(f1, f2, rng);
        TwoCell beta = random_two_cell(g0, g1, rng);
        TwoCell beta2 = random_two_cell(g1, g2, rng);
        TwoCell lhs = vcomp(hcomp2(beta2, alpha2), hcomp2(beta, alpha));
        TwoCell rhs = hcomp2(vcomp(beta2, beta), vcomp(alpha2, alpha));
        err = std::max(err, max_entry_diff(lhs, rhs));
    }
    return {named("interchange-100-random", err <= tol, err)};
}

std::vector<CheckReport> check_double_unitarity(double tol) {
    std::vector<CheckReport> out;
    out.push_back(named(
        "double-unitarity-bell-measurement",
        is_horizontally_unitary(scalar_mul(Complex(std::sqrt(2.0), 0.0), bell_measurement()),
                                measurement_legs(2, 4), tol),
        0.0));
    out.push_back(named("double-unitarity-bell-corrections",
                        is_horizontally_unitary(bell_corrections(), controlled_legs(4, 2), tol),
                        0.0));

    // Teleportation success and horizontal unitarity of the correction must
    // agree, kit by kit.
    std::mt19937 rng(kSeed);
    bool agree = true;
    std::vector<std::vector<ComplexMatrix>> kits;
    const std::vector<ComplexMatrix> pauli = weyl_corrections(2);
    for (int v = 0; v < 4; ++v) {
        std::vector<ComplexMatrix> rotated;
        for (int k = 0; k < 4; ++k) rotated.push_back(pauli[(k + v) % 4]);
        kits.push_back(std::move(rotated));
    }
    for (int k = 0; k < 3; ++k) {
        ComplexMatrix p = random_unitary(2, rng);
        ComplexMatrix q = random_unitary(2, rng);
        std::vector<ComplexMatrix> maps;
        for (const auto& w : pauli) maps.push_back(p * w * q);
        kits.push_back(std::move(maps));
    }
    for (const auto& maps : kits) {
        TwoCell correction = controlled_operation(maps);
        TwoCell measurement = matched_measurement(maps);
        bool teleports = check_teleportation(measurement, correction, 4, tol).passed;
        bool dense = check_dense_coding(correction, measurement, 4, tol).passed;
        bool unitary = is_horizontally_unitary(correction, controlled_legs(4, 2), tol);
        agree = agree && teleports && dense && unitary;
    }
    out.push_back(named("double-unitarity-kits-agree", agree, 0.0));

    // A singular controlled map must be rejected on every route.
    std::vector<ComplexMatrix> broken = pauli;
    broken[1] = ComplexMatrix{{1, 0}, {0, 0}};
    TwoCell bad = controlled_operation(broken);
    TwoCell small_bad =
        controlled_operation({ComplexMatrix::identity(2), ComplexMatrix{{1, 0}, {0, 0}}});
    bool rejected = !is_horizontally_unitary(bad, controlled_legs(4, 2), tol) &&
                    !is_horizontally_invertible(small_bad, controlled_legs(2, 2), tol) &&
                    !is_horizontally_unitary(small_bad, controlled_legs(2, 2), tol) &&
                    !check_teleportation(bell_measurement(), bad, 4, tol).passed;
    out.push_back(named("double-unitarity-singular-rejected", rejected, 0.0));
    return out;
}

std::vector<CheckReport> check_decoherence_suite(double tol) {
    std::vector<CheckReport> out;

    bool cdt_ok = true;
    bool self_ok = true;
    for (int n = 1; n <= 6; ++n) {
        ClassicalDataType cdt = standard_cdt(n);
        cdt_ok = cdt_ok && check_classical_structure(cdt, tol).all();
        InteractionSystem self(n, cdt, cdt.delta);
        self_ok = self_ok && check_interaction(self, tol).all();
    }
    out.push_back(named("decoherence-classical-structures", cdt_ok, 0.0));
    out.push_back(named("decoherence-self-interaction", self_ok, 0.0));

    {
        ClassicalDataType e = standard_cdt(2);
        InteractionSystem a(2, e, e.delta);
        TensorOverEnvironment t = tensor_over_environment(a, a);
        bool ok = t.induced.sys_dim == 2 && is_isometry(t.embedding, tol) &&
                  check_interaction(t.induced, tol).all();
        out.push_back(named("decoherence-equalizer", ok, 0.0));
    }

    std::mt19937 rng(kSeed);
    {
        bool ok = true;
        ClassicalDataType e = standard_cdt(2);
        InteractionSystem buffer(2, e, e.delta);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int k = 0; k < 10; ++k) {
            const int s = 2 + k % 2;
            InteractionSystem joint = buffered_interaction(buffer, s);
            ComplexMatrix f(s, s);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) f(i, j) = Complex(gauss(rng), gauss(rng));
            ok = ok && check_interaction(joint, tol).all() &&
                 is_protected(kron(ComplexMatrix::identity(2), f), joint, joint, tol);
        }
        out.push_back(named("decoherence-buffered-protected", ok, 0.0));
    }

    {
        bool ok = true;
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int k = 0; k < 20; ++k) {
            const int n = 2 + k % 2, d = 2;
            ComplexMatrix f(n * d, n * d);
            const bool block_diagonal = coin(rng) == 1;
            for (int bi = 0; bi < n; ++bi)
                for (int bj = 0; bj < n; ++bj) {
                    if (block_diagonal && bi != bj) continue;
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            f(bi * d + i, bj * d + j) = Complex(gauss(rng), gauss(rng));
                }
            ClassicalDataType e = standard_cdt(n);
            InteractionSystem sys(n * d, e, kron(e.delta, ComplexMatrix::identity(d)));
            bool prot = is_protected(f, sys, sys, tol);
            auto blocks = controlled_form(f, n, d, tol);
            ok = ok && (prot == blocks.has_value());
            if (blocks) {
                // The extracted blocks must reassemble the original map.
                ComplexMatrix rebuilt(n * d, n * d);
                for (int b = 0; b < n; ++b)
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j)
                            rebuilt(b * d + i, b * d + j) = (*blocks)[b](i, j);
                ok = ok && approx_eq(rebuilt, f, tol);
            }
        }
        out.push_back(named("decoherence-controlled-form", ok, 0.0));
    }
    return out;
}

}  // namespace

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

std::vector<CheckReport> run_check(const std::string& name, int n, double tol) {
    if (name == "teleportation") return check_teleportation_suite(n, tol);
    if (name == "dense-coding") return check_dense_coding_suite(n, tol);
    if (name == "complementarity") return check_complementarity_suite(n, tol);
    if (name == "erasure") return check_erasure_suite(n, tol);
    if (name == "witness-axioms") return check_witness_axioms(tol);
    if (name == "frobenius") return check_frobenius_suite(tol);
    if (name == "interchange") return check_interchange(tol);
    if (name == "double-unitarity") return check_double_unitarity(tol);
    if (name == "decoherence") return check_decoherence_suite(tol);
    if (name == "all") {
        std::vector<CheckReport> out;
        for (const char* part : {"teleportation", "dense-coding", "complementarity", "erasure",
                                 "witness-axioms", "frobenius", "interchange",
                                 "double-unitarity", "decoherence"}) {
            auto reports = run_check(part, n, tol);
            out.insert(out.end(), reports.begin(), reports.end());
        }
        return out;
    }
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace twohilb
