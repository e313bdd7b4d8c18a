// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twohilb/checks.hpp"
#include "twohilb/dsl.hpp"
#include "twohilb/serialize.hpp"

namespace {

using namespace twohilb;

std::string read_input(const std::string& path) {
    if (path == "--" || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_check_command(const std::string& name, int n, double tol, bool json) {
    std::vector<CheckReport> reports = run_check(name, n, tol);
    if (json) {
        std::cout << "[";
        for (size_t i = 0; i < reports.size(); ++i)
            std::cout << (i ? "," : "") << serialize(reports[i]);
        std::cout << "]\n";
    } else {
        for (const auto& r : reports) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name
                      << "  max_error=" << r.max_entry_error;
            if (r.fitted_scalar != Complex(1.0, 0.0))
                std::cout << "  fitted_scalar=" << r.fitted_scalar.real()
                          << (r.fitted_scalar.imag() < 0 ? "-" : "+")
                          << std::abs(r.fitted_scalar.imag()) << "i";
            std::cout << "\n";
        }
    }
    return all_passed(reports) ? 0 : 1;
}

int run_eval_command(const std::string& path) {
    std::string text = read_input(path);
    dsl::Value value = dsl::evaluate(*dsl::parse(text));
    if (const OneCell* c = std::get_if<OneCell>(&value))
        std::cout << serialize(*c) << "\n";
    else
        std::cout << serialize(std::get<TwoCell>(value)) << "\n";
    return 0;
}

int run_diff_command(const std::string& path_a, const std::string& path_b, double tol) {
    CellDocument a = deserialize(read_input(path_a));
    CellDocument b = deserialize(read_input(path_b));
    if (a.index() != b.index()) {
        std::cout << "documents have different kinds\n";
        return 1;
    }
    if (const OneCell* ca = std::get_if<OneCell>(&a)) {
        bool same = *ca == std::get<OneCell>(b);
        std::cout << (same ? "equal\n" : "different dims\n");
        return same ? 0 : 1;
    }
    if (const TwoCell* ta = std::get_if<TwoCell>(&a)) {
        double err = max_entry_diff(*ta, std::get<TwoCell>(b));
        std::cout << "max_entry_error=" << err << "\n";
        return err <= tol ? 0 : 1;
    }
    std::cout << "cannot diff reports\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculator for the 2-category of finite-dimensional 2-Hilbert spaces"};
    app.require_subcommand(1);

    std::string check_name;
    int n = 0;
    double tol = kDefaultTol;
    bool json = false;
    CLI::App* check = app.add_subcommand("check", "Run a named verification suite");
    check
        ->add_option("name", check_name,
                     "teleportation|dense-coding|complementarity|erasure|witness-axioms|"
                     "frobenius|interchange|double-unitarity|decoherence|all")
        ->required();
    check->add_option("--n", n, "classical dimension, where applicable");
    check->add_option("--tolerance", tol, "absolute tolerance (default 1e-9)");
    check->add_flag("--json", json, "emit reports as JSON");

    std::string eval_path;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a diagram expression");
    eval->add_option("file", eval_path, "expression file, or -- for stdin")->required();

    std::string diff_a, diff_b;
    double diff_tol = kDefaultTol;
    CLI::App* diff = app.add_subcommand("diff", "Compare two serialized cells");
    diff->add_option("fileA", diff_a)->required();
    diff->add_option("fileB", diff_b)->required();
    diff->add_option("--tolerance", diff_tol, "absolute tolerance (default 1e-9)");

    // "--" names standard input for `eval`; shield it from the option
    // parser's separator handling.
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        args.push_back(a == "--" ? "-" : a);
    }
    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check_command(check_name, n, tol, json);
        if (eval->parsed()) return run_eval_command(eval_path);
        if (diff->parsed()) return run_diff_command(diff_a, diff_b, diff_tol);
    } catch (const twohilb::dsl::DslError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
