// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "twohilb/cells.hpp"

namespace twohilb {
namespace dsl {

/// Parse or evaluation failure, carrying the offset into the source text.
struct DslError : std::runtime_error {
    size_t position;
    DslError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct GeneratorCall {
    std::string name;
    std::vector<int> args;
};
struct IdOf {
    ExprPtr inner;
};
struct HComp {
    ExprPtr left;   // outer factor
    ExprPtr right;  // inner factor
};
struct VComp {
    ExprPtr upper;  // applied second
    ExprPtr lower;  // applied first
};
struct Dagger {
    ExprPtr inner;
};
struct Scale {
    Complex factor;
    ExprPtr inner;
};
struct MeasCall {
    std::string basis;
};
struct CPhaseCall {
    ComplexMatrix phases;
};

struct Expr {
    std::variant<GeneratorCall, IdOf, HComp, VComp, Dagger, Scale, MeasCall, CPhaseCall> node;
    size_t position = 0;
};

ExprPtr parse(const std::string& text);

/// Fully parenthesized rendering; parse(print(e)) reproduces e.
std::string print(const Expr& e);

using Value = std::variant<OneCell, TwoCell>;

Value evaluate(const Expr& e);

}  // namespace dsl
}  // namespace twohilb
