// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "twohilb/protocols.hpp"

namespace twohilb {

/// Named verification suites backing the `check` command. Valid names:
/// teleportation, dense-coding, complementarity, erasure, witness-axioms,
/// frobenius, interchange, decoherence, all. `n` selects the classical
/// dimension where a suite supports one (0 keeps the default).
std::vector<CheckReport> run_check(const std::string& name, int n, double tol);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace twohilb
