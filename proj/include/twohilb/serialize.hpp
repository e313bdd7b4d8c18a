// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <variant>

#include "twohilb/cells.hpp"
#include "twohilb/protocols.hpp"

namespace twohilb {

using CellDocument = std::variant<OneCell, TwoCell, CheckReport>;

std::string serialize(const OneCell& cell);
std::string serialize(const TwoCell& cell);
std::string serialize(const CheckReport& report);
std::string serialize(const CellDocument& doc);

/// Parses any of the three document kinds; malformed input raises
/// std::runtime_error naming the JSON path.
CellDocument deserialize(const std::string& text);

}  // namespace twohilb
