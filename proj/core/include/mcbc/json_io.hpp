#pragma once

#include <string>

#include "mcbc/bounds.hpp"
#include "mcbc/cwc.hpp"
#include "mcbc/designs.hpp"
#include "mcbc/set_system.hpp"

namespace mcbc {

// Code wire format, shared by every tool:
//   {"n": int, "m": int, "servers": [[int, ...], ...]}
// with 1-based item indices and each server array sorted ascending.
// Serialization is byte-deterministic (fixed key order, compact arrays).
std::string code_to_json(const McbcCode& code);
McbcCode code_from_json(const std::string& text);
McbcCode load_code_file(const std::string& path);

std::string cwc_to_json(const ConstantWeightCode& cwc);
std::string steiner_to_json(const SteinerSystem& s);

std::string bounds_report_to_json(const BoundsReport& report);

}  // namespace mcbc
