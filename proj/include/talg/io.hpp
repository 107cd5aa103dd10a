#pragma once

#include <string>

#include "talg/algebra.hpp"

namespace talg {

/// Decode an algebra document. The format is a strict JSON object:
///   {"kind": "lattice"|"t"|"ht", "n": int, "meet": [[int]], "join": [[int]], ...}
/// kind "t" adds  "unary": {"c": [int], "s1": [int], "s2": [int]};
/// kind "ht" adds "unary": {"s1": [int], "s2": [int]}, "imp": [[int]], "neg": [int].
/// Optional "zero"/"one" integers are cross-validated against the tables;
/// when absent the neutral elements are derived from the join/meet tables.
/// Unknown fields are rejected. Throws ParseError on any defect.
Algebra load_algebra(const std::string& text);

/// Encode in the same format (always including zero/one). Deterministic:
/// object keys serialize in sorted order, two-space indent, trailing newline.
std::string save_algebra(const Algebra& a);

/// FNV-1a 64-bit content digest, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

}  // namespace talg
