#pragma once

#include <string>
#include <string_view>

#include "ringcomm/ring.hpp"

namespace ringcomm {

// Ring-file format, line oriented, '#' comments, blank lines ignored:
//
//   moduli: d1 d2 ... dk
//   c i j : a1 a2 ... ak        (exactly k*k of these, 1-based i, j, each pair once)
//
// Coordinates are reduced modulo the moduli on read.

/// Throws SyntaxError (with the 1-based line) and any validate_ring error.
FiniteRing parse_ring_file(std::string_view text);

/// Inverse of parse_ring_file; constants are written row-major.
std::string serialize_ring(const FiniteRing& ring);

FiniteRing load_ring_file(const std::string& path);
void save_ring_file(const FiniteRing& ring, const std::string& path);

}  // namespace ringcomm
