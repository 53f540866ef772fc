#pragma once

#include <span>
#include <string_view>

#include "ringcomm/ring.hpp"

namespace ringcomm {

/// The order-4 non-unital ring on Z2 x Z2 with e_i e_j = e_i.
FiniteRing e4_ring();

/// Z_n with all products zero.
FiniteRing zero_ring(int n);

/// Z_n with ordinary multiplication.
FiniteRing cyclic_ring(int n);

/// Upper-triangular s x s matrices over Z_n. Basis: matrix units E_ab with a <= b,
/// row-major.
FiniteRing triangular_ring(int n, int s);

/// All s x s matrices over Z_n. Basis: matrix units E_ab, row-major.
FiniteRing full_matrix_ring(int n, int s);

/// Looks a ring up by name: "E4", "zero_ring" n, "cyclic_ring" n, "triangular" n s,
/// "full_matrix" n s. Throws UnknownCatalogName, or RingError on a wrong parameter count.
FiniteRing catalog(std::string_view name, std::span<const int> params = {});

}  // namespace ringcomm
