#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ringcomm/fraction.hpp"
#include "ringcomm/probability.hpp"
#include "ringcomm/ring.hpp"

namespace ringcomm {

/// Claim ids in report order.
inline constexpr std::array<std::string_view, 13> kClaimIds = {
    "L2.1", "L2.2", "T2.3", "C2.4", "P2.5", "P2.6", "P2.7a", "P2.7b-even", "P2.7b-odd",
    "P2.8", "P2.9", "P2.10", "T3.1"};

/// Outcome of one claim over every applicable r (or x). `lhs`/`rhs` show the first failing
/// instance if any, otherwise a representative one.
struct ClaimResult {
  std::string id;
  CheckStatus status = CheckStatus::skipped;
  Fraction lhs{0};
  Fraction rhs{0};
  std::string detail;
};

struct VerificationReport {
  std::string ring_id;
  std::vector<ClaimResult> claims;  // one per kClaimIds entry, same order

  bool passed() const;
  const ClaimResult& claim(std::string_view id) const;
};

/// Runs every claim against `ring`. The product claim uses E4 as the fixed companion and
/// the invariance claim compares `ring` with ring x zero_ring(2).
VerificationReport verify_ring(const FiniteRing& ring, std::string ring_id);

/// One line per claim: "<id> <status> <lhs> <rhs> <detail>", tab separated, after a header.
std::string format_report(const VerificationReport& report);

}  // namespace ringcomm
