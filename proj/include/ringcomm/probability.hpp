#pragma once

#include <map>
#include <string>
#include <vector>

#include "ringcomm/fraction.hpp"
#include "ringcomm/ring.hpp"

namespace ringcomm {

/// Pr_r(R) = |{(x, y) : [x, y] = r}| / |R|^2 by enumerating every ordered pair.
/// This is the reference route every other computation is checked against.
Probability pr_bruteforce(const FiniteRing& ring, const RingElement& r);

/// Number of ordered pairs (x, y) with [x, y] = r, for every r, indexed by element.
std::vector<std::int64_t> commutator_counts(const FiniteRing& ring);

/// Pr_r(R) through the centralizer sum over {x : r in [x, R]}.
///
/// Evaluates both (1/|R|^2) sum |C_R(x)| and (1/|R|) sum 1/|[x, R]| and throws
/// InternalInconsistency if they disagree. Does not enumerate pairs.
Probability pr_formula(const FiniteRing& ring, const RingElement& r);

/// Pr(R) = Pr_0(R) = (1/|R|^2) sum_x |C_R(x)|.
Probability commuting_probability(const FiniteRing& ring);

/// Pr_r(R) for every r, keyed by element, from one batched pass of the centralizer sum
/// (both forms, compared exactly). Sums to exactly 1.
std::map<RingElement, Probability> pr_spectrum(const FiniteRing& ring);

/// pr_spectrum as a vector indexed by element.
std::vector<Probability> formula_spectrum(const FiniteRing& ring);

/// Smallest prime dividing n (n >= 2).
std::int64_t smallest_prime_factor(std::int64_t n);

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

/// One side-by-side comparison: `lhs` (relation) `rhs`.
struct BoundCheck {
  CheckStatus status = CheckStatus::skipped;
  Fraction lhs{0};
  Fraction rhs{0};
  std::string detail;
};

struct BoundReport {
  RingElement r;
  Probability pr_r;
  /// Pr_r >= 3 / |R : Z(R)|^2, checked only when r != 0, R non-commutative and Pr_r > 0.
  BoundCheck lower;
  /// Pr_r <= Pr, with equality iff r = 0.
  BoundCheck against_pr;
  /// Pr_r <= (|R| - |Z|) / (p |R|), checked only when r != 0 and R non-commutative.
  BoundCheck prime_upper;
  /// (|R| - |Z|) / (p |R|) < 1 / p, under the same conditions.
  BoundCheck prime_strict;
};

/// Per-ring data shared by the bound checks.
struct RingStatistics {
  std::int64_t order = 0;
  std::int64_t center_order = 0;
  bool commutative = true;
  /// commutator_counts(ring)
  std::vector<std::int64_t> counts;

  Probability pr(ElementIndex r) const { return Probability(counts.at(r), order * order); }
};

RingStatistics ring_statistics(const FiniteRing& ring);

/// Pr_r >= 3 / |R : Z(R)|^2. Throws CommutativeRing or ZeroR; skips (status skipped) when
/// r is not a realized commutator, since then Pr_r = 0 and the bound cannot hold.
BoundCheck check_lower_bound(const FiniteRing& ring, const RingElement& r);

/// Pr_r <= Pr, and equality exactly when r = 0.
BoundCheck check_pr_upper_bound(const FiniteRing& ring, const RingElement& r);

/// Pr_r <= (|R| - |Z(R)|) / (p |R|) where p is the smallest prime dividing |R|.
/// Throws CommutativeRing or ZeroR.
BoundCheck check_prime_bound(const FiniteRing& ring, const RingElement& r);

/// (|R| - |Z(R)|) / (p |R|) < 1 / p. Throws CommutativeRing.
BoundCheck check_prime_bound_strict(const FiniteRing& ring);

/// All of the above; precondition failures become skipped entries with the reason in detail.
BoundReport check_bounds(const FiniteRing& ring, const RingElement& r);
BoundReport check_bounds(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r);

BoundCheck check_lower_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r);
BoundCheck check_pr_upper_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r);
BoundCheck check_prime_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r);
BoundCheck check_prime_bound_strict(const RingStatistics& stats);

}  // namespace ringcomm
