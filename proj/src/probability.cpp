#include "ringcomm/probability.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "ringcomm/errors.hpp"
#include "ringcomm/subgroup.hpp"

namespace ringcomm {

namespace {

constexpr std::size_t kParallelThreshold = 256;

// Runs body(x, counts) over every x, partitioned across threads by contiguous blocks of x,
// each block with its own count vector; the vectors are summed at the end, so the result
// does not depend on the partition.
template <typename Body>
std::vector<std::int64_t> partitioned_counts(const FiniteRing& ring, std::size_t slots, Body body) {
  const std::size_t n = ring.order();
  std::size_t workers = 1;
  if (n >= kParallelThreshold) {
    workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 16);
  }
  std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(slots, 0));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t x = w * n / workers; x < (w + 1) * n / workers; ++x) {
          body(static_cast<ElementIndex>(x), partial[w]);
        }
      });
    }
  }
  std::vector<std::int64_t> total(slots, 0);
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < slots; ++i) total[i] += p[i];
  }
  return total;
}

std::int64_t squared_order(const FiniteRing& ring) {
  return static_cast<std::int64_t>(ring.order()) * static_cast<std::int64_t>(ring.order());
}

}  // namespace

Probability pr_bruteforce(const FiniteRing& ring, const RingElement& r) {
  if (ring.order() > FiniteRing::kMaxOrder) throw OrderOverflow(ring.order(), FiniteRing::kMaxOrder);
  const ElementIndex target = ring.index_of(r);
  auto hits = partitioned_counts(ring, 1, [&](ElementIndex x, std::vector<std::int64_t>& c) {
    const RingElement& xe = ring.element(x);
    for (const RingElement& ye : ring.elements()) {
      if (ring.index_of(ring.commutator(xe, ye)) == target) ++c[0];
    }
  });
  return Probability(hits[0], squared_order(ring));
}

std::vector<std::int64_t> commutator_counts(const FiniteRing& ring) {
  if (ring.order() > FiniteRing::kMaxOrder) throw OrderOverflow(ring.order(), FiniteRing::kMaxOrder);
  return partitioned_counts(ring, ring.order(), [&](ElementIndex x, std::vector<std::int64_t>& c) {
    const RingElement& xe = ring.element(x);
    for (const RingElement& ye : ring.elements()) ++c[ring.index_of(ring.commutator(xe, ye))];
  });
}

Probability pr_formula(const FiniteRing& ring, const RingElement& r) {
  const ElementIndex target = ring.index_of(r);
  const auto n = static_cast<std::int64_t>(ring.order());
  std::int64_t centralizer_sum = 0;
  Fraction reciprocal_sum{0};
  for (std::size_t x = 0; x < ring.order(); ++x) {
    AdditiveSubgroup image = commutator_image(ring, static_cast<ElementIndex>(x));
    if (!image.contains(target)) continue;
    centralizer_sum += static_cast<std::int64_t>(centralizer(ring, static_cast<ElementIndex>(x)).size());
    reciprocal_sum += Fraction(1, static_cast<std::int64_t>(image.size()));
  }
  Fraction by_centralizers(centralizer_sum, n * n);
  Fraction by_images = reciprocal_sum / n;
  if (by_centralizers != by_images) {
    throw InternalInconsistency("centralizer sum " + to_string(by_centralizers) +
                                " disagrees with image sum " + to_string(by_images) + " at r = " +
                                to_string(r));
  }
  return Probability(by_centralizers);
}

Probability commuting_probability(const FiniteRing& ring) { return pr_formula(ring, ring.zero()); }

std::vector<Probability> formula_spectrum(const FiniteRing& ring) {
  if (ring.order() > FiniteRing::kMaxOrder) throw OrderOverflow(ring.order(), FiniteRing::kMaxOrder);
  const auto n = static_cast<std::int64_t>(ring.order());
  std::vector<std::int64_t> centralizer_sums(ring.order(), 0);
  std::vector<Fraction> reciprocal_sums(ring.order(), Fraction{0});
  for (std::size_t x = 0; x < ring.order(); ++x) {
    AdditiveSubgroup image = commutator_image(ring, static_cast<ElementIndex>(x));
    const auto c = static_cast<std::int64_t>(centralizer(ring, static_cast<ElementIndex>(x)).size());
    const Fraction share(1, static_cast<std::int64_t>(image.size()));
    for (ElementIndex r : image.members()) {
      centralizer_sums[r] += c;
      reciprocal_sums[r] += share;
    }
  }
  std::vector<Probability> out;
  out.reserve(ring.order());
  for (std::size_t r = 0; r < ring.order(); ++r) {
    Fraction by_centralizers(centralizer_sums[r], n * n);
    if (by_centralizers != reciprocal_sums[r] / n) {
      throw InternalInconsistency("centralizer sum and image sum disagree at r = " +
                                  to_string(ring.element(static_cast<ElementIndex>(r))));
    }
    out.emplace_back(by_centralizers);
  }
  return out;
}

std::map<RingElement, Probability> pr_spectrum(const FiniteRing& ring) {
  auto values = formula_spectrum(ring);
  std::map<RingElement, Probability> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.emplace(ring.element(static_cast<ElementIndex>(i)), values[i]);
  }
  return out;
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  if (n < 2) throw std::domain_error("smallest_prime_factor needs n >= 2");
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return p;
  }
  return n;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

RingStatistics ring_statistics(const FiniteRing& ring) {
  RingStatistics stats;
  stats.order = static_cast<std::int64_t>(ring.order());
  stats.center_order = static_cast<std::int64_t>(center(ring).size());
  stats.commutative = ring.is_commutative();
  stats.counts = commutator_counts(ring);
  return stats;
}

namespace {

void require_noncommutative_nonzero(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r,
                                    const char* what) {
  if (stats.commutative) throw CommutativeRing(std::string(what) + " needs a non-commutative ring");
  if (r == ring.zero()) throw ZeroR(std::string(what) + " needs r != 0");
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

BoundCheck skipped(const std::string& why) {
  BoundCheck c;
  c.detail = why;
  return c;
}

}  // namespace

BoundCheck check_lower_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r) {
  require_noncommutative_nonzero(ring, stats, r, "the central-index lower bound");
  const std::int64_t index = stats.order / stats.center_order;
  BoundCheck check;
  check.lhs = stats.pr(ring.index_of(r)).value();
  check.rhs = Fraction(3, index * index);
  if (check.lhs.numerator() == 0) {
    check.status = CheckStatus::skipped;
    check.detail = "r is not a realized commutator (Pr_r = 0)";
    return check;
  }
  check.status = status_of(check.lhs >= check.rhs);
  check.detail = "|R:Z| = " + std::to_string(index);
  return check;
}

BoundCheck check_pr_upper_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r) {
  BoundCheck check;
  check.lhs = stats.pr(ring.index_of(r)).value();
  check.rhs = stats.pr(ring.index_of(ring.zero())).value();
  const bool is_zero = r == ring.zero();
  const bool equal = check.lhs == check.rhs;
  check.status = status_of(check.lhs <= check.rhs && equal == is_zero);
  check.detail = equal ? "Pr_r = Pr" : "Pr_r < Pr";
  return check;
}

BoundCheck check_prime_bound(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r) {
  require_noncommutative_nonzero(ring, stats, r, "the smallest-prime upper bound");
  const std::int64_t p = smallest_prime_factor(stats.order);
  BoundCheck check;
  check.lhs = stats.pr(ring.index_of(r)).value();
  check.rhs = Fraction(stats.order - stats.center_order, p * stats.order);
  check.status = status_of(check.lhs <= check.rhs);
  check.detail = std::string(check.lhs == check.rhs ? "attained with equality" : "strict") +
                 ", p = " + std::to_string(p);
  return check;
}

BoundCheck check_prime_bound_strict(const RingStatistics& stats) {
  if (stats.commutative) throw CommutativeRing("the smallest-prime upper bound needs a non-commutative ring");
  const std::int64_t p = smallest_prime_factor(stats.order);
  BoundCheck check;
  check.lhs = Fraction(stats.order - stats.center_order, p * stats.order);
  check.rhs = Fraction(1, p);
  check.status = status_of(check.lhs < check.rhs);
  check.detail = "p = " + std::to_string(p);
  return check;
}

BoundCheck check_lower_bound(const FiniteRing& ring, const RingElement& r) {
  return check_lower_bound(ring, ring_statistics(ring), r);
}

BoundCheck check_pr_upper_bound(const FiniteRing& ring, const RingElement& r) {
  return check_pr_upper_bound(ring, ring_statistics(ring), r);
}

BoundCheck check_prime_bound(const FiniteRing& ring, const RingElement& r) {
  return check_prime_bound(ring, ring_statistics(ring), r);
}

BoundCheck check_prime_bound_strict(const FiniteRing& ring) {
  return check_prime_bound_strict(ring_statistics(ring));
}

BoundReport check_bounds(const FiniteRing& ring, const RingElement& r) {
  return check_bounds(ring, ring_statistics(ring), r);
}

BoundReport check_bounds(const FiniteRing& ring, const RingStatistics& stats, const RingElement& r) {
  BoundReport report;
  report.r = r;
  report.pr_r = stats.pr(ring.index_of(r));
  report.against_pr = check_pr_upper_bound(ring, stats, r);
  try {
    report.lower = check_lower_bound(ring, stats, r);
  } catch (const CommutativeRing&) {
    report.lower = skipped("ring is commutative");
  } catch (const ZeroR&) {
    report.lower = skipped("r = 0");
  }
  try {
    report.prime_upper = check_prime_bound(ring, stats, r);
    report.prime_strict = check_prime_bound_strict(stats);
  } catch (const CommutativeRing&) {
    report.prime_upper = skipped("ring is commutative");
    report.prime_strict = skipped("ring is commutative");
  } catch (const ZeroR&) {
    report.prime_upper = skipped("r = 0");
    report.prime_strict = skipped("r = 0");
  }
  return report;
}

}  // namespace ringcomm
