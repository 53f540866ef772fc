#include "ringcomm/isoclinism.hpp"

#include <algorithm>
#include <sstream>

#include "ringcomm/errors.hpp"
#include "ringcomm/probability.hpp"

namespace ringcomm {

FiniteAbelianGroup QuotientGroup::as_group(const FiniteRing& ring) const {
  return FiniteAbelianGroup(size(), 0, [&ring, this](FiniteAbelianGroup::Index a, FiniteAbelianGroup::Index b) {
    return coset_of[ring.add(representatives[a], representatives[b])];
  });
}

QuotientGroup quotient_by_center(const FiniteRing& ring) {
  QuotientGroup q;
  q.center = center(ring);
  constexpr auto unassigned = static_cast<std::uint32_t>(-1);
  q.coset_of.assign(ring.order(), unassigned);
  for (std::size_t x = 0; x < ring.order(); ++x) {
    if (q.coset_of[x] != unassigned) continue;
    const auto id = static_cast<std::uint32_t>(q.representatives.size());
    q.representatives.push_back(static_cast<ElementIndex>(x));
    for (ElementIndex z : q.center.members()) q.coset_of[ring.add(static_cast<ElementIndex>(x), z)] = id;
  }

  std::vector<std::vector<ElementIndex>> rep_rows;
  rep_rows.reserve(q.size());
  for (ElementIndex rep : q.representatives) rep_rows.push_back(ring.commutator_row(rep));
  for (std::size_t x = 0; x < ring.order(); ++x) {
    if (ring.commutator_row(static_cast<ElementIndex>(x)) != rep_rows[q.coset_of[x]]) {
      throw InternalInconsistency("commutator is not constant on the coset of " +
                                  to_string(ring.element(static_cast<ElementIndex>(x))));
    }
  }
  return q;
}

namespace {

constexpr std::int64_t kUnset = -1;

// Everything the search needs about one ring, with cosets numbered as in QuotientGroup.
struct SearchSide {
  explicit SearchSide(const FiniteRing& r)
      : ring(r), quotient(quotient_by_center(r)), derived(commutator_subgroup(r)) {
    const std::size_t q = quotient.size();
    coset_commutators.assign(q, std::vector<ElementIndex>(q));
    for (std::size_t u = 0; u < q; ++u) {
      auto row = ring.commutator_row(quotient.representatives[u]);
      for (std::size_t v = 0; v < q; ++v) coset_commutators[u][v] = row[quotient.representatives[v]];
    }
    FiniteAbelianGroup group = quotient.as_group(ring);
    for (std::size_t u = 0; u < q; ++u) {
      coset_orders.push_back(group.element_order(static_cast<FiniteAbelianGroup::Index>(u)));
    }
  }

  std::uint32_t coset_add(std::size_t u, std::size_t v) const {
    return quotient.coset_of[ring.add(quotient.representatives[u], quotient.representatives[v])];
  }

  const FiniteRing& ring;
  QuotientGroup quotient;
  AdditiveSubgroup derived;
  std::vector<std::vector<ElementIndex>> coset_commutators;
  std::vector<std::size_t> coset_orders;
};

// Partial additive map from a group onto another, grown one generator at a time.
struct PartialMap {
  std::vector<std::int64_t> image;     // kUnset outside the domain
  std::vector<std::int64_t> preimage;  // kUnset outside the image
  std::vector<std::int64_t> domain;    // in insertion order
};

PartialMap trivial_map(std::size_t from_order, std::size_t to_order, std::int64_t from_zero, std::int64_t to_zero) {
  PartialMap m;
  m.image.assign(from_order, kUnset);
  m.preimage.assign(to_order, kUnset);
  m.image[static_cast<std::size_t>(from_zero)] = to_zero;
  m.preimage[static_cast<std::size_t>(to_zero)] = from_zero;
  m.domain.push_back(from_zero);
  return m;
}

// Extends the map from <D> to <D, g> by g -> h. The new domain is the disjoint union of the
// cosets <D> + k g for k < t, t the first multiple with t g in <D>; the extension is a
// well-defined homomorphism iff the image of t g already equals t h. Fails on that
// mismatch or when injectivity would break.
template <typename AddFrom, typename AddTo>
bool extend_map(PartialMap& m, std::int64_t g, std::int64_t h, AddFrom add_from, AddTo add_to) {
  const std::size_t base = m.domain.size();
  std::int64_t multiple = g;
  std::int64_t target = h;
  while (m.image[static_cast<std::size_t>(multiple)] == kUnset) {
    for (std::size_t i = 0; i < base; ++i) {
      const std::int64_t e = m.domain[i];
      const std::int64_t s = add_from(e, multiple);
      const std::int64_t t = add_to(m.image[static_cast<std::size_t>(e)], target);
      if (m.preimage[static_cast<std::size_t>(t)] != kUnset) return false;
      m.image[static_cast<std::size_t>(s)] = t;
      m.preimage[static_cast<std::size_t>(t)] = s;
      m.domain.push_back(s);
    }
    multiple = add_from(multiple, g);
    target = add_to(target, h);
  }
  return m.image[static_cast<std::size_t>(multiple)] == target;
}

class IsoclinismSearch {
 public:
  IsoclinismSearch(const SearchSide& from, const SearchSide& to, std::size_t budget)
      : from_(from), to_(to), budget_(budget) {
    // Greedy generating set of R1/Z(R1) in coset order.
    std::vector<char> span(from_.quotient.size(), 0);
    std::vector<std::size_t> members{0};
    span[0] = 1;
    for (std::size_t u = 1; u < from_.quotient.size(); ++u) {
      if (span[u]) continue;
      generators_.push_back(u);
      const std::size_t base = members.size();
      for (std::size_t m = u; !span[m]; m = from_.coset_add(m, u)) {
        for (std::size_t i = 0; i < base; ++i) {
          const std::size_t s = from_.coset_add(members[i], m);
          span[s] = 1;
          members.push_back(s);
        }
      }
    }
  }

  std::optional<IsoclinismWitness> run() {
    PartialMap alpha = trivial_map(from_.quotient.size(), to_.quotient.size(), 0, 0);
    return assign(0, alpha);
  }

 private:
  std::optional<IsoclinismWitness> assign(std::size_t depth, const PartialMap& alpha) {
    if (depth == generators_.size()) return derive_beta(alpha);
    const std::size_t g = generators_[depth];
    for (std::size_t h = 0; h < to_.quotient.size(); ++h) {
      if (++nodes_ > budget_) throw SearchBudgetExceeded(budget_);
      if (to_.coset_orders[h] != from_.coset_orders[g]) continue;
      PartialMap next = alpha;
      bool ok = extend_map(
          next, static_cast<std::int64_t>(g), static_cast<std::int64_t>(h),
          [&](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(from_.coset_add(a, b)); },
          [&](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>(to_.coset_add(a, b)); });
      if (!ok) continue;
      if (auto w = assign(depth + 1, next)) return w;
    }
    return std::nullopt;
  }

  // Compatibility fixes beta([u, v]) = [alpha u, alpha v] on realized commutators; beta
  // exists iff that assignment is consistent and extends to an additive bijection.
  std::optional<IsoclinismWitness> derive_beta(const PartialMap& alpha) const {
    const FiniteRing& r1 = from_.ring;
    const FiniteRing& r2 = to_.ring;
    const std::size_t q = from_.quotient.size();
    std::vector<std::int64_t> forced(r1.order(), kUnset);
    std::vector<ElementIndex> realized;
    for (std::size_t u = 0; u < q; ++u) {
      for (std::size_t v = 0; v < q; ++v) {
        const ElementIndex c1 = from_.coset_commutators[u][v];
        const auto c2 = static_cast<std::int64_t>(
            to_.coset_commutators[static_cast<std::size_t>(alpha.image[u])][static_cast<std::size_t>(alpha.image[v])]);
        if (forced[c1] == kUnset) {
          forced[c1] = c2;
          realized.push_back(c1);
        } else if (forced[c1] != c2) {
          return std::nullopt;
        }
      }
    }
    std::sort(realized.begin(), realized.end());

    const auto zero1 = static_cast<std::int64_t>(r1.index_of(r1.zero()));
    const auto zero2 = static_cast<std::int64_t>(r2.index_of(r2.zero()));
    PartialMap beta = trivial_map(r1.order(), r2.order(), zero1, zero2);
    auto add1 = [&](std::int64_t a, std::int64_t b) {
      return static_cast<std::int64_t>(r1.add(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)));
    };
    auto add2 = [&](std::int64_t a, std::int64_t b) {
      return static_cast<std::int64_t>(r2.add(static_cast<ElementIndex>(a), static_cast<ElementIndex>(b)));
    };
    for (ElementIndex c : realized) {
      if (beta.image[c] != kUnset) continue;
      if (!extend_map(beta, c, forced[c], add1, add2)) return std::nullopt;
    }
    for (ElementIndex c : realized) {
      if (beta.image[c] != forced[c]) return std::nullopt;
    }
    if (beta.domain.size() != to_.derived.size()) return std::nullopt;

    IsoclinismWitness w;
    for (std::size_t u = 0; u < q; ++u) {
      w.alpha.emplace_back(r1.element(from_.quotient.representatives[u]),
                           r2.element(to_.quotient.representatives[static_cast<std::size_t>(alpha.image[u])]));
    }
    for (ElementIndex c : from_.derived.members()) {
      w.beta.emplace_back(r1.element(c), r2.element(static_cast<ElementIndex>(beta.image[c])));
    }
    return w;
  }

  const SearchSide& from_;
  const SearchSide& to_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> generators_;
};

}  // namespace

std::optional<IsoclinismWitness> find_isoclinism(const FiniteRing& r1, const FiniteRing& r2,
                                                 const IsoclinismSearchOptions& options) {
  SearchSide from(r1);
  SearchSide to(r2);
  if (from.quotient.size() != to.quotient.size() || from.derived.size() != to.derived.size()) {
    return std::nullopt;
  }
  if (invariant_factors(from.quotient.as_group(r1)) != invariant_factors(to.quotient.as_group(r2)) ||
      invariant_factors(subgroup_as_group(r1, from.derived)) != invariant_factors(subgroup_as_group(r2, to.derived))) {
    return std::nullopt;
  }
  if (from.quotient.size() > options.max_quotient_order) {
    throw SearchGateExceeded("|R/Z(R)| = " + std::to_string(from.quotient.size()) + " exceeds search gate " +
                             std::to_string(options.max_quotient_order));
  }
  if (from.derived.size() > options.max_commutator_subgroup_order) {
    throw SearchGateExceeded("|[R,R]| = " + std::to_string(from.derived.size()) + " exceeds search gate " +
                             std::to_string(options.max_commutator_subgroup_order));
  }
  return IsoclinismSearch(from, to, options.node_budget).run();
}

bool verify_witness(const FiniteRing& r1, const FiniteRing& r2, const IsoclinismWitness& w) {
  // Resolve every element first so shape errors surface regardless of validity.
  std::vector<std::pair<ElementIndex, ElementIndex>> alpha, beta;
  for (const auto& [a, b] : w.alpha) alpha.emplace_back(r1.index_of(a), r2.index_of(b));
  for (const auto& [a, b] : w.beta) beta.emplace_back(r1.index_of(a), r2.index_of(b));

  const QuotientGroup q1 = quotient_by_center(r1);
  const QuotientGroup q2 = quotient_by_center(r2);
  const AdditiveSubgroup d1 = commutator_subgroup(r1);
  const AdditiveSubgroup d2 = commutator_subgroup(r2);
  if (q1.size() != q2.size() || d1.size() != d2.size()) return false;

  // alpha as a map on coset numbers
  std::vector<std::int64_t> a_map(q1.size(), kUnset);
  std::vector<char> a_hit(q2.size(), 0);
  for (const auto& [x1, x2] : alpha) {
    const auto u = q1.coset_of[x1];
    const auto v = q2.coset_of[x2];
    if (a_map[u] != kUnset || a_hit[v]) return false;
    a_map[u] = v;
    a_hit[v] = 1;
  }
  if (alpha.size() != q1.size()) return false;
  for (std::size_t u = 0; u < q1.size(); ++u) {
    for (std::size_t v = 0; v < q1.size(); ++v) {
      const auto sum = q1.coset_of[r1.add(q1.representatives[u], q1.representatives[v])];
      const auto image_sum = q2.coset_of[r2.add(q2.representatives[static_cast<std::size_t>(a_map[u])],
                                                q2.representatives[static_cast<std::size_t>(a_map[v])])];
      if (a_map[sum] != static_cast<std::int64_t>(image_sum)) return false;
    }
  }

  // beta on [R1, R1]
  std::vector<std::int64_t> b_map(r1.order(), kUnset);
  std::vector<char> b_hit(r2.order(), 0);
  for (const auto& [c1, c2] : beta) {
    if (!d1.contains(c1) || !d2.contains(c2) || b_map[c1] != kUnset || b_hit[c2]) return false;
    b_map[c1] = c2;
    b_hit[c2] = 1;
  }
  if (beta.size() != d1.size()) return false;
  for (ElementIndex a : d1.members()) {
    for (ElementIndex b : d1.members()) {
      if (b_map[r1.add(a, b)] != static_cast<std::int64_t>(r2.add(static_cast<ElementIndex>(b_map[a]),
                                                                    static_cast<ElementIndex>(b_map[b])))) {
        return false;
      }
    }
  }

  // beta([x1, y1]) = [x2, y2] over all coset pairs
  for (std::size_t u = 0; u < q1.size(); ++u) {
    auto row1 = r1.commutator_row(q1.representatives[u]);
    auto row2 = r2.commutator_row(q2.representatives[static_cast<std::size_t>(a_map[u])]);
    for (std::size_t v = 0; v < q1.size(); ++v) {
      const ElementIndex c1 = row1[q1.representatives[v]];
      const ElementIndex c2 = row2[q2.representatives[static_cast<std::size_t>(a_map[v])]];
      if (b_map[c1] != static_cast<std::int64_t>(c2)) return false;
    }
  }
  return true;
}

IsoclinismWitness identity_witness(const FiniteRing& ring) {
  IsoclinismWitness w;
  const QuotientGroup q = quotient_by_center(ring);
  for (ElementIndex rep : q.representatives) {
    w.alpha.emplace_back(ring.element(rep), ring.element(rep));
  }
  const AdditiveSubgroup derived = commutator_subgroup(ring);
  for (ElementIndex c : derived.members()) {
    w.beta.emplace_back(ring.element(c), ring.element(c));
  }
  return w;
}

std::string serialize_witness(const IsoclinismWitness& w) {
  auto sorted = [](std::vector<std::pair<RingElement, RingElement>> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  std::ostringstream out;
  out << "alpha:\n";
  for (const auto& [a, b] : sorted(w.alpha)) out << to_string(a) << " -> " << to_string(b) << '\n';
  out << "beta:\n";
  for (const auto& [a, b] : sorted(w.beta)) out << to_string(a) << " -> " << to_string(b) << '\n';
  return out.str();
}

InvarianceReport verify_invariance(const FiniteRing& r1, const FiniteRing& r2, const IsoclinismWitness& w) {
  if (!verify_witness(r1, r2, w)) throw WitnessInvalid("witness is not a Z-isoclinism");

  InvarianceReport report;
  report.central_index_r1 = Fraction(static_cast<std::int64_t>(r1.order()),
                                     static_cast<std::int64_t>(center(r1).size()));
  report.central_index_r2 = Fraction(static_cast<std::int64_t>(r2.order()),
                                     static_cast<std::int64_t>(center(r2).size()));

  report.image_sizes_match = true;
  for (const auto& [s1, s2] : w.alpha) {
    if (commutator_image(r1, s1).size() != commutator_image(r2, s2).size()) report.image_sizes_match = false;
  }

  const auto counts1 = commutator_counts(r1);
  const auto counts2 = commutator_counts(r2);
  const auto n1 = static_cast<std::int64_t>(r1.order());
  const auto n2 = static_cast<std::int64_t>(r2.order());
  bool all_equal = true;
  for (const auto& [r, image] : w.beta) {
    InvarianceRow row{r, image, Probability(counts1[r1.index_of(r)], n1 * n1),
                      Probability(counts2[r2.index_of(image)], n2 * n2)};
    all_equal = all_equal && row.pr_r1 == row.pr_r2;
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) { return a.r < b.r; });
  report.holds = all_equal && report.image_sizes_match && report.central_index_r1 == report.central_index_r2;
  return report;
}

}  // namespace ringcomm
