#include "ringcomm/abelian_group.hpp"

#include <algorithm>
#include <map>

#include "ringcomm/errors.hpp"
#include "ringcomm/probability.hpp"

namespace ringcomm {

FiniteAbelianGroup::FiniteAbelianGroup(std::size_t order, Index zero, AddFn add)
    : order_(order), zero_(zero), add_(std::move(add)) {
  if (order_ == 0 || zero_ >= order_) throw RingError("abelian group needs a zero inside a non-empty set");
}

FiniteAbelianGroup::Index FiniteAbelianGroup::multiple(std::size_t k, Index a) const {
  Index acc = zero_;
  Index base = a;
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::size_t FiniteAbelianGroup::element_order(Index a) const {
  std::size_t k = 1;
  for (Index cur = a; cur != zero_; cur = add(cur, a)) {
    if (++k > order_) throw RingError("element order exceeds group order; addition is not a group law");
  }
  return k;
}

FiniteAbelianGroup additive_group(const FiniteRing& ring) {
  return FiniteAbelianGroup(ring.order(), ring.index_of(ring.zero()),
                            [&ring](ElementIndex a, ElementIndex b) { return ring.add(a, b); });
}

FiniteAbelianGroup subgroup_as_group(const FiniteRing& ring, const AdditiveSubgroup& subgroup) {
  auto zero = subgroup.position(ring.index_of(ring.zero()));
  if (!zero) throw RingError("subgroup does not contain zero");
  return FiniteAbelianGroup(subgroup.size(), static_cast<FiniteAbelianGroup::Index>(*zero),
                            [&ring, &subgroup](FiniteAbelianGroup::Index a, FiniteAbelianGroup::Index b) {
                              auto pos = subgroup.position(ring.add(subgroup.members()[a], subgroup.members()[b]));
                              if (!pos) throw RingError("subgroup is not closed under addition");
                              return static_cast<FiniteAbelianGroup::Index>(*pos);
                            });
}

std::vector<std::int64_t> invariant_factors(const FiniteAbelianGroup& group) {
  const auto n = static_cast<std::int64_t>(group.order());
  if (n > static_cast<std::int64_t>(FiniteRing::kMaxOrder)) {
    throw OrderOverflow(group.order(), FiniteRing::kMaxOrder);
  }
  std::map<std::int64_t, std::int64_t> orders;  // element order -> count
  for (std::size_t a = 0; a < group.order(); ++a) {
    ++orders[static_cast<std::int64_t>(group.element_order(static_cast<FiniteAbelianGroup::Index>(a)))];
  }

  // For each prime p: c_k = #{a : p^k a = 0} = p^(sum_j min(k, e_j)), so
  // log_p(c_k / c_{k-1}) counts the cyclic p-parts of exponent >= k.
  std::vector<std::vector<std::int64_t>> prime_parts;  // descending prime powers per prime
  for (std::int64_t rest = n; rest > 1;) {
    const std::int64_t p = smallest_prime_factor(rest);
    while (rest % p == 0) rest /= p;

    std::vector<std::int64_t> parts;  // parts[k-1] = #{j : e_j >= k}
    std::int64_t prev = 1;
    for (std::int64_t pk = p;; pk *= p) {
      std::int64_t c = 0;
      for (const auto& [ord, count] : orders) {
        if (pk % ord == 0) c += count;
      }
      if (c == prev) break;
      std::int64_t ratio = c / prev;
      std::int64_t at_least = 0;
      while (ratio > 1) {
        ratio /= p;
        ++at_least;
      }
      parts.push_back(at_least);
      prev = c;
    }
    const std::int64_t width = parts.empty() ? 0 : parts.front();
    std::vector<std::int64_t> powers(static_cast<std::size_t>(width), 1);
    for (std::int64_t count : parts) {
      for (std::int64_t j = 0; j < count; ++j) powers[static_cast<std::size_t>(j)] *= p;
    }
    prime_parts.push_back(std::move(powers));
  }

  std::size_t m = 0;
  for (const auto& pp : prime_parts) m = std::max(m, pp.size());
  std::vector<std::int64_t> factors(m, 1);
  for (const auto& pp : prime_parts) {
    for (std::size_t j = 0; j < pp.size(); ++j) factors[j] *= pp[j];
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace ringcomm
