#include "ringcomm/subgroup.hpp"

#include <algorithm>

#include "ringcomm/errors.hpp"

namespace ringcomm {

AdditiveSubgroup::AdditiveSubgroup(std::vector<ElementIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool AdditiveSubgroup::contains(ElementIndex x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

std::optional<std::size_t> AdditiveSubgroup::position(ElementIndex x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

std::vector<RingElement> AdditiveSubgroup::elements(const FiniteRing& ring) const {
  std::vector<RingElement> out;
  out.reserve(members_.size());
  for (ElementIndex m : members_) out.push_back(ring.element(m));
  return out;
}

std::vector<ElementIndex> Coset::members(const FiniteRing& ring) const {
  std::vector<ElementIndex> out;
  out.reserve(subgroup.size());
  for (ElementIndex h : subgroup.members()) out.push_back(ring.add(representative, h));
  std::sort(out.begin(), out.end());
  return out;
}

AdditiveSubgroup generated_subgroup(const FiniteRing& ring, std::span<const ElementIndex> generators) {
  std::vector<char> in(ring.order(), 0);
  std::vector<ElementIndex> members{ring.index_of(ring.zero())};
  in[members.front()] = 1;
  // <S, g> is the disjoint union of the cosets <S> + k g for k = 0 .. t-1, where t is
  // the first multiple with t g already inside.
  for (ElementIndex g : generators) {
    if (in[g]) continue;
    const std::size_t base = members.size();
    for (ElementIndex multiple = g; !in[multiple]; multiple = ring.add(multiple, g)) {
      for (std::size_t i = 0; i < base; ++i) {
        ElementIndex s = ring.add(members[i], multiple);
        in[s] = 1;
        members.push_back(s);
      }
    }
  }
  return AdditiveSubgroup(std::move(members));
}

bool is_additively_closed(const FiniteRing& ring, std::span<const ElementIndex> set) {
  AdditiveSubgroup as_set(std::vector<ElementIndex>(set.begin(), set.end()));
  if (!as_set.contains(ring.index_of(ring.zero()))) return false;
  return generated_subgroup(ring, as_set.members()).size() == as_set.size();
}

AdditiveSubgroup centralizer(const FiniteRing& ring, const RingElement& x) {
  return centralizer(ring, ring.index_of(x));
}

AdditiveSubgroup centralizer(const FiniteRing& ring, ElementIndex x) {
  const ElementIndex zero = ring.index_of(ring.zero());
  auto row = ring.commutator_row(x);
  std::vector<ElementIndex> members;
  for (std::size_t y = 0; y < row.size(); ++y) {
    if (row[y] == zero) members.push_back(static_cast<ElementIndex>(y));
  }
  return AdditiveSubgroup(std::move(members));
}

AdditiveSubgroup center(const FiniteRing& ring) {
  const ElementIndex zero = ring.index_of(ring.zero());
  std::vector<ElementIndex> members;
  for (std::size_t x = 0; x < ring.order(); ++x) {
    auto row = ring.commutator_row(static_cast<ElementIndex>(x));
    if (std::all_of(row.begin(), row.end(), [&](ElementIndex c) { return c == zero; })) {
      members.push_back(static_cast<ElementIndex>(x));
    }
  }
  return AdditiveSubgroup(std::move(members));
}

AdditiveSubgroup commutator_image(const FiniteRing& ring, const RingElement& x) {
  return commutator_image(ring, ring.index_of(x));
}

AdditiveSubgroup commutator_image(const FiniteRing& ring, ElementIndex x) {
  AdditiveSubgroup image(ring.commutator_row(x));
  if (!is_additively_closed(ring, image.members())) {
    throw InternalInconsistency("{[x, y] : y in R} is not additively closed for x = " +
                                to_string(ring.element(x)));
  }
  return image;
}

std::vector<ElementIndex> realized_commutators(const FiniteRing& ring) {
  std::vector<char> hit(ring.order(), 0);
  for (std::size_t x = 0; x < ring.order(); ++x) {
    for (ElementIndex c : ring.commutator_row(static_cast<ElementIndex>(x))) hit[c] = 1;
  }
  std::vector<ElementIndex> out;
  for (std::size_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(static_cast<ElementIndex>(i));
  }
  return out;
}

AdditiveSubgroup commutator_subgroup(const FiniteRing& ring) {
  auto raw = realized_commutators(ring);
  return generated_subgroup(ring, raw);
}

std::optional<Coset> solution_set(const FiniteRing& ring, const RingElement& x, const RingElement& r) {
  const ElementIndex xi = ring.index_of(x);
  const ElementIndex ri = ring.index_of(r);
  auto row = ring.commutator_row(xi);
  auto hit = std::find(row.begin(), row.end(), ri);
  if (hit == row.end()) return std::nullopt;
  return Coset{static_cast<ElementIndex>(hit - row.begin()), centralizer(ring, xi)};
}

}  // namespace ringcomm
