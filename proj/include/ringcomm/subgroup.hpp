#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ringcomm/ring.hpp"

namespace ringcomm {

/// Explicit element set of a subgroup of (R, +), stored as sorted element indices.
class AdditiveSubgroup {
 public:
  AdditiveSubgroup() = default;
  /// `members` must already be a subgroup; it is sorted and deduplicated here.
  explicit AdditiveSubgroup(std::vector<ElementIndex> members);

  std::size_t size() const noexcept { return members_.size(); }
  std::span<const ElementIndex> members() const noexcept { return members_; }
  bool contains(ElementIndex x) const;
  /// Position of `x` inside members(), if present.
  std::optional<std::size_t> position(ElementIndex x) const;

  std::vector<RingElement> elements(const FiniteRing& ring) const;

  friend bool operator==(const AdditiveSubgroup&, const AdditiveSubgroup&) = default;

 private:
  std::vector<ElementIndex> members_;
};

/// representative + subgroup.
struct Coset {
  ElementIndex representative;
  AdditiveSubgroup subgroup;

  std::size_t size() const noexcept { return subgroup.size(); }
  /// Sorted element indices of the coset.
  std::vector<ElementIndex> members(const FiniteRing& ring) const;
};

/// Smallest additive subgroup containing `generators` (closure fixpoint).
AdditiveSubgroup generated_subgroup(const FiniteRing& ring, std::span<const ElementIndex> generators);

/// True when `set` is closed under + and contains 0 (negation follows for finite sets).
bool is_additively_closed(const FiniteRing& ring, std::span<const ElementIndex> set);

/// C_R(x) = {y : xy = yx}
AdditiveSubgroup centralizer(const FiniteRing& ring, const RingElement& x);
AdditiveSubgroup centralizer(const FiniteRing& ring, ElementIndex x);

/// Z(R), the intersection of all centralizers.
AdditiveSubgroup center(const FiniteRing& ring);

/// [x, R]. The raw set {[x, y] : y in R} is already a subgroup (image of the additive map
/// y -> [x, y]); this is checked and InternalInconsistency is thrown if it ever fails.
AdditiveSubgroup commutator_image(const FiniteRing& ring, const RingElement& x);
AdditiveSubgroup commutator_image(const FiniteRing& ring, ElementIndex x);

/// {[x, y] : x, y in R} as a sorted set, without closure.
std::vector<ElementIndex> realized_commutators(const FiniteRing& ring);

/// [R, R], the additive closure of all commutators.
AdditiveSubgroup commutator_subgroup(const FiniteRing& ring);

/// T_{x,r} = {y : [x, y] = r}; empty iff r is not in [x, R], otherwise t + C_R(x).
std::optional<Coset> solution_set(const FiniteRing& ring, const RingElement& x, const RingElement& r);

}  // namespace ringcomm
