#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ringcomm/ring.hpp"
#include "ringcomm/subgroup.hpp"

namespace ringcomm {

/// A finite abelian group on {0, ..., order-1} given by an addition function.
///
/// Groups derived from a ring (additive_group, as_group, ...) capture a reference to it and
/// must not outlive it.
class FiniteAbelianGroup {
 public:
  using Index = std::uint32_t;
  using AddFn = std::function<Index(Index, Index)>;

  FiniteAbelianGroup(std::size_t order, Index zero, AddFn add);

  std::size_t order() const noexcept { return order_; }
  Index zero() const noexcept { return zero_; }
  Index add(Index a, Index b) const { return add_(a, b); }
  /// k * a for k >= 0.
  Index multiple(std::size_t k, Index a) const;
  /// Smallest k >= 1 with k * a = 0.
  std::size_t element_order(Index a) const;

 private:
  std::size_t order_;
  Index zero_;
  AddFn add_;
};

/// (R, +) with elements in lexicographic index order.
FiniteAbelianGroup additive_group(const FiniteRing& ring);

/// A subgroup of (R, +); group index i stands for subgroup.members()[i].
FiniteAbelianGroup subgroup_as_group(const FiniteRing& ring, const AdditiveSubgroup& subgroup);

/// Invariant factors f1 | f2 | ... | fm (ascending), recovered from the number of elements
/// whose order divides p^k for each prime p. The trivial group gives an empty list.
/// Two finite abelian groups are isomorphic iff these lists are equal.
std::vector<std::int64_t> invariant_factors(const FiniteAbelianGroup& group);

}  // namespace ringcomm
