#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ringcomm {

/// Elements are addressed by their position in lexicographic coordinate order.
using ElementIndex = std::uint32_t;

/// The additive group Z_{d1} x ... x Z_{dk}. Moduli are kept as given, not normalised.
struct AdditiveGroupShape {
  std::vector<int> moduli;

  std::size_t rank() const noexcept { return moduli.size(); }
  /// Product of the moduli, saturating at SIZE_MAX.
  std::size_t order() const noexcept;

  friend bool operator==(const AdditiveGroupShape&, const AdditiveGroupShape&) = default;
};

/// Coordinate vector; canonical when every coordinate lies in [0, d_i).
struct RingElement {
  std::vector<int> coords;

  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// "a1,a2,...,ak"
std::string to_string(const RingElement& x);

/// Parses "a1,...,ak" against `shape`; coordinates are reduced modulo the moduli.
/// Throws SyntaxError on malformed text and ShapeMismatch on the wrong coordinate count.
RingElement parse_element(const AdditiveGroupShape& shape, const std::string& text);

using StructureConstants = std::vector<std::vector<RingElement>>;

class FiniteRing;

/// Checks the table against the shape (well-definedness, associativity on generators,
/// order cap) and returns the validated ring.
FiniteRing validate_ring(AdditiveGroupShape shape, StructureConstants constants);

/// A finite (not necessarily unital) ring: an additive group Z_{d1} x ... x Z_{dk} with a
/// bilinear multiplication fixed by e_i * e_j = constants[i][j].
///
/// Immutable after validation; all member functions are const and safe to share
/// between threads.
class FiniteRing {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  const AdditiveGroupShape& shape() const noexcept { return shape_; }
  const StructureConstants& constants() const noexcept { return constants_; }
  std::size_t rank() const noexcept { return shape_.rank(); }
  std::size_t order() const noexcept { return elements_.size(); }

  /// All elements in lexicographic coordinate order (first coordinate most significant).
  std::span<const RingElement> elements() const noexcept { return elements_; }
  const RingElement& element(ElementIndex i) const { return elements_.at(i); }
  ElementIndex index_of(const RingElement& x) const;

  RingElement zero() const;
  /// The i-th canonical generator e_i (zero-based).
  RingElement generator(std::size_t i) const;

  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement sub(const RingElement& x, const RingElement& y) const;
  RingElement scale(long long n, const RingElement& x) const;
  RingElement multiply(const RingElement& x, const RingElement& y) const;
  /// [x, y] = xy - yx
  RingElement commutator(const RingElement& x, const RingElement& y) const;

  ElementIndex add(ElementIndex x, ElementIndex y) const;
  ElementIndex neg(ElementIndex x) const;
  ElementIndex commutator(ElementIndex x, ElementIndex y) const;

  /// [x, y] for every y in lexicographic order. Uses linearity in y, O(|R| k).
  std::vector<ElementIndex> commutator_row(ElementIndex x) const;

  bool is_commutative() const;

  friend bool operator==(const FiniteRing& a, const FiniteRing& b) {
    return a.shape_ == b.shape_ && a.constants_ == b.constants_;
  }

 private:
  friend FiniteRing validate_ring(AdditiveGroupShape, StructureConstants);
  FiniteRing(AdditiveGroupShape shape, StructureConstants constants);

  void check_shape(const RingElement& x) const;
  RingElement reduce(std::vector<long long> raw) const;
  ElementIndex encode(const std::vector<int>& coords) const;

  AdditiveGroupShape shape_;
  StructureConstants constants_;
  std::vector<std::size_t> strides_;
  std::vector<RingElement> elements_;
};

/// R1 x R2 with componentwise operations; moduli are concatenated.
FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2);

/// Embeds (x1, x2) into the coordinates of direct_product(r1, r2).
RingElement pair_element(const RingElement& x1, const RingElement& x2);

}  // namespace ringcomm
