#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ringcomm/fraction.hpp"
#include "ringcomm/ring.hpp"

namespace ringcomm {

/// The r-noncommuting graph: vertex set all of R (central elements included), distinct x, y
/// adjacent when [x, y] != r and [y, x] != r.
class NoncommGraph {
 public:
  static constexpr std::size_t kMaxOrder = 1024;

  NoncommGraph(const FiniteRing& ring, RingElement r, std::vector<std::pair<ElementIndex, ElementIndex>> edges);

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingElement& r() const noexcept { return r_; }
  std::size_t vertex_count() const noexcept { return ring_->order(); }
  /// Unordered pairs (a, b) with a < b, sorted lexicographically.
  const std::vector<std::pair<ElementIndex, ElementIndex>>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(ElementIndex a, ElementIndex b) const;
  std::size_t degree(ElementIndex v) const;

 private:
  const FiniteRing* ring_;
  RingElement r_;
  std::vector<std::pair<ElementIndex, ElementIndex>> edges_;
};

/// Throws OrderOverflow above NoncommGraph::kMaxOrder. The graph keeps a pointer to `ring`.
NoncommGraph build_graph(const FiniteRing& ring, const RingElement& r);

enum class EdgeIdentityCase {
  zero,          // r = 0
  two_torsion,   // r != 0, 2r = 0
  general,       // 2r != 0
};

std::string to_string(EdgeIdentityCase c);

struct EdgeIdentityReport {
  EdgeIdentityCase which;
  std::size_t edges = 0;
  Probability pr_r;
  /// Pr_r as predicted from the edge count.
  Fraction from_edges{0};
  bool holds = false;
};

/// Compares Pr_r (pair enumeration) with the closed form in |E| for the case selected by r:
///   r = 0:          1 - 2|E|/|R|^2
///   2r = 0, r != 0: 1 - 1/|R| - 2|E|/|R|^2
///   2r != 0:        (1 - 1/|R| - 2|E|/|R|^2) / 2
EdgeIdentityReport verify_edge_identity(const FiniteRing& ring, const RingElement& r);

/// Deterministic Graphviz text: every vertex, then every edge in lexicographic order.
std::string export_dot(const NoncommGraph& graph);

}  // namespace ringcomm
