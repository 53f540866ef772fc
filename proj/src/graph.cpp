#include "ringcomm/graph.hpp"

#include <algorithm>
#include <sstream>

#include "ringcomm/errors.hpp"
#include "ringcomm/probability.hpp"

namespace ringcomm {

NoncommGraph::NoncommGraph(const FiniteRing& ring, RingElement r,
                           std::vector<std::pair<ElementIndex, ElementIndex>> edges)
    : ring_(&ring), r_(std::move(r)), edges_(std::move(edges)) {
  for (auto& [a, b] : edges_) {
    if (a == b) throw RingError("noncommuting graph cannot hold a self-loop");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool NoncommGraph::adjacent(ElementIndex a, ElementIndex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

std::size_t NoncommGraph::degree(ElementIndex v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [v](const auto& e) {
    return e.first == v || e.second == v;
  }));
}

NoncommGraph build_graph(const FiniteRing& ring, const RingElement& r) {
  if (ring.order() > NoncommGraph::kMaxOrder) throw OrderOverflow(ring.order(), NoncommGraph::kMaxOrder);
  const ElementIndex target = ring.index_of(r);
  std::vector<std::pair<ElementIndex, ElementIndex>> edges;
  for (std::size_t x = 0; x < ring.order(); ++x) {
    auto row = ring.commutator_row(static_cast<ElementIndex>(x));
    for (std::size_t y = x + 1; y < ring.order(); ++y) {
      // [y, x] = -[x, y]
      if (row[y] != target && ring.neg(row[y]) != target) {
        edges.emplace_back(static_cast<ElementIndex>(x), static_cast<ElementIndex>(y));
      }
    }
  }
  return NoncommGraph(ring, r, std::move(edges));
}

std::string to_string(EdgeIdentityCase c) {
  switch (c) {
    case EdgeIdentityCase::zero: return "r = 0";
    case EdgeIdentityCase::two_torsion: return "2r = 0";
    case EdgeIdentityCase::general: return "2r != 0";
  }
  return "?";
}

EdgeIdentityReport verify_edge_identity(const FiniteRing& ring, const RingElement& r) {
  NoncommGraph graph = build_graph(ring, r);
  EdgeIdentityReport report;
  report.edges = graph.edge_count();
  report.pr_r = pr_bruteforce(ring, r);

  const auto n = static_cast<std::int64_t>(ring.order());
  const Fraction edge_term(2 * static_cast<std::int64_t>(report.edges), n * n);
  if (r == ring.zero()) {
    report.which = EdgeIdentityCase::zero;
    report.from_edges = 1 - edge_term;
  } else if (ring.add(r, r) == ring.zero()) {
    report.which = EdgeIdentityCase::two_torsion;
    report.from_edges = 1 - Fraction(1, n) - edge_term;
  } else {
    report.which = EdgeIdentityCase::general;
    report.from_edges = (1 - Fraction(1, n) - edge_term) / 2;
  }
  report.holds = report.from_edges == report.pr_r.value();
  return report;
}

std::string export_dot(const NoncommGraph& graph) {
  const FiniteRing& ring = graph.ring();
  auto name = [&](ElementIndex v) { return "\"" + to_string(ring.element(v)) + "\""; };
  std::ostringstream out;
  out << "graph G {\n";
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << name(static_cast<ElementIndex>(v)) << ";\n";
  }
  for (const auto& [a, b] : graph.edges()) out << "  " << name(a) << " -- " << name(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ringcomm
