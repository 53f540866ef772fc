#include <doctest.h>

#include "ringcomm/catalog.hpp"
#include "ringcomm/errors.hpp"
#include "ringcomm/graph.hpp"
#include "ringcomm/subgroup.hpp"
#include "support/oracle.hpp"
#include "support/random_ring.hpp"

using namespace ringcomm;

namespace {

RingElement el(std::vector<int> c) { return RingElement{std::move(c)}; }

// Edge count straight from the oracle table.
std::size_t oracle_edges(const oracle::Table& t, std::size_t r) {
  const std::size_t neg_r = oracle::neg(t, r);
  std::size_t n = 0;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      const std::size_t c = oracle::commutator(t, x, y);
      if (c != r && c != neg_r) ++n;
    }
  return n;
}

}  // namespace

TEST_CASE("E4 graphs") {
  const FiniteRing e4 = e4_ring();
  CHECK(build_graph(e4, el({0, 0})).edge_count() == 3);
  CHECK(build_graph(e4, el({1, 1})).edge_count() == 3);
  CHECK(build_graph(e4, el({1, 0})).edge_count() == 6);
  CHECK(build_graph(e4, el({0, 1})).edge_count() == 6);

  const auto g = build_graph(e4, e4.zero());
  CHECK(g.vertex_count() == 4);
  CHECK(g.degree(e4.index_of(e4.zero())) == 0);
  CHECK(g.adjacent(e4.index_of(el({1, 0})), e4.index_of(el({0, 1}))));
  CHECK(g.adjacent(e4.index_of(el({0, 1})), e4.index_of(el({1, 0}))));
}

TEST_CASE("edge identity, one case per branch") {
  const FiniteRing e4 = e4_ring();
  const auto zero_case = verify_edge_identity(e4, e4.zero());
  CHECK(zero_case.which == EdgeIdentityCase::zero);
  CHECK(zero_case.holds);
  CHECK(zero_case.from_edges == Fraction(5, 8));

  const auto two = verify_edge_identity(e4, el({1, 1}));
  CHECK(two.which == EdgeIdentityCase::two_torsion);
  CHECK(two.holds);
  CHECK(two.from_edges == Fraction(3, 8));

  const FiniteRing t32 = triangular_ring(3, 2);
  const auto general = verify_edge_identity(t32, el({0, 1, 0}));
  CHECK(general.which == EdgeIdentityCase::general);
  CHECK(general.edges == 135);
  CHECK(general.pr_r == Probability(8, 27));
  CHECK(general.holds);

  CHECK(to_string(EdgeIdentityCase::zero) == "r = 0");
  CHECK(to_string(EdgeIdentityCase::two_torsion) == "2r = 0");
  CHECK(to_string(EdgeIdentityCase::general) == "2r != 0");
}

TEST_CASE("edge sets agree with the oracle and the identity holds for realized r") {
  std::vector<FiniteRing> rings = {e4_ring(), triangular_ring(2, 2), triangular_ring(3, 2),
                                   full_matrix_ring(2, 2), zero_ring(6)};
  testing::RandomRingSampler sampler(31);
  for (int i = 0; i < 15; ++i) rings.push_back(sampler.next());
  for (const auto& ring : rings) {
    const auto t = oracle::build(ring);
    const auto realized = realized_commutators(ring);
    for (std::size_t r = 0; r < ring.order(); ++r) {
      const auto g = build_graph(ring, ring.element(r));
      REQUIRE(g.edge_count() == oracle_edges(t, r));
      for (const auto& [a, b] : g.edges()) REQUIRE(a < b);
      REQUIRE(std::is_sorted(g.edges().begin(), g.edges().end()));
      std::size_t degree_sum = 0;
      for (std::size_t v = 0; v < ring.order(); ++v) {
        REQUIRE(g.degree(static_cast<ElementIndex>(v)) < ring.order());
        degree_sum += g.degree(static_cast<ElementIndex>(v));
      }
      REQUIRE(degree_sum == 2 * g.edge_count());
      const bool is_realized = std::binary_search(realized.begin(), realized.end(), r);
      if (is_realized) REQUIRE(verify_edge_identity(ring, ring.element(r)).holds);
    }
  }
}

TEST_CASE("central elements are isolated when r = 0") {
  for (const auto& ring : {e4_ring(), triangular_ring(2, 2), full_matrix_ring(2, 2)}) {
    const auto g = build_graph(ring, ring.zero());
    const auto z = center(ring);
    for (ElementIndex c : z.members()) CHECK(g.degree(c) == 0);
  }
  const FiniteRing z = zero_ring(5);
  CHECK(build_graph(z, z.zero()).edge_count() == 0);
}

TEST_CASE("DOT export is deterministic and complete") {
  const FiniteRing e4 = e4_ring();
  const auto g = build_graph(e4, e4.zero());
  const std::string dot = export_dot(g);
  CHECK(dot ==
        "graph G {\n"
        "  \"0,0\";\n"
        "  \"0,1\";\n"
        "  \"1,0\";\n"
        "  \"1,1\";\n"
        "  \"0,1\" -- \"1,0\";\n"
        "  \"0,1\" -- \"1,1\";\n"
        "  \"1,0\" -- \"1,1\";\n"
        "}\n");
  CHECK(export_dot(build_graph(e4, e4.zero())) == dot);

  const FiniteRing z = zero_ring(2);
  CHECK(export_dot(build_graph(z, z.zero())) == "graph G {\n  \"0\";\n  \"1\";\n}\n");
}

TEST_CASE("graph size cap") {
  CHECK_THROWS_AS(build_graph(zero_ring(2048), el({0})), OrderOverflow);
}
