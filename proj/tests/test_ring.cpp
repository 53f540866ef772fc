#include <doctest.h>

#include <random>

#include "ringcomm/catalog.hpp"
#include "ringcomm/errors.hpp"
#include "ringcomm/ring.hpp"
#include "support/oracle.hpp"
#include "support/random_ring.hpp"

using namespace ringcomm;

namespace {

RingElement el(std::vector<int> c) { return RingElement{std::move(c)}; }

StructureConstants table(std::initializer_list<std::initializer_list<std::vector<int>>> rows) {
  StructureConstants c;
  for (const auto& row : rows) {
    c.emplace_back();
    for (const auto& entry : row) c.back().push_back(el(entry));
  }
  return c;
}

std::vector<FiniteRing> catalog_rings() {
  std::vector<FiniteRing> rings;
  rings.push_back(e4_ring());
  rings.push_back(zero_ring(2));
  rings.push_back(zero_ring(5));
  rings.push_back(cyclic_ring(6));
  rings.push_back(triangular_ring(2, 2));
  rings.push_back(triangular_ring(3, 2));
  rings.push_back(full_matrix_ring(2, 2));
  rings.push_back(direct_product(e4_ring(), triangular_ring(2, 2)));
  return rings;
}

}  // namespace

TEST_CASE("E4 validates and its generator triples associate") {
  const auto c = table({{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}});
  const FiniteRing ring = validate_ring(AdditiveGroupShape{{2, 2}}, c);
  CHECK(ring.order() == 4);
  CHECK(ring == e4_ring());
  CHECK(oracle::associative(oracle::build(ring)));
}

TEST_CASE("zero multiplication on Z2 is a ring") {
  const FiniteRing ring = validate_ring(AdditiveGroupShape{{2}}, table({{{0}}}));
  CHECK(ring.order() == 2);
  CHECK(ring.is_commutative());
}

TEST_CASE("perturbed table is rejected with the failing triple") {
  // x * y = eps(x) y, with c11 zeroed: (e1 e1) e2 = 0 but e1 (e1 e2) = e2.
  const auto c = table({{{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}});
  CHECK_FALSE(oracle::associative(oracle::build(AdditiveGroupShape{{2, 2}}, c)));
  try {
    validate_ring(AdditiveGroupShape{{2, 2}}, c);
    FAIL("expected AssociativityViolation");
  } catch (const AssociativityViolation& e) {
    CHECK(e.left() != e.right());
    CHECK(e.i() == 0);
  }
}

TEST_CASE("well-definedness and size are enforced") {
  // 2 * (0,1) = (0,2) != 0 in Z2 x Z3
  CHECK_THROWS_AS(validate_ring(AdditiveGroupShape{{2, 3}},
                                table({{{0, 1}, {0, 0}}, {{0, 0}, {0, 0}}})),
                  WellDefinednessViolation);
  CHECK_THROWS_AS(validate_ring(AdditiveGroupShape{{64, 65}}, table({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}})),
                  OrderOverflow);
  CHECK_THROWS_AS(validate_ring(AdditiveGroupShape{{2, 2}}, table({{{0, 0}, {0, 0}}})), ShapeMismatch);
  CHECK_THROWS_AS(validate_ring(AdditiveGroupShape{{1}}, table({{{0}}})), ShapeMismatch);
}

TEST_CASE("additive arithmetic") {
  const FiniteRing e4 = e4_ring();
  CHECK(e4.add(el({1, 0}), el({0, 1})) == el({1, 1}));
  const FiniteRing z3 = zero_ring(3);
  CHECK(z3.add(el({2}), el({2})) == el({1}));
  CHECK(z3.neg(el({1})) == el({2}));
  CHECK_THROWS_AS(e4.add(el({1}), el({0, 1})), ShapeMismatch);
  CHECK_THROWS_AS(e4.add(el({2, 0}), el({0, 1})), ShapeMismatch);
  for (const auto& ring : catalog_rings()) {
    for (const auto& x : ring.elements()) CHECK(ring.add(x, ring.neg(x)) == ring.zero());
  }
}

TEST_CASE("E4 products and commutators") {
  const FiniteRing e4 = e4_ring();
  const RingElement a = el({1, 0}), b = el({0, 1});
  CHECK(e4.multiply(a, b) == a);
  CHECK(e4.multiply(b, a) == b);
  CHECK(e4.commutator(a, b) == el({1, 1}));
  for (const auto& x : e4.elements()) {
    CHECK(e4.multiply(e4.zero(), x) == e4.zero());
    CHECK(e4.multiply(x, e4.zero()) == e4.zero());
    CHECK(e4.commutator(x, x) == e4.zero());
  }
  const FiniteRing z = zero_ring(2);
  for (const auto& x : z.elements()) {
    for (const auto& y : z.elements()) CHECK(z.multiply(x, y) == z.zero());
  }
}

TEST_CASE("multiplication agrees with the oracle table") {
  auto rings = catalog_rings();
  testing::RandomRingSampler sampler(11);
  for (int i = 0; i < 10; ++i) rings.push_back(sampler.next());
  for (const auto& ring : rings) {
    const auto t = oracle::build(ring);
    for (std::size_t x = 0; x < ring.order(); ++x) {
      for (std::size_t y = 0; y < ring.order(); ++y) {
        REQUIRE(ring.index_of(ring.multiply(ring.element(x), ring.element(y))) == t.product[x][y]);
      }
    }
  }
}

TEST_CASE("ring axioms: exhaustive up to order 32, sampled above") {
  auto rings = catalog_rings();
  rings.push_back(triangular_ring(2, 3));
  std::mt19937 rng(7);
  for (const auto& ring : rings) {
    auto check = [&](const RingElement& x, const RingElement& y, const RingElement& z) {
      REQUIRE(ring.multiply(ring.multiply(x, y), z) == ring.multiply(x, ring.multiply(y, z)));
      REQUIRE(ring.multiply(x, ring.add(y, z)) == ring.add(ring.multiply(x, y), ring.multiply(x, z)));
      REQUIRE(ring.multiply(ring.add(y, z), x) == ring.add(ring.multiply(y, x), ring.multiply(z, x)));
    };
    const auto elems = ring.elements();
    if (ring.order() <= 32) {
      for (const auto& x : elems)
        for (const auto& y : elems)
          for (const auto& z : elems) check(x, y, z);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, ring.order() - 1);
      for (int i = 0; i < 1000; ++i) check(elems[pick(rng)], elems[pick(rng)], elems[pick(rng)]);
    }
  }
}

TEST_CASE("commutator is antisymmetric and commutator_row matches it") {
  for (const auto& ring : catalog_rings()) {
    for (std::size_t x = 0; x < ring.order(); ++x) {
      const auto row = ring.commutator_row(static_cast<ElementIndex>(x));
      for (std::size_t y = 0; y < ring.order(); ++y) {
        const RingElement c = ring.commutator(ring.element(x), ring.element(y));
        REQUIRE(ring.element(row[y]) == c);
        REQUIRE(c == ring.neg(ring.commutator(ring.element(y), ring.element(x))));
      }
    }
  }
}

TEST_CASE("canonical form of results") {
  const FiniteRing ring = triangular_ring(3, 2);
  for (const auto& x : ring.elements()) {
    for (const auto& y : ring.elements()) {
      for (const auto& out : {ring.add(x, y), ring.multiply(x, y), ring.commutator(x, y)}) {
        for (std::size_t i = 0; i < out.coords.size(); ++i) {
          REQUIRE(out.coords[i] >= 0);
          REQUIRE(out.coords[i] < ring.shape().moduli[i]);
        }
      }
    }
  }
}

TEST_CASE("direct products") {
  const FiniteRing e4 = e4_ring();
  const FiniteRing p = direct_product(e4, zero_ring(2));
  CHECK(p.order() == 8);
  CHECK(p.shape().moduli == std::vector<int>{2, 2, 2});
  // center of E4 x Z2 computed by the oracle: Z(E4) x Z2
  CHECK(oracle::center(oracle::build(p)).size() == 2);

  CHECK(direct_product(cyclic_ring(3), zero_ring(2)).is_commutative());
  CHECK(direct_product(e4, e4).order() == 16);
  CHECK_THROWS_AS(direct_product(full_matrix_ring(2, 3), full_matrix_ring(2, 2)), OrderOverflow);

  const FiniteRing t = triangular_ring(2, 2);
  const FiniteRing et = direct_product(e4, t);
  for (const auto& x1 : e4.elements())
    for (const auto& x2 : t.elements())
      for (const auto& y1 : e4.elements())
        for (const auto& y2 : t.elements()) {
          REQUIRE(et.commutator(pair_element(x1, x2), pair_element(y1, y2)) ==
                  pair_element(e4.commutator(x1, y1), t.commutator(x2, y2)));
        }
}

TEST_CASE("element syntax") {
  const AdditiveGroupShape shape{{2, 3}};
  CHECK(parse_element(shape, "1,2") == el({1, 2}));
  CHECK(parse_element(shape, "3,-1") == el({1, 2}));
  CHECK_THROWS_AS(parse_element(shape, "1"), ShapeMismatch);
  CHECK_THROWS_AS(parse_element(shape, "1,2,0"), ShapeMismatch);
  CHECK_THROWS_AS(parse_element(shape, "1,x"), SyntaxError);
  CHECK_THROWS_AS(parse_element(shape, "1,,2"), SyntaxError);
  CHECK(to_string(el({1, 0, 2})) == "1,0,2");
}

TEST_CASE("catalog matrix rings multiply like matrices") {
  // Independent check: decode coordinates into explicit s x s matrices over Z_n.
  struct Case { int n, s; bool upper; };
  for (const Case cs : {Case{2, 2, true}, Case{3, 2, true}, Case{2, 3, true}, Case{2, 2, false}}) {
    const FiniteRing ring = cs.upper ? triangular_ring(cs.n, cs.s) : full_matrix_ring(cs.n, cs.s);
    std::vector<std::pair<int, int>> basis;
    for (int a = 0; a < cs.s; ++a)
      for (int b = cs.upper ? a : 0; b < cs.s; ++b) basis.emplace_back(a, b);
    REQUIRE(ring.rank() == basis.size());
    auto to_matrix = [&](const RingElement& x) {
      std::vector<std::vector<int>> m(cs.s, std::vector<int>(cs.s, 0));
      for (std::size_t i = 0; i < basis.size(); ++i) m[basis[i].first][basis[i].second] = x.coords[i];
      return m;
    };
    for (const auto& x : ring.elements()) {
      for (const auto& y : ring.elements()) {
        const auto mx = to_matrix(x), my = to_matrix(y), mp = to_matrix(ring.multiply(x, y));
        for (int a = 0; a < cs.s; ++a)
          for (int b = 0; b < cs.s; ++b) {
            int v = 0;
            for (int c = 0; c < cs.s; ++c) v += mx[a][c] * my[c][b];
            REQUIRE(mp[a][b] == v % cs.n);
          }
      }
    }
  }
}

TEST_CASE("catalog lookup") {
  CHECK(catalog("E4") == e4_ring());
  const int tri[] = {2, 2};
  CHECK(catalog("triangular", tri).order() == 8);
  const int tri3[] = {3, 2};
  CHECK(catalog("triangular", tri3).order() == 27);
  const int full[] = {2, 2};
  CHECK(catalog("full_matrix", full).order() == 16);
  const int z[] = {5};
  CHECK(catalog("zero_ring", z).is_commutative());
  CHECK(catalog("cyclic_ring", z).order() == 5);
  CHECK_FALSE(triangular_ring(2, 2).is_commutative());
  CHECK_THROWS_AS(full_matrix_ring(3, 3), OrderOverflow);
  CHECK_THROWS_AS(catalog("quaternions"), UnknownCatalogName);
  CHECK_THROWS_AS(catalog("zero_ring"), RingError);
}
