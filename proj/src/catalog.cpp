#include "ringcomm/catalog.hpp"

#include <string>
#include <utility>
#include <vector>

#include "ringcomm/errors.hpp"

namespace ringcomm {

namespace {

StructureConstants zero_table(std::size_t k) {
  return StructureConstants(k, std::vector<RingElement>(k, RingElement{std::vector<int>(k, 0)}));
}

// Matrix units E_ab (a, b in [0, s)) selected by `keep`, multiplied by E_ab E_cd = [b == c] E_ad.
template <typename Keep>
FiniteRing matrix_unit_ring(int n, int s, Keep keep) {
  if (n < 2 || s < 1) throw RingError("matrix ring needs n >= 2 and s >= 1");
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (keep(a, b)) basis.emplace_back(a, b);
    }
  }
  AdditiveGroupShape shape{std::vector<int>(basis.size(), n)};
  const std::size_t order = shape.order();
  if (order > FiniteRing::kMaxOrder) throw OrderOverflow(order, FiniteRing::kMaxOrder);

  auto position = [&](int a, int b) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == std::pair{a, b}) return i;
    }
    throw InternalInconsistency("matrix unit product left the basis");
  };
  StructureConstants c = zero_table(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].second == basis[j].first) {
        c[i][j].coords[position(basis[i].first, basis[j].second)] = 1;
      }
    }
  }
  return validate_ring(std::move(shape), std::move(c));
}

}  // namespace

FiniteRing e4_ring() {
  StructureConstants c = zero_table(2);
  c[0][0].coords = {1, 0};
  c[0][1].coords = {1, 0};
  c[1][0].coords = {0, 1};
  c[1][1].coords = {0, 1};
  return validate_ring(AdditiveGroupShape{{2, 2}}, std::move(c));
}

FiniteRing zero_ring(int n) { return validate_ring(AdditiveGroupShape{{n}}, zero_table(1)); }

FiniteRing cyclic_ring(int n) {
  StructureConstants c = zero_table(1);
  c[0][0].coords = {1};
  return validate_ring(AdditiveGroupShape{{n}}, std::move(c));
}

FiniteRing triangular_ring(int n, int s) {
  return matrix_unit_ring(n, s, [](int a, int b) { return a <= b; });
}

FiniteRing full_matrix_ring(int n, int s) {
  return matrix_unit_ring(n, s, [](int, int) { return true; });
}

FiniteRing catalog(std::string_view name, std::span<const int> params) {
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw RingError("catalog ring '" + std::string(name) + "' takes " + std::to_string(count) +
                      " parameter(s), got " + std::to_string(params.size()));
    }
  };
  if (name == "E4") {
    expect(0);
    return e4_ring();
  }
  if (name == "zero_ring") {
    expect(1);
    return zero_ring(params[0]);
  }
  if (name == "cyclic_ring") {
    expect(1);
    return cyclic_ring(params[0]);
  }
  if (name == "triangular") {
    expect(2);
    return triangular_ring(params[0], params[1]);
  }
  if (name == "full_matrix") {
    expect(2);
    return full_matrix_ring(params[0], params[1]);
  }
  throw UnknownCatalogName(std::string(name));
}

}  // namespace ringcomm
