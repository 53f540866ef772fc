#pragma once

// Test-only reference computations. Nothing here calls the library's multiplication,
// commutator rows or subgroup closure: products come straight from the structure
// constants and every set is built by naive enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "ringcomm/ring.hpp"

namespace oracle {

using Coords = std::vector<int>;

struct Table {
  std::vector<int> moduli;
  std::vector<Coords> elements;  // lexicographic
  std::map<Coords, std::size_t> index;
  std::vector<std::vector<std::size_t>> product;  // product[x][y] = index of x*y
  std::vector<std::vector<std::size_t>> sum;
  std::size_t zero = 0;

  std::size_t size() const { return elements.size(); }
};

inline Table build(const ringcomm::AdditiveGroupShape& shape, const ringcomm::StructureConstants& c) {
  Table t;
  t.moduli = shape.moduli;
  const std::size_t k = t.moduli.size();
  std::size_t total = 1;
  for (int d : t.moduli) total *= static_cast<std::size_t>(d);
  Coords cur(k, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    t.index[cur] = t.elements.size();
    t.elements.push_back(cur);
    for (std::size_t p = k; p-- > 0;) {
      if (++cur[p] < t.moduli[p]) break;
      cur[p] = 0;
    }
  }
  const std::size_t n = t.elements.size();
  t.product.assign(n, std::vector<std::size_t>(n));
  t.sum.assign(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Coords prod(k, 0), s(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          for (std::size_t l = 0; l < k; ++l) {
            prod[l] = static_cast<int>((prod[l] + static_cast<long long>(t.elements[x][i]) * t.elements[y][j] *
                                                      c[i][j].coords[l]) % t.moduli[l]);
          }
        }
      }
      for (std::size_t l = 0; l < k; ++l) s[l] = (t.elements[x][l] + t.elements[y][l]) % t.moduli[l];
      t.product[x][y] = t.index.at(prod);
      t.sum[x][y] = t.index.at(s);
    }
  }
  t.zero = t.index.at(Coords(k, 0));
  return t;
}

inline Table build(const ringcomm::FiniteRing& ring) { return build(ring.shape(), ring.constants()); }

inline std::size_t neg(const Table& t, std::size_t x) {
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t.sum[x][y] == t.zero) return y;
  }
  return t.zero;
}

inline std::size_t commutator(const Table& t, std::size_t x, std::size_t y) {
  return t.sum[t.product[x][y]][neg(t, t.product[y][x])];
}

/// |{(x, y) : [x, y] = r}| for every r.
inline std::vector<std::int64_t> counts(const Table& t) {
  std::vector<std::int64_t> out(t.size(), 0);
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) ++out[commutator(t, x, y)];
  }
  return out;
}

inline std::set<std::size_t> centralizer(const Table& t, std::size_t x) {
  std::set<std::size_t> out;
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (t.product[x][y] == t.product[y][x]) out.insert(y);
  }
  return out;
}

inline std::set<std::size_t> center(const Table& t) {
  std::set<std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (centralizer(t, x).size() == t.size()) out.insert(x);
  }
  return out;
}

/// Pairwise-sum fixpoint.
inline std::set<std::size_t> closure(const Table& t, std::set<std::size_t> s) {
  s.insert(t.zero);
  while (true) {
    std::set<std::size_t> next = s;
    for (auto a : s) {
      for (auto b : s) next.insert(t.sum[a][b]);
    }
    if (next == s) return s;
    s = std::move(next);
  }
}

inline std::set<std::size_t> derived(const Table& t) {
  std::set<std::size_t> raw;
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) raw.insert(commutator(t, x, y));
  }
  return closure(t, raw);
}

/// Checks (xy)z = x(yz) over every triple.
inline bool associative(const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      for (std::size_t z = 0; z < t.size(); ++z) {
        if (t.product[t.product[x][y]][z] != t.product[x][t.product[y][z]]) return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
