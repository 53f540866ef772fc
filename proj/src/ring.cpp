#include "ringcomm/ring.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <utility>

#include "ringcomm/errors.hpp"

namespace ringcomm {

namespace {

long long mod(long long a, int d) {
  long long r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

std::size_t AdditiveGroupShape::order() const noexcept {
  std::size_t n = 1;
  for (int d : moduli) {
    if (d <= 0) return 0;
    if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d)) {
      return std::numeric_limits<std::size_t>::max();
    }
    n *= static_cast<std::size_t>(d);
  }
  return n;
}

std::string to_string(const RingElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.coords[i]);
  }
  return out;
}

RingElement parse_element(const AdditiveGroupShape& shape, const std::string& text) {
  RingElement x;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string field = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    long long value = 0;
    auto first = field.data();
    auto last = field.data() + field.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last) {
      throw SyntaxError(0, "bad element syntax '" + text + "'");
    }
    if (x.coords.size() < shape.rank()) {
      x.coords.push_back(static_cast<int>(mod(value, shape.moduli[x.coords.size()])));
    } else {
      x.coords.push_back(0);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (x.coords.size() != shape.rank()) {
    throw ShapeMismatch("element '" + text + "' has " + std::to_string(x.coords.size()) +
                        " coordinates, ring has rank " + std::to_string(shape.rank()));
  }
  return x;
}

FiniteRing::FiniteRing(AdditiveGroupShape shape, StructureConstants constants)
    : shape_(std::move(shape)), constants_(std::move(constants)) {
  const std::size_t k = shape_.rank();
  strides_.assign(k, 1);
  for (std::size_t i = k; i-- > 1;) strides_[i - 1] = strides_[i] * shape_.moduli[i];

  const std::size_t n = shape_.order();
  elements_.reserve(n);
  std::vector<int> coords(k, 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    elements_.push_back(RingElement{coords});
    for (std::size_t p = k; p-- > 0;) {
      if (++coords[p] < shape_.moduli[p]) break;
      coords[p] = 0;
    }
  }
}

FiniteRing validate_ring(AdditiveGroupShape shape, StructureConstants constants) {
  const std::size_t k = shape.rank();
  if (k == 0) throw ShapeMismatch("additive shape needs at least one modulus");
  for (int d : shape.moduli) {
    if (d < 2) throw ShapeMismatch("modulus " + std::to_string(d) + " is below 2");
  }
  const std::size_t n = shape.order();
  if (n > FiniteRing::kMaxOrder) throw OrderOverflow(n, FiniteRing::kMaxOrder);

  if (constants.size() != k) {
    throw ShapeMismatch("structure-constant table has " + std::to_string(constants.size()) +
                        " rows, expected " + std::to_string(k));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (constants[i].size() != k) {
      throw ShapeMismatch("structure-constant row " + std::to_string(i + 1) + " has " +
                          std::to_string(constants[i].size()) + " entries, expected " +
                          std::to_string(k));
    }
    for (std::size_t j = 0; j < k; ++j) {
      auto& c = constants[i][j].coords;
      if (c.size() != k) {
        throw ShapeMismatch("structure constant c " + std::to_string(i + 1) + " " +
                            std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                            " coordinates, expected " + std::to_string(k));
      }
      for (std::size_t l = 0; l < k; ++l) c[l] = static_cast<int>(mod(c[l], shape.moduli[l]));
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto& c = constants[i][j].coords;
      for (std::size_t l = 0; l < k; ++l) {
        const int dl = shape.moduli[l];
        if (mod(static_cast<long long>(shape.moduli[i]) * c[l], dl) != 0) {
          throw WellDefinednessViolation(i, j,
                                         std::to_string(shape.moduli[i]) + " * (" +
                                             to_string(constants[i][j]) + ") != 0");
        }
        if (mod(static_cast<long long>(shape.moduli[j]) * c[l], dl) != 0) {
          throw WellDefinednessViolation(i, j,
                                         std::to_string(shape.moduli[j]) + " * (" +
                                             to_string(constants[i][j]) + ") != 0");
        }
      }
    }
  }

  FiniteRing ring(std::move(shape), std::move(constants));
  // Both sides are trilinear, so generator triples suffice.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        RingElement left = ring.multiply(ring.constants_[i][j], ring.generator(l));
        RingElement right = ring.multiply(ring.generator(i), ring.constants_[j][l]);
        if (left != right) {
          throw AssociativityViolation(i, j, l, to_string(left), to_string(right));
        }
      }
    }
  }
  return ring;
}

void FiniteRing::check_shape(const RingElement& x) const {
  if (x.coords.size() != rank()) {
    throw ShapeMismatch("element (" + to_string(x) + ") has " + std::to_string(x.coords.size()) +
                        " coordinates, ring has rank " + std::to_string(rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coords[i] < 0 || x.coords[i] >= shape_.moduli[i]) {
      throw ShapeMismatch("element (" + to_string(x) + ") is not reduced modulo the moduli");
    }
  }
}

RingElement FiniteRing::reduce(std::vector<long long> raw) const {
  RingElement out;
  out.coords.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.coords[i] = static_cast<int>(mod(raw[i], shape_.moduli[i]));
  }
  return out;
}

ElementIndex FiniteRing::encode(const std::vector<int>& coords) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) idx += strides_[i] * coords[i];
  return static_cast<ElementIndex>(idx);
}

ElementIndex FiniteRing::index_of(const RingElement& x) const {
  check_shape(x);
  return encode(x.coords);
}

RingElement FiniteRing::zero() const { return RingElement{std::vector<int>(rank(), 0)}; }

RingElement FiniteRing::generator(std::size_t i) const {
  RingElement e = zero();
  e.coords.at(i) = 1;
  return e;
}

RingElement FiniteRing::add(const RingElement& x, const RingElement& y) const {
  check_shape(x);
  check_shape(y);
  std::vector<long long> raw(rank());
  for (std::size_t i = 0; i < rank(); ++i) raw[i] = static_cast<long long>(x.coords[i]) + y.coords[i];
  return reduce(std::move(raw));
}

RingElement FiniteRing::neg(const RingElement& x) const {
  check_shape(x);
  std::vector<long long> raw(rank());
  for (std::size_t i = 0; i < rank(); ++i) raw[i] = -static_cast<long long>(x.coords[i]);
  return reduce(std::move(raw));
}

RingElement FiniteRing::sub(const RingElement& x, const RingElement& y) const {
  return add(x, neg(y));
}

RingElement FiniteRing::scale(long long n, const RingElement& x) const {
  check_shape(x);
  std::vector<long long> raw(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    raw[i] = mod(n, shape_.moduli[i]) * x.coords[i];
  }
  return reduce(std::move(raw));
}

RingElement FiniteRing::multiply(const RingElement& x, const RingElement& y) const {
  check_shape(x);
  check_shape(y);
  const std::size_t k = rank();
  std::vector<long long> raw(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x.coords[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y.coords[j] == 0) continue;
      const long long ab = static_cast<long long>(x.coords[i]) * y.coords[j];
      const auto& c = constants_[i][j].coords;
      for (std::size_t l = 0; l < k; ++l) {
        raw[l] = mod(raw[l] + ab % shape_.moduli[l] * c[l], shape_.moduli[l]);
      }
    }
  }
  return reduce(std::move(raw));
}

RingElement FiniteRing::commutator(const RingElement& x, const RingElement& y) const {
  return sub(multiply(x, y), multiply(y, x));
}

ElementIndex FiniteRing::add(ElementIndex x, ElementIndex y) const {
  if (x >= order() || y >= order()) throw ShapeMismatch("element index out of range");
  std::size_t out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t d = static_cast<std::size_t>(shape_.moduli[i]);
    const std::size_t s = (x / strides_[i] % d + y / strides_[i] % d) % d;
    out += s * strides_[i];
  }
  return static_cast<ElementIndex>(out);
}

ElementIndex FiniteRing::neg(ElementIndex x) const {
  if (x >= order()) throw ShapeMismatch("element index out of range");
  std::size_t out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t d = static_cast<std::size_t>(shape_.moduli[i]);
    out += (d - x / strides_[i] % d) % d * strides_[i];
  }
  return static_cast<ElementIndex>(out);
}

ElementIndex FiniteRing::commutator(ElementIndex x, ElementIndex y) const {
  return index_of(commutator(element(x), element(y)));
}

std::vector<ElementIndex> FiniteRing::commutator_row(ElementIndex x) const {
  const std::size_t k = rank();
  const RingElement& xe = element(x);
  std::vector<std::vector<int>> step(k);
  for (std::size_t j = 0; j < k; ++j) step[j] = commutator(xe, generator(j)).coords;

  // Walking y in lexicographic order, every coordinate that changes (wraps d-1 -> 0 or
  // increments) shifts [x, y] by +[x, e_p], since d_p [x, e_p] = 0.
  std::vector<ElementIndex> row(order());
  std::vector<int> y(k, 0);
  std::vector<int> cur(k, 0);
  for (std::size_t idx = 0; idx < order(); ++idx) {
    row[idx] = encode(cur);
    for (std::size_t p = k; p-- > 0;) {
      for (std::size_t l = 0; l < k; ++l) {
        cur[l] += step[p][l];
        if (cur[l] >= shape_.moduli[l]) cur[l] -= shape_.moduli[l];
      }
      if (++y[p] < shape_.moduli[p]) break;
      y[p] = 0;
    }
  }
  return row;
}

bool FiniteRing::is_commutative() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = i + 1; j < rank(); ++j) {
      if (constants_[i][j] != constants_[j][i]) return false;
    }
  }
  return true;
}

FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t k1 = r1.rank();
  const std::size_t k2 = r2.rank();
  AdditiveGroupShape shape;
  shape.moduli = r1.shape().moduli;
  shape.moduli.insert(shape.moduli.end(), r2.shape().moduli.begin(), r2.shape().moduli.end());
  const std::size_t n = shape.order();
  if (n > FiniteRing::kMaxOrder) throw OrderOverflow(n, FiniteRing::kMaxOrder);

  StructureConstants c(k1 + k2, std::vector<RingElement>(k1 + k2, RingElement{std::vector<int>(k1 + k2, 0)}));
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k1; ++j) {
      std::copy(r1.constants()[i][j].coords.begin(), r1.constants()[i][j].coords.end(),
                c[i][j].coords.begin());
    }
  }
  for (std::size_t i = 0; i < k2; ++i) {
    for (std::size_t j = 0; j < k2; ++j) {
      std::copy(r2.constants()[i][j].coords.begin(), r2.constants()[i][j].coords.end(),
                c[k1 + i][k1 + j].coords.begin() + static_cast<std::ptrdiff_t>(k1));
    }
  }
  return validate_ring(std::move(shape), std::move(c));
}

RingElement pair_element(const RingElement& x1, const RingElement& x2) {
  RingElement out{x1.coords};
  out.coords.insert(out.coords.end(), x2.coords.begin(), x2.coords.end());
  return out;
}

}  // namespace ringcomm
