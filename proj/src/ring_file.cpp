#include "ringcomm/ring_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "ringcomm/errors.hpp"

namespace ringcomm {

namespace {

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(std::move(t));
  return out;
}

std::optional<long long> to_integer(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

FiniteRing parse_ring_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::optional<AdditiveGroupShape> shape;
  StructureConstants constants;
  std::vector<std::vector<bool>> seen;
  std::size_t filled = 0;
  std::size_t line_no = 0;

  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = tokens(line);
    if (fields.empty()) continue;

    if (!shape) {
      if (fields[0] != "moduli:" || fields.size() < 2) {
        throw SyntaxError(line_no, "expected 'moduli: d1 ... dk'");
      }
      AdditiveGroupShape s;
      for (std::size_t t = 1; t < fields.size(); ++t) {
        auto d = to_integer(fields[t]);
        if (!d || *d < 2 || *d > static_cast<long long>(FiniteRing::kMaxOrder)) {
          throw SyntaxError(line_no, "modulus '" + fields[t] + "' is not an integer in [2, " +
                                         std::to_string(FiniteRing::kMaxOrder) + "]");
        }
        s.moduli.push_back(static_cast<int>(*d));
      }
      if (s.order() > FiniteRing::kMaxOrder) throw OrderOverflow(s.order(), FiniteRing::kMaxOrder);
      const std::size_t k = s.rank();
      constants.assign(k, std::vector<RingElement>(k));
      seen.assign(k, std::vector<bool>(k, false));
      shape = std::move(s);
      continue;
    }

    const std::size_t k = shape->rank();
    if (fields.size() != 4 + k || fields[0] != "c" || fields[3] != ":") {
      throw SyntaxError(line_no, "expected 'c i j : a1 ... a" + std::to_string(k) + "'");
    }
    auto i = to_integer(fields[1]);
    auto j = to_integer(fields[2]);
    if (!i || !j || *i < 1 || *j < 1 || *i > static_cast<long long>(k) ||
        *j > static_cast<long long>(k)) {
      throw SyntaxError(line_no, "generator indices must lie in [1, " + std::to_string(k) + "]");
    }
    const std::size_t a = static_cast<std::size_t>(*i - 1);
    const std::size_t b = static_cast<std::size_t>(*j - 1);
    if (seen[a][b]) {
      throw SyntaxError(line_no, "duplicate structure constant c " + fields[1] + " " + fields[2]);
    }
    RingElement c;
    for (std::size_t t = 0; t < k; ++t) {
      auto v = to_integer(fields[4 + t]);
      if (!v) throw SyntaxError(line_no, "coordinate '" + fields[4 + t] + "' is not an integer");
      long long m = shape->moduli[t];
      c.coords.push_back(static_cast<int>(((*v % m) + m) % m));
    }
    constants[a][b] = std::move(c);
    seen[a][b] = true;
    ++filled;
  }

  if (!shape) throw SyntaxError(line_no + 1, "missing 'moduli:' line");
  const std::size_t k = shape->rank();
  if (filled != k * k) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (!seen[a][b]) {
          throw SyntaxError(line_no + 1, "missing structure constant c " + std::to_string(a + 1) +
                                             " " + std::to_string(b + 1));
        }
      }
    }
  }
  return validate_ring(std::move(*shape), std::move(constants));
}

std::string serialize_ring(const FiniteRing& ring) {
  std::ostringstream out;
  out << "moduli:";
  for (int d : ring.shape().moduli) out << ' ' << d;
  out << '\n';
  const std::size_t k = ring.rank();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out << "c " << i + 1 << ' ' << j + 1 << " :";
      for (int a : ring.constants()[i][j].coords) out << ' ' << a;
      out << '\n';
    }
  }
  return out.str();
}

FiniteRing load_ring_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_file(buf.str());
}

void save_ring_file(const FiniteRing& ring, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw RingError("cannot write '" + path + "'");
  out << serialize_ring(ring);
  if (!out) throw RingError("write to '" + path + "' failed");
}

}  // namespace ringcomm
