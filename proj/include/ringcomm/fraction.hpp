#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace ringcomm {

using Fraction = boost::rational<std::int64_t>;

/// Always "num/den", including 0/1 and 1/1.
std::string to_string(const Fraction& f);

/// A reduced fraction in [0, 1]. Construction outside that range throws std::domain_error.
class Probability {
 public:
  Probability() = default;
  explicit Probability(const Fraction& value);
  Probability(std::int64_t favourable, std::int64_t total);

  const Fraction& value() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return value_.numerator(); }
  std::int64_t denominator() const noexcept { return value_.denominator(); }

  friend bool operator==(const Probability&, const Probability&) = default;
  friend std::strong_ordering operator<=>(const Probability& a, const Probability& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ == b.value_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  friend Probability operator*(const Probability& a, const Probability& b) {
    return Probability(a.value_ * b.value_);
  }

 private:
  Fraction value_{0};
};

std::string to_string(const Probability& p);
std::ostream& operator<<(std::ostream& os, const Probability& p);

}  // namespace ringcomm
