#include "ringcomm/fraction.hpp"

#include <stdexcept>

namespace ringcomm {

std::string to_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

Probability::Probability(const Fraction& value) : value_(value) {
  if (value_ < Fraction(0) || value_ > Fraction(1)) {
    throw std::domain_error("probability " + ringcomm::to_string(value_) + " is outside [0, 1]");
  }
}

Probability::Probability(std::int64_t favourable, std::int64_t total)
    : Probability(Fraction(favourable, total)) {}

std::string to_string(const Probability& p) { return to_string(p.value()); }

std::ostream& operator<<(std::ostream& os, const Probability& p) { return os << to_string(p); }

}  // namespace ringcomm
