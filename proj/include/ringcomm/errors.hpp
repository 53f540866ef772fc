#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringcomm {

/// Base class for every error raised by the library.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element or table does not match the additive shape of the ring it is used with.
class ShapeMismatch : public RingError {
 public:
  using RingError::RingError;
};

/// The ring (or an object derived from it) exceeds a desk-scale size cap.
class OrderOverflow : public RingError {
 public:
  OrderOverflow(std::size_t order, std::size_t limit)
      : RingError("order " + std::to_string(order) + " exceeds limit " + std::to_string(limit)),
        order_(order),
        limit_(limit) {}

  std::size_t order() const noexcept { return order_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t order_;
  std::size_t limit_;
};

/// d_i * c_ij != 0 or d_j * c_ij != 0: the multiplication is not well defined on Z_{d_i} x Z_{d_j}.
class WellDefinednessViolation : public RingError {
 public:
  WellDefinednessViolation(std::size_t i, std::size_t j, const std::string& detail)
      : RingError("well-definedness violated for c " + std::to_string(i + 1) + " " +
                  std::to_string(j + 1) + ": " + detail),
        i_(i),
        j_(j) {}

  // zero-based generator indices
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

/// (e_i e_j) e_l != e_i (e_j e_l) for the reported generator triple.
class AssociativityViolation : public RingError {
 public:
  AssociativityViolation(std::size_t i, std::size_t j, std::size_t l, std::string left,
                         std::string right)
      : RingError("associativity violated for generators (" + std::to_string(i + 1) + ", " +
                  std::to_string(j + 1) + ", " + std::to_string(l + 1) + "): (e" +
                  std::to_string(i + 1) + "e" + std::to_string(j + 1) + ")e" +
                  std::to_string(l + 1) + " = " + left + " but e" + std::to_string(i + 1) + "(e" +
                  std::to_string(j + 1) + "e" + std::to_string(l + 1) + ") = " + right),
        i_(i),
        j_(j),
        l_(l),
        left_(std::move(left)),
        right_(std::move(right)) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }
  std::size_t l() const noexcept { return l_; }
  const std::string& left() const noexcept { return left_; }
  const std::string& right() const noexcept { return right_; }

 private:
  std::size_t i_, j_, l_;
  std::string left_, right_;
};

/// Malformed ring-file or element text. line() is 1-based, 0 when not tied to a line.
class SyntaxError : public RingError {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : RingError(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownCatalogName : public RingError {
 public:
  explicit UnknownCatalogName(const std::string& name)
      : RingError("unknown catalog ring '" + name + "'") {}
};

/// A claim that only makes sense for non-commutative rings was asked of a commutative one.
class CommutativeRing : public RingError {
 public:
  using RingError::RingError;
};

/// A claim that requires r != 0 was asked with r = 0.
class ZeroR : public RingError {
 public:
  using RingError::RingError;
};

/// Two routes that must agree exactly did not. Always a bug.
class InternalInconsistency : public RingError {
 public:
  using RingError::RingError;
};

/// The isoclinism search ran out of node budget before deciding.
class SearchBudgetExceeded : public RingError {
 public:
  explicit SearchBudgetExceeded(std::size_t budget)
      : RingError("isoclinism search exceeded node budget " + std::to_string(budget)) {}
};

/// An input is outside the size gate of an exhaustive search.
class SearchGateExceeded : public RingError {
 public:
  using RingError::RingError;
};

class WitnessInvalid : public RingError {
 public:
  using RingError::RingError;
};

}  // namespace ringcomm
