#ifndef HYPEROVAL_LAB_ERRORS_HPP
#define HYPEROVAL_LAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperoval_lab {

/// Raised when a caller violates an operation's precondition (bad k, e out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic between elements or polynomials of different fields.
class ContextMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical identity that must hold failed to hold.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A factorization into linear forms needs a larger field than the one supplied.
class SplittingFieldTooSmall : public std::runtime_error {
 public:
  SplittingFieldTooSmall(const std::string& what, unsigned needed_degree)
      : std::runtime_error(what), needed_degree_(needed_degree) {}
  /// Extension degree over GF(2) of a field in which the object splits.
  unsigned needed_degree() const noexcept { return needed_degree_; }

 private:
  unsigned needed_degree_;
};

/// Two curves share a component through the point (or anywhere, for a Bezout audit).
class InfiniteIntersection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperoval_lab

#endif  // HYPEROVAL_LAB_ERRORS_HPP
