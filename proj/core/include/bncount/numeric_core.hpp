#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bncount {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

// Raised when an operation is called outside its domain. The message names
// the violated condition and is suitable for a one-line diagnostic.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failure (e.g. a count that should be an integer is
// not). Indicates a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Memoized n! for 0 <= n <= bound; values past the bound are computed on
// demand. Immutable once constructed.
class FactorialTable {
 public:
  static constexpr int kDefaultBound = 256;

  explicit FactorialTable(int bound = kDefaultBound);

  ExactInt operator()(int n) const;
  int bound() const { return static_cast<int>(table_.size()) - 1; }

 private:
  std::vector<ExactInt> table_;
};

// Process-wide table, built on first use (thread-safe static init).
const FactorialTable& factorials();

ExactInt factorial(int n);

// 1/n! with the convention 1/n! = 0 for n < 0.
ExactRat inv_factorial(int n);

ExactInt binomial(int n, int k);

// sigma_k of the entries, k in 1..4 and k <= values.size().
ExactInt elementary_symmetric(std::span<const int> values, int k);

// sigma_k with sigma_k = 0 for k > values.size(); any k >= 0.
ExactInt elementary_symmetric_or_zero(std::span<const int> values, int k);

// prod_{l<k} (b_k - b_l).
ExactInt vandermonde(std::span<const int> b);

// Exact determinant by Gaussian elimination over the rationals. `rows` must
// be square.
ExactRat determinant(std::vector<std::vector<ExactRat>> rows);

// Determinant of the (r+1)x(r+1) matrix whose row for b_i (b_r on top) is
//   1/(b_i - r)!, 1/(b_i - r + 1)!, ..., 1/b_i!
// Requires b strictly increasing and non-negative.
ExactRat factorial_det(std::span<const int> b);

// prod_{l<k}(b_k - b_l) / prod_j b_j!, the closed form of factorial_det.
ExactRat factorial_det_closed_form(std::span<const int> b);

// "p" or "p/q", canonical decimal rendering.
std::string to_string(const ExactRat& q);
std::string to_string(const ExactInt& n);

// Integer value of q; throws InvariantError naming `what` if q is not
// integral.
ExactInt require_integer(const ExactRat& q, const char* what);

}  // namespace bncount
