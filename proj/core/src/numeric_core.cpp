#include "bncount/numeric_core.hpp"

#include <algorithm>
#include <utility>

namespace bncount {

FactorialTable::FactorialTable(int bound) {
  if (bound < 0) throw PreconditionError("factorial table bound must be >= 0");
  table_.reserve(static_cast<std::size_t>(bound) + 1);
  table_.emplace_back(1);
  for (int n = 1; n <= bound; ++n) table_.push_back(table_.back() * n);
}

ExactInt FactorialTable::operator()(int n) const {
  if (n < 0) throw PreconditionError("factorial of a negative integer");
  if (n <= bound()) return table_[static_cast<std::size_t>(n)];
  ExactInt value = table_.back();
  for (int k = bound() + 1; k <= n; ++k) value *= k;
  return value;
}

const FactorialTable& factorials() {
  static const FactorialTable table;
  return table;
}

ExactInt factorial(int n) { return factorials()(n); }

ExactRat inv_factorial(int n) {
  if (n < 0) return ExactRat(0);
  return ExactRat(ExactInt(1), factorial(n));
}

ExactInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

ExactInt elementary_symmetric_or_zero(std::span<const int> values, int k) {
  if (k < 0) throw PreconditionError("elementary symmetric degree must be >= 0");
  if (static_cast<std::size_t>(k) > values.size()) return 0;
  // e[j] after processing a prefix holds sigma_j of that prefix.
  std::vector<ExactInt> e(static_cast<std::size_t>(k) + 1, ExactInt(0));
  e[0] = 1;
  for (int v : values) {
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  }
  return e[k];
}

ExactInt elementary_symmetric(std::span<const int> values, int k) {
  if (k < 1 || k > 4) {
    throw PreconditionError("elementary symmetric degree k=" + std::to_string(k) +
                            " outside 1..4");
  }
  if (static_cast<std::size_t>(k) > values.size()) {
    throw PreconditionError("elementary symmetric degree k=" + std::to_string(k) +
                            " exceeds list length " + std::to_string(values.size()));
  }
  return elementary_symmetric_or_zero(values, k);
}

ExactInt vandermonde(std::span<const int> b) {
  ExactInt product = 1;
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (std::size_t l = 0; l < k; ++l) product *= b[k] - b[l];
  }
  return product;
}

ExactRat determinant(std::vector<std::vector<ExactRat>> rows) {
  const std::size_t n = rows.size();
  for (const auto& row : rows) {
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  }
  ExactRat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (rows[row][col] == 0) continue;
      const ExactRat factor = rows[row][col] / rows[col][col];
      for (std::size_t c = col; c < n; ++c) rows[row][c] -= factor * rows[col][c];
    }
  }
  return det;
}

namespace {

void require_strict_nonnegative(std::span<const int> b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) throw PreconditionError("factorial_det entries must be non-negative");
    if (i > 0 && b[i] <= b[i - 1]) {
      throw PreconditionError("factorial_det entries must be strictly increasing, got " +
                              std::to_string(b[i - 1]) + "," + std::to_string(b[i]));
    }
  }
}

}  // namespace

ExactRat factorial_det(std::span<const int> b) {
  require_strict_nonnegative(b);
  const int r = static_cast<int>(b.size()) - 1;
  std::vector<std::vector<ExactRat>> rows;
  rows.reserve(b.size());
  for (int i = r; i >= 0; --i) {
    std::vector<ExactRat> row;
    row.reserve(b.size());
    for (int col = 0; col <= r; ++col) row.push_back(inv_factorial(b[i] - (r - col)));
    rows.push_back(std::move(row));
  }
  return determinant(std::move(rows));
}

ExactRat factorial_det_closed_form(std::span<const int> b) {
  require_strict_nonnegative(b);
  ExactInt denominator = 1;
  for (int v : b) denominator *= factorial(v);
  return ExactRat(vandermonde(b), denominator);
}

std::string to_string(const ExactInt& n) { return n.str(); }

std::string to_string(const ExactRat& q) {
  const ExactInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

ExactInt require_integer(const ExactRat& q, const char* what) {
  if (boost::multiprecision::denominator(q) != 1) {
    throw InvariantError(std::string(what) + " is not an integer: " + to_string(q));
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace bncount
