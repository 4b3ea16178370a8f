#include "bncount/det_oracle.hpp"

#include <string>
#include <vector>

namespace bncount {

namespace {

// a - shift1 e_i1 - shift2 e_i2, Vandermonde of the result.
ExactInt shifted_vandermonde(std::span<const int> a, int i1, int shift1, int i2 = -1,
                             int shift2 = 0) {
  std::vector<int> b(a.begin(), a.end());
  b[static_cast<std::size_t>(i1)] -= shift1;
  if (i2 >= 0) b[static_cast<std::size_t>(i2)] -= shift2;
  return vandermonde(b);
}

void require_oracle_domain(const BNInput& p, const VanishingSeq& a, const char* op) {
  if (p.g < 2) {
    throw PreconditionError(std::string(op) + " requires g >= 2, got g=" + std::to_string(p.g));
  }
  const int adjusted = rho_adjusted(p, a);
  if (adjusted != -1) {
    throw PreconditionError(std::string(op) + " requires adjusted rho == -1, got " +
                            std::to_string(adjusted));
  }
  if (p.s() + a.front() < 0) {
    throw PreconditionError(std::string(op) + " requires g - d + r + a_0 >= 0, got " +
                            std::to_string(p.s() + a.front()));
  }
}

// g! / prod_j (s + a_j)!, all arguments non-negative.
ExactRat prefactor(const BNInput& p, const VanishingSeq& a) {
  ExactInt denominator = 1;
  for (int v : a.values()) denominator *= factorial(p.s() + v);
  return ExactRat(factorial(p.g), denominator);
}

void require_length(int r, const VanishingSeq& a, const char* op) {
  if (a.size() != r + 1) {
    throw PreconditionError(std::string(op) + " requires r+1=" + std::to_string(r + 1) +
                            " entries, got " + std::to_string(a.size()));
  }
}

// Transcribed expansions of the determinant bracket for r = 1..7.
constexpr std::array<HCoefficients, kHTableMaxR> kHTables = {{
    // r = 1
    {{1, -4, -1},
     {1, -4, 0, 0, 0, -1, 0},
     {1, -4, 0, 0, 0, 0, 0, -1, 0, 0}},
    // r = 2
    {{2, -6, -6},
     {2, -7, 9, 3, -1, -4, 3},
     {1, -4, 3, -1, -9, 4, 1, -5, 1, -1}},
    // r = 3
    {{3, -8, -20},
     {3, -10, 12, 8, -3, -10, 20},
     {1, -4, 3, -3, -18, 11, 4, -14, 5, -10}},
    // r = 4
    {{4, -10, -50},
     {4, -13, 15, 15, -6, -20, 75},
     {1, -4, 3, -6, -30, 21, 10, -30, 15, -50}},
    // r = 5
    {{5, -12, -105},
     {5, -16, 18, 24, -10, -35, 210},
     {1, -4, 3, -10, -45, 34, 20, -55, 35, -175}},
    // r = 6
    {{6, -14, -196},
     {6, -19, 21, 35, -15, -56, 490},
     {1, -4, 3, -15, -63, 50, 35, -91, 70, -490}},
    // r = 7
    {{7, -16, -336},
     {7, -22, 24, 48, -21, -84, 1008},
     {1, -4, 3, -21, -84, 69, 56, -140, 126, -1176}},
}};

}  // namespace

SymPolyValues sym_poly_values(int s, const VanishingSeq& a) {
  SymPolyValues v;
  v.sigma1 = elementary_symmetric_or_zero(a.values(), 1);
  v.sigma2 = elementary_symmetric_or_zero(a.values(), 2);
  v.sigma3 = elementary_symmetric_or_zero(a.values(), 3);
  v.sigma4 = elementary_symmetric_or_zero(a.values(), 4);
  v.s = s;
  v.r = a.r();
  return v;
}

PValues eval_P(int r, const VanishingSeq& a) {
  const SymPolyValues v = sym_poly_values(0, a);
  const ExactRat s1(v.sigma1), s2(v.sigma2), s3(v.sigma3);
  const ExactRat R(r);
  PValues out;
  out.p2 = R * s1 * s1 - 2 * (R + 1) * s2 - R * (R + 1) * (R + 1) * (R + 2) / 12;
  out.p3 = R * s1 * s1 * s1 - (3 * R + 1) * s1 * s2 + 3 * (R + 1) * s3 + (R * R - 1) * s2 -
           R * (R - 1) / 2 * s1 * s1 - R * (R + 1) * (R + 2) / 6 * s1 +
           (R - 1) * R * (R + 1) * (R + 1) * (R + 2) / 24;
  out.p4 = s1 * s1 * s2 - 4 * s2 * s2 + 3 * s1 * s3 - R * (R - 1) / 2 * s1 * s1 * s1 -
           3 * R * (R + 1) / 2 * s3 + (R - 1) * (3 * R + 2) / 2 * s1 * s2 +
           (R - 1) * R * (R + 1) / 6 * s1 * s1 - R * (R + 1) * (2 * R + 1) / 6 * s2 +
           (R - 1) * R * (R + 1) * (R + 2) / 24 * s1 -
           (R - 1) * R * R * (R + 1) * (R + 1) * (R + 2) / 144;
  return out;
}

ExactInt det_bracket(int g, int d, std::span<const int> a) {
  const int r = static_cast<int>(a.size()) - 1;
  const ExactInt s = g - d + r;
  ExactInt bracket = 0;
  for (int i = 0; i <= r; ++i) {
    const ExactInt ai = a[static_cast<std::size_t>(i)];
    const ExactInt linear = ai * ai * (g - 1) + ai * (d - g + 1);
    if (linear != 0) bracket += linear * (s + ai) * shifted_vandermonde(a, i, 1);
    const ExactInt quadratic = ai - ai * ai;
    if (quadratic != 0) bracket += quadratic * (s + ai) * (s + ai - 1) * shifted_vandermonde(a, i, 2);
  }
  for (int i1 = 0; i1 <= r; ++i1) {
    for (int i2 = i1 + 1; i2 <= r; ++i2) {
      const ExactInt a1 = a[static_cast<std::size_t>(i1)];
      const ExactInt a2 = a[static_cast<std::size_t>(i2)];
      if (a1 == 0 || a2 == 0) continue;
      bracket -= 2 * a1 * a2 * (s + a1) * (s + a2) * shifted_vandermonde(a, i1, 1, i2, 1);
    }
  }
  return bracket;
}

ExactInt det_bracket_at(int s, const VanishingSeq& a) {
  const int r = a.r();
  const int g = (r + 1) * s - 1 + a.weight();
  const int d = r * s + r - 1 + a.weight();
  return det_bracket(g, d, a.values());
}

ExactInt pointed_via_det(const BNInput& p, const VanishingSeq& a) {
  require_oracle_domain(p, a, "pointed_via_det");
  return require_integer(prefactor(p, a) * det_bracket(p.g, p.d, a.values()),
                         "determinant-form pointed count");
}

ExactInt pointed_via_sym(const BNInput& p, const VanishingSeq& a) {
  require_oracle_domain(p, a, "pointed_via_sym");
  const PValues P = eval_P(p.r, a);
  const ExactRat s(p.s());
  const ExactRat quadratic = P.p2 * s * s + P.p3 * s + P.p4;
  return require_integer(prefactor(p, a) * vandermonde(a.values()) * quadratic,
                         "symmetric-form pointed count");
}

ExactInt f_bracket(int s, int r, const VanishingSeq& a) {
  require_length(r, a, "f_bracket");
  ExactInt sum = 0;
  for (int j1 = 0; j1 <= r; ++j1) {
    for (int j2 = j1 + 1; j2 <= r; ++j2) {
      const ExactInt gap = a[j2] - a[j1];
      const ExactInt weight = (gap * gap - 1) * (s + a[j1]) * (s + a[j2]);
      if (weight == 0) continue;
      sum += weight * shifted_vandermonde(a.values(), j1, 1, j2, 1);
    }
  }
  return sum;
}

const HCoefficients& h_coefficients(int r) {
  if (r < 1 || r > kHTableMaxR) {
    throw PreconditionError("explicit bracket expansion requires 1 <= r <= 7, got r=" +
                            std::to_string(r));
  }
  return kHTables[static_cast<std::size_t>(r - 1)];
}

ExactInt h_bracket_explicit(int s, int r, const VanishingSeq& a) {
  const HCoefficients& c = h_coefficients(r);
  require_length(r, a, "h_bracket_explicit");
  const SymPolyValues v = sym_poly_values(s, a);
  const ExactInt& e1 = v.sigma1;
  const ExactInt& e2 = v.sigma2;
  const ExactInt& e3 = v.sigma3;

  const std::array<ExactInt, 3> m2 = {e1 * e1, e2, 1};
  const std::array<ExactInt, 7> m1 = {e1 * e1 * e1, e1 * e2, e3, e2, e1 * e1, e1, 1};
  const std::array<ExactInt, 10> m0 = {e1 * e1 * e2, e2 * e2, e1 * e3, e1 * e1 * e1, e3,
                                       e1 * e2,      e1 * e1, e2,      e1,           1};
  auto dot = [](const auto& coefficients, const auto& monomials) {
    ExactInt total = 0;
    for (std::size_t k = 0; k < coefficients.size(); ++k) total += coefficients[k] * monomials[k];
    return total;
  };
  const ExactInt S = s;
  return vandermonde(a.values()) * (dot(c.s2, m2) * S * S + dot(c.s1, m1) * S + dot(c.s0, m0));
}

ExactInt shifted_power_sum(int t, std::span<const int> a, int shift) {
  if (t < 0) throw PreconditionError("power t must be >= 0");
  ExactInt sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += boost::multiprecision::pow(ExactInt(a[i]), static_cast<unsigned>(t)) *
           shifted_vandermonde(a, static_cast<int>(i), shift);
  }
  return sum;
}

bool lemma_example_check(const VanishingSeq& a) {
  const int r = a.r();
  const ExactInt lhs = shifted_power_sum(1, a.values());
  const ExactInt rhs =
      (elementary_symmetric_or_zero(a.values(), 1) - r * (r + 1) / 2) * vandermonde(a.values());
  return lhs == rhs;
}

bool lemma_antisymmetry_check(int t, std::span<const int> a, std::pair<int, int> swap) {
  const auto n = static_cast<int>(a.size());
  if (swap.first < 0 || swap.second < 0 || swap.first >= n || swap.second >= n) {
    throw PreconditionError("swap indices out of range");
  }
  if (swap.first == swap.second) throw PreconditionError("swap indices must differ");
  std::vector<int> swapped(a.begin(), a.end());
  std::swap(swapped[static_cast<std::size_t>(swap.first)],
            swapped[static_cast<std::size_t>(swap.second)]);
  const ExactInt original = shifted_power_sum(t, a);
  const ExactInt permuted = shifted_power_sum(t, swapped);
  return permuted == -original;
}

}  // namespace bncount
