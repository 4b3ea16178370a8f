#include "bncount/divisor.hpp"

#include "bncount/pointed.hpp"

namespace bncount {

DivisorClass::DivisorClass(int g) : g_(g) {
  if (g < 1) throw PreconditionError("divisor class requires g >= 1");
  delta_.assign(static_cast<std::size_t>(g - 1), ExactRat(0));
}

ExactRat& DivisorClass::delta(int i) {
  if (i < 1 || i > g_ - 1) throw PreconditionError("delta index out of range 1..g-1");
  return delta_[static_cast<std::size_t>(i - 1)];
}

const ExactRat& DivisorClass::delta(int i) const {
  if (i < 1 || i > g_ - 1) throw PreconditionError("delta index out of range 1..g-1");
  return delta_[static_cast<std::size_t>(i - 1)];
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.g_ != g_) throw PreconditionError("adding divisor classes of different genus");
  lambda += other.lambda;
  psi += other.psi;
  delta_irr += other.delta_irr;
  for (std::size_t i = 0; i < delta_.size(); ++i) delta_[i] += other.delta_[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const ExactRat& factor) {
  lambda *= factor;
  psi *= factor;
  delta_irr *= factor;
  for (auto& c : delta_) c *= factor;
  return *this;
}

std::string DivisorClass::to_string() const {
  std::string out;
  auto append = [&out](const ExactRat& c, const std::string& name) {
    if (c == 0) return;
    const bool negative = c < 0;
    const ExactRat magnitude = negative ? ExactRat(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      const std::string text = bncount::to_string(magnitude);
      out += text.find('/') == std::string::npos ? text : "(" + text + ")";
      out += "*";
    }
    out += name;
  };
  append(lambda, "lambda");
  append(psi, "psi");
  append(delta_irr, "delta_irr");
  for (int i = 1; i < g_; ++i) append(delta(i), "delta_" + std::to_string(i));
  return out.empty() ? "0" : out;
}

DivisorClass bn_class(int g) {
  if (g < 3) throw PreconditionError("bn_class requires g >= 3, got g=" + std::to_string(g));
  DivisorClass c(g);
  c.lambda = g + 3;
  c.delta_irr = -ExactRat(g + 1, 6);
  for (int i = 1; i < g; ++i) c.delta(i) = -i * (g - i);
  return c;
}

DivisorClass w_class(int g) {
  if (g < 2) throw PreconditionError("w_class requires g >= 2, got g=" + std::to_string(g));
  DivisorClass c(g);
  c.lambda = -1;
  c.psi = ExactRat(binomial(g + 1, 2));
  for (int i = 1; i < g; ++i) c.delta(i) = -ExactRat(binomial(g - i + 1, 2));
  return c;
}

std::vector<VanishingSeq> neighbor_sequences(const BNInput& p, const VanishingSeq& a) {
  require_valid(p, a);
  std::vector<VanishingSeq> out;
  for (int i = 0; i <= p.r; ++i) {
    std::vector<int> b(a.values().begin(), a.values().end());
    for (int j = 0; j <= p.r; ++j) {
      if (j != i) b[static_cast<std::size_t>(j)] += 1;
    }
    if (i > 0 && b[static_cast<std::size_t>(i)] <= b[static_cast<std::size_t>(i - 1)]) continue;
    if (b.back() > p.d) continue;
    out.emplace_back(std::move(b));
  }
  return out;
}

ExactInt neighbor_sum(const BNInput& p, const VanishingSeq& a) {
  const BNInput lower{p.g - 1, p.r, p.d};
  ExactInt total = 0;
  for (const auto& b : neighbor_sequences(p, a)) total += pointed_count(lower, b);
  return total;
}

namespace {

void require_divisor_domain(const BNInput& p, const VanishingSeq& a) {
  if (p.g <= 2) throw PreconditionError("mu_nu requires g > 2, got g=" + std::to_string(p.g));
  const int adjusted = rho_adjusted(p, a);
  if (adjusted != -1) {
    throw PreconditionError("mu_nu requires adjusted rho == -1, got " + std::to_string(adjusted));
  }
}

}  // namespace

MuNu mu_nu(const BNInput& p, const VanishingSeq& a) {
  require_divisor_domain(p, a);
  const int g = p.g;
  const ExactRat n(pointed_count(p, a));
  const ExactRat g2m1(ExactInt(g) * g - 1);
  MuNu out;
  out.nu = n / (g * g2m1);
  out.mu = -n / (2 * g2m1) + ExactRat(neighbor_sum(p, a)) / (4 * ExactRat(binomial(g - 1, 2)));
  return out;
}

DivisorClass pointed_class(const BNInput& p, const VanishingSeq& a) {
  const MuNu coefficients = mu_nu(p, a);
  return coefficients.mu * bn_class(p.g) + coefficients.nu * w_class(p.g);
}

bool test_curve_consistency(const BNInput& p, const VanishingSeq& a) {
  const MuNu c = mu_nu(p, a);
  const int g = p.g;
  const ExactRat n(pointed_count(p, a));
  const ExactRat neighbors(neighbor_sum(p, a));
  const bool moving_point = n == c.nu * ExactRat(binomial(g + 1, 2)) * (2 * g - 2);
  const bool elliptic_tail =
      neighbors == (c.mu * (g - 1) + c.nu * ExactRat(binomial(g, 2))) * (2 * g - 4);
  return moving_point && elliptic_tail;
}

}  // namespace bncount
