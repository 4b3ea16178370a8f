#include "bncount/bn_core.hpp"

#include <algorithm>
#include <charconv>

#include "bncount/numeric_core.hpp"

namespace bncount {

std::string to_string(const BNInput& p) {
  return "(g=" + std::to_string(p.g) + ",r=" + std::to_string(p.r) +
         ",d=" + std::to_string(p.d) + ")";
}

VanishingSeq::VanishingSeq(std::vector<int> a) : a_(std::move(a)) {
  if (a_.empty()) throw PreconditionError("vanishing sequence must be non-empty");
  if (a_.front() < 0) {
    throw PreconditionError("vanishing sequence entries must be >= 0, got " +
                            std::to_string(a_.front()));
  }
  for (std::size_t i = 1; i < a_.size(); ++i) {
    if (a_[i] <= a_[i - 1]) {
      throw PreconditionError("vanishing sequence not strictly increasing at entries " +
                              std::to_string(a_[i - 1]) + "," + std::to_string(a_[i]));
    }
  }
}

VanishingSeq VanishingSeq::identity(int r) {
  if (r < 0) throw PreconditionError("r must be >= 0");
  std::vector<int> a(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) a[static_cast<std::size_t>(i)] = i;
  return VanishingSeq(std::move(a));
}

int VanishingSeq::weight() const {
  int w = 0;
  for (int i = 0; i < size(); ++i) w += a_[static_cast<std::size_t>(i)] - i;
  return w;
}

std::string VanishingSeq::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(a_[i]);
  }
  return out;
}

VanishingSeq parse_sequence(const std::string& text) {
  std::vector<int> a;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, end - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw PreconditionError("sequence entry '" + token + "' is not an integer");
    }
    if (!a.empty() && value <= a.back()) {
      throw PreconditionError("sequence not strictly increasing at entries " +
                              std::to_string(a.back()) + "," + std::to_string(value));
    }
    a.push_back(value);
    pos = end + 1;
  }
  return VanishingSeq(std::move(a));
}

bool is_valid(const BNInput& p, const VanishingSeq& a) {
  return p.g >= 0 && p.r >= 0 && p.d >= 0 && a.size() == p.r + 1 && a.back() <= p.d;
}

void require_valid(const BNInput& p, const VanishingSeq& a) {
  if (p.g < 0 || p.r < 0 || p.d < 0) {
    throw PreconditionError("g, r, d must be non-negative, got " + to_string(p));
  }
  if (a.size() != p.r + 1) {
    throw PreconditionError("sequence has " + std::to_string(a.size()) +
                            " entries, expected r+1=" + std::to_string(p.r + 1));
  }
  if (a.back() > p.d) {
    throw PreconditionError("sequence entry " + std::to_string(a.back()) +
                            " exceeds d=" + std::to_string(p.d));
  }
}

int rho(const BNInput& p) { return p.g - (p.r + 1) * p.s(); }

int rho_adjusted(const BNInput& p, const VanishingSeq& a) {
  require_valid(p, a);
  return rho(p) - a.weight();
}

bool eh_exists(const BNInput& p, const VanishingSeq& a) {
  require_valid(p, a);
  if (p.g <= 0) throw PreconditionError("existence criterion requires g > 0");
  int total = 0;
  for (int i = 0; i <= p.r; ++i) total += std::max(a[i] - i + p.s(), 0);
  return total <= p.g;
}

VanishingSeq complement(const BNInput& p, const VanishingSeq& a) {
  require_valid(p, a);
  std::vector<int> out(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(i)] = p.d - a[a.r() - i];
  return VanishingSeq(std::move(out));
}

namespace {

// Fills b_i = a_i - i, a non-decreasing sequence in [0, d - r], with
// prescribed total.
void extend(int index, int lower, int remaining, int cap, std::vector<int>& b,
            std::vector<VanishingSeq>& out) {
  const int slots = static_cast<int>(b.size()) - index;
  if (slots == 0) {
    if (remaining != 0) return;
    std::vector<int> a(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = b[i] + static_cast<int>(i);
    out.emplace_back(std::move(a));
    return;
  }
  for (int v = lower; v <= cap; ++v) {
    // Every later b_j is >= v, and at most cap.
    if (v * slots > remaining) break;
    if (v + cap * (slots - 1) < remaining) continue;
    b[static_cast<std::size_t>(index)] = v;
    extend(index + 1, v, remaining - v, cap, b, out);
  }
}

}  // namespace

std::vector<VanishingSeq> enumerate_sequences(const BNInput& p, int target) {
  std::vector<VanishingSeq> out;
  if (p.g < 0 || p.r < 0 || p.d < p.r) return out;
  const int total = rho(p) - target;
  if (total < 0) return out;
  std::vector<int> b(static_cast<std::size_t>(p.r) + 1, 0);
  extend(0, 0, total, p.d - p.r, b, out);
  return out;
}

}  // namespace bncount
