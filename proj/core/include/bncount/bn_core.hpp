#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bncount {

// A Brill-Noether problem: linear series g^r_d on a genus-g curve.
struct BNInput {
  int g = 0;
  int r = 0;
  int d = 0;

  // s = g - d + r, derived, never stored.
  constexpr int s() const { return g - d + r; }

  friend constexpr auto operator<=>(const BNInput&, const BNInput&) = default;
};

std::string to_string(const BNInput& p);

// Strictly increasing, non-negative vanishing orders a_0 < ... < a_r.
// The d-bound depends on the problem and is checked by require_valid().
class VanishingSeq {
 public:
  VanishingSeq() = default;
  explicit VanishingSeq(std::vector<int> a);
  VanishingSeq(std::initializer_list<int> a) : VanishingSeq(std::vector<int>(a)) {}

  // (0, 1, ..., r)
  static VanishingSeq identity(int r);

  std::span<const int> values() const { return a_; }
  int operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(a_.size()); }
  int r() const { return size() - 1; }
  int front() const { return a_.front(); }
  int back() const { return a_.back(); }

  // sum_i (a_i - i)
  int weight() const;

  // "0,2,4"
  std::string to_string() const;

  friend auto operator<=>(const VanishingSeq&, const VanishingSeq&) = default;

 private:
  std::vector<int> a_;
};

// Parses "a0,a1,..." (ascending, comma-separated). Errors name the offending
// pair of entries.
VanishingSeq parse_sequence(const std::string& text);

// Throws PreconditionError unless p is non-negative, a has r+1 entries and
// a_r <= d.
void require_valid(const BNInput& p, const VanishingSeq& a);
bool is_valid(const BNInput& p, const VanishingSeq& a);

// g - (r+1)(g-d+r)
int rho(const BNInput& p);

// rho(p) - sum_i (a_i - i)
int rho_adjusted(const BNInput& p, const VanishingSeq& a);

// Existence of a series with vanishing a at a general point:
// sum_i (a_i - i + g - d + r)_+ <= g.
bool eh_exists(const BNInput& p, const VanishingSeq& a);

// (d - a_r, ..., d - a_0)
VanishingSeq complement(const BNInput& p, const VanishingSeq& a);

// All valid a with rho_adjusted(p, a) == target, lexicographic order.
std::vector<VanishingSeq> enumerate_sequences(const BNInput& p, int target);

}  // namespace bncount
