#include "bncount/codim2.hpp"

#include <string>

#include "bncount/pointed.hpp"

namespace bncount {

SurfaceIntersection surface_intersection(int i, const BNInput& p) {
  if (const int value = rho(p); value != -2) {
    throw PreconditionError("surface_intersection requires rho == -2, got rho=" +
                            std::to_string(value));
  }
  if (i < 2 || i > p.g - 2) {
    throw PreconditionError("surface_intersection requires 2 <= i <= g-2, got i=" +
                            std::to_string(i) + " g=" + std::to_string(p.g));
  }
  const BNInput near{i, p.r, p.d};
  const BNInput far{p.g - i, p.r, p.d};

  SurfaceIntersection out;
  out.i = i;
  out.p = p;
  out.value = 0;
  for (auto& a : enumerate_sequences(near, -1)) {
    VanishingSeq b = complement(p, a);
    if (rho_adjusted(far, b) != -1) {
      throw InvariantError("complementary sequence " + b.to_string() +
                           " does not have adjusted rho -1");
    }
    SurfaceTerm term{std::move(a), 0, 0};
    term.left = pointed_count(near, term.a);
    term.right = pointed_count(far, b);
    out.value += term.left * term.right;
    out.terms.push_back(std::move(term));
  }
  return out;
}

bool exactly_proportional(const std::vector<ExactInt>& u, const std::vector<ExactInt>& v) {
  if (u.size() != v.size()) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

ProportionalityReport proportionality_report(const BNInput& first, const BNInput& second,
                                             const std::vector<int>& surfaces) {
  for (const BNInput& p : {first, second}) {
    if (rho(p) != -2) {
      throw PreconditionError("proportionality_report requires rho == -2 for " + to_string(p));
    }
  }
  ProportionalityReport report{first, second, surfaces, {}, {}, false, std::nullopt};
  for (int i : surfaces) {
    report.first_values.push_back(surface_intersection(i, first).value);
    report.second_values.push_back(surface_intersection(i, second).value);
  }
  report.proportional = exactly_proportional(report.first_values, report.second_values);
  if (report.proportional) {
    for (std::size_t k = 0; k < surfaces.size(); ++k) {
      if (report.first_values[k] != 0) {
        report.ratio = ExactRat(report.second_values[k], report.first_values[k]);
        break;
      }
    }
  }
  return report;
}

}  // namespace bncount
