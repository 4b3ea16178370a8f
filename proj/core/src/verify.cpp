#include "bncount/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "bncount/castelnuovo.hpp"
#include "bncount/codim2.hpp"
#include "bncount/det_oracle.hpp"
#include "bncount/divisor.hpp"
#include "bncount/pointed.hpp"

namespace bncount {

namespace {

std::optional<VerifyFailure> compare(const std::string& expected, const std::string& actual) {
  if (expected == actual) return std::nullopt;
  return VerifyFailure{"", expected, actual};
}

std::optional<VerifyFailure> require(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return VerifyFailure{"", what, "false"};
}

std::string describe(const BNInput& p, const VanishingSeq& a) {
  return to_string(p) + " a=(" + a.to_string() + ")";
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

// All strictly increasing sequences of length `length` with entries in
// [0, max_entry], lexicographic.
void for_each_strict(int length, int max_entry, const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> b(static_cast<std::size_t>(length));
  std::function<void(int, int)> rec = [&](int index, int lower) {
    if (index == length) {
      fn(b);
      return;
    }
    for (int v = lower; v <= max_entry - (length - 1 - index); ++v) {
      b[static_cast<std::size_t>(index)] = v;
      rec(index + 1, v + 1);
    }
  };
  rec(0, 0);
}

// Non-decreasing sequences with at least one repeated entry.
void for_each_degenerate(int length, int max_entry,
                         const std::function<void(std::vector<int>&)>& fn) {
  std::vector<int> b(static_cast<std::size_t>(length));
  std::function<void(int, int, bool)> rec = [&](int index, int lower, bool repeated) {
    if (index == length) {
      if (repeated) fn(b);
      return;
    }
    for (int v = lower; v <= max_entry; ++v) {
      b[static_cast<std::size_t>(index)] = v;
      rec(index + 1, v, repeated || (index > 0 && v == b[static_cast<std::size_t>(index - 1)]));
    }
  };
  rec(0, 0, false);
}

// ---------------------------------------------------------------- formulas

void add_three_way(std::vector<Check>& checks, int gmax, int rmax) {
  for (int g = 2; g <= gmax; ++g) {
    for (int r = 1; r <= rmax; ++r) {
      for (int d = 0; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        for (const auto& a : enumerate_sequences(p, -1)) {
          if (p.s() + a.front() < 0) continue;
          checks.push_back({"three-way " + describe(p, a), [p, a] {
                              const std::string compact = to_string(pointed_count(p, a));
                              const std::string det = to_string(pointed_via_det(p, a));
                              const std::string sym = to_string(pointed_via_sym(p, a));
                              return compare(compact + " " + compact, det + " " + sym);
                            }});
        }
      }
    }
  }
}

void add_pencils(std::vector<Check>& checks, int gmax) {
  for (int g = 2; g <= gmax; ++g) {
    for (int d = 0; d <= g; ++d) {
      if (2 * d < g + 2) continue;
      checks.push_back({"pencil g=" + std::to_string(g) + " d=" + std::to_string(d), [g, d] {
                          const VanishingSeq a{0, 2 * d - g};
                          return compare(to_string(pencil_count(g, d)),
                                         to_string(pointed_count({g, 1, d}, a)));
                        }});
    }
  }
}

VanishingSeq ramification_sequence(int r, int top) {
  std::vector<int> a(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i)] = i;
  a.back() = top;
  return VanishingSeq(std::move(a));
}

void add_plucker(std::vector<Check>& checks, int gmax) {
  for (int g = 2; g <= gmax; ++g) {
    for (int r = 1; r < g; ++r) {
      if (g % (r + 1) != 0) continue;
      const int s = g / (r + 1);
      const BNInput p{g, r, g + r - s};
      checks.push_back({"plucker " + to_string(p), [p, s] {
                          const ExactInt n = castelnuovo_number(p);
                          const ExactInt alternative = n * (p.r + 2) * (p.r + 1) * p.r * s;
                          const std::string formula = to_string(plucker_count(p));
                          const std::string pointed =
                              to_string(pointed_count(p, ramification_sequence(p.r, p.r + 1)));
                          return compare(formula + " " + formula,
                                         pointed + " " + to_string(alternative));
                        }});
    }
  }
}

void add_cusps(std::vector<Check>& checks, int gmax) {
  for (int g = 2; g <= gmax; ++g) {
    for (int r = 1; r <= g; ++r) {
      for (int d = r + 1; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        const int n = rho(p) + r + 1;
        if (rho(p) <= 0 || n > d) continue;
        checks.push_back({"cusp " + to_string(p) + " n=" + std::to_string(n), [p, n] {
                            return compare(to_string(cusp_count(p, n)),
                                           to_string(pointed_count(p, ramification_sequence(p.r, n))));
                          }});
      }
    }
  }
}

void add_catalan(std::vector<Check>& checks, int mmax) {
  for (int m = 1; m <= mmax; ++m) {
    checks.push_back({"catalan m=" + std::to_string(m), [m] {
                        const ExactInt catalan = factorial(2 * m) / (factorial(m) * factorial(m + 1));
                        return compare(to_string(catalan),
                                       to_string(castelnuovo_number({2 * m, 1, m + 1})));
                      }});
  }
}

// -------------------------------------------------------------- identities

void add_bracket_identities(std::vector<Check>& checks, int rmax, int samples,
                            std::uint64_t seed) {
  for (int r = 1; r <= rmax; ++r) {
    SeededRng rng = SeededRng::for_task(seed, static_cast<std::uint64_t>(r));
    for (int k = 0; k < samples; ++k) {
      const int s = static_cast<int>(rng.uniform(-20, 20));
      const VanishingSeq a(rng.distinct_sorted(r + 1, 0, 30));
      checks.push_back({"bracket s=" + std::to_string(s) + " r=" + std::to_string(r) + " a=(" +
                            a.to_string() + ")",
                        [s, r, a] {
                          const ExactInt f = f_bracket(s, r, a);
                          const std::string expected = to_string(f);
                          std::string actual = to_string(det_bracket_at(s, a));
                          if (r <= kHTableMaxR) actual += " " + to_string(h_bracket_explicit(s, r, a));
                          const PValues P = eval_P(r, a);
                          const ExactRat quotient = ExactRat(vandermonde(a.values())) *
                                                    (P.p2 * s * s + P.p3 * s + P.p4);
                          actual += " " + to_string(quotient);
                          std::string want = expected + " " + expected;
                          if (r <= kHTableMaxR) want += " " + expected;
                          return compare(want, actual);
                        }});
    }
  }
}

void add_factorial_dets(std::vector<Check>& checks, int max_length, int max_entry) {
  for (int length = 1; length <= max_length; ++length) {
    for_each_strict(length, max_entry, [&](std::vector<int>& b) {
      checks.push_back({"factorial_det b=(" + join(b) + ")", [b] {
                          return compare(to_string(factorial_det_closed_form(b)),
                                         to_string(factorial_det(b)));
                        }});
    });
  }
}

void add_lemma_checks(std::vector<Check>& checks, int rmax, int max_entry) {
  for (int length = 1; length <= rmax + 1; ++length) {
    for_each_strict(length, max_entry, [&](std::vector<int>& b) {
      checks.push_back({"lemma a=(" + join(b) + ")", [b] {
                          const VanishingSeq a(b);
                          if (!lemma_example_check(a)) return require(false, "example identity");
                          for (int t = 0; t <= 4; ++t) {
                            for (int i = 0; i < a.size(); ++i) {
                              for (int j = i + 1; j < a.size(); ++j) {
                                if (!lemma_antisymmetry_check(t, b, {i, j})) {
                                  return require(false, "antisymmetry t=" + std::to_string(t) +
                                                            " swap " + std::to_string(i) + "," +
                                                            std::to_string(j));
                                }
                              }
                            }
                          }
                          return std::optional<VerifyFailure>();
                        }});
    });
  }
  // Repeated entries force the antisymmetric sums to vanish.
  for (int length = 2; length <= std::min(rmax + 1, 4); ++length) {
    for_each_degenerate(length, max_entry, [&](std::vector<int>& b) {
      checks.push_back({"degenerate a=(" + join(b) + ")", [b] {
                          for (int t = 0; t <= 4; ++t) {
                            if (shifted_power_sum(t, b) != 0) {
                              return require(false, "zero sum at t=" + std::to_string(t));
                            }
                            for (std::size_t i = 1; i < b.size(); ++i) {
                              if (b[i] != b[i - 1]) continue;
                              const std::pair<int, int> swap{static_cast<int>(i - 1),
                                                             static_cast<int>(i)};
                              if (!lemma_antisymmetry_check(t, b, swap)) {
                                return require(false, "antisymmetry t=" + std::to_string(t));
                              }
                            }
                          }
                          return std::optional<VerifyFailure>();
                        }});
    });
  }
}

// ---------------------------------------------------------------- divisors

void add_test_curves(std::vector<Check>& checks, int gmax, int rmax) {
  for (int g = 3; g <= gmax; ++g) {
    for (int r = 1; r <= rmax; ++r) {
      for (int d = 0; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        for (const auto& a : enumerate_sequences(p, -1)) {
          checks.push_back({"test-curve " + describe(p, a), [p, a] {
                              if (!test_curve_consistency(p, a)) {
                                return require(false, "test-curve relations");
                              }
                              const MuNu c = mu_nu(p, a);
                              return require(c.mu >= 0 && c.nu >= 0,
                                             "mu >= 0 and nu >= 0, got mu=" + to_string(c.mu) +
                                                 " nu=" + to_string(c.nu));
                            }});
        }
      }
    }
  }
}

void add_weierstrass(std::vector<Check>& checks, int gmax) {
  for (int g = 3; g <= gmax; ++g) {
    const BNInput p{g, g - 1, 2 * g - 2};
    checks.push_back({"weierstrass g=" + std::to_string(g), [p, g] {
                        const VanishingSeq a = ramification_sequence(g - 1, g);
                        const MuNu c = mu_nu(p, a);
                        const ExactInt weight = ExactInt(g) * g * g - g;
                        return compare(to_string(weight) + " 0 1", to_string(pointed_count(p, a)) +
                                                                     " " + to_string(c.mu) + " " +
                                                                     to_string(c.nu));
                      }});
  }
}

std::size_t count_degenerate_divisors(int gmax, int rmax) {
  std::size_t zeros = 0;
  for (int g = 3; g <= gmax; ++g) {
    for (int r = 1; r <= rmax; ++r) {
      for (int d = 0; d <= g + r; ++d) {
        for (const auto& a : enumerate_sequences({g, r, d}, -1)) {
          const MuNu c = mu_nu({g, r, d}, a);
          if (c.mu == 0 || c.nu == 0) ++zeros;
        }
      }
    }
  }
  return zeros;
}

// ----------------------------------------------------------- paper-numbers

void add_paper_numbers(std::vector<Check>& checks) {
  checks.push_back({"inv_factorial(-3)", [] { return compare("0", to_string(inv_factorial(-3))); }});
  checks.push_back({"rho(10,2,8)", [] { return compare("-2", std::to_string(rho({10, 2, 8}))); }});
  checks.push_back({"rho(10,1,5)", [] { return compare("-2", std::to_string(rho({10, 1, 5}))); }});

  struct Expected {
    BNInput p;
    int i;
    const char* value;
  };
  for (const Expected& e : {Expected{{10, 2, 8}, 2, "23184"}, Expected{{10, 2, 8}, 3, "48384"},
                            Expected{{10, 1, 5}, 2, "2016"}, Expected{{10, 1, 5}, 3, "12096"},
                            Expected{{10, 2, 8}, 8, "23184"}, Expected{{10, 2, 8}, 7, "48384"},
                            Expected{{10, 1, 5}, 8, "2016"}, Expected{{10, 1, 5}, 7, "12096"}}) {
    checks.push_back({"T_" + std::to_string(e.i) + " " + to_string(e.p), [e] {
                        return compare(e.value, to_string(surface_intersection(e.i, e.p).value));
                      }});
  }
  checks.push_back({"non-proportional (10,2,8) vs (10,1,5) on S_2, S_3", [] {
                      const auto report = proportionality_report({10, 2, 8}, {10, 1, 5}, {2, 3});
                      return require(!report.proportional, "not proportional");
                    }});
  // n vanishes at a = (0, 1, ..., r).
  for (int g = 2; g <= 12; ++g) {
    for (int r = 1; r <= 4; ++r) {
      for (int d = r; d <= g + r; ++d) {
        const BNInput p{g, r, d};
        if (rho(p) != -1) continue;
        checks.push_back({"identity sequence " + to_string(p), [p] {
                            return compare("0", to_string(pointed_count(p, VanishingSeq::identity(p.r))));
                          }});
      }
    }
  }
}

}  // namespace

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  const auto workers = std::min(static_cast<std::size_t>(std::max(1, jobs)), n);
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) fn(k);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<VerifyFailure> run_checks(const std::vector<Check>& checks, int jobs) {
  std::vector<std::optional<VerifyFailure>> results(checks.size());
  auto evaluate = [&](std::size_t k) {
    std::optional<VerifyFailure> outcome;
    try {
      outcome = checks[k].run();
    } catch (const std::exception& e) {
      outcome = VerifyFailure{"", "no exception", std::string("error: ") + e.what()};
    }
    if (outcome) outcome->input = checks[k].input;
    results[k] = std::move(outcome);
  };

  parallel_for(checks.size(), jobs, evaluate);

  std::vector<VerifyFailure> failures;
  for (auto& r : results) {
    if (r) failures.push_back(std::move(*r));
  }
  return failures;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"formulas", "identities", "divisors",
                                                 "paper-numbers"};
  return names;
}

VerifyReport run_suite(const std::string& name, const SuiteOptions& options) {
  // Pre-build before any worker threads start.
  (void)factorials();
  const auto start = std::chrono::steady_clock::now();

  VerifyReport report;
  report.suite = name;
  std::vector<Check> checks;
  auto param = [&report](const std::string& key, long long value) {
    report.parameters.emplace_back(key, std::to_string(value));
  };

  if (name == "formulas") {
    const int gmax = options.gmax.value_or(12);
    const int rmax = options.rmax.value_or(4);
    const int pencil_gmax = options.gmax.value_or(30);
    const int cusp_gmax = options.gmax.value_or(10);
    param("gmax", gmax);
    param("rmax", rmax);
    param("pencil_gmax", pencil_gmax);
    param("cusp_gmax", cusp_gmax);
    param("catalan_mmax", 15);
    add_three_way(checks, gmax, rmax);
    add_pencils(checks, pencil_gmax);
    add_plucker(checks, gmax);
    add_cusps(checks, cusp_gmax);
    add_catalan(checks, 15);
  } else if (name == "identities") {
    const int rmax = options.rmax.value_or(kHTableMaxR);
    param("rmax", rmax);
    param("samples", options.samples);
    report.parameters.emplace_back("seed", std::to_string(options.seed));
    param("factorial_det_max_length", 6);
    param("max_entry", 12);
    add_bracket_identities(checks, rmax, options.samples, options.seed);
    add_factorial_dets(checks, 6, 12);
    add_lemma_checks(checks, std::min(rmax, 4), 12);
  } else if (name == "divisors") {
    const int gmax = options.gmax.value_or(10);
    const int rmax = options.rmax.value_or(3);
    const int weierstrass_gmax = options.gmax ? std::min(*options.gmax, 8) : 8;
    param("gmax", gmax);
    param("rmax", rmax);
    param("weierstrass_gmax", weierstrass_gmax);
    add_test_curves(checks, gmax, rmax);
    add_weierstrass(checks, weierstrass_gmax);
    checks.push_back({"pointed_class (g=3,r=1,d=2) a=(0,1)", [] {
                        return compare("9*lambda - delta_irr - 3*delta_1 - 3*delta_2",
                                       pointed_class({3, 1, 2}, {0, 1}).to_string());
                      }});
    report.notes.push_back("instances with mu = 0 or nu = 0: " +
                           std::to_string(count_degenerate_divisors(gmax, rmax)));
  } else if (name == "paper-numbers") {
    add_paper_numbers(checks);
  } else {
    throw PreconditionError("unknown suite '" + name +
                            "' (expected formulas, identities, divisors, paper-numbers)");
  }

  report.cases = checks.size();
  report.failures = run_checks(checks, options.jobs);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace bncount
