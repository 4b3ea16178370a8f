#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <optional>

#include <CLI11.hpp>

#include "bncount/bn_core.hpp"
#include "bncount/castelnuovo.hpp"
#include "bncount/codim2.hpp"
#include "bncount/det_oracle.hpp"
#include "bncount/divisor.hpp"
#include "bncount/pointed.hpp"
#include "bncount/verify.hpp"
#include "format.hpp"

namespace bncount::cli {

namespace {

struct Options {
  std::string format = "plain";
  int jobs = 1;

  int g = 0;
  int r = 0;
  int d = 0;
  std::string sequence;
  std::string method = "compact";
  int component = 0;
  bool terms = false;

  std::string suite;
  std::optional<int> gmax;
  std::optional<int> rmax;
  std::uint64_t seed = kDefaultSeed;
  int samples = 100;

  std::string kind;
  std::string range;
};

struct Outcome {
  Document doc;
  int status = kExitOk;
};

BNInput problem(const Options& o) { return {o.g, o.r, o.d}; }

Fields problem_fields(const Options& o) {
  Fields f = {{"g", std::to_string(o.g)}, {"r", std::to_string(o.r)}, {"d", std::to_string(o.d)}};
  if (!o.sequence.empty()) f.emplace_back("a", o.sequence);
  return f;
}

VanishingSeq require_sequence(const Options& o, const char* command) {
  if (o.sequence.empty()) {
    throw PreconditionError(std::string(command) + " requires a vanishing sequence (-a)");
  }
  return parse_sequence(o.sequence);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto parse_int = [&text](std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw PreconditionError("range '" + text + "' must be N or LO:HI");
    }
    return value;
  };
  const std::string_view view(text);
  const auto colon = view.find(':');
  if (colon == std::string_view::npos) {
    const int n = parse_int(view);
    return {n, n};
  }
  const int lo = parse_int(view.substr(0, colon));
  const int hi = parse_int(view.substr(colon + 1));
  if (lo > hi) throw PreconditionError("range '" + text + "' is empty");
  return {lo, hi};
}

Outcome cmd_rho(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  const BNInput p = problem(o);
  if (o.sequence.empty()) {
    out.doc.results = {{"rho", std::to_string(rho(p))}};
  } else {
    out.doc.results = {{"rho_adjusted", std::to_string(rho_adjusted(p, parse_sequence(o.sequence)))}};
  }
  return out;
}

Outcome cmd_exists(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  const bool exists = eh_exists(problem(o), require_sequence(o, "exists"));
  out.doc.results = {{"exists", exists ? "true" : "false"}};
  return out;
}

Outcome cmd_castelnuovo(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  const BNInput p = problem(o);
  const ExactInt n = o.sequence.empty() ? castelnuovo_number(p)
                                        : adjusted_castelnuovo(p, parse_sequence(o.sequence));
  out.doc.results = {{"castelnuovo", to_string(n)}};
  return out;
}

Outcome cmd_pointed(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  out.doc.inputs.emplace_back("method", o.method);
  const BNInput p = problem(o);
  const VanishingSeq a = require_sequence(o, "pointed");
  if (o.method == "compact") {
    out.doc.results = {{"n", to_string(pointed_count(p, a))}};
  } else if (o.method == "det") {
    out.doc.results = {{"n", to_string(pointed_via_det(p, a))}};
  } else if (o.method == "sym") {
    out.doc.results = {{"n", to_string(pointed_via_sym(p, a))}};
  } else {
    const ExactInt compact = pointed_count(p, a);
    const ExactInt det = pointed_via_det(p, a);
    const ExactInt sym = pointed_via_sym(p, a);
    const bool agree = compact == det && det == sym;
    out.doc.results = {{"compact", to_string(compact)},
                       {"det", to_string(det)},
                       {"sym", to_string(sym)},
                       {"agree", agree ? "true" : "false"}};
    if (!agree) out.status = kExitFailure;
  }
  return out;
}

Outcome cmd_divisor_class(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  const BNInput p = problem(o);
  const VanishingSeq a = require_sequence(o, "divisor-class");
  const MuNu c = mu_nu(p, a);
  const DivisorClass cls = c.mu * bn_class(p.g) + c.nu * w_class(p.g);
  out.doc.results = {{"mu", to_string(c.mu)}, {"nu", to_string(c.nu)}, {"class", cls.to_string()}};
  Fields coefficients = {{"lambda", to_string(cls.lambda)},
                         {"psi", to_string(cls.psi)},
                         {"delta_irr", to_string(cls.delta_irr)}};
  for (int i = 1; i < p.g; ++i) {
    coefficients.emplace_back("delta_" + std::to_string(i), to_string(cls.delta(i)));
  }
  out.doc.groups.emplace_back("coefficients", std::move(coefficients));
  return out;
}

Outcome cmd_codim2(const Options& o) {
  Outcome out;
  out.doc.inputs = problem_fields(o);
  out.doc.inputs.emplace_back("i", std::to_string(o.component));
  const SurfaceIntersection t = surface_intersection(o.component, problem(o));
  out.doc.results = {{"T", to_string(t.value)}};
  if (o.terms) {
    Table table{"terms", {"a", "left", "right", "product"}, {}};
    for (const auto& term : t.terms) {
      table.rows.push_back({term.a.to_string(), to_string(term.left), to_string(term.right),
                            to_string(ExactInt(term.left * term.right))});
    }
    out.doc.tables.push_back(std::move(table));
  }
  return out;
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  SuiteOptions suite_options;
  suite_options.gmax = o.gmax;
  suite_options.rmax = o.rmax;
  suite_options.seed = o.seed;
  suite_options.samples = o.samples;
  suite_options.jobs = o.jobs;
  const VerifyReport report = run_suite(o.suite, suite_options);
  err << "elapsed_ms: " << report.elapsed.count() << '\n';

  Outcome out;
  out.doc.results = {{"suite", report.suite},
                     {"passed", report.passed() ? "true" : "false"},
                     {"cases", std::to_string(report.cases)},
                     {"failed", std::to_string(report.failures.size())}};
  out.doc.groups.emplace_back("parameters", report.parameters);
  Table failures{"failures", {"input", "expected", "actual"}, {}};
  for (const auto& f : report.failures) failures.rows.push_back({f.input, f.expected, f.actual});
  out.doc.tables.push_back(std::move(failures));
  if (!report.notes.empty()) {
    Table notes{"notes", {"note"}, {}};
    for (const auto& n : report.notes) notes.rows.push_back({n});
    out.doc.tables.push_back(std::move(notes));
  }
  out.status = report.passed() ? kExitOk : kExitFailure;
  return out;
}

Outcome cmd_table(const Options& o) {
  const auto [lo, hi] = parse_range(o.range);
  Outcome out;
  Table table{"rows", {}, {}};
  if (o.kind == "catalan") {
    if (lo < 1) throw PreconditionError("catalan range must start at m >= 1");
    table.header = {"m", "g", "r", "d", "castelnuovo", "catalan"};
    for (int m = lo; m <= hi; ++m) {
      const ExactInt catalan = binomial(2 * m, m) / (m + 1);
      table.rows.push_back({std::to_string(m), std::to_string(2 * m), "1", std::to_string(m + 1),
                            to_string(castelnuovo_number({2 * m, 1, m + 1})), to_string(catalan)});
    }
  } else if (o.kind == "castelnuovo") {
    if (lo < 0) throw PreconditionError("castelnuovo range must start at g >= 0");
    table.header = {"g", "r", "d", "castelnuovo"};
    for (int g = std::max(lo, 2); g <= hi; ++g) {
      for (int r = 1; r < g && r <= o.rmax.value_or(g); ++r) {
        if (g % (r + 1) != 0) continue;
        const BNInput p{g, r, g + r - g / (r + 1)};
        table.rows.push_back({std::to_string(p.g), std::to_string(p.r), std::to_string(p.d),
                              to_string(castelnuovo_number(p))});
      }
    }
  } else {
    if (lo < 2) throw PreconditionError("pointed range must start at g >= 2");
    table.header = {"g", "r", "d", "a", "n"};
    std::vector<std::pair<BNInput, VanishingSeq>> cases;
    for (int g = lo; g <= hi; ++g) {
      for (int r = 1; r <= o.rmax.value_or(4); ++r) {
        for (int d = r; d <= g + r; ++d) {
          for (auto& a : enumerate_sequences({g, r, d}, -1)) cases.emplace_back(BNInput{g, r, d}, a);
        }
      }
    }
    std::vector<std::string> counts(cases.size());
    parallel_for(cases.size(), o.jobs, [&](std::size_t k) {
      counts[k] = to_string(pointed_count(cases[k].first, cases[k].second));
    });
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& [p, a] = cases[k];
      table.rows.push_back({std::to_string(p.g), std::to_string(p.r), std::to_string(p.d),
                            a.to_string(), counts[k]});
    }
  }
  out.doc.tables.push_back(std::move(table));
  return out;
}

void add_problem(CLI::App* sub, Options& o, bool sequence_required) {
  sub->add_option("-g,--genus", o.g, "genus g")->required();
  sub->add_option("-r,--dim", o.r, "projective dimension r")->required();
  sub->add_option("-d,--degree", o.d, "degree d")->required();
  auto* seq = sub->add_option("-a,--seq", o.sequence, "vanishing sequence a0,a1,...");
  if (sequence_required) seq->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Brill-Noether counts on general curves", "bncount"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"plain", "tsv", "json"}));
  app.add_option("--jobs", o.jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  auto* rho_cmd = app.add_subcommand("rho", "Brill-Noether number, adjusted when -a is given");
  add_problem(rho_cmd, o, false);
  auto* exists_cmd = app.add_subcommand("exists", "existence at a general point");
  add_problem(exists_cmd, o, true);
  auto* castelnuovo_cmd = app.add_subcommand("castelnuovo", "Castelnuovo number, adjusted with -a");
  add_problem(castelnuovo_cmd, o, false);
  auto* pointed_cmd = app.add_subcommand("pointed", "pointed Castelnuovo number");
  add_problem(pointed_cmd, o, true);
  pointed_cmd->add_option("--method", o.method, "compact|det|sym|all")
      ->check(CLI::IsMember({"compact", "det", "sym", "all"}));
  auto* divisor_cmd = app.add_subcommand("divisor-class", "pointed Brill-Noether divisor class");
  add_problem(divisor_cmd, o, true);
  auto* codim2_cmd = app.add_subcommand("codim2", "intersection with the test surface S_i");
  add_problem(codim2_cmd, o, false);
  codim2_cmd->add_option("-i,--component", o.component, "genus of the first component")->required();
  codim2_cmd->add_flag("--terms", o.terms, "print the per-sequence breakdown");
  auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
  verify_cmd->add_option("--suite", o.suite, "formulas|identities|divisors|paper-numbers")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify_cmd->add_option("--gmax", o.gmax, "genus cap");
  verify_cmd->add_option("--rmax", o.rmax, "dimension cap");
  verify_cmd->add_option("--seed", o.seed, "seed for random sampling");
  verify_cmd->add_option("--samples", o.samples, "random points per r")->check(CLI::PositiveNumber);
  auto* table_cmd = app.add_subcommand("table", "TSV table of counts");
  table_cmd->add_option("--kind", o.kind, "catalan|castelnuovo|pointed")
      ->required()
      ->check(CLI::IsMember({"catalan", "castelnuovo", "pointed"}));
  table_cmd->add_option("--range", o.range, "N or LO:HI (m for catalan, g otherwise)")->required();
  table_cmd->add_option("--rmax", o.rmax, "dimension cap");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }

  try {
    Outcome outcome;
    if (rho_cmd->parsed()) outcome = cmd_rho(o);
    else if (exists_cmd->parsed()) outcome = cmd_exists(o);
    else if (castelnuovo_cmd->parsed()) outcome = cmd_castelnuovo(o);
    else if (pointed_cmd->parsed()) outcome = cmd_pointed(o);
    else if (divisor_cmd->parsed()) outcome = cmd_divisor_class(o);
    else if (codim2_cmd->parsed()) outcome = cmd_codim2(o);
    else if (verify_cmd->parsed()) outcome = cmd_verify(o, err);
    else outcome = cmd_table(o);

    // The table subcommand is TSV in every non-JSON format.
    Format format = parse_format(o.format).value_or(Format::plain);
    if (table_cmd->parsed() && format == Format::plain) format = Format::tsv;
    render(outcome.doc, format, out);
    return outcome.status;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace bncount::cli
