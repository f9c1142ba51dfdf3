#include "hurwitz_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <functional>
#include <thread>

#include <CLI11.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/strata.hpp"
#include "hurwitz_cli/report.hpp"
#include "hurwitz_cli/suites.hpp"

namespace hurwitz::cli {

namespace {

Json to_json(const Partition& p) { return Json(p.parts()); }

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string_view token(text.data() + pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || v < 0) {
      throw ParseError("malformed exponent list '" + text + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("malformed range '" + text + "' (expected a..b)");
    }
    return v;
  };
  if (dots == std::string::npos) {
    const int v = number(text);
    return {v, v};
  }
  return {number(std::string_view(text).substr(0, dots)), number(std::string_view(text).substr(dots + 2))};
}

struct Options {
  bool csv = false;
  bool json = false;
  std::string kappa;
  std::string exponents;
  std::string method;
  std::string type;
  std::string family;
  std::string mode = "printed";
  std::string classes;
  std::string suite;
  std::string range;
  int k = 0;
  int which = 0;
  int n = 0;
  int min_n = 0;
  int threads = 0;
  std::optional<int> max_m;
  std::uint64_t seed = 1;
  bool warn_negative = false;
  bool with_oracle = false;
};

void add_format_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "JSON output (default)");
  sub->add_flag("--csv", o.csv, "CSV output");
}

void cmd_psi_integral(Report& r, const Options& o) {
  const auto l = parse_exponents(o.exponents);
  r.inputs = {{"exponents", l}};
  r.result = {{"value", psi_integral(l).str()}};
  r.columns = {"exponents", "value"};
  r.rows = {{o.exponents, r.result["value"].get<std::string>()}};
}

void cmd_segre_deg(Report& r, const Options& o) {
  const Partition kappa = parse_partition(o.kappa);
  r.inputs = {{"kappa", to_json(kappa)}, {"k", o.k}};
  const Rational direct = segre_degree(kappa, o.k);
  const Rational closed = deg_ppsi(kappa, o.k);
  r.result = {{"value", direct.str()}, {"closed_form", closed.str()}, {"agree", direct == closed}};
  r.checks.push_back({"direct integral equals closed form", direct == closed, Json::object()});
}

void cmd_delta00(Report& r, const Options& o) {
  const Partition kappa = parse_partition(o.kappa);
  const std::string method = o.method.empty() ? "closed" : o.method;
  r.inputs = {{"kappa", to_json(kappa)}, {"method", method}};
  if (method == "closed") {
    r.result = {{"value", delta00_closed(kappa).str()}, {"method", method}};
  } else if (method == "split") {
    r.result = {{"value", delta00_split_sum(kappa).str()}, {"method", method}};
  } else if (method == "both") {
    const Rational closed = delta00_closed(kappa), split = delta00_split_sum(kappa);
    r.result = {{"closed", closed.str()}, {"split", split.str()}, {"agree", closed == split}};
    r.checks.push_back({"split sum equals closed form", closed == split, Json::object()});
  } else {
    throw ParseError("unknown delta00 method '" + method + "' (closed|split|both)");
  }
}

void cmd_stratum_deg(Report& r, const Options& o) {
  const StratumKind kind = parse_stratum_kind(o.type);
  const Partition kappa = parse_partition(o.kappa);
  r.inputs = {{"type", o.type}, {"kappa", to_json(kappa)}};
  const Rational value = stratum_degree(kind, kappa);
  r.result = {{"value", value.str()},
              {"type", o.type},
              {"profile", to_json(stratum_profile(kind, kappa.size()))}};
  if (o.warn_negative && value.sign() < 0) {
    r.warnings.push_back("negative degree " + value.str() + " is outside the plausible range of the formula");
  }
}

void cmd_kl_codim2(Report& r, const Options& o) {
  r.inputs = {{"which", o.which}, {"n", o.n}};
  r.result = {{"value", kl_codim2(o.which, o.n).str()}};
}

void cmd_hurwitz_closed(Report& r, const Options& o) {
  const StratumKind kind = parse_stratum_kind(o.family);
  const ConversionMode mode = parse_conversion_mode(o.mode);
  const Partition kappa = parse_partition(o.kappa);
  r.inputs = {{"family", o.family}, {"kappa", to_json(kappa)}, {"mode", o.mode}};
  const HurwitzResult h = closed_hurwitz(kind, kappa, mode);
  r.result = {{"value", h.value.str()},
              {"degree", h.degree.str()},
              {"mode", std::string(to_string(h.mode))},
              {"mu", to_json(h.spec.mu)},
              {"r", h.spec.r},
              {"formula", h.formula}};
  r.warnings = h.warnings;
}

void cmd_oracle(Report& r, const Options& o) {
  const ClassTuple t = parse_class_tuple(o.classes);
  const TransitiveMethod method = parse_transitive_method(o.method.empty() ? "sieve" : o.method);
  Json classes = Json::array();
  for (const auto& c : t.classes()) classes.push_back(to_json(c));
  r.inputs = {{"classes", classes}, {"n", t.n()}, {"method", std::string(to_string(method))}};
  const OracleResult res = hurwitz_oracle(t, method);
  r.result = {{"count_all", res.count_all.str()},
              {"count_transitive", res.count_transitive.str()},
              {"h", res.h.str()},
              {"genus", res.genus ? Json(*res.genus) : Json(nullptr)}};
  if (!res.genus) r.warnings.push_back("odd total ramification: no covering exists");
}

void cmd_compare(Report& r, const Options& o) {
  const StratumKind kind = parse_stratum_kind(o.family);
  const Partition kappa = parse_partition(o.kappa);
  r.inputs = {{"family", o.family}, {"kappa", to_json(kappa)}};
  const HurwitzResult printed = closed_hurwitz(kind, kappa, ConversionMode::Printed);
  const HurwitzResult calibrated = closed_hurwitz(kind, kappa, ConversionMode::Calibrated);
  const ClassTuple tuple = genus_zero_tuple(kappa, printed.spec.mu);
  const OracleResult oracle = hurwitz_oracle(tuple);
  const auto status = [&](const Rational& v) { return v == oracle.h ? "AGREE" : "DISCREPANT"; };
  r.result = {{"family", o.family},
              {"kappa", to_json(kappa)},
              {"mu", to_json(printed.spec.mu)},
              {"r", printed.spec.r},
              {"degree", printed.degree.str()},
              {"printed", printed.value.str()},
              {"calibrated", calibrated.value.str()},
              {"oracle", oracle.h.str()},
              {"oracle_classes", tuple.str()},
              {"status", status(printed.value)},
              {"calibrated_status", status(calibrated.value)}};
  r.warnings = printed.warnings;
  r.columns = {"family", "kappa", "degree", "printed", "calibrated", "oracle", "status", "calibrated_status"};
  r.rows = {{o.family, kappa.str(), printed.degree.str(), printed.value.str(), calibrated.value.str(),
             oracle.h.str(), status(printed.value), status(calibrated.value)}};
}

int cmd_verify(Report& r, const Options& o) {
  SuiteOptions so;
  so.max = o.max_m;
  so.seed = o.seed;
  r.inputs = {{"suite", o.suite}, {"max_m", o.max_m ? Json(*o.max_m) : Json(nullptr)}, {"seed", o.seed}};
  const SuiteResult s = run_suite(o.suite, so);
  r.inputs["max_m"] = s.max;
  r.result = {{"suite", s.suite},
              {"passed", s.passed},
              {"checks_run", s.checks_run},
              {"counterexample", s.counterexample}};
  r.checks = s.checks;
  r.columns = {"check", "pass"};
  for (const auto& c : s.checks) r.rows.push_back({c.name, c.pass ? "PASS" : "FAIL"});
  return s.passed ? kExitOk : kExitVerificationFailed;
}

// Runs fn(i) for i in [0, count) on a small pool; results are written by
// index so the output order never depends on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void cmd_sweep(Report& r, const Options& o) {
  const std::string family = o.family;
  int family_min = 0;
  if (family == "caustic") {
    family_min = 3;
  } else if (family == "maxwell") {
    family_min = 4;
  } else if (family == "delta00") {
    family_min = 2;
  } else {
    throw ParseError("unknown sweep family '" + family + "' (caustic|maxwell|delta00)");
  }
  const ConversionMode mode = parse_conversion_mode(o.mode);
  const int n_max = o.n;
  const int n_min = std::max(family_min, o.min_n);
  if (n_max < n_min) throw DomainError("--kappa-all-n must be at least " + std::to_string(n_min));
  if (n_max > 30) throw ResourceError("--kappa-all-n limited to 30");
  if (o.with_oracle && family != "delta00" && n_max > kDefaultSieveBound) {
    throw ResourceError("--oracle limited to n <= " + std::to_string(kDefaultSieveBound));
  }

  std::vector<Partition> items;
  for (int n = n_min; n <= n_max; ++n) {
    for (auto& p : enumerate_partitions(n)) {
      if (family == "delta00" && p.length() < 2) continue;
      items.push_back(std::move(p));
    }
  }

  const int threads = o.threads > 0 ? o.threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::vector<std::string>> rows(items.size());
  std::vector<char> agree(items.size(), 1);
  const bool oracle = o.with_oracle && family != "delta00";
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const Partition& kappa = items[i];
    if (family == "delta00") {
      const Rational closed = delta00_closed(kappa), split = delta00_split_sum(kappa);
      agree[i] = closed == split;
      rows[i] = {std::to_string(kappa.size()), kappa.str(), closed.str(), split.str(), agree[i] ? "AGREE" : "DISCREPANT"};
      return;
    }
    const StratumKind kind = parse_stratum_kind(family);
    const HurwitzResult h = closed_hurwitz(kind, kappa, mode);
    rows[i] = {std::to_string(kappa.size()), kappa.str(), h.degree.str(), h.value.str()};
    if (oracle) {
      const OracleResult res = hurwitz_oracle(genus_zero_tuple(kappa, h.spec.mu));
      agree[i] = res.h == h.value;
      rows[i].push_back(res.h.str());
      rows[i].push_back(agree[i] ? "AGREE" : "DISCREPANT");
    }
  });

  r.inputs = {{"family", family}, {"n_min", n_min}, {"n_max", n_max}, {"oracle", oracle}};
  if (family != "delta00") r.inputs["mode"] = o.mode;
  if (family == "delta00") {
    r.columns = {"n", "kappa", "closed", "split", "status"};
  } else {
    r.columns = {"n", "kappa", "degree", "hurwitz"};
    if (oracle) {
      r.columns.push_back("oracle");
      r.columns.push_back("status");
    }
  }
  Json entries = Json::array();
  long discrepancies = 0;
  long negatives = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    Json e = Json::object();
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
      if (r.columns[c] == "n") {
        e["n"] = items[i].size();
      } else if (r.columns[c] == "kappa") {
        e["kappa"] = to_json(items[i]);
      } else {
        e[r.columns[c]] = rows[i][c];
      }
    }
    if (!agree[i]) ++discrepancies;
    if (family != "delta00" && Rational::from_string(rows[i][2]).sign() < 0) ++negatives;
    entries.push_back(std::move(e));
  }
  r.rows = std::move(rows);
  r.result = {{"count", items.size()}, {"discrepancies", discrepancies}, {"negative_degrees", negatives},
              {"entries", std::move(entries)}};
  if (negatives > 0) r.warnings.push_back(std::to_string(negatives) + " negative stratum degrees");
}

void cmd_specialize(Report& r, const Options& o) {
  const auto [a, b] = parse_range(o.range);
  r.inputs = {{"range", o.range}, {"n_min", a}, {"n_max", b}};
  const SpecializationReport rep = specialization_report(a, b);
  Json checks = Json::array();
  r.columns = {"n", "check", "lhs_formula", "rhs_formula", "lhs", "rhs", "pass"};
  for (const auto& c : rep.checks) {
    checks.push_back({{"n", c.n},
                      {"check", c.name},
                      {"lhs_formula", c.lhs_formula},
                      {"rhs_formula", c.rhs_formula},
                      {"lhs", c.lhs.str()},
                      {"rhs", c.rhs.str()},
                      {"pass", c.pass}});
    r.rows.push_back({std::to_string(c.n), c.name, c.lhs_formula, c.rhs_formula, c.lhs.str(), c.rhs.str(),
                      c.pass ? "PASS" : "FAIL"});
  }
  r.result = {{"caustic_all_pass", rep.caustic_all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace

RunResult run(std::span<const std::string> args) {
  CLI::App app{"Exact evaluation and verification of genus-0 Hurwitz space degrees", "hurwitz"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");
  Options o;

  auto* psi = app.add_subcommand("psi-integral", "Genus-0 psi-class integral");
  psi->add_option("--exponents", o.exponents, "Comma list l_1,...,l_m")->required();

  auto* segre = app.add_subcommand("segre-deg", "Direct Segre-weighted pushforward degree");
  segre->add_option("--kappa", o.kappa, "Pole profile")->required();
  segre->add_option("--k", o.k, "Power of psi at the extra point")->default_val(0);

  auto* delta = app.add_subcommand("delta00", "Degree of the node class delta_{0,0}");
  delta->add_option("--kappa", o.kappa, "Pole profile")->required();
  delta->add_option("--method", o.method, "closed|split|both")->default_val("closed");

  auto* stratum = app.add_subcommand("stratum-deg", "Degree of a codimension-one stratum");
  stratum->add_option("--type", o.type, "caustic|maxwell")->required();
  stratum->add_option("--kappa", o.kappa, "Pole profile")->required();
  stratum->add_flag("--warn-negative", o.warn_negative, "Warn when the degree is negative");

  auto* kl = app.add_subcommand("kl-codim2", "Codimension-two stratum degrees");
  kl->add_option("--which", o.which, "1|2|3")->required();
  kl->add_option("--n", o.n, "Degree n")->required();

  auto* closed = app.add_subcommand("hurwitz-closed", "Closed-form double Hurwitz number");
  closed->add_option("--family", o.family, "caustic|maxwell")->required();
  closed->add_option("--kappa", o.kappa, "Pole profile")->required();
  closed->add_option("--mode", o.mode, "printed|calibrated")->default_val("printed");

  auto* oracle = app.add_subcommand("oracle", "Count permutation factorizations");
  oracle->add_option("--classes", o.classes, "Cycle types separated by ';'")->required();
  oracle->add_option("--method", o.method, "sieve|dfs")->default_val("sieve");

  auto* compare = app.add_subcommand("compare", "Closed forms against the factorization oracle");
  compare->add_option("--family", o.family, "caustic|maxwell")->required();
  compare->add_option("--kappa", o.kappa, "Pole profile")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite, "Suite name")->required();
  verify->add_option("--max-m", o.max_m, "Suite size bound");
  verify->add_option("--seed", o.seed, "Random seed")->default_val(1);

  auto* sweep = app.add_subcommand("sweep", "Evaluate a family over all partitions up to n");
  sweep->add_option("--family", o.family, "caustic|maxwell|delta00")->required();
  sweep->add_option("--kappa-all-n", o.n, "Largest n")->required();
  sweep->add_option("--min-n", o.min_n, "Smallest n")->default_val(0);
  sweep->add_option("--mode", o.mode, "printed|calibrated")->default_val("printed");
  sweep->add_flag("--oracle", o.with_oracle, "Also query the factorization oracle");
  sweep->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->default_val(0);

  auto* specialize = app.add_subcommand("specialize", "Codimension-two specialization report");
  specialize->add_option("--range", o.range, "a..b with a >= 4")->required();

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) add_format_flags(sub, o);

  Report report;
  report.argv.assign(args.begin(), args.end());
  const auto emit = [&](int code) {
    return RunResult{code, o.csv ? report.to_csv() : report.to_json_text()};
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    report.command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    report.error = ReportError{"usage", e.what()};
    return emit(kExitUsage);
  }
  if (o.csv && o.json) {
    report.error = ReportError{"usage", "--json and --csv are mutually exclusive"};
    o.csv = false;
    return emit(kExitUsage);
  }

  CLI::App* sub = app.get_subcommands().front();
  report.command = sub->get_name();
  const std::map<std::string, std::function<int(Report&, const Options&)>> handlers{
      {"psi-integral", [](Report& r, const Options& op) { cmd_psi_integral(r, op); return 0; }},
      {"segre-deg", [](Report& r, const Options& op) { cmd_segre_deg(r, op); return 0; }},
      {"delta00", [](Report& r, const Options& op) { cmd_delta00(r, op); return 0; }},
      {"stratum-deg", [](Report& r, const Options& op) { cmd_stratum_deg(r, op); return 0; }},
      {"kl-codim2", [](Report& r, const Options& op) { cmd_kl_codim2(r, op); return 0; }},
      {"hurwitz-closed", [](Report& r, const Options& op) { cmd_hurwitz_closed(r, op); return 0; }},
      {"oracle", [](Report& r, const Options& op) { cmd_oracle(r, op); return 0; }},
      {"compare", [](Report& r, const Options& op) { cmd_compare(r, op); return 0; }},
      {"verify", cmd_verify},
      {"sweep", [](Report& r, const Options& op) { cmd_sweep(r, op); return 0; }},
      {"specialize", [](Report& r, const Options& op) { cmd_specialize(r, op); return 0; }},
  };

  try {
    return emit(handlers.at(report.command)(report, o));
  } catch (const ParseError& e) {
    report.error = ReportError{"parse", e.what()};
    return emit(kExitUsage);
  } catch (const DomainError& e) {
    report.error = ReportError{"domain", e.what()};
    return emit(kExitDomain);
  } catch (const ResourceError& e) {
    report.error = ReportError{"resource", e.what()};
    return emit(kExitDomain);
  } catch (const InternalError& e) {
    report.error = ReportError{"internal", e.what()};
    return emit(kExitDomain);
  }
}

RunResult run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace hurwitz::cli
