#include "hurwitz_cli/suites.hpp"

#include <functional>
#include <map>
#include <random>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/strata.hpp"

namespace hurwitz::cli {

namespace {

struct SuiteSpec {
  int default_max;
  int min_max;
  int max_max;
  std::function<void(SuiteResult&, const SuiteOptions&)> body;
};

// Records one check; the first failure becomes the counterexample.
void record(SuiteResult& r, std::string name, bool pass, Json detail, Json counterexample = nullptr) {
  ++r.checks_run;
  if (!pass && r.passed) {
    r.passed = false;
    r.counterexample = counterexample.is_null() ? detail : counterexample;
    r.counterexample["check"] = name;
  }
  r.checks.push_back({std::move(name), pass, std::move(detail)});
}

Json to_json(const PointAssignment& t) {
  Json a = Json::array();
  for (const auto& v : t.values) a.push_back(v.str());
  return a;
}

Json to_json(const Partition& p) { return Json(p.parts()); }

void kazarian_suite(SuiteResult& r, const SuiteOptions& o) {
  for (int m = 2; m <= std::min(r.max, 7); ++m) {
    const auto forms = kazarian_cleared_forms(m);
    const bool ok = forms.lhs == forms.rhs;
    record(r, "symbolic m=" + std::to_string(m), ok,
           {{"m", m}, {"terms", forms.lhs.term_count()}},
           {{"m", m}, {"lhs", forms.lhs.str()}, {"rhs", forms.rhs.str()}});
  }
  std::mt19937_64 rng(o.seed);
  for (int m = 2; m <= r.max; ++m) {
    bool ok = true;
    Json bad = nullptr;
    for (int s = 0; s < o.samples && ok; ++s) {
      const auto t = random_assignment(rng, static_cast<std::size_t>(m), m < 4);
      const Rational lhs = kazarian_lhs(t), rhs = kazarian_rhs(t);
      if (lhs != rhs) {
        ok = false;
        bad = {{"m", m}, {"t", to_json(t)}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
      }
    }
    record(r, "evaluation m=" + std::to_string(m), ok, {{"m", m}, {"points", o.samples}}, bad);
  }
}

// A random assignment whose entries and total are non-zero and whose total
// equals `total`.
PointAssignment with_total(std::mt19937_64& rng, std::size_t m, const Rational& total) {
  while (true) {
    auto t = random_assignment(rng, m - 1, false);
    const Rational last = total - t.total();
    if (last.is_zero()) continue;
    t.values.push_back(last);
    return t;
  }
}

void l42_suite(SuiteResult& r, const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  for (int m = 2; m <= r.max; ++m) {
    const auto size = static_cast<std::size_t>(m);
    bool ok = true;
    Json bad = nullptr;
    for (int s = 0; s < o.samples && ok; ++s) {
      const auto a = random_assignment(rng, size, true);
      const auto b = with_total(rng, size, a.total());
      const std::pair<PointAssignment, PointAssignment> pair[] = {{a, b}};
      if (!l42_sum_dependence_check(pair)) {
        ok = false;
        bad = {{"m", m}, {"a", to_json(a)}, {"b", to_json(b)},
               {"diff_a", l42_difference(a).str()}, {"diff_b", l42_difference(b).str()}};
      }
    }
    record(r, "sum dependence m=" + std::to_string(m), ok, {{"m", m}, {"pairs", o.samples}}, bad);

    // Shifting any single coordinate by h changes the difference by the same
    // amount, whichever coordinate is shifted.
    ok = true;
    bad = nullptr;
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (int s = 0; s < o.samples && ok; ++s) {
      const auto t = random_assignment(rng, size, true);
      const Rational h = random_nonzero_rational(rng);
      const auto i = static_cast<std::size_t>(pick(rng));
      auto j = static_cast<std::size_t>(pick(rng));
      if (i == j) j = (j + 1) % size;
      auto ti = t, tj = t;
      ti.values[i] += h;
      tj.values[j] += h;
      if (ti.values[i].is_zero() || tj.values[j].is_zero() || (m < 3 && ti.total().is_zero())) continue;
      const Rational di = l42_difference(ti), dj = l42_difference(tj);
      if (di != dj) {
        ok = false;
        bad = {{"m", m}, {"t", to_json(t)}, {"h", h.str()}, {"i", i}, {"j", j},
               {"shift_i", di.str()}, {"shift_j", dj.str()}};
      }
    }
    record(r, "difference annihilation m=" + std::to_string(m), ok, {{"m", m}, {"points", o.samples}}, bad);
  }
}

void abel_set_suite(SuiteResult& r, const SuiteOptions& o) {
  for (int m = 0; m <= std::min(r.max, 6); ++m) {
    record(r, "symbolic m=" + std::to_string(m), abel_set_binomial_symbolic(m), {{"m", m}});
  }
  std::mt19937_64 rng(o.seed);
  for (int m = 0; m <= r.max; ++m) {
    bool ok = true;
    Json bad = nullptr;
    for (int s = 0; s < o.samples && ok; ++s) {
      const auto t = random_assignment(rng, static_cast<std::size_t>(m), false);
      const Rational x = random_nonzero_rational(rng);
      Rational y = random_nonzero_rational(rng);
      while ((x + y).is_zero()) y = random_nonzero_rational(rng);
      const auto [lhs, rhs] = abel_set_binomial_sides(t, x, y);
      if (lhs != rhs) {
        ok = false;
        bad = {{"m", m}, {"t", to_json(t)}, {"x", x.str()}, {"y", y.str()}, {"lhs", lhs.str()},
               {"rhs", rhs.str()}};
      }
    }
    record(r, "evaluation m=" + std::to_string(m), ok, {{"m", m}, {"points", o.samples}}, bad);
  }
}

void abel_classical_suite(SuiteResult& r, const SuiteOptions&) {
  for (int n = 1; n <= r.max; ++n) record(r, "n=" + std::to_string(n), abel_classical_check(n), {{"n", n}});
}

void coeff_suite(SuiteResult& r, const SuiteOptions&) {
  for (int m = 2; m <= r.max; ++m) {
    const auto [lhs, rhs] = split_coefficient_identity(m);
    record(r, "m=" + std::to_string(m), lhs == rhs, {{"m", m}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
}

void delta00_suite(SuiteResult& r, const SuiteOptions&) {
  for (int n = 2; n <= r.max; ++n) {
    bool ok = true;
    Json bad = nullptr;
    int cases = 0;
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      ++cases;
      const Rational split = delta00_split_sum(kappa), closed = delta00_closed(kappa);
      if (split != closed && ok) {
        ok = false;
        bad = {{"kappa", to_json(kappa)}, {"split", split.str()}, {"closed", closed.str()}};
      }
    }
    record(r, "n=" + std::to_string(n), ok, {{"n", n}, {"partitions", cases}}, bad);
  }
}

void segre_suite(SuiteResult& r, const SuiteOptions&) {
  for (int n = 2; n <= r.max; ++n) {
    bool ok = true;
    Json bad = nullptr;
    for (const auto& kappa : enumerate_partitions(n)) {
      const int m = kappa.length();
      if (m < 2) continue;
      for (int k = 0; k <= m - 2 && ok; ++k) {
        const Rational direct = segre_degree(kappa, k);
        const Rational closed = deg_ppsi(kappa, k);
        const bool zeta_ok = k != 0 || direct == deg_pzeta(kappa);
        if (direct != closed || !zeta_ok) {
          ok = false;
          bad = {{"kappa", to_json(kappa)}, {"k", k}, {"direct", direct.str()}, {"closed", closed.str()}};
        }
      }
    }
    record(r, "n=" + std::to_string(n), ok, {{"n", n}}, bad);
  }
}

void witten_suite(SuiteResult& r, const SuiteOptions&) {
  for (int m = 3; m <= r.max; ++m) {
    const int dim = m - 3;
    Integer total(0);
    bool ok = true;
    Json bad = nullptr;
    std::vector<int> l(static_cast<std::size_t>(m), 0);
    std::function<void(int, int)> rec = [&](int slot, int left) {
      if (slot == m - 1) {
        l[static_cast<std::size_t>(slot)] = left;
        const Integer v = psi_integral(l);
        total += v;
        std::vector<int> rev(l.rbegin(), l.rend());
        if (v != multinomial(dim, l) || v != psi_integral(rev)) {
          if (ok) bad = {{"exponents", l}, {"value", v.str()}};
          ok = false;
        }
        return;
      }
      for (int e = 0; e <= left; ++e) {
        l[static_cast<std::size_t>(slot)] = e;
        rec(slot + 1, left - e);
      }
    };
    rec(0, dim);
    const bool sum_ok = total == ipow(Integer(m), dim).to_integer();
    record(r, "m=" + std::to_string(m), ok && sum_ok, {{"m", m}, {"sum", total.str()}}, bad);
  }
}

void caustic_kl_suite(SuiteResult& r, const SuiteOptions&) {
  const auto report = specialization_report(4, r.max);
  for (const auto& c : report.checks) {
    if (c.name != "caustic") continue;
    record(r, "n=" + std::to_string(c.n), c.pass, {{"n", c.n}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}});
  }
}

void universal_suite(SuiteResult& r, const SuiteOptions&) {
  for (int n = 3; n <= r.max; ++n) {
    bool ok = true;
    Json bad = nullptr;
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      const Rational c = universal_degree(kappa, caustic_reconciled_preset(), Rational(0));
      if (c != caustic_degree(kappa)) {
        if (ok) bad = {{"kappa", to_json(kappa)}, {"family", "caustic"}, {"universal", c.str()}};
        ok = false;
      }
      if (n >= 4) {
        const Rational mx = universal_degree(kappa, maxwell_printed_preset(), xi0sq_implied(kappa));
        if (mx != maxwell_degree(kappa)) {
          if (ok) bad = {{"kappa", to_json(kappa)}, {"family", "maxwell"}, {"universal", mx.str()}};
          ok = false;
        }
      }
    }
    record(r, "n=" + std::to_string(n), ok, {{"n", n}}, bad);
  }
}

void oracle_elsv_suite(SuiteResult& r, const SuiteOptions&) {
  for (int n = 1; n <= r.max; ++n) {
    bool ok = true;
    Json bad = nullptr;
    for (const auto& mu : enumerate_partitions(n)) {
      const auto oracle = hurwitz_oracle(simple_tuple(mu));
      const Rational elsv = elsv_reference(mu, false);
      if (oracle.h != elsv) {
        if (ok) bad = {{"mu", to_json(mu)}, {"oracle", oracle.h.str()}, {"elsv", elsv.str()}};
        ok = false;
      }
    }
    record(r, "n=" + std::to_string(n), ok, {{"n", n}}, bad);
  }
}

const std::map<std::string, SuiteSpec, std::less<>>& registry() {
  static const std::map<std::string, SuiteSpec, std::less<>> suites{
      {"kazarian", {7, 2, 14, kazarian_suite}},
      {"l42", {8, 2, 12, l42_suite}},
      {"abel-set", {6, 0, 12, abel_set_suite}},
      {"abel-classical", {12, 1, 12, abel_classical_suite}},
      {"coeff", {30, 2, 200, coeff_suite}},
      {"delta00", {12, 2, 14, delta00_suite}},
      {"segre", {10, 2, 12, segre_suite}},
      {"witten", {9, 3, 11, witten_suite}},
      {"caustic-kl", {40, 4, 200, caustic_kl_suite}},
      {"universal", {12, 3, 14, universal_suite}},
      {"oracle-elsv", {6, 1, 7, oracle_elsv_suite}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"kazarian", "l42",     "abel-set",   "abel-classical",
                                              "coeff",    "delta00", "segre",    "witten",
                                              "caustic-kl", "universal", "oracle-elsv"};
  return names;
}

SuiteResult run_suite(std::string_view suite, const SuiteOptions& options) {
  const auto& reg = registry();
  auto it = reg.find(suite);
  if (it == reg.end()) throw ParseError("unknown suite '" + std::string(suite) + "'");
  const SuiteSpec& spec = it->second;
  const int max = options.max.value_or(spec.default_max);
  if (max < spec.min_max || max > spec.max_max) {
    throw ResourceError("--max-m for suite " + std::string(suite) + " must be in [" +
                        std::to_string(spec.min_max) + ", " + std::to_string(spec.max_max) + "]");
  }
  SuiteResult r;
  r.suite = std::string(suite);
  r.max = max;
  r.counterexample = nullptr;
  spec.body(r, options);
  return r;
}

}  // namespace hurwitz::cli
