// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/exact.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/identities.hpp"
#include "hurwitz/moduli.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/strata.hpp"
#include "hurwitz_cli/cli.hpp"

using namespace hurwitz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

void for_each_exponent_vector(int m, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> l(static_cast<std::size_t>(m), 0);
  const auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      l[static_cast<std::size_t>(i)] = left;
      fn(l);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      l[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, m - 3);
}

std::vector<ClassTuple> class_multisets(int n, int max_classes) {
  const auto parts = enumerate_partitions(n);
  std::vector<ClassTuple> out;
  std::vector<Partition> current;
  const auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!current.empty()) out.emplace_back(current);
    if (static_cast<int>(current.size()) == max_classes) return;
    for (std::size_t i = start; i < parts.size(); ++i) {
      current.push_back(parts[i]);
      self(self, i);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Outcome kazarian_partition_form() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 12; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      ++cases;
      o.require(delta00_split_sum(kappa) == delta00_closed(kappa), "kappa=" + kappa.str());
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " partitions";
  return o;
}

Outcome kazarian_symbolic() {
  Outcome o;
  for (int m = 2; m <= 7; ++m) o.require(kazarian_cleared_check(m), "cleared m=" + std::to_string(m));
  std::mt19937_64 rng(1);
  for (std::size_t m = 2; m <= 10; ++m) {
    for (int s = 0; s < 200; ++s) {
      const auto t = random_assignment(rng, m, true);
      o.require(kazarian_lhs(t) == kazarian_rhs(t), "t=" + t.str());
    }
  }
  if (o.pass) o.detail = "cleared m=2..7, 200 points for m=2..10";
  return o;
}

Outcome segre_closed_forms() {
  Outcome o;
  int cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      const int m = kappa.length();
      if (m < 2) continue;
      Rational weight(1);
      for (int k : kappa.parts()) weight *= ipow(Integer(k), k) / Rational(factorial(k));
      const Rational pzeta = ipow(Integer(n), m - 2) * weight;
      for (int k = 0; k <= m - 2; ++k) {
        ++cases;
        const Rational direct = segre_degree(kappa, k);
        const Rational ppsi = Rational(binomial(m - 2, k)) * ipow(Integer(n), m - 2 - k) * weight;
        const std::string where = "kappa=" + kappa.str() + " k=" + std::to_string(k);
        o.require(direct == ppsi, where);
        if (k == 0) o.require(direct == pzeta, where);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " (kappa, k) pairs";
  return o;
}

Outcome witten_integrals() {
  Outcome o;
  std::mt19937_64 rng(1);
  for (int m = 3; m <= 9; ++m) {
    Integer total(0);
    for_each_exponent_vector(m, [&](const std::vector<int>& l) {
      const std::vector<long> parts(l.begin(), l.end());
      const Integer value = psi_integral(l);
      o.require(value == multinomial(m - 3, parts), "l mismatch at m=" + std::to_string(m));
      auto shuffled = l;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      o.require(psi_integral(shuffled) == value, "symmetry at m=" + std::to_string(m));
      total += value;
    });
    o.require(Rational(total) == ipow(Integer(m), m - 3), "sum at m=" + std::to_string(m));
  }
  if (o.pass) o.detail = "m=3..9";
  return o;
}

Outcome caustic_kl() {
  Outcome o;
  for (int n = 4; n <= 40; ++n) {
    o.require(caustic_degree(stratum_profile(StratumKind::Caustic, n)) == Rational(2) * kl_codim2(1, n),
              "n=" + std::to_string(n));
  }
  o.require(kl_codim2(1, 4) == Rational(Integer(3), Integer(2)), "kl_codim2(1,4)");
  o.require(kl_codim2(3, 4) == Rational(1), "kl_codim2(3,4)");
  if (o.pass) o.detail = "n=4..40";
  return o;
}

Outcome oracle_validation() {
  Outcome o;
  long tuples = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : class_multisets(n, 5)) {
      ++tuples;
      o.require(transitive_count(t, TransitiveMethod::Dfs) == transitive_count(t, TransitiveMethod::Sieve),
                "classes=" + t.str());
    }
  }
  int mus = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      ++mus;
      o.require(hurwitz_oracle(simple_tuple(mu)).h == elsv_reference(mu, false), "mu=" + mu.str());
    }
  }
  if (o.pass) o.detail = std::to_string(tuples) + " class multisets, " + std::to_string(mus) + " profiles";
  return o;
}

Outcome caustic_vs_oracle() {
  Outcome o;
  const std::vector<std::pair<Partition, long>> cases{
      {Partition{1, 1, 1}, 1}, {Partition{1, 1, 1, 1}, 27}, {Partition{1, 1, 1, 1, 1}, 1620},
      {Partition{2, 1}, 1},    {Partition{3, 1}, 6},
  };
  for (const auto& [kappa, expected] : cases) {
    const auto h = closed_hurwitz(StratumKind::Caustic, kappa, ConversionMode::Calibrated);
    const Rational oracle = hurwitz_oracle(genus_zero_tuple(kappa, h.spec.mu)).h;
    o.require(h.value == Rational(expected) && oracle == Rational(expected),
              "kappa=" + kappa.str() + " calibrated " + h.value.str() + " oracle " + oracle.str());
  }
  if (o.pass) o.detail = "5 profiles";
  return o;
}

Outcome universal_reconciliation() {
  Outcome o;
  for (int n = 3; n <= 12; ++n) {
    for (const auto& kappa : enumerate_partitions(n)) {
      if (kappa.length() < 2) continue;
      o.require(universal_degree(kappa, caustic_reconciled_preset(), Rational(0)) == caustic_degree(kappa),
                "caustic kappa=" + kappa.str());
      if (n >= 4) {
        o.require(universal_degree(kappa, maxwell_printed_preset(), xi0sq_implied(kappa)) == maxwell_degree(kappa),
                  "maxwell kappa=" + kappa.str());
      }
    }
  }
  if (o.pass) o.detail = "n<=12";
  return o;
}

Outcome abel_suite() {
  Outcome o;
  for (int m = 0; m <= 6; ++m) o.require(abel_set_binomial_symbolic(m), "abel set m=" + std::to_string(m));
  for (int n = 1; n <= 12; ++n) o.require(abel_classical_check(n), "classical n=" + std::to_string(n));
  for (int m = 2; m <= 30; ++m) {
    const auto [lhs, rhs] = split_coefficient_identity(m);
    o.require(lhs == rhs, "coefficient m=" + std::to_string(m));
  }
  o.require(split_coefficient_identity(2).first == Rational(2), "m=2 spot value");
  o.require(split_coefficient_identity(3).first == Rational(6), "m=3 spot value");
  o.require(split_coefficient_identity(4).first == Rational(30), "m=4 spot value");
  if (o.pass) o.detail = "symbolic m<=6, classical n<=12, coefficients m<=30";
  return o;
}

Outcome locked_discrepancies() {
  Outcome o;
  const auto compare = [](const std::string& family, const std::string& kappa) {
    const std::vector<std::string> args{"compare", "--family", family, "--kappa", kappa};
    const auto r = cli::run(args);
    return std::pair{r.exit_code, nlohmann::ordered_json::parse(r.output)};
  };
  const auto [mx_exit, mx] = compare("maxwell", "1,1,1,1");
  o.require(mx_exit == 0, "compare maxwell exit code");
  o.require(mx["result"]["printed"] == "4" && mx["result"]["oracle"] == "12" &&
                mx["result"]["status"] == "DISCREPANT",
            "maxwell report changed: " + mx["result"].dump());
  const auto [ca_exit, ca] = compare("caustic", "2,1");
  o.require(ca_exit == 0, "compare caustic exit code");
  o.require(ca["result"]["printed"] == "1/6" && ca["result"]["oracle"] == "1" &&
                ca["result"]["status"] == "DISCREPANT",
            "caustic report changed: " + ca["result"].dump());
  o.require(corollary_caustic(Partition{2, 1}) == Rational(Integer(1), Integer(6)), "corollary (2,1)");
  if (o.pass) o.detail = "maxwell 1^4: 4 vs 12; caustic (2,1): 1/6 vs 1";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no limit
  Outcome (*fn)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "delta00 split sum equals closed form for 2 <= n <= 12", 60, kazarian_partition_form},
      {2, "cleared split-sum identity m=2..7 and random points m=2..10", 60, kazarian_symbolic},
      {3, "segre degree equals both closed forms for n <= 10", 0, segre_closed_forms},
      {4, "psi integrals: multinomial value, symmetry, sum", 0, witten_integrals},
      {5, "caustic degree equals twice kl_codim2(1, n) for 4 <= n <= 40", 0, caustic_kl},
      {6, "dfs equals sieve for n <= 5, oracle equals one-part formula for n <= 6", 300, oracle_validation},
      {7, "calibrated caustic conversion equals oracle", 120, caustic_vs_oracle},
      {8, "universal expression with presets reproduces both strata", 0, universal_reconciliation},
      {9, "abel set, classical abel and coefficient identities", 0, abel_suite},
      {10, "locked discrepancies reproduce", 0, locked_discrepancies},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail = "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    if (!o.pass) ++failures;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.detail << ", "
              << timing << ")\n";
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
