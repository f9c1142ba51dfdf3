#include "hurwitz/strata.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/moduli.hpp"

namespace hurwitz {

std::string_view to_string(StratumKind kind) {
  return kind == StratumKind::Caustic ? "caustic" : "maxwell";
}

StratumKind parse_stratum_kind(std::string_view text) {
  if (text == "caustic") return StratumKind::Caustic;
  if (text == "maxwell") return StratumKind::Maxwell;
  throw ParseError("unknown stratum type '" + std::string(text) + "' (caustic|maxwell)");
}

Partition stratum_profile(StratumKind kind, int n) {
  if (kind == StratumKind::Caustic) {
    if (n < 3) throw DomainError("caustic profile 1^{n-3}3 needs n >= 3");
    return diagram_sum(Partition{3}, Partition::repeated(1, n - 3));
  }
  if (n < 4) throw DomainError("Maxwell profile 1^{n-4}2^2 needs n >= 4");
  return diagram_sum(Partition{2, 2}, Partition::repeated(1, n - 4));
}

namespace {

// n^{m-4} prod(k_i^k_i / k_i!)
Rational common_factor(const Partition& kappa) {
  return ipow(Integer(kappa.size()), kappa.length() - 4) * prod_weight(kappa);
}

}  // namespace

Rational caustic_degree(const Partition& kappa) {
  const long n = kappa.size();
  const long m = kappa.length();
  if (n < 3) throw DomainError("caustic degree needs n >= 3");
  const Rational inner = Rational(n * n) + Rational(n) * (Rational(3 * (m - 2)) - kappa.reciprocal_sum()) +
                         Rational(Integer(3 * (m - 2) * (m - 3)), Integer(2));
  return common_factor(kappa) * inner;
}

Rational maxwell_degree(const Partition& kappa) {
  const long n = kappa.size();
  const long m = kappa.length();
  if (n < 4) throw DomainError("Maxwell degree needs n >= 4");
  const Rational inner = Rational(-2 * n * n) +
                         Rational(n) * (Rational(m * m - 5 * (m - 2)) + kappa.reciprocal_sum()) -
                         Rational(2 * (m - 2) * (m - 3));
  return common_factor(kappa) * inner;
}

Rational stratum_degree(StratumKind kind, const Partition& kappa) {
  return kind == StratumKind::Caustic ? caustic_degree(kappa) : maxwell_degree(kappa);
}

Rational kl_codim2(int which, int n) {
  if (which < 1 || which > 3) throw DomainError("kl_codim2 selector must be 1, 2 or 3");
  if (n < 4) throw DomainError("kl_codim2 needs n >= 4");
  const long N = n;
  const Rational power = ipow(Integer(N), N - 6);
  switch (which) {
    case 1:
      return Rational(Integer(3), Integer(8)) * power * Rational(27 * N * N - 137 * N + 180);
    case 2:
      return Rational(3) * power * Rational((N - 3) * (3 * N * N - 15 * N + 20));
    default:
      return Rational(4) * power * Rational(2 * N * N * N - 16 * N * N + 43 * N - 40);
  }
}

UniversalCoefficients caustic_printed_preset() { return {-1, 3, 2, -1, 0}; }
UniversalCoefficients caustic_reconciled_preset() { return {1, 3, 2, -1, 0}; }
UniversalCoefficients maxwell_printed_preset() {
  return {-2, -5, -3, 1, Rational(Integer(1), Integer(2))};
}

Rational xi0sq_implied(const Partition& kappa) {
  const long m = kappa.length();
  return Rational(2 * m * m) * ipow(Integer(kappa.size()), m - 3) * prod_weight(kappa);
}

Rational universal_degree(const Partition& kappa, const UniversalCoefficients& c,
                          const Rational& xi0sq_degree) {
  return c.c_zeta * deg_pzeta(kappa) + c.c_psi1 * deg_ppsi(kappa, 1) + c.c_psi2 * deg_ppsi(kappa, 2) +
         c.c_delta * delta00_closed(kappa) + c.c_xi0sq * xi0sq_degree;
}

bool SpecializationReport::caustic_all_pass() const {
  for (const auto& c : checks) {
    if (c.name == "caustic" && !c.pass) return false;
  }
  return true;
}

SpecializationReport specialization_report(int n_min, int n_max) {
  if (n_min < 4) throw DomainError("specialization range must start at n >= 4");
  if (n_min > n_max) throw DomainError("empty specialization range");

  SpecializationReport report{n_min, n_max, {}};
  const auto add = [&](int n, std::string name, std::string lf, std::string rf, Rational lhs,
                       Rational rhs) {
    const bool pass = lhs == rhs;
    report.checks.push_back({n, std::move(name), std::move(lf), std::move(rf), std::move(lhs),
                             std::move(rhs), pass});
  };
  for (int n = n_min; n <= n_max; ++n) {
    const Partition caustic_kappa = stratum_profile(StratumKind::Caustic, n);
    const Partition maxwell_kappa = stratum_profile(StratumKind::Maxwell, n);
    add(n, "caustic", "caustic_degree(1^{n-3}3)", "2*kl_codim2(1,n)", caustic_degree(caustic_kappa),
        Rational(2) * kl_codim2(1, n));
    add(n, "maxwell", "maxwell_degree(1^{n-4}2^2)", "2*kl_codim2(3,n)",
        maxwell_degree(maxwell_kappa), Rational(2) * kl_codim2(3, n));
    add(n, "cross-caustic", "caustic_degree(1^{n-4}2^2)", "kl_codim2(2,n)",
        caustic_degree(maxwell_kappa), kl_codim2(2, n));
    add(n, "cross-maxwell", "maxwell_degree(1^{n-3}3)", "kl_codim2(2,n)",
        maxwell_degree(caustic_kappa), kl_codim2(2, n));
  }
  return report;
}

}  // namespace hurwitz
