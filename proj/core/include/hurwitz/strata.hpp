#pragma once

// Degrees of the codimension-one discriminant strata of genus-0 Hurwitz spaces
// (caustic and Maxwell), the three codimension-two degrees of Kazarian and
// Lando, and a termwise evaluator for the universal linear expressions in the
// basic classes.

#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Caustic: one finite critical value with profile 1^{n-3} 3^1.
/// Maxwell: one finite critical value with profile 1^{n-4} 2^2.
enum class StratumKind { Caustic, Maxwell };

std::string_view to_string(StratumKind kind);
/// "caustic" or "maxwell"; ParseError otherwise.
StratumKind parse_stratum_kind(std::string_view text);

/// Ramification profile over the degenerate finite critical value.
Partition stratum_profile(StratumKind kind, int n);

/// Degree of the caustic stratum over pole profile kappa; DomainError for n < 3.
Rational caustic_degree(const Partition& kappa);

/// Degree of the Maxwell stratum exactly as the closed formula reads, including
/// where it goes negative; DomainError for n < 4.
Rational maxwell_degree(const Partition& kappa);

Rational stratum_degree(StratumKind kind, const Partition& kappa);

/// The three codimension-two stratum degrees over polynomial-like families:
///   1: 3/8 n^{n-6} (27n^2 - 137n + 180)          (two caustic values)
///   2: 3 n^{n-6} (n-3)(3n^2 - 15n + 20)           (caustic and Maxwell)
///   3: 4 n^{n-6} (2n^3 - 16n^2 + 43n - 40)        (two Maxwell values)
/// DomainError for a selector outside 1..3 or n < 4.
Rational kl_codim2(int which, int n);

/// Coefficients of a linear combination of the basic classes
/// p_*zeta, p_*psi, p_*psi^2, delta_{0,0} and xi_0^2.
struct UniversalCoefficients {
  Rational c_zeta;
  Rational c_psi1;
  Rational c_psi2;
  Rational c_delta;
  Rational c_xi0sq;
};

/// Caustic expression with the signs as printed: -zeta + 3 psi + 2 psi^2 - delta.
UniversalCoefficients caustic_printed_preset();
/// Caustic expression with the zeta sign that reproduces caustic_degree:
/// +zeta + 3 psi + 2 psi^2 - delta.
UniversalCoefficients caustic_reconciled_preset();
/// Maxwell expression as printed: xi0^2/2 - 2 zeta - 5 psi - 3 psi^2 + delta.
UniversalCoefficients maxwell_printed_preset();

/// Assumed degree of xi_0^2: 2 m^2 n^{m-3} prod(k_i^k_i / k_i!). This value is
/// back-solved so that the printed Maxwell expression matches maxwell_degree;
/// it is not derived independently.
Rational xi0sq_implied(const Partition& kappa);

/// c_zeta deg p_*zeta + c_psi1 deg p_*psi + c_psi2 deg p_*psi^2
///   + c_delta deg delta_{0,0} + c_xi0sq * xi0sq_degree.
Rational universal_degree(const Partition& kappa, const UniversalCoefficients& coeffs,
                          const Rational& xi0sq_degree);

/// One row of the specialization report.
struct SpecializationCheck {
  int n = 0;
  std::string name;  // "caustic", "maxwell", "cross-caustic", "cross-maxwell"
  std::string lhs_formula;
  std::string rhs_formula;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

struct SpecializationReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<SpecializationCheck> checks;

  /// True when every "caustic" row passes (the other rows are informational).
  [[nodiscard]] bool caustic_all_pass() const;
};

/// Substitutes the codimension-one formulas at the pole profiles of the other
/// degenerate value and compares with kl_codim2, for n in [n_min, n_max]:
///   caustic:       caustic_degree(1^{n-3}3)   vs 2 * kl_codim2(1, n)
///   maxwell:       maxwell_degree(1^{n-4}2^2) vs 2 * kl_codim2(3, n)
///   cross-caustic: caustic_degree(1^{n-4}2^2) vs kl_codim2(2, n)
///   cross-maxwell: maxwell_degree(1^{n-3}3)   vs kl_codim2(2, n)
/// Only the caustic row is expected to hold. DomainError for n_min < 4 or
/// n_min > n_max.
SpecializationReport specialization_report(int n_min, int n_max);

}  // namespace hurwitz
