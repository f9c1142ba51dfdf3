#pragma once

// Conversion between stratum degrees and genus-0 double Hurwitz numbers, the
// closed formulas for the caustic and Maxwell families, and the classical
// one-point genus-0 Hurwitz number used as an independent reference.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/strata.hpp"

namespace hurwitz {

/// Profile kappa over infinity, one degenerate finite profile mu, and r simple
/// branch points (genus 0: r = l(kappa) + l(mu) - 2).
struct CoveringSpec {
  Partition kappa;
  Partition mu;
  int r = 0;

  /// Fills r from Riemann-Hurwitz; DomainError if the sizes differ.
  static CoveringSpec genus_zero(Partition kappa, Partition mu);
};

/// Conversion convention.
///   printed:    h = |Aut(kappa, mu)| r! / n! * deg
///   calibrated: h = r! / |Aut kappa| * deg
enum class ConversionMode { Printed, Calibrated };

std::string_view to_string(ConversionMode mode);
/// "printed" or "calibrated"; ParseError otherwise.
ConversionMode parse_conversion_mode(std::string_view text);

/// l(kappa) + l(mu) - 2; DomainError on size mismatch or a negative count.
int simple_count(const Partition& kappa, const Partition& mu);

/// Product of factorials of the multiplicities of coinciding partitions.
Integer aut_of_list(std::span<const Partition> partitions);

Rational degree_to_hurwitz(const Rational& deg, const CoveringSpec& spec, ConversionMode mode);

/// Printed corollary |Aut(kappa, 1^{n-3}3)| (n+m-4)! / n! * caustic_degree(kappa).
Rational corollary_caustic(const Partition& kappa);
/// Printed corollary |Aut(kappa, 1^{n-4}2^2)| (n+m-4)! / n! * maxwell_degree(kappa).
Rational corollary_maxwell(const Partition& kappa);

/// Genus-0 one-point Hurwitz number
///   (n + l - 2)! n^{l-3} prod(mu_i^mu_i / mu_i!),
/// divided by |Aut mu| unless `labeled`. DomainError for the empty partition.
Rational elsv_reference(const Partition& mu, bool labeled);

/// Exact value plus the provenance needed to interpret it.
struct HurwitzResult {
  Rational value;
  Rational degree;
  StratumKind family = StratumKind::Caustic;
  ConversionMode mode = ConversionMode::Printed;
  CoveringSpec spec;
  std::string formula;
  std::vector<std::string> warnings;
};

/// Closed-form Hurwitz number for a stratum family in the chosen mode. Negative
/// values are returned as computed, with a warning attached.
HurwitzResult closed_hurwitz(StratumKind family, const Partition& kappa, ConversionMode mode);

}  // namespace hurwitz
