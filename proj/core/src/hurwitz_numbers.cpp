#include "hurwitz/hurwitz_numbers.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

CoveringSpec CoveringSpec::genus_zero(Partition kappa, Partition mu) {
  const int r = simple_count(kappa, mu);
  return {std::move(kappa), std::move(mu), r};
}

std::string_view to_string(ConversionMode mode) {
  return mode == ConversionMode::Printed ? "printed" : "calibrated";
}

ConversionMode parse_conversion_mode(std::string_view text) {
  if (text == "printed") return ConversionMode::Printed;
  if (text == "calibrated") return ConversionMode::Calibrated;
  throw ParseError("unknown conversion mode '" + std::string(text) + "' (printed|calibrated)");
}

int simple_count(const Partition& kappa, const Partition& mu) {
  if (kappa.size() != mu.size()) {
    throw DomainError("profiles have different sizes: " + std::to_string(kappa.size()) + " vs " +
                      std::to_string(mu.size()));
  }
  const int r = kappa.length() + mu.length() - 2;
  if (r < 0) throw DomainError("negative number of simple branch points");
  return r;
}

Integer aut_of_list(std::span<const Partition> partitions) {
  std::vector<Partition> sorted(partitions.begin(), partitions.end());
  std::sort(sorted.begin(), sorted.end());
  Integer r(1);
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    r *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

Rational degree_to_hurwitz(const Rational& deg, const CoveringSpec& spec, ConversionMode mode) {
  if (spec.r < 0) throw DomainError("negative number of simple branch points");
  const Rational r_fact(factorial(spec.r));
  if (mode == ConversionMode::Printed) {
    const Partition list[] = {spec.kappa, spec.mu};
    return Rational(aut_of_list(list)) * r_fact / Rational(factorial(spec.kappa.size())) * deg;
  }
  return r_fact * deg / Rational(aut_order(spec.kappa));
}

namespace {

Rational corollary(StratumKind kind, const Partition& kappa) {
  const int n = kappa.size();
  const int m = kappa.length();
  const Partition mu = stratum_profile(kind, n);
  const Partition list[] = {kappa, mu};
  return Rational(aut_of_list(list)) * Rational(factorial(n + m - 4)) / Rational(factorial(n)) *
         stratum_degree(kind, kappa);
}

}  // namespace

Rational corollary_caustic(const Partition& kappa) { return corollary(StratumKind::Caustic, kappa); }
Rational corollary_maxwell(const Partition& kappa) { return corollary(StratumKind::Maxwell, kappa); }

Rational elsv_reference(const Partition& mu, bool labeled) {
  if (mu.empty()) throw DomainError("elsv_reference needs a non-empty partition");
  const long n = mu.size();
  const long l = mu.length();
  Rational h = Rational(factorial(n + l - 2)) * ipow(Integer(n), l - 3) * prod_weight(mu);
  if (!labeled) h /= Rational(aut_order(mu));
  return h;
}

HurwitzResult closed_hurwitz(StratumKind family, const Partition& kappa, ConversionMode mode) {
  HurwitzResult out;
  out.family = family;
  out.mode = mode;
  out.degree = stratum_degree(family, kappa);
  out.spec = CoveringSpec::genus_zero(kappa, stratum_profile(family, kappa.size()));
  out.value = degree_to_hurwitz(out.degree, out.spec, mode);
  out.formula = std::string(to_string(family)) + "_degree converted with " +
                (mode == ConversionMode::Printed ? "|Aut(kappa,mu)| r!/n!" : "r!/|Aut kappa|");
  if (out.degree.sign() < 0) {
    out.warnings.push_back("negative stratum degree " + out.degree.str() +
                           ": formula evaluated outside its plausible range");
  }
  if (out.value.sign() < 0) {
    out.warnings.push_back("negative Hurwitz number " + out.value.str());
  }
  return out;
}

}  // namespace hurwitz
