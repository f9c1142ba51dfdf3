#pragma once

// Degrees of the basic classes on genus-0 Hurwitz spaces: psi-class integrals
// over the moduli space of stable rational curves, the Segre-weighted
// pushforward integral, and the node class delta_{0,0}.

#include <span>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Integral of psi_1^{l_1} ... psi_m^{l_m} over the moduli space of stable
/// genus-0 curves with m marked points, i.e. the multinomial (m-3; l_1..l_m).
/// DomainError when m < 3, an exponent is negative, or sum(l) != m - 3.
Integer psi_integral(std::span<const int> exponents);

/// Same as psi_integral but returns 0 for dimension mismatch (sum(l) != m - 3),
/// for use inside series expansions. Still rejects m < 3 and negative exponents.
Integer psi_integral_or_zero(std::span<const int> exponents);

/// Direct evaluation of
///   prod(k_i^k_i / k_i!) * integral over M_{0,m+1} of psi_{m+1}^k / prod(1 - k_i psi_i)
/// by expanding the geometric series and summing psi integrals.
/// Returns 0 when k > m - 2; DomainError when m < 2 or k < 0.
Rational segre_degree(const Partition& kappa, int k);

/// deg p_* zeta^k = n^{m-2} prod(k_i^k_i / k_i!), independent of k.
Rational deg_pzeta(const Partition& kappa);

/// deg p_* psi^k = C(m-2, k) n^{m-2-k} prod(k_i^k_i / k_i!); zero when k > m - 2.
Rational deg_ppsi(const Partition& kappa, int k);

/// Closed form (n * sum 1/k_i - (m-2)(m-3)/2) n^{m-4} prod(k_i^k_i / k_i!).
Rational delta00_closed(const Partition& kappa);

/// Sum over ordered proper diagram splits mu (+) lambda = kappa of
///   1/2 * |lambda|^{l(lambda)-2} / |Aut lambda| * |mu|^{l(mu)-2} / |Aut mu|
///       * |Aut kappa| * prod(k_i^k_i / k_i!),
/// evaluated term by term. DomainError when m < 2.
Rational delta00_split_sum(const Partition& kappa);

}  // namespace hurwitz
