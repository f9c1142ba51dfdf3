#pragma once

// Integer partitions viewed as Young diagrams: ramification profiles, pole
// orders, and the diagram algebra (sub-diagrams and the union sum) used by the
// split-sum formulas.

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hurwitz/exact.hpp"

namespace hurwitz {

class Partition {
 public:
  /// The empty diagram (size 0, length 0).
  Partition() = default;
  /// Parts are sorted into non-increasing order; DomainError on a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// `count` copies of `value`.
  static Partition repeated(int value, int count);

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  /// Sum of the parts (the n of "partition of n").
  [[nodiscard]] int size() const noexcept { return size_; }
  /// Number of parts.
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }

  /// (value, multiplicity) pairs, values in decreasing order.
  [[nodiscard]] std::vector<std::pair<int, int>> multiplicities() const;
  /// Sum of 1/k over the parts.
  [[nodiscard]] Rational reciprocal_sum() const;

  /// Comma list, e.g. "3,1,1"; the empty diagram prints as "".
  [[nodiscard]] std::string str() const;
  /// Exponent form, e.g. "1^2 3^1".
  [[nodiscard]] std::string exponent_str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Ordered pair of sub-diagrams whose union is a parent diagram, together with
/// the number of labeled set splits realizing it.
struct SplitPair {
  Partition left;
  Partition right;
  Integer multiplicity;
};

/// Accepts "3,1,1" or exponent form "1^2 3^1" (also "1^2,3"). Throws ParseError
/// on malformed text and on zero or negative parts.
Partition parse_partition(std::string_view text);

/// Union of the part multisets.
Partition diagram_sum(const Partition& a, const Partition& b);

/// True if `sub` is obtained from `whole` by deleting rows.
bool is_subdiagram(const Partition& sub, const Partition& whole);

/// Product over distinct parts of (multiplicity)!.
Integer aut_order(const Partition& p);

/// prod_i k_i^{k_i} / k_i!.
Rational prod_weight(const Partition& p);

/// n! / z(p): the number of permutations of cycle type p in S_n.
Integer class_size(const Partition& p);

/// z(p) = prod parts * prod multiplicities!, the centralizer order.
Integer centralizer_order(const Partition& p);

/// |Aut(tau)| / (|Aut(mu)| |Aut(lam)|); DomainError unless mu (+) lam = tau.
Integer split_multiplicity(const Partition& tau, const Partition& mu, const Partition& lam);

/// Every ordered pair (left, right) with left (+) right = p, one entry per
/// distinct pair of diagrams. With `proper`, both sides are non-empty.
std::vector<SplitPair> ordered_splits(const Partition& p, bool proper);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., 1^n.
/// DomainError for n < 1.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace hurwitz
