#pragma once

// Ground-truth Hurwitz numbers from permutation factorizations: counts of
// tuples (g_1, ..., g_s) with g_i in prescribed conjugacy classes of S_n and
// g_1 ... g_s = 1, optionally restricted to tuples generating a transitive
// subgroup (connected coverings).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/exact.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

inline constexpr int kDefaultCharacterBound = 12;
inline constexpr int kDefaultSieveBound = 12;
inline constexpr int kDfsBound = 6;

/// Ordered list of cycle types, all partitions of the same n.
class ClassTuple {
 public:
  /// DomainError if the list is empty or the sizes disagree.
  explicit ClassTuple(std::vector<Partition> classes);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Partition>& classes() const noexcept { return classes_; }
  [[nodiscard]] std::size_t count() const noexcept { return classes_.size(); }
  /// Semicolon-separated partitions, e.g. "3,1;2,1,1;2,1,1".
  [[nodiscard]] std::string str() const;

  /// Riemann-Hurwitz: 2g - 2 = sum_i (n - l(C_i)) - 2n. nullopt when the
  /// right-hand side is odd (no tuple can multiply to the identity).
  [[nodiscard]] std::optional<int> genus() const;

 private:
  int n_ = 0;
  std::vector<Partition> classes_;
};

/// Parses "3,1;2,1,1;2,1,1"; ParseError or DomainError on bad input.
ClassTuple parse_class_tuple(std::string_view text);

/// Irreducible characters of S_n, rows indexed by irreps and columns by cycle
/// types, both in enumerate_partitions(n) order.
class CharacterTable {
 public:
  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Partition>& partitions() const noexcept { return partitions_; }
  [[nodiscard]] std::size_t index_of(const Partition& p) const;
  [[nodiscard]] const Integer& value(std::size_t irrep, std::size_t cls) const {
    return values_[irrep * partitions_.size() + cls];
  }
  [[nodiscard]] const Integer& value(const Partition& irrep, const Partition& cls) const {
    return value(index_of(irrep), index_of(cls));
  }
  [[nodiscard]] const Integer& dimension(std::size_t irrep) const { return value(irrep, identity_); }

 private:
  friend CharacterTable build_character_table(int n, int bound);
  int n_ = 0;
  std::size_t identity_ = 0;
  std::vector<Partition> partitions_;
  std::map<Partition, std::size_t> index_;
  std::vector<Integer> values_;
};

/// Single character value chi^lambda(mu) by the Murnaghan-Nakayama rule.
/// DomainError when sizes differ.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// Builds a fresh table; ResourceError when n exceeds `bound`.
CharacterTable build_character_table(int n, int bound);
CharacterTable build_character_table(int n);

/// Shared, lazily built table (thread-safe; the reference stays valid for the
/// life of the process). ResourceError above kDefaultCharacterBound.
const CharacterTable& character_table(int n);

enum class TransitiveMethod { Dfs, Sieve };
std::string_view to_string(TransitiveMethod method);
TransitiveMethod parse_transitive_method(std::string_view text);

/// Number of tuples with product 1, by the Frobenius character formula.
/// InternalError if the character sum fails to be an integer.
Integer product_count(const ClassTuple& t);

/// Number of such tuples acting transitively on {1..n}.
///   Dfs:   brute-force enumeration, n <= kDfsBound.
///   Sieve: subtract tuples whose orbit through 1 is a proper subset, recursing
///          on smaller n; n <= kDefaultSieveBound.
/// ResourceError when the bound for the chosen method is exceeded.
Integer transitive_count(const ClassTuple& t, TransitiveMethod method = TransitiveMethod::Sieve);

struct OracleResult {
  Integer count_all;
  Integer count_transitive;
  Rational h;                ///< count_transitive / n!
  std::optional<int> genus;  ///< nullopt when the parity makes the count vanish
};

/// Hurwitz number of connected coverings with the given monodromy classes.
/// h = 0 whenever the genus is negative or undefined.
OracleResult hurwitz_oracle(const ClassTuple& t, TransitiveMethod method = TransitiveMethod::Sieve);

/// Classes (kappa, mu, (2,1^{n-2}) x r) for a genus-0 covering with one
/// degenerate finite value, r = l(kappa) + l(mu) - 2.
ClassTuple genus_zero_tuple(const Partition& kappa, const Partition& mu);

/// Classes (mu, (2,1^{n-2}) x (n + l(mu) - 2)): simple genus-0 Hurwitz problem.
ClassTuple simple_tuple(const Partition& mu);

}  // namespace hurwitz
