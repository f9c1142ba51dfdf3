#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

ClassTuple::ClassTuple(std::vector<Partition> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw DomainError("class tuple must contain at least one class");
  n_ = classes_.front().size();
  if (n_ < 1) throw DomainError("class tuple over an empty set");
  for (const auto& c : classes_) {
    if (c.size() != n_) {
      throw DomainError("class (" + c.str() + ") is not a partition of " + std::to_string(n_));
    }
  }
}

std::string ClassTuple::str() const {
  std::string out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += ';';
    out += classes_[i].str();
  }
  return out;
}

std::optional<int> ClassTuple::genus() const {
  int ramification = 0;
  for (const auto& c : classes_) ramification += n_ - c.length();
  const int twice = ramification - 2 * n_ + 2;
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

ClassTuple parse_class_tuple(std::string_view text) {
  std::vector<Partition> classes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto semi = text.find(';', pos);
    if (semi == std::string_view::npos) semi = text.size();
    classes.push_back(parse_partition(text.substr(pos, semi - pos)));
    pos = semi + 1;
  }
  return ClassTuple(std::move(classes));
}

std::string_view to_string(TransitiveMethod method) {
  return method == TransitiveMethod::Dfs ? "dfs" : "sieve";
}

TransitiveMethod parse_transitive_method(std::string_view text) {
  if (text == "dfs") return TransitiveMethod::Dfs;
  if (text == "sieve") return TransitiveMethod::Sieve;
  throw ParseError("unknown method '" + std::string(text) + "' (dfs|sieve)");
}

ClassTuple genus_zero_tuple(const Partition& kappa, const Partition& mu) {
  if (kappa.size() != mu.size()) throw DomainError("profiles have different sizes");
  const int n = kappa.size();
  const int r = kappa.length() + mu.length() - 2;
  std::vector<Partition> classes{kappa, mu};
  if (r > 0) {
    if (n < 2) throw DomainError("simple branch points need n >= 2");
    const Partition transposition = diagram_sum(Partition{2}, Partition::repeated(1, n - 2));
    classes.insert(classes.end(), static_cast<std::size_t>(r), transposition);
  }
  return ClassTuple(std::move(classes));
}

ClassTuple simple_tuple(const Partition& mu) {
  const int n = mu.size();
  const int r = n + mu.length() - 2;
  std::vector<Partition> classes{mu};
  if (r > 0) {
    if (n < 2) throw DomainError("simple branch points need n >= 2");
    classes.insert(classes.end(), static_cast<std::size_t>(r),
                   diagram_sum(Partition{2}, Partition::repeated(1, n - 2)));
  }
  return ClassTuple(std::move(classes));
}

namespace {

using ClassKey = std::pair<int, std::vector<Partition>>;

bool odd_parity(int n, const std::vector<Partition>& classes) {
  int total = 0;
  for (const auto& c : classes) total += n - c.length();
  return total % 2 != 0;
}

Integer frobenius(int n, const std::vector<Partition>& classes) {
  if (odd_parity(n, classes)) return Integer(0);
  const CharacterTable& table = character_table(n);
  std::vector<std::size_t> cols;
  cols.reserve(classes.size());
  for (const auto& c : classes) cols.push_back(table.index_of(c));

  const long s = static_cast<long>(classes.size());
  Rational sum;
  for (std::size_t irrep = 0; irrep < table.partitions().size(); ++irrep) {
    Integer prod(1);
    for (auto c : cols) {
      prod *= table.value(irrep, c);
      if (prod.is_zero()) break;
    }
    if (prod.is_zero()) continue;
    sum += Rational(prod) * ipow(table.dimension(irrep), 2 - s);
  }
  Integer prefactor(1);
  for (const auto& c : classes) prefactor *= class_size(c);
  const Rational count = sum * Rational(prefactor, factorial(n));
  if (!count.is_integer()) {
    throw InternalError("Frobenius count for n = " + std::to_string(n) + " is not integral: " +
                        count.str());
  }
  return count.to_integer();
}

// Memoized counts keyed by (n, sorted classes); both counts are symmetric in
// the order of the classes.
class Counter {
 public:
  Integer product(int n, std::vector<Partition> classes) {
    std::sort(classes.begin(), classes.end());
    ClassKey key{n, std::move(classes)};
    if (auto it = product_memo_.find(key); it != product_memo_.end()) return it->second;
    Integer v = frobenius(n, key.second);
    product_memo_.emplace(std::move(key), v);
    return v;
  }

  Integer transitive(int n, std::vector<Partition> classes) {
    std::sort(classes.begin(), classes.end());
    ClassKey key{n, std::move(classes)};
    if (auto it = transitive_memo_.find(key); it != transitive_memo_.end()) return it->second;
    Integer v = sieve(n, key.second);
    transitive_memo_.emplace(std::move(key), v);
    return v;
  }

 private:
  struct Group {
    Partition cls;
    int count;
    std::vector<SplitPair> options;  // splits with |left| = k
  };

  // Tuples whose orbit through point 1 has size k < n are counted by choosing
  // the other k - 1 orbit points, a cycle-type split of every class, a
  // transitive tuple on the orbit and any tuple on the complement.
  Integer sieve(int n, const std::vector<Partition>& classes) {
    Integer total = product(n, classes);
    if (n == 1 || total.is_zero()) return total;

    std::vector<Group> groups;
    for (const auto& c : classes) {
      if (!groups.empty() && groups.back().cls == c) {
        ++groups.back().count;
      } else {
        groups.push_back({c, 1, {}});
      }
    }

    Integer intransitive(0);
    for (int k = 1; k < n; ++k) {
      bool feasible = true;
      for (auto& g : groups) {
        g.options.clear();
        for (auto& s : ordered_splits(g.cls, /*proper=*/true)) {
          if (s.left.size() == k) g.options.push_back(std::move(s));
        }
        if (g.options.empty()) feasible = false;
      }
      if (!feasible) continue;

      Integer by_orbit(0);
      std::vector<Partition> inside, outside;
      distribute(groups, 0, k, n, Integer(1), inside, outside, by_orbit);
      intransitive += binomial(n - 1, k - 1) * by_orbit;
    }
    return total - intransitive;
  }

  // Assigns each copy of each class to one of its split options. Copies of the
  // same class are interchangeable, so a composition of the copy count with
  // its multinomial weight stands for all assignments.
  void distribute(const std::vector<Group>& groups, std::size_t gi, int k, int n, Integer weight,
                  std::vector<Partition>& inside, std::vector<Partition>& outside, Integer& acc) {
    if (gi == groups.size()) {
      Integer rest = product(n - k, outside);
      if (rest.is_zero()) return;
      Integer orbit = transitive(k, inside);
      if (orbit.is_zero()) return;
      acc += weight * orbit * rest;
      return;
    }
    const Group& g = groups[gi];
    std::vector<int> counts(g.options.size(), 0);
    compose(groups, gi, k, n, weight, inside, outside, acc, counts, 0, g.count);
  }

  void compose(const std::vector<Group>& groups, std::size_t gi, int k, int n, const Integer& weight,
               std::vector<Partition>& inside, std::vector<Partition>& outside, Integer& acc,
               std::vector<int>& counts, std::size_t slot, int left) {
    const Group& g = groups[gi];
    if (slot + 1 == g.options.size()) {
      counts[slot] = left;
      const std::size_t in_mark = inside.size();
      const std::size_t out_mark = outside.size();
      for (std::size_t o = 0; o < g.options.size(); ++o) {
        inside.insert(inside.end(), static_cast<std::size_t>(counts[o]), g.options[o].left);
        outside.insert(outside.end(), static_cast<std::size_t>(counts[o]), g.options[o].right);
      }
      distribute(groups, gi + 1, k, n, weight * multinomial(g.count, counts), inside, outside, acc);
      inside.resize(in_mark);
      outside.resize(out_mark);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[slot] = c;
      compose(groups, gi, k, n, weight, inside, outside, acc, counts, slot + 1, left - c);
    }
  }

  std::map<ClassKey, Integer> product_memo_;
  std::map<ClassKey, Integer> transitive_memo_;
};

Counter& thread_counter() {
  thread_local Counter counter;
  return counter;
}

// Brute force over S_n for n <= kDfsBound.
using Perm = std::array<std::uint8_t, kDfsBound>;

Partition cycle_type(const Perm& p, int n) {
  std::array<bool, kDfsBound> seen{};
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

class DfsCounter {
 public:
  DfsCounter(int n, const std::vector<Partition>& classes) : n_(n), target_(classes.back()) {
    Perm p{};
    std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
    std::map<Partition, std::vector<Perm>> by_type;
    do {
      by_type[cycle_type(p, n)].push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
    for (std::size_t i = 0; i + 1 < classes.size(); ++i) members_.push_back(by_type[classes[i]]);
    chosen_.resize(members_.size());
  }

  Integer run() {
    Perm id{};
    std::iota(id.begin(), id.begin() + n_, std::uint8_t{0});
    walk(0, id);
    return Integer(static_cast<long>(count_));
  }

 private:
  // `prod` is g_1 ... g_depth applied right to left; the last element must be
  // its inverse, which has the same cycle type.
  void walk(std::size_t depth, const Perm& prod) {
    if (depth == members_.size()) {
      if (cycle_type(prod, n_) == target_ && transitive()) ++count_;
      return;
    }
    for (const Perm& g : members_[depth]) {
      Perm next{};
      for (int x = 0; x < n_; ++x) next[static_cast<std::size_t>(x)] = prod[g[static_cast<std::size_t>(x)]];
      chosen_[depth] = &g;
      walk(depth + 1, next);
    }
  }

  bool transitive() const {
    std::array<int, kDfsBound> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    int components = n_;
    for (const Perm* g : chosen_) {
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find((*g)[static_cast<std::size_t>(x)]);
        if (a != b) {
          parent[static_cast<std::size_t>(a)] = b;
          --components;
        }
      }
    }
    return components == 1;
  }

  int n_;
  Partition target_;
  std::vector<std::vector<Perm>> members_;
  std::vector<const Perm*> chosen_;
  unsigned long long count_ = 0;
};

}  // namespace

Integer product_count(const ClassTuple& t) { return thread_counter().product(t.n(), t.classes()); }

Integer transitive_count(const ClassTuple& t, TransitiveMethod method) {
  if (method == TransitiveMethod::Dfs) {
    if (t.n() > kDfsBound) {
      throw ResourceError("dfs transitive count limited to n <= " + std::to_string(kDfsBound));
    }
    return DfsCounter(t.n(), t.classes()).run();
  }
  if (t.n() > kDefaultSieveBound) {
    throw ResourceError("sieve transitive count limited to n <= " + std::to_string(kDefaultSieveBound));
  }
  return thread_counter().transitive(t.n(), t.classes());
}

OracleResult hurwitz_oracle(const ClassTuple& t, TransitiveMethod method) {
  OracleResult out;
  out.genus = t.genus();
  out.count_all = product_count(t);
  if (out.genus && *out.genus >= 0) {
    out.count_transitive = transitive_count(t, method);
  }
  out.h = Rational(out.count_transitive, factorial(t.n()));
  return out;
}

}  // namespace hurwitz
