#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"

namespace hurwitz {

namespace {

// Characters of S_n for n <= 20 are bounded by sqrt(n!) < 2^31, so the
// recursion runs on machine words and converts at the end.
constexpr int kHardCharacterBound = 20;

using MnKey = std::pair<std::vector<int>, std::size_t>;

class MurnaghanNakayama {
 public:
  explicit MurnaghanNakayama(std::vector<int> cycle_type) : mu_(std::move(cycle_type)) {}

  long chi(const std::vector<int>& lambda) { return eval(lambda, 0); }

 private:
  // chi^lambda evaluated on the cycle type mu_[pos..], removing one rim hook
  // of length mu_[pos] per step. Rim hooks are handled on beta-numbers:
  // removing a hook of length r moves one bead from b to b - r, with sign
  // (-1)^(beads strictly between).
  long eval(const std::vector<int>& lambda, std::size_t pos) {
    if (pos == mu_.size()) return lambda.empty() ? 1 : 0;
    MnKey key{lambda, pos};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu_[pos];
    const int len = static_cast<int>(lambda.size());
    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const int from = beta[i];
      const int to = from - r;
      if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
      int between = 0;
      for (int b : beta) between += (b > to && b < from) ? 1 : 0;

      std::vector<int> moved = beta;
      moved[i] = to;
      std::sort(moved.begin(), moved.end(), std::greater<>());
      std::vector<int> next;
      for (int j = 0; j < len; ++j) {
        const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
        if (part > 0) next.push_back(part);
      }
      const long sub = eval(next, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> mu_;
  std::map<MnKey, long> memo_;
};

}  // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw DomainError("character argument sizes differ");
  if (lambda.size() > kHardCharacterBound) throw ResourceError("character of S_n with n > 20");
  MurnaghanNakayama mn(mu.parts());
  return Integer(mn.chi(lambda.parts()));
}

std::size_t CharacterTable::index_of(const Partition& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw DomainError("(" + p.str() + ") is not a partition of " + std::to_string(n_));
  }
  return it->second;
}

CharacterTable build_character_table(int n, int bound) {
  if (n < 1) throw DomainError("character table needs n >= 1");
  if (n > bound || n > kHardCharacterBound) {
    throw ResourceError("character table for n = " + std::to_string(n) + " exceeds bound " +
                        std::to_string(std::min(bound, kHardCharacterBound)));
  }
  CharacterTable t;
  t.n_ = n;
  t.partitions_ = enumerate_partitions(n);
  const std::size_t p = t.partitions_.size();
  for (std::size_t i = 0; i < p; ++i) t.index_.emplace(t.partitions_[i], i);
  t.identity_ = t.index_.at(Partition::repeated(1, n));
  t.values_.resize(p * p);
  // One evaluator per class so the memo is shared across all irreps.
  for (std::size_t c = 0; c < p; ++c) {
    MurnaghanNakayama mn(t.partitions_[c].parts());
    for (std::size_t i = 0; i < p; ++i) t.values_[i * p + c] = Integer(mn.chi(t.partitions_[i].parts()));
  }
  return t;
}

CharacterTable build_character_table(int n) { return build_character_table(n, kDefaultCharacterBound); }

const CharacterTable& character_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    try {
      slot = std::make_unique<CharacterTable>(build_character_table(n));
    } catch (...) {
      cache.erase(n);
      throw;
    }
  }
  return *slot;
}

}  // namespace hurwitz
