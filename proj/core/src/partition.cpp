#include "hurwitz/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw DomainError("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::repeated(int value, int count) {
  if (count < 0) throw DomainError("negative repeat count");
  return Partition(std::vector<int>(static_cast<std::size_t>(count), value));
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

Rational Partition::reciprocal_sum() const {
  Rational s;
  for (int p : parts_) s += Rational(Integer(1), Integer(p));
  return s;
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::exponent_str() const {
  auto mult = multiplicities();
  std::reverse(mult.begin(), mult.end());
  std::string out;
  for (const auto& [value, count] : mult) {
    if (!out.empty()) out += ' ';
    out += std::to_string(value) + "^" + std::to_string(count);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed partition '" + std::string(whole) + "'");
  }
  if (value < 1) {
    throw ParseError("partition '" + std::string(whole) + "' has non-positive part " +
                     std::to_string(value));
  }
  return value;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw ParseError("empty partition");

  std::vector<int> parts;
  const auto add_token = [&](std::string_view token) {
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      const int value = parse_positive(token.substr(0, caret), text);
      const auto exp_text = trim(token.substr(caret + 1));
      int count = 0;
      const auto* end = exp_text.data() + exp_text.size();
      auto [ptr, ec] = std::from_chars(exp_text.data(), end, count);
      if (exp_text.empty() || ec != std::errc() || ptr != end || count < 0) {
        throw ParseError("malformed exponent in partition '" + std::string(text) + "'");
      }
      parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    } else {
      parts.push_back(parse_positive(token, text));
    }
  };

  // Commas separate fields; each field may hold several whitespace-separated tokens.
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    auto field = trim(body.substr(pos, comma - pos));
    pos = comma + 1;
    if (field.empty()) throw ParseError("malformed partition '" + std::string(text) + "'");
    while (!field.empty()) {
      auto space = field.find_first_of(" \t");
      if (space == std::string_view::npos) space = field.size();
      add_token(field.substr(0, space));
      field = trim(field.substr(std::min(space, field.size())));
    }
  }
  if (parts.empty()) throw ParseError("partition '" + std::string(text) + "' has no parts");
  return Partition(std::move(parts));
}

Partition diagram_sum(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(parts));
}

bool is_subdiagram(const Partition& sub, const Partition& whole) {
  // Both are sorted non-increasing, so multiset inclusion is std::includes.
  return std::includes(whole.parts().begin(), whole.parts().end(), sub.parts().begin(),
                       sub.parts().end(), std::greater<>());
}

Integer aut_order(const Partition& p) {
  Integer r(1);
  for (const auto& [value, count] : p.multiplicities()) r *= factorial(count);
  return r;
}

Rational prod_weight(const Partition& p) {
  Rational r(1);
  for (int k : p.parts()) r *= Rational(ipow(Integer(k), k).to_integer(), factorial(k));
  return r;
}

Integer centralizer_order(const Partition& p) {
  Integer z(1);
  for (const auto& [value, count] : p.multiplicities()) {
    z *= ipow(Integer(value), count).to_integer() * factorial(count);
  }
  return z;
}

Integer class_size(const Partition& p) { return factorial(p.size()).divexact(centralizer_order(p)); }

Integer split_multiplicity(const Partition& tau, const Partition& mu, const Partition& lam) {
  if (diagram_sum(mu, lam) != tau) {
    throw DomainError("(" + mu.str() + ") + (" + lam.str() + ") is not (" + tau.str() + ")");
  }
  return aut_order(tau).divexact(aut_order(mu) * aut_order(lam));
}

std::vector<SplitPair> ordered_splits(const Partition& p, bool proper) {
  const auto mult = p.multiplicities();
  std::vector<SplitPair> out;
  std::vector<int> take(mult.size(), 0);

  // Odometer over how many copies of each distinct part go to the left side.
  while (true) {
    std::vector<int> left, right;
    for (std::size_t i = 0; i < mult.size(); ++i) {
      left.insert(left.end(), static_cast<std::size_t>(take[i]), mult[i].first);
      right.insert(right.end(), static_cast<std::size_t>(mult[i].second - take[i]), mult[i].first);
    }
    if (!proper || (!left.empty() && !right.empty())) {
      Partition l(std::move(left)), r(std::move(right));
      Integer m = split_multiplicity(p, l, r);
      out.push_back({std::move(l), std::move(r), std::move(m)});
    }

    std::size_t i = 0;
    while (i < mult.size() && take[i] == mult[i].second) take[i++] = 0;
    if (i == mult.size()) break;
    ++take[i];
  }
  return out;
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw DomainError("enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with parts bounded by the previous part yields reverse-lex order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace hurwitz
