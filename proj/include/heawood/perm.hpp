#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/labeling.hpp"

namespace heawood {

/// Bijection on {0, ..., n-1}, stored as its image sequence.
class Perm {
 public:
  Perm() = default;

  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[x])
        throw InputError("image sequence is not a bijection");
      hit[x] = true;
    }
  }

  static Perm identity(std::size_t n) {
    Perm p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  /// Product of the given disjoint cycles on n points.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    std::vector<bool> seen(n, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int x = c[i];
        if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError("cycle point out of range");
        if (seen[x]) throw InputError("point " + std::to_string(x) + " appears twice");
        seen[x] = true;
        p.images_[x] = c[(i + 1) % c.size()];
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  Perm inverse() const {
    Perm r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<int>(i);
    return r;
  }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm acc = identity(degree());
    while (k) {
      if (k & 1U) acc = acc * base;
      base = base * base;
      k >>= 1U;
    }
    return acc;
  }

  /// Nontrivial cycles, each starting at its least point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t s = 0; s < images_.size(); ++s) {
      if (seen[s] || images_[s] == static_cast<int>(s)) continue;
      std::vector<int> c;
      for (int x = static_cast<int>(s); !seen[x]; x = images_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Composition p * q applies q first: (p * q)(x) = p(q(x)).
  friend Perm operator*(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree()) throw InputError("composing permutations of different degree");
    Perm r;
    r.images_.resize(p.images_.size());
    for (std::size_t i = 0; i < r.images_.size(); ++i) r.images_[i] = p.images_[q.images_[i]];
    return r;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : p.images()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// lcm of the cycle lengths.
inline std::size_t element_order(const Perm& p) {
  std::size_t order = 1;
  for (const auto& c : p.cycles()) order = std::lcm(order, c.size());
  return order;
}

/// Parses disjoint cycle notation such as "(v,w)(1,4,9)" over the labels of
/// `ground`. Whitespace is ignored; "" and "()" denote the identity.
inline Perm parse_perm(std::string_view text, const LabelingMap& ground) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> used(ground.size(), false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at offset " + std::to_string(i));
    ++i;
    std::vector<int> cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()"
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] != ',' && text[i] != ')' && text[i] != ' ' && text[i] != '(') ++i;
      std::string_view token = text.substr(start, i - start);
      if (token.empty()) throw ParseError("empty label at offset " + std::to_string(start));
      auto idx = ground.find(token);
      if (!idx) throw ParseError("unknown label '" + std::string(token) + "'");
      if (used[*idx]) throw ParseError("label '" + std::string(token) + "' repeated");
      used[*idx] = true;
      cycle.push_back(static_cast<int>(*idx));
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return Perm::from_cycles(ground.size(), cycles);
}

/// Cycle notation over `labels`; the identity is "()".
inline std::string format_perm(const Perm& p, const LabelingMap& labels) {
  std::string out;
  for (const auto& c : p.cycles()) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += labels.label(static_cast<std::size_t>(c[i]));
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string format_perm(const Perm& p) { return format_perm(p, LabelingMap::one_based(p.degree())); }

}  // namespace heawood
