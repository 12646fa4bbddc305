#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/perm.hpp"

namespace heawood {

/// Finite permutation group held as its full, sorted element list. The
/// identity is always element 0. Intended for groups of a few thousand
/// elements at most.
class PermGroup {
 public:
  /// Trivial group on the empty ground set.
  PermGroup() {
    elements_.push_back(Perm::identity(0));
    finish();
  }

  /// Closure of `gens` under composition. Elements come out sorted by image
  /// sequence, so the result does not depend on generator order.
  static PermGroup generate(std::span<const Perm> gens, std::size_t degree) {
    for (const Perm& g : gens)
      if (g.degree() != degree) throw InputError("generator degree differs from the group degree");
    PermGroup grp;
    grp.degree_ = degree;
    grp.generators_.assign(gens.begin(), gens.end());
    grp.elements_.clear();
    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> queue;
    Perm id = Perm::identity(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
    grp.elements_.assign(seen.begin(), seen.end());
    grp.finish();
    return grp;
  }

  /// Wraps an explicit element set, verifying closure. Generators are chosen
  /// greedily in element order.
  static PermGroup from_elements(std::vector<Perm> elements) {
    if (elements.empty()) throw InputError("a group has at least one element");
    PermGroup grp;
    grp.degree_ = elements.front().degree();
    grp.generators_.clear();
    grp.elements_ = std::move(elements);
    grp.finish();
    if (grp.elements_.front() != Perm::identity(grp.degree_)) throw InputError("element set lacks the identity");
    for (const Perm& a : grp.elements_)
      for (const Perm& b : grp.elements_)
        if (!grp.contains(a * b)) throw InputError("element set is not closed under composition");
    std::unordered_set<Perm, PermHash> reached{Perm::identity(grp.degree_)};
    for (const Perm& x : grp.elements_) {
      if (reached.count(x)) continue;
      grp.generators_.push_back(x);
      reached = closure_set(grp.generators_, grp.degree_);
    }
    return grp;
  }

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }

  bool is_abelian() const {
    for (const Perm& a : generators_)
      for (const Perm& b : generators_)
        if (a * b != b * a) return false;
    return true;
  }

  friend bool operator==(const PermGroup& a, const PermGroup& b) { return a.elements_ == b.elements_; }

 private:
  static std::unordered_set<Perm, PermHash> closure_set(const std::vector<Perm>& gens, std::size_t degree) {
    std::unordered_set<Perm, PermHash> seen{Perm::identity(degree)};
    std::deque<Perm> queue{Perm::identity(degree)};
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (const Perm& g : gens) {
        Perm y = x * g;
        if (seen.insert(y).second) queue.push_back(std::move(y));
      }
    }
    return seen;
  }

  void finish() {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  }

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Generated group; the degree is taken from the generators (0 when empty).
inline PermGroup generate_group(std::span<const Perm> gens) {
  const std::size_t degree = gens.empty() ? 0 : gens.front().degree();
  for (const Perm& g : gens)
    if (g.degree() != degree) throw InputError("generators act on ground sets of different size");
  return PermGroup::generate(gens, degree);
}

inline PermGroup generate_group(std::initializer_list<Perm> gens) {
  return generate_group(std::span<const Perm>(gens.begin(), gens.size()));
}

/// Multiplication table over element indices of a PermGroup.
class CayleyTable {
 public:
  static constexpr std::size_t kIdentity = 0;

  explicit CayleyTable(const PermGroup& g) : n_(g.order()) {
    if (n_ > 0xFFFF) throw ResourceError("group too large for a Cayley table");
    mul_.resize(n_ * n_);
    inv_.resize(n_);
    order_.resize(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) mul_[a * n_ + b] = static_cast<std::uint16_t>(*g.index_of(g.element(a) * g.element(b)));
    }
    for (std::size_t a = 0; a < n_; ++a) {
      std::size_t x = a, k = 1;
      while (x != kIdentity) {
        x = mul(x, a);
        ++k;
      }
      order_[a] = k;
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == kIdentity) inv_[a] = b;
    }
  }

  std::size_t order() const { return n_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t element_order(std::size_t a) const { return order_[a]; }
  std::size_t conjugate(std::size_t x, std::size_t by) const { return mul(mul(by, x), inv(by)); }
  std::size_t commutator(std::size_t a, std::size_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  /// Subgroup generated by the given element indices, as a membership vector.
  std::vector<bool> closure(std::span<const std::size_t> gens) const {
    std::vector<bool> in(n_, false);
    std::vector<std::size_t> members{kIdentity};
    in[kIdentity] = true;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t g : gens) {
        std::size_t y = mul(members[i], g);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    return in;
  }

 private:
  std::size_t n_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> order_;
};

/// Histogram: element order -> number of elements of that order.
inline std::map<std::size_t, std::size_t> order_spectrum(const PermGroup& g) {
  std::map<std::size_t, std::size_t> spectrum;
  for (const Perm& p : g.elements()) ++spectrum[element_order(p)];
  return spectrum;
}

/// Conjugacy classes as sorted lists of element indices, ordered by their
/// least member.
inline std::vector<std::vector<std::size_t>> conjugacy_classes(const PermGroup& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> done(g.order(), false);
  std::vector<Perm> inverses;
  inverses.reserve(g.order());
  for (const Perm& h : g.elements()) inverses.push_back(h.inverse());
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t h = 0; h < g.order(); ++h) {
      std::size_t y = *g.index_of(g.element(h) * g.element(x) * inverses[h]);
      if (!done[y]) {
        done[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace heawood
