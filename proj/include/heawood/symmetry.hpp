#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/graph.hpp"
#include "heawood/perm.hpp"
#include "heawood/perm_group.hpp"

namespace heawood {

inline constexpr int kMaxAutomorphismVertices = 32;

inline bool is_automorphism(const Perm& p, const SimpleGraph& g) {
  if (p.degree() != static_cast<std::size_t>(g.vertex_count())) return false;
  for (const Edge& e : g.edges())
    if (!g.adjacent(p(e.u), p(e.v))) return false;
  return true;
}

namespace detail {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const SimpleGraph& g, std::size_t limit) : g_(g), limit_(limit), dist_(distance_matrix(g)) {
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v) {
      std::vector<int> row = dist_[v];
      std::sort(row.begin(), row.end());
      profile_.push_back({g.degree(v), std::move(row)});
    }
    // Visit vertices in BFS order so each new vertex tends to touch an assigned one.
    std::vector<bool> seen(n, false);
    for (VertexId s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        VertexId v = order_[head++];
        for (VertexId w : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
      }
    }
    image_.assign(n, -1);
    used_.assign(n, false);
  }

  std::vector<Perm> run() {
    search(0);
    return std::move(found_);
  }

 private:
  struct Profile {
    int degree;
    std::vector<int> distances;
    friend bool operator==(const Profile&, const Profile&) = default;
  };

  void search(std::size_t depth) {
    const int n = g_.vertex_count();
    if (depth == order_.size()) {
      if (found_.size() >= limit_) throw ResourceError("automorphism group exceeds element limit");
      found_.emplace_back(image_);
      return;
    }
    const VertexId v = order_[depth];
    for (VertexId c = 0; c < n; ++c) {
      if (used_[c] || !(profile_[v] == profile_[c])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        const VertexId u = order_[j];
        ok = dist_[u][v] == dist_[image_[u]][c];
      }
      if (!ok) continue;
      image_[v] = c;
      used_[c] = true;
      search(depth + 1);
      used_[c] = false;
      image_[v] = -1;
    }
  }

  const SimpleGraph& g_;
  std::size_t limit_;
  std::vector<std::vector<int>> dist_;
  std::vector<Profile> profile_;
  std::vector<VertexId> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Perm> found_;
};

}  // namespace detail

/// All automorphisms of g by backtracking over candidate images with matching
/// degree and sorted distance profile; partial maps must preserve pairwise
/// distances (which includes adjacency).
inline PermGroup automorphism_group(const SimpleGraph& g, std::size_t element_limit = 1'000'000) {
  if (g.vertex_count() > kMaxAutomorphismVertices)
    throw InputError("automorphism search supports at most 32 vertices");
  auto elements = detail::AutomorphismSearch(g, element_limit).run();
  for (const Perm& p : elements)
    if (!is_automorphism(p, g)) throw std::logic_error("automorphism search produced a non-automorphism");
  return PermGroup::from_elements(std::move(elements));
}

// ---------------------------------------------------------------------------
// Group actions

struct ActionDomain {
  enum class Kind { Vertices, Edges, Cycles };
  Kind kind = Kind::Vertices;
  int cycle_length = 0;

  static ActionDomain vertices() { return {Kind::Vertices, 0}; }
  static ActionDomain edges() { return {Kind::Edges, 0}; }
  static ActionDomain cycles(int k) { return {Kind::Cycles, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::Vertices: return "vertices";
      case Kind::Edges: return "edges";
      case Kind::Cycles: return std::to_string(cycle_length) + "-cycles";
    }
    return "?";
  }
  friend bool operator==(const ActionDomain&, const ActionDomain&) = default;
};

/// A permutation group acting on vertices, edges or k-cycles of a graph. Each
/// group element carries its induced permutation of the domain points.
class GroupAction {
 public:
  const PermGroup& group() const { return group_; }
  const ActionDomain& domain() const { return domain_; }
  std::size_t domain_size() const { return size_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }

  const Perm& action_of_index(std::size_t element_index) const { return actions_.at(element_index); }

  const Perm& action_of(const Perm& element) const {
    auto i = group_.index_of(element);
    if (!i) throw InputError("permutation is not an element of the acting group");
    return actions_[*i];
  }

  std::size_t act(const Perm& element, std::size_t point) const { return action_of(element)(static_cast<int>(point)); }

  /// Index of a cycle in the cycle domain.
  std::optional<std::size_t> cycle_index(const Cycle& c) const {
    auto it = std::lower_bound(cycles_.begin(), cycles_.end(), c);
    if (it == cycles_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - cycles_.begin());
  }

  /// The same action restricted to a subgroup of the acting group.
  GroupAction restricted(const PermGroup& subgroup) const {
    GroupAction out;
    out.domain_ = domain_;
    out.size_ = size_;
    out.edges_ = edges_;
    out.cycles_ = cycles_;
    for (const Perm& h : subgroup.elements()) out.actions_.push_back(action_of(h));
    out.group_ = subgroup;
    return out;
  }

  friend GroupAction induced_action(const PermGroup& group, const SimpleGraph& g, ActionDomain domain);

 private:
  PermGroup group_;
  ActionDomain domain_;
  std::size_t size_ = 0;
  std::vector<Edge> edges_;
  std::vector<Cycle> cycles_;
  std::vector<Perm> actions_;
};

inline Cycle image_of(const Perm& p, const Cycle& c) {
  std::vector<VertexId> mapped;
  mapped.reserve(c.length());
  for (VertexId v : c.vertices()) mapped.push_back(p(v));
  return Cycle::canonical(mapped);
}

inline Edge image_of(const Perm& p, const Edge& e) { return make_edge(p(e.u), p(e.v)); }

inline GroupAction induced_action(const PermGroup& group, const SimpleGraph& g, ActionDomain domain) {
  for (const Perm& p : group.elements())
    if (!is_automorphism(p, g)) throw InputError("group element " + format_perm(p) + " is not an automorphism");
  GroupAction a;
  a.group_ = group;
  a.domain_ = domain;
  switch (domain.kind) {
    case ActionDomain::Kind::Vertices: a.size_ = static_cast<std::size_t>(g.vertex_count()); break;
    case ActionDomain::Kind::Edges:
      a.edges_ = g.edges();
      a.size_ = a.edges_.size();
      break;
    case ActionDomain::Kind::Cycles:
      a.cycles_ = enumerate_cycles(g, domain.cycle_length);
      a.size_ = a.cycles_.size();
      break;
  }
  a.actions_.reserve(group.order());
  for (const Perm& p : group.elements()) {
    std::vector<int> images(a.size_);
    for (std::size_t x = 0; x < a.size_; ++x) {
      switch (domain.kind) {
        case ActionDomain::Kind::Vertices: images[x] = p(static_cast<int>(x)); break;
        case ActionDomain::Kind::Edges: {
          Edge e = image_of(p, a.edges_[x]);
          images[x] = static_cast<int>(std::lower_bound(a.edges_.begin(), a.edges_.end(), e) - a.edges_.begin());
          break;
        }
        case ActionDomain::Kind::Cycles: images[x] = static_cast<int>(*a.cycle_index(image_of(p, a.cycles_[x]))); break;
      }
    }
    a.actions_.emplace_back(std::move(images));
  }
  return a;
}

/// Domain points x with p.x = x. On edges and cycles this is setwise invariance.
inline std::vector<std::size_t> fixed_points(const Perm& p, const GroupAction& a) {
  const Perm& act = a.action_of(p);
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < a.domain_size(); ++x)
    if (act(static_cast<int>(x)) == static_cast<int>(x)) out.push_back(x);
  return out;
}

/// Edges whose endpoints are both fixed by p.
inline std::vector<Edge> pointwise_fixed_edges(const Perm& p, const SimpleGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (p(e.u) == e.u && p(e.v) == e.v) out.push_back(e);
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> orbits_under(std::size_t size, const std::vector<const Perm*>& gens) {
  std::vector<int> block(size, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < size; ++s) {
    if (block[s] >= 0) continue;
    std::vector<std::size_t> orbit{s};
    block[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Perm* g : gens) {
        std::size_t y = static_cast<std::size_t>((*g)(static_cast<int>(orbit[i])));
        if (block[y] < 0) {
          block[y] = static_cast<int>(out.size());
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace detail

/// Orbits of the acting group; blocks sorted, ordered by least point.
inline std::vector<std::vector<std::size_t>> orbit_partition(const GroupAction& a) {
  std::vector<const Perm*> gens;
  for (const Perm& g : a.group().generators()) gens.push_back(&a.action_of(g));
  return detail::orbits_under(a.domain_size(), gens);
}

/// Orbits of the cyclic group generated by p.
inline std::vector<std::vector<std::size_t>> orbit_partition(const Perm& p, const GroupAction& a) {
  return detail::orbits_under(a.domain_size(), {&a.action_of(p)});
}

inline bool is_transitive(const GroupAction& a) { return orbit_partition(a).size() == 1; }

// ---------------------------------------------------------------------------
// Burnside counting

/// Exact fraction kept as computed (not reduced), so 30/12 stays 30/12.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_integer() const { return num % den == 0; }
  Rational reduced() const {
    std::int64_t g = std::gcd(num, den);
    return g == 0 ? *this : Rational{num / g, den / g};
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
  /// Value equality.
  friend bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }
};

using FixOverride = std::map<Perm, std::size_t>;

/// (1/|G|) * sum of |fix(g)| with fixed-point counts supplied per element.
inline Rational burnside_orbit_count(const PermGroup& group, const FixOverride& fix_counts) {
  std::int64_t sum = 0;
  for (const Perm& p : group.elements()) {
    auto it = fix_counts.find(p);
    if (it == fix_counts.end()) throw InputError("fix-count override misses element " + format_perm(p));
    sum += static_cast<std::int64_t>(it->second);
  }
  return {sum, static_cast<std::int64_t>(group.order())};
}

/// (1/|G|) * sum of |fix(g)| over the action, or over `fix_override` when given.
inline Rational burnside_orbit_count(const GroupAction& a, const std::optional<FixOverride>& fix_override = std::nullopt) {
  if (fix_override) return burnside_orbit_count(a.group(), *fix_override);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.group().order(); ++i) {
    const Perm& act = a.action_of_index(i);
    for (std::size_t x = 0; x < a.domain_size(); ++x) sum += act(static_cast<int>(x)) == static_cast<int>(x) ? 1 : 0;
  }
  return {sum, static_cast<std::int64_t>(a.group().order())};
}

// ---------------------------------------------------------------------------
// Action on an invariant cycle

struct RotationDescriptor {
  enum class Kind { Identity, Rotation, Reflection };
  Kind kind = Kind::Identity;
  std::size_t step = 0;  // rotations: positions advanced along the canonical orientation, in [1, k-1]
  std::size_t length = 0;

  /// "identity", "reflection", or "rotation 2pi*a/b" with a/b = step/length reduced.
  std::string str() const {
    switch (kind) {
      case Kind::Identity: return "identity";
      case Kind::Reflection: return "reflection";
      case Kind::Rotation: {
        std::size_t g = std::gcd(step, length);
        return "rotation 2pi*" + std::to_string(step / g) + "/" + std::to_string(length / g);
      }
    }
    return "?";
  }
  friend bool operator==(const RotationDescriptor&, const RotationDescriptor&) = default;
};

/// Dihedral motion induced by p on a cycle it leaves setwise invariant.
inline RotationDescriptor cycle_action_descriptor(const Perm& p, const Cycle& c) {
  const std::size_t k = c.length();
  if (k == 0) throw InputError("empty cycle");
  std::vector<int> pos(kMaxVertices, -1);
  for (std::size_t i = 0; i < k; ++i) pos[c[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < k; ++i) {
    if (static_cast<std::size_t>(c[i]) >= p.degree() || pos[p(c[i])] < 0)
      throw InputError("cycle is not invariant under the permutation");
  }
  const std::size_t j = static_cast<std::size_t>(pos[p(c[0])]);
  bool rotation = true, reflection = true;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t img = static_cast<std::size_t>(pos[p(c[i])]);
    rotation = rotation && img == (i + j) % k;
    reflection = reflection && img == (j + k - i) % k;
  }
  if (rotation) return j == 0 ? RotationDescriptor{RotationDescriptor::Kind::Identity, 0, k}
                              : RotationDescriptor{RotationDescriptor::Kind::Rotation, j, k};
  if (reflection) return {RotationDescriptor::Kind::Reflection, 0, k};
  throw InputError("permutation does not act on the cycle as a polygon symmetry");
}

}  // namespace heawood
