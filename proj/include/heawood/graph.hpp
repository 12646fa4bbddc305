#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "heawood/error.hpp"
#include "heawood/labeling.hpp"

namespace heawood {

using VertexId = int;
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool touches(VertexId x) const { return u == x || v == x; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalized edge with u < v.
inline Edge make_edge(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  SimpleGraph(int vertex_count, std::span<const Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
      throw InputError("vertex count must lie in [0, " + std::to_string(kMaxVertices) + "]");
    adj_.assign(n_, {});
    masks_.assign(n_, 0);
    for (const Edge& raw : edges) {
      if (raw.u < 0 || raw.v < 0 || raw.u >= n_ || raw.v >= n_)
        throw InputError("edge endpoint out of range");
      if (raw.u == raw.v) throw InputError("loop at vertex " + std::to_string(raw.u));
      Edge e = make_edge(raw.u, raw.v);
      if (masks_[e.u] >> e.v & 1U) throw InputError("parallel edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      masks_[e.u] |= VertexMask{1} << e.v;
      masks_[e.v] |= VertexMask{1} << e.u;
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId w = 0; w < n_; ++w)
        if (masks_[v] >> w & 1U) adj_[v].push_back(w);
    }
  }

  SimpleGraph(int vertex_count, std::initializer_list<Edge> edges)
      : SimpleGraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::vector<VertexId>& neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
  }
  VertexMask neighbor_mask(VertexId v) const {
    check_vertex(v);
    return masks_[v];
  }
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return masks_[u] >> v & 1U;
  }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
  }

  VertexMask all_vertices() const { return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<VertexMask> masks_;
};

/// Simple cycle in canonical form: starts at its least vertex and is oriented
/// toward the smaller of that vertex's two cycle neighbours. This is the
/// lexicographically least of the 2k rotations and reflections.
class Cycle {
 public:
  Cycle() = default;

  static Cycle canonical(std::span<const VertexId> seq) {
    const std::size_t k = seq.size();
    if (k < 3) throw InputError("a cycle needs at least 3 vertices");
    VertexMask seen = 0;
    for (VertexId v : seq) {
      if (v < 0 || v >= kMaxVertices) throw InputError("cycle vertex out of range");
      if (seen >> v & 1U) throw InputError("cycle repeats vertex " + std::to_string(v));
      seen |= VertexMask{1} << v;
    }
    const std::size_t start = static_cast<std::size_t>(std::min_element(seq.begin(), seq.end()) - seq.begin());
    const bool forward = seq[(start + 1) % k] < seq[(start + k - 1) % k];
    Cycle c;
    c.vertices_.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
      c.vertices_.push_back(forward ? seq[(start + i) % k] : seq[(start + k - i) % k]);
    c.mask_ = seen;
    return c;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  VertexMask mask() const { return mask_; }
  bool contains(VertexId v) const { return v >= 0 && v < kMaxVertices && (mask_ >> v & 1U); }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  /// True when every cyclically consecutive pair is an edge of g.
  bool is_cycle_of(const SimpleGraph& g) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      VertexId a = vertices_[i], b = vertices_[(i + 1) % vertices_.size()];
      if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) return false;
    }
    return true;
  }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.vertices_ == b.vertices_; }
  friend auto operator<=>(const Cycle& a, const Cycle& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<VertexId> vertices_;
  VertexMask mask_ = 0;
};

// ---------------------------------------------------------------------------
// Constructors

/// Heawood graph: outer cycle 1-2-...-14-1 plus chords {i, i+5 mod 14} for odd
/// label i. Vertex index = label - 1.
inline SimpleGraph heawood_standard() {
  std::vector<Edge> edges;
  for (int i = 0; i < 14; ++i) edges.push_back(make_edge(i, (i + 1) % 14));
  for (int i = 0; i < 14; i += 2) edges.push_back(make_edge(i, (i + 5) % 14));
  return SimpleGraph(14, edges);
}

inline SimpleGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));
    edges.push_back(make_edge(i, i + 5));
    edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5));
  }
  return SimpleGraph(10, edges);
}

inline SimpleGraph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return SimpleGraph(n, edges);
}

inline SimpleGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(make_edge(i, i + 1));
  return SimpleGraph(n, edges);
}

inline SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back(Edge{i, j});
  return SimpleGraph(n, edges);
}

/// Graph formed by the vertices and edges of one cycle, on the host's vertex ids.
inline SimpleGraph cycle_subgraph(const SimpleGraph& host, const Cycle& c) {
  std::vector<Edge> edges;
  const auto& vs = c.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) edges.push_back(make_edge(vs[i], vs[(i + 1) % vs.size()]));
  return SimpleGraph(host.vertex_count(), edges);
}

// ---------------------------------------------------------------------------
// Distances and connectivity

namespace detail {

inline VertexMask mask_of(const SimpleGraph& g, std::span<const VertexId> s) {
  VertexMask m = 0;
  for (VertexId v : s) {
    g.check_vertex(v);
    m |= VertexMask{1} << v;
  }
  return m;
}

inline std::vector<int> bfs_distances(const SimpleGraph& g, VertexId source) {
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::queue<VertexId> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

/// Connected components of the subgraph induced on `alive`, as vertex masks.
inline std::vector<VertexMask> components(const SimpleGraph& g, VertexMask alive) {
  std::vector<VertexMask> out;
  VertexMask rest = alive;
  while (rest) {
    VertexMask comp = VertexMask{1} << std::countr_zero(rest);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

}  // namespace detail

/// All-pairs shortest path lengths; kUnreachable between components.
inline std::vector<std::vector<int>> distance_matrix(const SimpleGraph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) d.push_back(detail::bfs_distances(g, v));
  return d;
}

inline int distance(const SimpleGraph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return detail::bfs_distances(g, u)[v];
}

/// Component sizes of g - S, ascending.
inline std::vector<int> removal_component_sizes(const SimpleGraph& g, std::span<const VertexId> removed) {
  VertexMask alive = g.all_vertices() & ~detail::mask_of(g, removed);
  std::vector<int> sizes;
  for (VertexMask c : detail::components(g, alive)) sizes.push_back(std::popcount(c));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Smallest vertex set of size at most max_size whose removal disconnects g,
/// searched by exhaustive enumeration in increasing size.
inline std::optional<std::vector<VertexId>> find_vertex_separator(const SimpleGraph& g, int max_size) {
  const int n = g.vertex_count();
  for (int size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexMask alive = g.all_vertices() & ~detail::mask_of(g, pick);
      if (alive && detail::components(g, alive).size() > 1) return pick;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// True iff g has more than k vertices and removing any fewer than k vertices
/// leaves it connected.
inline bool vertex_connectivity_at_least(const SimpleGraph& g, int k) {
  if (k < 1) throw InputError("connectivity threshold must be >= 1");
  if (g.vertex_count() <= k) return false;
  return !find_vertex_separator(g, k - 1).has_value();
}

// ---------------------------------------------------------------------------
// Cycle enumeration

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const SimpleGraph& g, std::size_t k, VertexMask banned)
      : g_(g), k_(k), banned_(banned), dist_(distance_matrix(g)) {}

  std::vector<Cycle> run() {
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      if (banned_ >> s & 1U) continue;
      start_ = s;
      path_.assign(1, s);
      used_ = VertexMask{1} << s;
      extend();
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void extend() {
    const VertexId tail = path_.back();
    if (path_.size() == k_) {
      // Orientation filter: each cycle is emitted once, already canonical.
      if (g_.adjacent(tail, start_) && path_[1] < path_.back()) out_.push_back(Cycle::canonical(path_));
      return;
    }
    const std::size_t edges_left = k_ - path_.size();  // after stepping to w
    for (VertexId w : g_.neighbors(tail)) {
      if (w <= start_ || (used_ >> w & 1U) || (banned_ >> w & 1U)) continue;
      if (static_cast<std::size_t>(dist_[w][start_]) > edges_left) continue;
      path_.push_back(w);
      used_ |= VertexMask{1} << w;
      extend();
      used_ &= ~(VertexMask{1} << w);
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  std::size_t k_;
  VertexMask banned_;
  std::vector<std::vector<int>> dist_;
  VertexId start_ = 0;
  std::vector<VertexId> path_;
  VertexMask used_ = 0;
  std::vector<Cycle> out_;
};

inline void check_cycle_length(const SimpleGraph& g, int k) {
  if (k < 3 || k > g.vertex_count())
    throw InputError("cycle length " + std::to_string(k) + " outside [3, " + std::to_string(g.vertex_count()) + "]");
}

}  // namespace detail

/// All simple k-cycles of g, canonical and sorted.
inline std::vector<Cycle> enumerate_cycles(const SimpleGraph& g, int k) {
  detail::check_cycle_length(g, k);
  return detail::CycleSearch(g, static_cast<std::size_t>(k), 0).run();
}

/// All k-cycles of g that avoid every vertex of `avoid`.
inline std::vector<Cycle> cycles_avoiding(const SimpleGraph& g, int k, std::span<const VertexId> avoid) {
  detail::check_cycle_length(g, k);
  return detail::CycleSearch(g, static_cast<std::size_t>(k), detail::mask_of(g, avoid)).run();
}

inline std::optional<int> girth(const SimpleGraph& g) {
  for (int k = 3; k <= g.vertex_count(); ++k)
    if (!enumerate_cycles(g, k).empty()) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-list text format: one "u v" line per edge, 1-based labels, u < v, sorted.

inline std::string to_edge_list(const SimpleGraph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

/// Parses an edge list. Blank lines and lines starting with '#' are skipped.
/// The vertex count is the largest label seen unless given explicitly.
inline SimpleGraph parse_edge_list(std::istream& in, std::optional<int> vertex_count = std::nullopt) {
  std::vector<Edge> edges;
  int max_label = 0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two integers");
    if (a < 1 || b < 1 || a > kMaxVertices || b > kMaxVertices)
      throw ParseError("edge list line " + std::to_string(line_no) + ": label out of range");
    max_label = std::max<int>(max_label, static_cast<int>(std::max(a, b)));
    edges.push_back(Edge{static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1)});
  }
  int n = vertex_count.value_or(max_label);
  try {
    return SimpleGraph(n, edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

inline SimpleGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

/// FNV-1a 64-bit digest of the canonical edge list, e.g. "fnv1a64:0123abcd...".
inline std::string graph_digest(const SimpleGraph& g) {
  std::uint64_t h = 14695981039346656037ULL;
  const std::string text = "n=" + std::to_string(g.vertex_count()) + "\n" + to_edge_list(g);
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

// ---------------------------------------------------------------------------
// Labelings

/// Labels the vertices of a 12-cycle "1".."12" in traversal order from
/// position `start` (backwards when `reversed`), and the two off-cycle
/// vertices "v" and "w" (ascending index order, or swapped).
inline LabelingMap twelve_cycle_labeling(const SimpleGraph& g, const Cycle& c, std::size_t start, bool reversed,
                                         bool swap_off_cycle) {
  if (g.vertex_count() != 14 || c.length() != 12) throw InputError("twelve-cycle labeling needs a 12-cycle in a 14-vertex graph");
  if (!c.is_cycle_of(g)) throw InputError("not a cycle of the graph");
  std::vector<std::string> labels(14);
  for (std::size_t i = 0; i < 12; ++i) {
    std::size_t pos = reversed ? (start + 12 - i) % 12 : (start + i) % 12;
    labels[c[pos]] = std::to_string(i + 1);
  }
  std::vector<VertexId> off;
  for (VertexId v = 0; v < 14; ++v)
    if (!c.contains(v)) off.push_back(v);
  if (swap_off_cycle) std::swap(off[0], off[1]);
  labels[off[0]] = "v";
  labels[off[1]] = "w";
  return LabelingMap(std::move(labels));
}

}  // namespace heawood
