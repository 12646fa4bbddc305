#pragma once

#include <random>
#include <vector>

#include "heawood/heawood.hpp"
#include "oracles.hpp"

namespace support {

inline oracle::Adj to_adj(const heawood::SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return oracle::adjacency(g.vertex_count(), edges);
}

inline std::vector<oracle::Images> to_images(const heawood::PermGroup& g) {
  std::vector<oracle::Images> out;
  for (const auto& p : g.elements()) out.push_back(p.images());
  return out;
}

/// Erdos-Renyi graph G(n, p).
inline heawood::SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<heawood::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return heawood::SimpleGraph(n, edges);
}

inline heawood::SimpleGraph relabel(const heawood::SimpleGraph& g, const std::vector<int>& sigma) {
  std::vector<heawood::Edge> edges;
  for (const auto& e : g.edges()) edges.push_back(heawood::make_edge(sigma[e.u], sigma[e.v]));
  return heawood::SimpleGraph(g.vertex_count(), edges);
}

inline heawood::SimpleGraph with_edges(const heawood::SimpleGraph& g, const std::vector<heawood::Edge>& remove,
                                       const std::vector<heawood::Edge>& add) {
  std::vector<heawood::Edge> edges;
  for (const auto& e : g.edges())
    if (std::find(remove.begin(), remove.end(), e) == remove.end()) edges.push_back(e);
  for (const auto& e : add) edges.push_back(e);
  return heawood::SimpleGraph(g.vertex_count(), edges);
}

inline std::vector<heawood::Edge> non_edges(const heawood::SimpleGraph& g) {
  std::vector<heawood::Edge> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.adjacent(u, v)) out.push_back({u, v});
  return out;
}

}  // namespace support
