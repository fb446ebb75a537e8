#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "nbgrowth/graph.hpp"

namespace nbg {

namespace detail {

/// Marks the vertices surviving iterated leaf deletion. Deletion order does
/// not matter (confluence); a queue-based peel gives linear time.
inline std::vector<char> two_core_mask(const BasedMultigraph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::vector<char> alive(g.vertex_count(), 1);
  std::vector<char> edge_alive(g.edge_count(), 1);
  std::queue<std::uint32_t> leaves;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (deg[v] <= 1) leaves.push(v);
  while (!leaves.empty()) {
    std::uint32_t v = leaves.front();
    leaves.pop();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (Dart d : g.darts_out_of(v)) {
      if (!edge_alive[d.edge()]) continue;
      edge_alive[d.edge()] = 0;
      std::uint32_t w = g.head(d);
      if (w == v) continue;  // loops keep their vertex alive anyway
      if (alive[w] && --deg[w] <= 1) leaves.push(w);
    }
  }
  return alive;
}

/// Copies the subgraph induced by `keep`, preserving ids and rank bound.
/// The basepoint is carried over when it survives; otherwise the caller
/// fixes one up.
inline BasedMultigraph induced_subgraph(const BasedMultigraph& g, const std::vector<char>& keep) {
  BasedMultigraph out(g.rank_bound());
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) out.add_vertex(g.vertex_id(v));
  for (const auto& e : g.edges())
    if (keep[e.u] && keep[e.v]) out.add_edge(e.id, g.vertex_id(e.u), g.vertex_id(e.v));
  if (g.has_basepoint() && keep[g.basepoint_index()]) out.set_basepoint(g.basepoint());
  return out;
}

/// BFS path from the basepoint to the nearest vertex with mask[v] set.
/// Returns the vertex sequence basepoint..core_vertex (unique in a graph
/// whose non-core part is a forest).
inline std::vector<std::uint32_t> arc_to_mask(const BasedMultigraph& g, const std::vector<char>& mask) {
  std::uint32_t start = g.basepoint_index();
  std::vector<std::int64_t> parent(g.vertex_count(), -2);
  std::queue<std::uint32_t> q;
  q.push(start);
  parent[start] = -1;
  std::uint32_t hit = start;
  bool found = mask[start] != 0;
  while (!q.empty() && !found) {
    std::uint32_t v = q.front();
    q.pop();
    for (Dart d : g.darts_out_of(v)) {
      std::uint32_t w = g.head(d);
      if (parent[w] != -2) continue;
      parent[w] = v;
      if (mask[w]) {
        hit = w;
        found = true;
        break;
      }
      q.push(w);
    }
  }
  std::vector<std::uint32_t> path;
  for (std::int64_t v = hit; v != -1; v = parent[static_cast<std::uint32_t>(v)])
    path.push_back(static_cast<std::uint32_t>(v));
  std::reverse(path.begin(), path.end());
  return path;  // starts at basepoint, ends at core
}

}  // namespace detail

/// The cycle-spanned part: the largest subgraph of minimum degree >= 2,
/// equivalently what survives iterated leaf deletion. Contains every cycle.
/// If the original basepoint is pruned, the result's basepoint becomes the
/// core vertex nearest to it (the attachment point of the basepoint arc).
inline BasedMultigraph two_core(const BasedMultigraph& g) {
  if (!g.is_connected()) throw SpectralError("two_core requires a connected graph");
  if (!g.has_cycle()) throw SpectralError("forest: two_core would be empty");
  auto mask = detail::two_core_mask(g);
  BasedMultigraph out = detail::induced_subgraph(g, mask);
  if (!out.has_basepoint() && g.has_basepoint()) {
    auto arc = detail::arc_to_mask(g, mask);
    out.set_basepoint(g.vertex_id(arc.back()));
  }
  return out;
}

/// two_core plus the unique embedded arc from the basepoint. Keeps the first
/// Betti number of the input. An acyclic input collapses to the single
/// basepoint vertex.
inline BasedMultigraph based_core(const BasedMultigraph& g) {
  if (!g.is_connected()) throw SpectralError("based_core requires a connected graph");
  std::uint32_t base = g.basepoint_index();
  if (!g.has_cycle()) {
    BasedMultigraph out(g.rank_bound());
    out.add_vertex(g.vertex_id(base));
    out.set_basepoint(g.vertex_id(base));
    return out;
  }
  auto mask = detail::two_core_mask(g);
  if (!mask[base]) {
    auto arc = detail::arc_to_mask(g, mask);
    for (std::uint32_t v : arc) mask[v] = 1;
  }
  return detail::induced_subgraph(g, mask);
}

}  // namespace nbg
