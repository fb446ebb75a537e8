#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbgrowth/errors.hpp"

namespace nbg {

using VertexId = std::string;
using EdgeId = std::string;

/// Oriented half-edge. Each edge e contributes two darts, 2e and 2e+1;
/// reversal flips the low bit, so reverse(reverse(d)) == d and
/// reverse(d) != d always, including for loops.
struct Dart {
  std::uint32_t index = 0;

  constexpr Dart reverse() const noexcept { return Dart{index ^ 1u}; }
  constexpr std::uint32_t edge() const noexcept { return index >> 1; }
  constexpr bool flipped() const noexcept { return (index & 1u) != 0; }

  friend constexpr bool operator==(Dart a, Dart b) noexcept { return a.index == b.index; }
  friend constexpr bool operator!=(Dart a, Dart b) noexcept { return a.index != b.index; }
  friend constexpr bool operator<(Dart a, Dart b) noexcept { return a.index < b.index; }
};

/// Undirected multigraph with a basepoint. Loops and parallel edges are
/// first-class; vertex and edge ids are opaque strings. rank_bound is the
/// alphabet size r of the ambient bouquet: a graph is labelable iff every
/// degree is at most 2r (a loop uses two slots at its vertex).
///
/// Instances are built with add_vertex/add_edge and treated as immutable
/// afterwards; every algorithm in the library takes graphs by const
/// reference and returns new ones.
class BasedMultigraph {
 public:
  struct Edge {
    EdgeId id;
    std::uint32_t u = 0;  // vertex indices, unordered endpoints
    std::uint32_t v = 0;
  };

  explicit BasedMultigraph(int rank_bound = 2) {
    if (rank_bound < 1) throw DomainError("rank_bound must be positive");
    rank_bound_ = rank_bound;
  }

  int rank_bound() const noexcept { return rank_bound_; }

  std::uint32_t add_vertex(const VertexId& id) {
    if (vertex_index_.count(id)) throw ParseError("duplicate vertex id '" + id + "'");
    std::uint32_t idx = static_cast<std::uint32_t>(vertex_ids_.size());
    vertex_ids_.push_back(id);
    vertex_index_.emplace(id, idx);
    degree_.push_back(0);
    incidence_.emplace_back();
    return idx;
  }

  std::uint32_t add_edge(const EdgeId& id, const VertexId& u, const VertexId& v) {
    if (edge_index_.count(id)) throw ParseError("duplicate edge id '" + id + "'");
    auto iu = vertex_index_.find(u);
    auto iv = vertex_index_.find(v);
    if (iu == vertex_index_.end()) throw ParseError("edge '" + id + "' references unknown vertex '" + u + "'");
    if (iv == vertex_index_.end()) throw ParseError("edge '" + id + "' references unknown vertex '" + v + "'");
    std::uint32_t idx = static_cast<std::uint32_t>(edges_.size());
    edges_.push_back(Edge{id, iu->second, iv->second});
    edge_index_.emplace(id, idx);
    degree_[iu->second] += 1;
    degree_[iv->second] += 1;  // a loop (u == v) counts twice
    incidence_[iu->second].push_back(Dart{2 * idx});
    incidence_[iv->second].push_back(Dart{2 * idx + 1});
    return idx;
  }

  void set_basepoint(const VertexId& id) { basepoint_ = require_vertex(id); }

  bool has_basepoint() const noexcept { return basepoint_ != kNoVertex; }

  std::uint32_t basepoint_index() const {
    if (!has_basepoint()) throw Error(ErrorCode::internal, "graph has no basepoint");
    return basepoint_;
  }
  const VertexId& basepoint() const { return vertex_ids_[basepoint_index()]; }

  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t dart_count() const noexcept { return 2 * edges_.size(); }

  bool has_vertex(const VertexId& id) const { return vertex_index_.count(id) != 0; }
  bool has_edge(const EdgeId& id) const { return edge_index_.count(id) != 0; }

  std::uint32_t vertex_index(const VertexId& id) const { return require_vertex(id); }
  std::uint32_t edge_index(const EdgeId& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) throw Error(ErrorCode::internal, "unknown edge '" + id + "'");
    return it->second;
  }

  const VertexId& vertex_id(std::uint32_t idx) const { return vertex_ids_.at(idx); }
  const std::vector<VertexId>& vertex_ids() const noexcept { return vertex_ids_; }
  const Edge& edge(std::uint32_t idx) const { return edges_.at(idx); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Dart with tail = endpoint u of its edge when not flipped.
  std::uint32_t tail(Dart d) const {
    const Edge& e = edges_[d.edge()];
    return d.flipped() ? e.v : e.u;
  }
  std::uint32_t head(Dart d) const {
    const Edge& e = edges_[d.edge()];
    return d.flipped() ? e.u : e.v;
  }

  std::size_t degree(std::uint32_t v) const { return degree_.at(v); }
  std::size_t degree(const VertexId& id) const { return degree_.at(require_vertex(id)); }

  /// Darts with tail v, in increasing dart-index order.
  const std::vector<Dart>& darts_out_of(std::uint32_t v) const { return incidence_.at(v); }

  bool is_connected() const {
    if (vertex_ids_.empty()) return true;
    std::vector<char> seen(vertex_ids_.size(), 0);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
      std::uint32_t v = q.front();
      q.pop();
      for (Dart d : incidence_[v]) {
        std::uint32_t w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          q.push(w);
        }
      }
    }
    return reached == vertex_ids_.size();
  }

  /// Connected components as lists of vertex indices.
  std::vector<std::vector<std::uint32_t>> components() const {
    std::vector<std::vector<std::uint32_t>> comps;
    std::vector<char> seen(vertex_ids_.size(), 0);
    for (std::uint32_t s = 0; s < vertex_ids_.size(); ++s) {
      if (seen[s]) continue;
      comps.emplace_back();
      std::queue<std::uint32_t> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        std::uint32_t v = q.front();
        q.pop();
        comps.back().push_back(v);
        for (Dart d : incidence_[v]) {
          std::uint32_t w = head(d);
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
    return comps;
  }

  /// True iff the graph is a single cycle: connected, at least one edge,
  /// every degree exactly 2. Covers loops (1-cycles) and 2-gons.
  bool is_single_cycle() const {
    if (edges_.empty()) return false;
    for (std::size_t d : degree_)
      if (d != 2) return false;
    return is_connected();
  }

  bool has_cycle() const {
    // More edges than a spanning forest can hold.
    return edge_count() + components().size() > vertex_count();
  }

  /// First Betti number (rank of the fundamental group): |E| - |V| + #components.
  long first_betti() const {
    return static_cast<long>(edge_count()) - static_cast<long>(vertex_count()) +
           static_cast<long>(components().size());
  }

  friend bool operator==(const BasedMultigraph& a, const BasedMultigraph& b) {
    if (a.rank_bound_ != b.rank_bound_ || a.basepoint_ != b.basepoint_) return false;
    if (a.vertex_ids_ != b.vertex_ids_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      if (a.edges_[i].id != b.edges_[i].id || a.edges_[i].u != b.edges_[i].u ||
          a.edges_[i].v != b.edges_[i].v)
        return false;
    }
    return true;
  }

 private:
  static constexpr std::uint32_t kNoVertex = 0xffffffffu;

  std::uint32_t require_vertex(const VertexId& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) throw Error(ErrorCode::internal, "unknown vertex '" + id + "'");
    return it->second;
  }

  int rank_bound_;
  std::vector<VertexId> vertex_ids_;
  std::unordered_map<VertexId, std::uint32_t> vertex_index_;
  std::vector<Edge> edges_;
  std::unordered_map<EdgeId, std::uint32_t> edge_index_;
  std::vector<std::size_t> degree_;
  std::vector<std::vector<Dart>> incidence_;  // per vertex, darts with that tail
  std::uint32_t basepoint_ = kNoVertex;
};

/// True iff every vertex and every edge of `sub` occurs in `super` with the
/// same endpoints. Used for truncation profiles and monotonicity checks.
inline bool is_subgraph_of(const BasedMultigraph& sub, const BasedMultigraph& super) {
  for (const auto& vid : sub.vertex_ids())
    if (!super.has_vertex(vid)) return false;
  for (const auto& e : sub.edges()) {
    if (!super.has_edge(e.id)) return false;
    const auto& se = super.edge(super.edge_index(e.id));
    const VertexId& u = sub.vertex_id(e.u);
    const VertexId& v = sub.vertex_id(e.v);
    const VertexId& su = super.vertex_id(se.u);
    const VertexId& sv = super.vertex_id(se.v);
    if (!((u == su && v == sv) || (u == sv && v == su))) return false;
  }
  return true;
}

/// Disjoint union of g1 and g2 joined by a fresh path of length k from u
/// (in g1) to v (in g2). g1 keeps its ids and basepoint; g2's ids are
/// prefixed "g{tag}_"; the path contributes vertices "p{tag}_1".."p{tag}_{k-1}"
/// and edges "pe{tag}_1".."pe{tag}_k" with edge t running w_{t-1} -> w_t.
inline BasedMultigraph disjoint_union_with_path(const BasedMultigraph& g1, const VertexId& u,
                                                const BasedMultigraph& g2, const VertexId& v,
                                                std::size_t k, const std::string& tag = "0") {
  if (k < 1) throw DomainError("path length k must be >= 1");
  if (!g1.has_vertex(u)) throw Error(ErrorCode::internal, "unknown vertex '" + u + "' in g1");
  if (!g2.has_vertex(v)) throw Error(ErrorCode::internal, "unknown vertex '" + v + "' in g2");
  if (g1.degree(u) >= 2 * static_cast<std::size_t>(g1.rank_bound()))
    throw DegreeOverflowError("vertex '" + u + "' has no free slot (degree " +
                              std::to_string(g1.degree(u)) + " = 2*rank)");
  if (g2.degree(v) >= 2 * static_cast<std::size_t>(g2.rank_bound()))
    throw DegreeOverflowError("vertex '" + v + "' has no free slot (degree " +
                              std::to_string(g2.degree(v)) + " = 2*rank)");

  BasedMultigraph out(std::max(g1.rank_bound(), g2.rank_bound()));
  for (const auto& vid : g1.vertex_ids()) out.add_vertex(vid);
  for (const auto& e : g1.edges()) out.add_edge(e.id, g1.vertex_id(e.u), g1.vertex_id(e.v));

  const std::string prefix = "g" + tag + "_";
  for (const auto& vid : g2.vertex_ids()) out.add_vertex(prefix + vid);
  for (const auto& e : g2.edges())
    out.add_edge(prefix + e.id, prefix + g2.vertex_id(e.u), prefix + g2.vertex_id(e.v));

  std::vector<VertexId> waypoints;
  waypoints.push_back(u);
  for (std::size_t i = 1; i < k; ++i) {
    VertexId wid = "p" + tag + "_" + std::to_string(i);
    out.add_vertex(wid);
    waypoints.push_back(wid);
  }
  waypoints.push_back(prefix + v);
  for (std::size_t t = 1; t <= k; ++t)
    out.add_edge("pe" + tag + "_" + std::to_string(t), waypoints[t - 1], waypoints[t]);

  if (g1.has_basepoint()) out.set_basepoint(g1.basepoint());
  return out;
}

}  // namespace nbg
