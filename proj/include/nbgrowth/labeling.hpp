#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "nbgrowth/graph.hpp"

namespace nbg {

/// Letter (1..r) and direction for one edge. flip == false means the
/// positive dart of edge e is dart 2e (endpoint u -> endpoint v); reading
/// the positive dart yields the letter with sign +, the reverse dart with
/// sign -.
struct EdgeLabel {
  int letter = 1;
  bool flip = false;

  friend bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
    return a.letter == b.letter && a.flip == b.flip;
  }
};

/// Edge -> (letter, direction) assignment. Proper (an immersion into the
/// bouquet B_r) iff at every vertex each letter decorates at most one
/// outgoing and at most one incoming positive dart.
class Labeling {
 public:
  void set(const EdgeId& e, EdgeLabel l) { map_[e] = l; }
  bool has(const EdgeId& e) const { return map_.count(e) != 0; }
  const EdgeLabel& at(const EdgeId& e) const {
    auto it = map_.find(e);
    if (it == map_.end()) throw Error(ErrorCode::internal, "edge '" + e + "' missing from labeling");
    return it->second;
  }
  std::size_t size() const noexcept { return map_.size(); }
  const std::map<EdgeId, EdgeLabel>& entries() const noexcept { return map_; }

  /// Positive dart of edge index e under this labeling.
  Dart positive_dart(const BasedMultigraph& g, std::uint32_t e) const {
    return at(g.edge(e).id).flip ? Dart{2 * e + 1} : Dart{2 * e};
  }

  /// Reverse every direction; properness is preserved (in and out slots swap).
  Labeling flipped() const {
    Labeling out = *this;
    for (auto& [id, l] : out.map_) l.flip = !l.flip;
    return out;
  }

  /// Apply a letter permutation perm (1-based, perm[letter-1] = new letter).
  Labeling permuted(const std::vector<int>& perm) const {
    Labeling out = *this;
    for (auto& [id, l] : out.map_) l.letter = perm.at(static_cast<std::size_t>(l.letter) - 1);
    return out;
  }

  /// Re-key every edge id through `rename` (used when a labeled block is
  /// copied into a glued graph under prefixed ids).
  template <typename Fn>
  Labeling rekeyed(Fn&& rename) const {
    Labeling out;
    for (const auto& [id, l] : map_) out.set(rename(id), l);
    return out;
  }

  friend bool operator==(const Labeling& a, const Labeling& b) { return a.map_ == b.map_; }

 private:
  std::map<EdgeId, EdgeLabel> map_;  // ordered: deterministic iteration
};

struct LabelViolation {
  VertexId vertex;
  int letter = 0;
  bool incoming = false;  // true: two incoming darts clash, false: two outgoing
  EdgeId first, second;
};

struct VerifyResult {
  bool ok = true;
  std::vector<LabelViolation> violations;
};

/// Checks local injectivity of L on g with alphabet size r. Every edge of g
/// must be assigned; letters must lie in 1..r.
inline VerifyResult verify_labeling(const BasedMultigraph& g, const Labeling& L, int r) {
  VerifyResult res;
  // slot[v][letter-1] -> edge id currently holding that slot
  std::vector<std::vector<EdgeId>> out_slot(g.vertex_count(), std::vector<EdgeId>(r));
  std::vector<std::vector<EdgeId>> in_slot(g.vertex_count(), std::vector<EdgeId>(r));
  for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
    const EdgeId& id = g.edge(e).id;
    if (!L.has(id)) throw Error(ErrorCode::internal, "edge '" + id + "' missing from labeling");
    const EdgeLabel& l = L.at(id);
    if (l.letter < 1 || l.letter > r)
      throw DomainError("edge '" + id + "' carries letter " + std::to_string(l.letter) +
                        " outside 1.." + std::to_string(r));
    Dart pos = l.flip ? Dart{2 * e + 1} : Dart{2 * e};
    std::uint32_t t = g.tail(pos), h = g.head(pos);
    auto& out_cell = out_slot[t][l.letter - 1];
    if (out_cell.empty()) {
      out_cell = id;
    } else {
      res.ok = false;
      res.violations.push_back({g.vertex_id(t), l.letter, false, out_cell, id});
    }
    auto& in_cell = in_slot[h][l.letter - 1];
    if (in_cell.empty()) {
      in_cell = id;
    } else {
      res.ok = false;
      res.violations.push_back({g.vertex_id(h), l.letter, true, in_cell, id});
    }
  }
  return res;
}

namespace detail {

/// Euler orientation of every edge: each connected component is made even by
/// pairing odd-degree vertices through a dummy vertex, an Euler circuit is
/// traced (edges scanned in ascending edge-id order), and real edges keep
/// their traversal direction. Afterwards in- and out-degree differ by at
/// most one at every vertex. Returns tail vertex index per edge.
inline std::vector<std::uint32_t> euler_orientation(const BasedMultigraph& g) {
  const std::size_t V = g.vertex_count();
  const std::size_t E = g.edge_count();

  // Combined edge list: real edges then dummy edges (sorted last on scan).
  struct HalfEdge {
    std::uint32_t other;
    std::uint32_t edge;  // combined index
  };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> combined;  // (u, v)
  combined.reserve(E + V);
  for (const auto& e : g.edges()) combined.emplace_back(e.u, e.v);

  auto comps = g.components();
  std::uint32_t next_vertex = static_cast<std::uint32_t>(V);
  for (const auto& comp : comps) {
    std::vector<std::uint32_t> odd;
    for (std::uint32_t v : comp)
      if (g.degree(v) % 2 == 1) odd.push_back(v);
    if (odd.empty()) continue;
    std::uint32_t dummy = next_vertex++;
    for (std::uint32_t v : odd) combined.emplace_back(dummy, v);
  }
  const std::size_t VN = next_vertex;

  // Incidence sorted by (edge id asc, dummies last). Dummy edges keep
  // combined-index order, which is already deterministic.
  std::vector<std::uint32_t> real_order(E);
  std::iota(real_order.begin(), real_order.end(), 0u);
  std::sort(real_order.begin(), real_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return g.edge(a).id < g.edge(b).id;
  });
  std::vector<std::uint32_t> scan_rank(combined.size());
  for (std::size_t i = 0; i < E; ++i) scan_rank[real_order[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t i = E; i < combined.size(); ++i) scan_rank[i] = static_cast<std::uint32_t>(i);

  std::vector<std::vector<HalfEdge>> inc(VN);
  for (std::uint32_t ce = 0; ce < combined.size(); ++ce) {
    auto [u, v] = combined[ce];
    inc[u].push_back({v, ce});
    if (v != u) inc[v].push_back({u, ce});
  }
  for (auto& lst : inc)
    std::sort(lst.begin(), lst.end(), [&](const HalfEdge& a, const HalfEdge& b) {
      return scan_rank[a.edge] < scan_rank[b.edge];
    });

  std::vector<std::uint32_t> tail(E, 0);
  std::vector<char> used(combined.size(), 0);
  std::vector<std::size_t> ptr(VN, 0);

  for (const auto& comp : comps) {
    // Start at the component vertex with the smallest id string that has an edge.
    std::uint32_t start = comp[0];
    bool seen = false;
    for (std::uint32_t v : comp) {
      if (inc[v].empty()) continue;
      if (!seen || g.vertex_id(v) < g.vertex_id(start)) {
        start = v;
        seen = true;
      }
    }
    if (!seen) continue;  // isolated vertex

    // Hierholzer, iterative. Stack holds (vertex, arrival edge); in pop
    // order, the arrival edge of one entry connects it to the next pop.
    std::vector<std::pair<std::uint32_t, std::int64_t>> stack;
    std::vector<std::pair<std::uint32_t, std::int64_t>> walk;
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
      std::uint32_t v = stack.back().first;
      while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]].edge]) ++ptr[v];
      if (ptr[v] == inc[v].size()) {
        walk.push_back(stack.back());
        stack.pop_back();
      } else {
        const HalfEdge& he = inc[v][ptr[v]];
        used[he.edge] = 1;
        stack.emplace_back(he.other, he.edge);
      }
    }
    // In pop order walk[i] = (v_i, e_i) with edge e_i running v_i -> v_{i+1};
    // dummy edges (index >= E) and the start marker (-1) are skipped.
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      std::int64_t ce = walk[i].second;
      if (ce < 0 || static_cast<std::size_t>(ce) >= E) continue;
      tail[static_cast<std::size_t>(ce)] = walk[i].first;
    }
  }
  return tail;
}

}  // namespace detail

/// Produces a proper labeling of g into B_r via an Euler orientation
/// followed by r-edge-coloring of the out-slot/in-slot bipartite multigraph
/// (Koenig alternating-path augmentation). Deterministic: all scans run in
/// ascending edge-id order. Throws UnlabelableError when some degree
/// exceeds 2r.
inline Labeling proper_label(const BasedMultigraph& g, int r) {
  if (r < 1) throw DomainError("alphabet size r must be positive");
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 2 * static_cast<std::size_t>(r))
      throw UnlabelableError("vertex '" + g.vertex_id(v) + "' has degree " +
                                 std::to_string(g.degree(v)) + " > 2r = " + std::to_string(2 * r),
                             g.vertex_id(v));

  const std::size_t E = g.edge_count();
  std::vector<std::uint32_t> tail = detail::euler_orientation(g);

  // Bipartite coloring on out/in slot nodes: node 2v = out(v), 2v+1 = in(v).
  const std::size_t N = 2 * g.vertex_count();
  const int R = r;
  std::vector<std::vector<std::int64_t>> slot(N, std::vector<std::int64_t>(R, -1));
  std::vector<int> color(E, -1);
  std::vector<std::uint32_t> endx(E), endy(E);  // out-node, in-node per edge

  std::vector<std::uint32_t> order(E);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return g.edge(a).id < g.edge(b).id; });

  auto lowest_free = [&](std::uint32_t node) {
    for (int c = 0; c < R; ++c)
      if (slot[node][c] < 0) return c;
    return -1;
  };

  for (std::uint32_t e : order) {
    const auto& ed = g.edge(e);
    std::uint32_t t = tail[e];
    std::uint32_t h = (t == ed.u) ? ed.v : ed.u;
    if (ed.u == ed.v) h = ed.u;  // loop
    std::uint32_t x = 2 * t, y = 2 * h + 1;
    endx[e] = x;
    endy[e] = y;
    int a = lowest_free(x);
    int b = lowest_free(y);
    if (a < 0 || b < 0) throw Error(ErrorCode::internal, "slot overflow during edge coloring");
    if (a != b) {
      if (slot[x][b] < 0) {
        a = b;  // b free at both ends
      } else if (slot[y][a] >= 0) {
        // Flip the maximal (a,b)-alternating chain starting at y with color a.
        std::vector<std::int64_t> chain;
        std::uint32_t cur = y;
        int col = a;
        while (slot[cur][col] >= 0) {
          std::int64_t f = slot[cur][col];
          chain.push_back(f);
          std::uint32_t fe = static_cast<std::uint32_t>(f);
          cur = (endx[fe] == cur) ? endy[fe] : endx[fe];
          col = (col == a) ? b : a;
        }
        for (std::int64_t f : chain) {
          std::uint32_t fe = static_cast<std::uint32_t>(f);
          slot[endx[fe]][color[fe]] = -1;
          slot[endy[fe]][color[fe]] = -1;
        }
        for (std::int64_t f : chain) {
          std::uint32_t fe = static_cast<std::uint32_t>(f);
          color[fe] = (color[fe] == a) ? b : a;
          slot[endx[fe]][color[fe]] = f;
          slot[endy[fe]][color[fe]] = f;
        }
        if (slot[x][a] >= 0 || slot[y][a] >= 0)
          throw Error(ErrorCode::internal, "alternating chain left no free slot");
      }
      // else: a is free at y too.
    }
    color[e] = a;
    slot[x][a] = e;
    slot[y][a] = e;
  }

  Labeling L;
  for (std::uint32_t e = 0; e < E; ++e) {
    const auto& ed = g.edge(e);
    bool flip = (ed.u != ed.v) && (tail[e] == ed.v);
    L.set(ed.id, EdgeLabel{color[e] + 1, flip});
  }

  auto check = verify_labeling(g, L, r);
  if (!check.ok) throw Error(ErrorCode::internal, "proper_label produced an improper labeling");
  return L;
}

/// Letters with a free out (respectively in) slot at v under L, ascending.
inline std::vector<int> free_out_letters(const BasedMultigraph& g, const Labeling& L, std::uint32_t v,
                                         int r) {
  std::vector<char> used(static_cast<std::size_t>(r) + 1, 0);
  for (Dart d : g.darts_out_of(v)) {
    const EdgeLabel& l = L.at(g.edge(d.edge()).id);
    Dart pos = l.flip ? Dart{2 * d.edge() + 1} : Dart{2 * d.edge()};
    if (pos == d) used[l.letter] = 1;  // positive dart leaves v
  }
  std::vector<int> out;
  for (int c = 1; c <= r; ++c)
    if (!used[c]) out.push_back(c);
  return out;
}

inline std::vector<int> free_in_letters(const BasedMultigraph& g, const Labeling& L, std::uint32_t v,
                                        int r) {
  std::vector<char> used(static_cast<std::size_t>(r) + 1, 0);
  for (Dart d : g.darts_out_of(v)) {
    const EdgeLabel& l = L.at(g.edge(d.edge()).id);
    Dart pos = l.flip ? Dart{2 * d.edge() + 1} : Dart{2 * d.edge()};
    if (pos == d.reverse()) used[l.letter] = 1;  // positive dart enters v
  }
  std::vector<int> out;
  for (int c = 1; c <= r; ++c)
    if (!used[c]) out.push_back(c);
  return out;
}

}  // namespace nbg
