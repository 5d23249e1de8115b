#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/graph/adj_graph.hpp"

// Classical reference implementations with unrestricted space: explicit
// stacks, word-wide arrays. Ground truth for every equivalence test; none of
// this is audited.

namespace bitgraph::oracle {

struct RefDfsResult {
  std::vector<DfsEvent> events;
  std::vector<int64_t> parent;  // -1 for roots
  std::vector<uint32_t> depth;
  std::vector<uint32_t> discover_order, finish_order;
  bool cyclic = false;
  uint32_t witness_from = 0, witness_to = 0;

  /// True iff a is an ancestor of b (or equal) in the forest.
  bool is_ancestor(uint32_t a, uint32_t b) const {
    int64_t x = b;
    while (x >= 0) {
      if (static_cast<uint32_t>(x) == a) return true;
      x = parent[static_cast<uint32_t>(x)];
    }
    return false;
  }
};

/// Stack-based DFS with the same neighbor-order tie-breaking and the same
/// event vocabulary as the engine: restarts in increasing id, one skipped
/// twin per undirected tree edge (the first scanned occurrence of the
/// parent), undirected sightings of finished vertices silent.
inline RefDfsResult ref_dfs(const AdjGraph& g) {
  using T = DfsEvent::Type;
  const uint32_t n = g.num_vertices();
  const bool directed = g.directed();
  const auto off = g.fwd_offsets();
  const auto nbr = g.fwd_neighbors();

  RefDfsResult r;
  r.parent.assign(n, -1);
  r.depth.assign(n, 0);
  std::vector<uint8_t> color(n, 0);  // 0 white, 1 gray, 2 black
  struct Frame {
    uint32_t v;
    uint32_t idx;
    int64_t parent;
    bool twin_used;
  };
  std::vector<Frame> stack;
  auto note_cycle = [&](uint32_t u, uint32_t w) {
    if (!r.cyclic) {
      r.cyclic = true;
      r.witness_from = u;
      r.witness_to = w;
    }
  };

  for (uint32_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    r.events.push_back({T::new_root, root, 0, 0, NonTreeKind::back});
    color[root] = 1;
    r.events.push_back({T::discover, root, 0, 0, NonTreeKind::back});
    r.discover_order.push_back(root);
    stack.push_back({root, 0, -1, false});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const uint32_t v = fr.v;
      if (fr.idx < off[v + 1] - off[v]) {
        const uint64_t s = off[v] + fr.idx++;
        const uint32_t w = nbr[s];
        if (!directed && !fr.twin_used && fr.parent >= 0 &&
            w == static_cast<uint32_t>(fr.parent)) {
          fr.twin_used = true;
          continue;
        }
        if (w == v) {
          if (directed) note_cycle(v, w);
          r.events.push_back({T::non_tree_edge, v, w, s, NonTreeKind::parallel_or_self});
          continue;
        }
        if (color[w] == 0) {
          color[w] = 1;
          r.parent[w] = v;
          r.depth[w] = r.depth[v] + 1;
          r.events.push_back({T::tree_edge, v, w, s, NonTreeKind::back});
          r.events.push_back({T::discover, w, 0, 0, NonTreeKind::back});
          r.discover_order.push_back(w);
          stack.push_back({w, 0, static_cast<int64_t>(v), false});
          continue;
        }
        if (directed) {
          if (color[w] == 1) {
            note_cycle(v, w);
            r.events.push_back({T::non_tree_edge, v, w, s, NonTreeKind::back});
          } else {
            r.events.push_back({T::non_tree_edge, v, w, s, NonTreeKind::forward_or_cross});
          }
          continue;
        }
        if (color[w] == 1)
          r.events.push_back({T::non_tree_edge, v, w, s, NonTreeKind::back});
        continue;
      }
      color[v] = 2;
      r.events.push_back({T::finish, v, 0, 0, NonTreeKind::back});
      r.finish_order.push_back(v);
      if (fr.parent >= 0)
        r.events.push_back(
            {T::retreat, v, static_cast<uint32_t>(fr.parent), 0, NonTreeKind::back});
      stack.pop_back();
    }
  }
  return r;
}

using EdgeSet = std::set<std::pair<uint32_t, uint32_t>>;

/// Low-point bridge finder (undirected, multigraph-correct: exactly one
/// parent occurrence skipped per tree edge).
inline EdgeSet ref_bridges(const AdjGraph& g) {
  assert(!g.directed());
  const uint32_t n = g.num_vertices();
  const auto off = g.fwd_offsets();
  const auto nbr = g.fwd_neighbors();
  std::vector<int64_t> disc(n, -1), low(n, 0);
  EdgeSet out;
  struct Frame {
    uint32_t v;
    uint32_t idx;
    int64_t parent;
    bool twin_used;
  };
  std::vector<Frame> stack;
  uint64_t timer = 0;
  for (uint32_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = static_cast<int64_t>(timer++);
    stack.push_back({root, 0, -1, false});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const uint32_t v = fr.v;
      if (fr.idx < off[v + 1] - off[v]) {
        const uint32_t w = nbr[off[v] + fr.idx++];
        if (!fr.twin_used && fr.parent >= 0 && w == static_cast<uint32_t>(fr.parent)) {
          fr.twin_used = true;
          continue;
        }
        if (disc[w] == -1) {
          disc[w] = low[w] = static_cast<int64_t>(timer++);
          stack.push_back({w, 0, static_cast<int64_t>(v), false});
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (fr.parent >= 0) {
        const auto p = static_cast<uint32_t>(fr.parent);
        low[p] = std::min(low[p], low[v]);
        if (low[v] > disc[p]) out.insert(std::minmax(p, v));
      }
    }
  }
  return out;
}

/// Low-point articulation points (undirected); kept for cross-checks.
inline std::vector<bool> ref_articulation_points(const AdjGraph& g) {
  assert(!g.directed());
  const uint32_t n = g.num_vertices();
  const auto off = g.fwd_offsets();
  const auto nbr = g.fwd_neighbors();
  std::vector<int64_t> disc(n, -1), low(n, 0);
  std::vector<uint32_t> root_children(n, 0);
  std::vector<bool> cut(n, false);
  struct Frame {
    uint32_t v;
    uint32_t idx;
    int64_t parent;
    bool twin_used;
  };
  std::vector<Frame> stack;
  uint64_t timer = 0;
  for (uint32_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = static_cast<int64_t>(timer++);
    stack.push_back({root, 0, -1, false});
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const uint32_t v = fr.v;
      if (fr.idx < off[v + 1] - off[v]) {
        const uint32_t w = nbr[off[v] + fr.idx++];
        if (!fr.twin_used && fr.parent >= 0 && w == static_cast<uint32_t>(fr.parent)) {
          fr.twin_used = true;
          continue;
        }
        if (disc[w] == -1) {
          if (v == root) ++root_children[root];
          disc[w] = low[w] = static_cast<int64_t>(timer++);
          stack.push_back({w, 0, static_cast<int64_t>(v), false});
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      if (fr.parent >= 0) {
        const auto p = static_cast<uint32_t>(fr.parent);
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) cut[p] = true;
      }
    }
    cut[root] = root_children[root] > 1;
  }
  return cut;
}

/// Kosaraju with an explicit order array: component label per vertex, ids in
/// discovery order of the transposed pass.
inline std::vector<uint32_t> ref_scc(const AdjGraph& g) {
  assert(g.directed());
  const uint32_t n = g.num_vertices();
  const auto finish = ref_dfs(g).finish_order;
  const auto roff = g.rev_offsets();
  const auto rnbr = g.rev_neighbors();
  std::vector<uint32_t> label(n, 0);
  std::vector<bool> seen(n, false);
  uint32_t next_label = 0;
  std::vector<uint32_t> stack;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (seen[*it]) continue;
    const uint32_t id = next_label++;
    stack.push_back(*it);
    seen[*it] = true;
    while (!stack.empty()) {
      const uint32_t v = stack.back();
      stack.pop_back();
      label[v] = id;
      for (uint32_t j = roff[v]; j < roff[v + 1]; ++j) {
        const uint32_t w = rnbr[j];
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return label;
}

/// Kahn's algorithm, smallest-id-first; none on a cyclic input.
inline std::optional<std::vector<uint32_t>> ref_toposort(const AdjGraph& g) {
  assert(g.directed());
  const uint32_t n = g.num_vertices();
  std::vector<uint32_t> indeg(n, 0);
  for (uint32_t v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> ready;
  for (uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<uint32_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    const uint32_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (uint32_t w : g.neighbors(v))
      if (--indeg[w] == 0) ready.push(w);
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

namespace detail {
class Dsu {
 public:
  explicit Dsu(uint32_t n) : parent_(n) {
    for (uint32_t i = 0; i < n; ++i) parent_[i] = i;
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<uint32_t> parent_;
};
}  // namespace detail

inline uint32_t component_count(const AdjGraph& g) {
  detail::Dsu dsu(g.num_vertices());
  uint32_t comps = g.num_vertices();
  for (auto [u, v] : g.edges())
    if (u != v && dsu.unite(u, v)) --comps;
  return comps;
}

/// Edge-deletion brute force: an edge is a bridge iff removing that one copy
/// increases the component count. Needs the retained edge sequence.
inline EdgeSet brute_bridges(const AdjGraph& g) {
  assert(!g.directed() && g.has_edge_list());
  const auto edges = g.edges();
  const uint32_t base = component_count(g);
  EdgeSet out;
  for (size_t skip = 0; skip < edges.size(); ++skip) {
    if (edges[skip].first == edges[skip].second) continue;
    detail::Dsu dsu(g.num_vertices());
    uint32_t comps = g.num_vertices();
    for (size_t i = 0; i < edges.size(); ++i) {
      if (i == skip) continue;
      auto [u, v] = edges[i];
      if (u != v && dsu.unite(u, v)) --comps;
    }
    if (comps > base) out.insert(std::minmax(edges[skip].first, edges[skip].second));
  }
  return out;
}

/// Transitive-closure partition: u and v share a class iff mutually
/// reachable. Labels are first-seen order by vertex id.
inline std::vector<uint32_t> brute_scc(const AdjGraph& g) {
  assert(g.directed());
  const uint32_t n = g.num_vertices();
  const uint32_t words = (n + 63) / 64;
  std::vector<uint64_t> reach(static_cast<size_t>(n) * words, 0);
  std::vector<uint32_t> stack;
  for (uint32_t s = 0; s < n; ++s) {
    uint64_t* row = reach.data() + static_cast<size_t>(s) * words;
    stack.push_back(s);
    row[s / 64] |= uint64_t{1} << (s % 64);
    while (!stack.empty()) {
      const uint32_t v = stack.back();
      stack.pop_back();
      for (uint32_t w : g.neighbors(v)) {
        if (!(row[w / 64] >> (w % 64) & 1)) {
          row[w / 64] |= uint64_t{1} << (w % 64);
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<uint32_t> label(n, UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t u = 0; u < n; ++u) {
    if (label[u] != UINT32_MAX) continue;
    label[u] = next;
    const uint64_t* ru = reach.data() + static_cast<size_t>(u) * words;
    for (uint32_t v = u + 1; v < n; ++v) {
      const uint64_t* rv = reach.data() + static_cast<size_t>(v) * words;
      const bool uv = ru[v / 64] >> (v % 64) & 1;
      const bool vu = rv[u / 64] >> (u % 64) & 1;
      if (uv && vu) label[v] = next;
    }
    ++next;
  }
  return label;
}

}  // namespace bitgraph::oracle
