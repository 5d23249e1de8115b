#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bitgraph/audit/space_ledger.hpp"
#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/dfs/forest.hpp"
#include "bitgraph/graph/adj_graph.hpp"

namespace bitgraph {

struct BridgeResult {
  std::vector<std::pair<uint32_t, uint32_t>> bridges;  // (parent, child) tree edges
  uint64_t chain_count = 0;
  bool connected = false;
  bool two_edge_connected = false;
  // Work counters, exposed for the linearity bound tests.
  uint64_t walk_steps = 0;
  uint64_t back_edge_traversals = 0;
};

/// Bridges of an undirected graph from its frozen DFS forest.
///
/// Chain-decomposition replay over the stored forest, no stack: the forest
/// is walked in preorder using the static tree marks (children by forward
/// range scans, ascent via the parent marks, resume positions in the reused
/// cursor array). At each vertex u the whole segment is scanned once; every
/// non-tree slot whose neighbor w is not yet preorder-visited leads down to
/// a descendant (undirected DFS has only ancestor/descendant non-tree
/// edges), and the tree path is walked from w upward, marking vertices and
/// their parent edges, until an already chain-visited vertex stops the
/// chain. A tree edge ends up marked iff some back edge from the child's
/// subtree reaches the parent or above, so the unmarked ones are exactly the
/// bridges.
///
/// Any chain that could cover the edge above v starts at a strict ancestor
/// of v, whose preorder turn comes first; so when v is visited its parent
/// edge's fate is already sealed, bridges stream out in preorder and a
/// 2-edge-connectivity test may stop at the first one.
inline BridgeResult find_bridges(const AdjGraph& g, DfsForest& f, SpaceLedger* ledger = nullptr,
                                 bool stop_at_first_bridge = false) {
  if (g.directed()) throw std::invalid_argument("find_bridges: directed input");
  const uint32_t n = g.num_vertices();
  const auto off = g.fwd_offsets();
  const auto nbr = g.fwd_neighbors();

  BridgeResult out;
  out.connected = (f.root_count == 1);
  out.two_edge_connected = out.connected && n >= 2;

  MarkVec preorder_visited(n), chain_visited(n), tree_edge_used(n);
  if (ledger) {
    ledger->ensure_register_bucket();
    ledger->on_alloc("preorder_visited", preorder_visited.bits_of(), SpaceLedger::Index::vertex, 1);
    ledger->on_alloc("chain_visited", chain_visited.bits_of(), SpaceLedger::Index::vertex, 1);
    ledger->on_alloc("tree_edge_used", tree_edge_used.bits_of(), SpaceLedger::Index::vertex, 1);
  }
  f.cursors.reset_all();

  // Called once per vertex, in preorder.
  const auto visit = [&](uint32_t u) -> bool {
    preorder_visited.set1(u);
    if (!f.roots.access(u) && !tree_edge_used.access(u)) {
      out.bridges.emplace_back(*f.parent_of(g, u), u);
      out.two_edge_connected = false;
      if (stop_at_first_bridge) return false;
    }
    for (uint64_t s = off[u]; s < off[u + 1]; ++s) {
      if (f.tree_marks.access(s)) continue;   // tree edge to a child
      if (f.parent_marks.access(s)) continue; // the designated link to u's parent
      const uint32_t w = nbr[s];
      if (w == u || preorder_visited.access(w)) continue;
      // Down edge to a descendant: walk its chain.
      ++out.chain_count;
      ++out.back_edge_traversals;
      if (!chain_visited.access(u)) chain_visited.set1(u);  // roots a chain, edge above untouched
      uint32_t x = w;
      while (!chain_visited.access(x)) {
        chain_visited.set1(x);
        tree_edge_used.set1(x);
        ++out.walk_steps;
        x = *f.parent_of(g, x);
      }
    }
    return true;
  };

  // Preorder over the forest: roots in increasing id, children left to
  // right via the next tree mark at or after the stored cursor.
  for (uint32_t r = 0; r < n; ++r) {
    if (!f.roots.access(r)) continue;
    uint32_t cur = r;
    if (!visit(cur)) return out;
    while (true) {
      const uint64_t lo = off[cur], hi = off[cur + 1];
      const auto field = f.cursors.field(cur);
      const uint64_t pos = lo + f.cursors.get(field);
      if (const auto s = f.tree_marks.leftmost_set_in_range(pos, hi)) {
        f.cursors.set(field, *s + 1 - lo);
        cur = nbr[*s];
        if (!visit(cur)) return out;
        continue;
      }
      if (cur == r) break;
      cur = *f.parent_of(g, cur);
    }
  }
  return out;
}

/// True iff g is connected, has at least two vertices, and has no bridge.
/// Runs its own DFS pass and exits on the first bridge witness.
inline bool two_ec_test(const AdjGraph& g, SpaceLedger* ledger = nullptr) {
  if (g.directed()) throw std::invalid_argument("two_ec_test: directed input");
  DfsForest f = dfs_run(g, ledger);
  if (f.root_count != 1 || g.num_vertices() < 2) return false;
  return find_bridges(g, f, ledger, /*stop_at_first_bridge=*/true).two_edge_connected;
}

}  // namespace bitgraph
