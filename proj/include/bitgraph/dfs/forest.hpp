#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "bitgraph/bits/bitvec.hpp"
#include "bitgraph/bits/cursor_array.hpp"
#include "bitgraph/bits/markvec.hpp"
#include "bitgraph/graph/adj_graph.hpp"

namespace bitgraph {

/// Frozen result of a traversal pass. Reads are safe concurrently, but
/// re-walks that reuse the cursor array (RpoStream, find_bridges) must be
/// sequential.
///
/// tree_marks has one bit per scan-side adjacency slot, set where the slot's
/// edge became a tree edge. parent_marks lives on the child's own segments
/// (forward slots for undirected graphs, in-neighbor slots for directed
/// ones): each non-root vertex has exactly one mark, at a slot whose
/// neighbor is its parent, so parent lookup is a bounded segment scan and no
/// cross references between adjacency arrays are ever needed.
struct DfsForest {
  bool directed = false;
  bool reverse_orientation = false;  // true for a transposed-graph pass
  BitVec tree_marks;                 // scan-side slots, static after freeze
  MarkVec parent_marks;              // parent-side slots
  MarkVec roots, visited, finished;  // n bits each
  CursorArray cursors;               // scan positions, reusable by re-walks
  uint32_t root_count = 0;
  bool cyclic = false;               // directed runs: some non-tree edge hit a gray vertex
  uint32_t witness_from = 0, witness_to = 0;

  std::span<const uint32_t> scan_offsets(const AdjGraph& g) const {
    return reverse_orientation ? g.rev_offsets() : g.fwd_offsets();
  }
  std::span<const uint32_t> scan_neighbors(const AdjGraph& g) const {
    return reverse_orientation ? g.rev_neighbors() : g.fwd_neighbors();
  }
  std::span<const uint32_t> parent_offsets(const AdjGraph& g) const {
    if (!directed) return g.fwd_offsets();
    return reverse_orientation ? g.fwd_offsets() : g.rev_offsets();
  }
  std::span<const uint32_t> parent_neighbors(const AdjGraph& g) const {
    if (!directed) return g.fwd_neighbors();
    return reverse_orientation ? g.fwd_neighbors() : g.rev_neighbors();
  }

  /// Parent in the forest, none for roots. Throws if v was never visited.
  std::optional<uint32_t> parent_of(const AdjGraph& g, uint32_t v) const {
    if (v >= visited.size() || !visited.access(v))
      throw std::logic_error("DfsForest::parent_of: vertex not visited");
    if (roots.access(v)) return std::nullopt;
    const auto off = parent_offsets(g);
    const auto s = parent_marks.leftmost_set_in_range(off[v], off[v + 1]);
    assert(s.has_value());
    return parent_neighbors(g)[*s];
  }
};

}  // namespace bitgraph
