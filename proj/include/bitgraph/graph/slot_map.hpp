#pragma once

#include <cassert>
#include <cstdint>
#include <utility>

#include "bitgraph/bits/bitvec.hpp"
#include "bitgraph/graph/adj_graph.hpp"

namespace bitgraph {

/// Bijection between global edge-slot positions and (vertex, local index)
/// pairs, realized as the unary degree sequence: d_v zeros then a one per
/// vertex, n + S bits total for S slots.
///
/// The same segment boundaries are available as the adjacency offsets of the
/// input representation; SlotMap is the bit-level view of them and the two
/// are cross-checked in tests.
class SlotMap {
 public:
  SlotMap() = default;

  template <class DegFn>
  SlotMap(uint32_t n, DegFn&& degree_of) : n_(n) {
    BitBuilder b;
    for (uint32_t v = 0; v < n; ++v) {
      const uint32_t d = degree_of(v);
      b.append_zeros(d);
      b.push_back(true);
      slots_ += d;
    }
    boundary_ = std::move(b).build();
  }

  /// Forward (out-neighbor) slot map of a graph.
  static SlotMap forward(const AdjGraph& g) {
    return SlotMap(g.num_vertices(), [&](uint32_t v) { return g.degree(v); });
  }
  /// Reverse (in-neighbor) slot map; directed graphs only.
  static SlotMap reverse(const AdjGraph& g) {
    return SlotMap(g.num_vertices(), [&](uint32_t v) { return g.in_degree(v); });
  }

  uint32_t num_vertices() const { return n_; }
  uint64_t num_slots() const { return slots_; }

  /// Half-open slot range [lo, hi) of vertex v; hi - lo is its degree.
  std::pair<uint64_t, uint64_t> segment(uint32_t v) const {
    assert(v < n_);
    const uint64_t lo = v == 0 ? 0 : *boundary_.select1(v) - (v - 1);
    const uint64_t hi = *boundary_.select1(v + 1) - v;
    return {lo, hi};
  }

  uint64_t slot_of(uint32_t v, uint32_t local) const {
    const auto [lo, hi] = segment(v);
    assert(lo + local < hi);
    return lo + local;
  }

  /// Inverse of slot_of: the vertex owning slot s and s's local index.
  std::pair<uint32_t, uint32_t> slot_to_vertex(uint64_t s) const {
    assert(s < slots_);
    const uint64_t pos = *boundary_.select0(s + 1);
    const uint32_t v = static_cast<uint32_t>(pos - s);  // ones before pos
    const uint64_t lo = v == 0 ? 0 : *boundary_.select1(v) - (v - 1);
    return {v, static_cast<uint32_t>(s - lo)};
  }

  uint64_t bits_of() const { return boundary_.bits_of(); }

 private:
  uint32_t n_ = 0;
  uint64_t slots_ = 0;
  BitVec boundary_;
};

}  // namespace bitgraph
