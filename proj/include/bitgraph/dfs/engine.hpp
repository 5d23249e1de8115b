#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "bitgraph/audit/space_ledger.hpp"
#include "bitgraph/dfs/forest.hpp"
#include "bitgraph/graph/adj_graph.hpp"

namespace bitgraph {

enum class NonTreeKind : uint8_t { back, forward_or_cross, parallel_or_self };

struct DfsEvent {
  enum class Type : uint8_t { new_root, discover, tree_edge, non_tree_edge, retreat, finish };
  Type type;
  uint32_t a = 0;              // the vertex, or the edge tail
  uint32_t b = 0;              // edge head; retreat target
  uint64_t slot = 0;           // scan-side slot for edge events
  NonTreeKind kind = NonTreeKind::back;

  bool operator==(const DfsEvent&) const = default;
};

/// Iterative DFS over an adjacency-array graph, no cross pointers, no vertex
/// stack. Pull one event at a time with next().
///
/// Working state is exactly: tree marks over scan slots, parent marks over
/// the child-side slots, three n-bit vectors (roots, visited, finished), a
/// packed cursor array of per-vertex scan positions, and O(lg n)-bit
/// registers. Backtracking recovers the parent by scanning the finished
/// vertex's own parent-side segment for its single mark, and resumes the
/// parent's scan at its stored cursor; debug builds assert that this cursor
/// equals one past the rightmost tree mark in the parent's segment.
///
/// Restarts sweep unvisited vertices in increasing id (auto_sweep), or are
/// injected with start_root() for driver-controlled passes.
class DfsEngine {
 public:
  enum class Side { forward, reverse };

  DfsEngine(const AdjGraph& g, Side side = Side::forward, SpaceLedger* ledger = nullptr,
            bool auto_sweep = true)
      : n_(g.num_vertices()),
        directed_(g.directed()),
        reverse_(side == Side::reverse),
        auto_sweep_(auto_sweep),
        ledger_(ledger) {
    assert(!reverse_ || directed_);
    s_off_ = reverse_ ? g.rev_offsets() : g.fwd_offsets();
    s_nbr_ = reverse_ ? g.rev_neighbors() : g.fwd_neighbors();
    p_off_ = directed_ ? (reverse_ ? g.fwd_offsets() : g.rev_offsets()) : g.fwd_offsets();
    p_nbr_ = directed_ ? (reverse_ ? g.fwd_neighbors() : g.rev_neighbors()) : g.fwd_neighbors();
    twin_skip_ = !directed_;  // undirected: parent marks live on the scan side

    tree_marks_ = MarkVec(n_ ? s_off_[n_] : 0);
    parent_marks_ = MarkVec(n_ ? p_off_[n_] : 0);
    roots_ = MarkVec(n_);
    visited_ = MarkVec(n_);
    finished_ = MarkVec(n_);
    cursors_ = CursorArray(n_, [&](uint32_t v) { return s_off_[v + 1] - s_off_[v]; });
    if (ledger_) {
      ledger_->ensure_register_bucket();
      ledger_->on_alloc("tree_marks", tree_marks_.bits_of(), SpaceLedger::Index::slot, 1);
      ledger_->on_alloc("parent_marks", parent_marks_.bits_of(), SpaceLedger::Index::slot, 1);
      ledger_->on_alloc("roots", roots_.bits_of(), SpaceLedger::Index::vertex, 1);
      ledger_->on_alloc("visited", visited_.bits_of(), SpaceLedger::Index::vertex, 1);
      ledger_->on_alloc("finished", finished_.bits_of(), SpaceLedger::Index::vertex, 1);
      ledger_->on_alloc("cursors", cursors_.bits_of(), SpaceLedger::Index::vertex, 0);
    }
  }

  std::optional<DfsEvent> next() {
    if (pend_i_ < pend_n_) return pend_[pend_i_++];
    pend_i_ = pend_n_ = 0;
    if (!active_) {
      if (!auto_sweep_) return std::nullopt;
      while (sweep_ < n_ && visited_.access(sweep_)) ++sweep_;
      if (sweep_ == n_) return std::nullopt;
      begin_root(sweep_);
      return pend_[pend_i_++];
    }
    return step();
  }

  /// Manual restart for driver-controlled passes. False if v is visited.
  bool start_root(uint32_t v) {
    assert(!active_ && pend_i_ == pend_n_);
    if (visited_.access(v)) return false;
    pend_i_ = pend_n_ = 0;
    begin_root(v);
    return true;
  }

  bool is_visited(uint32_t v) const { return visited_.access(v); }
  bool in_component() const { return active_ || pend_i_ < pend_n_; }

  /// Freezes the tree marks into a static rank/select vector and hands the
  /// whole state over. The engine must be exhausted.
  DfsForest take_forest() && {
    if (ledger_) ledger_->on_free("tree_marks");
    DfsForest f;
    f.directed = directed_;
    f.reverse_orientation = reverse_;
    f.tree_marks = std::move(tree_marks_).freeze();
    if (ledger_)
      ledger_->on_alloc("tree_marks", f.tree_marks.bits_of(), SpaceLedger::Index::slot, 1);
    f.parent_marks = std::move(parent_marks_);
    f.roots = std::move(roots_);
    f.visited = std::move(visited_);
    f.finished = std::move(finished_);
    f.cursors = std::move(cursors_);
    f.root_count = root_count_;
    f.cyclic = cyclic_;
    f.witness_from = wit_from_;
    f.witness_to = wit_to_;
    return f;
  }

 private:
  void begin_root(uint32_t r) {
    roots_.set1(r);
    ++root_count_;
    visited_.set1(r);
    enter_fresh(r);
    pend_[0] = {DfsEvent::Type::new_root, r, 0, 0, NonTreeKind::back};
    pend_[1] = {DfsEvent::Type::discover, r, 0, 0, NonTreeKind::back};
    pend_n_ = 2;
    pend_i_ = 0;
    active_ = true;
  }

  // Freshly discovered vertices always hold cursor 0, so their boundary
  // lookup is deferred until a descent has to persist a resume position.
  void enter_fresh(uint32_t v) {
    cur_ = v;
    cur_lo_ = s_off_[v];
    cur_hi_ = s_off_[v + 1];
    cur_i_ = 0;
    cur_field_valid_ = false;
  }

  void enter_resume(uint32_t v) {
    cur_ = v;
    cur_lo_ = s_off_[v];
    cur_hi_ = s_off_[v + 1];
    cur_field_ = cursors_.field(v);
    cur_field_valid_ = true;
    cur_i_ = cursors_.get(cur_field_);
  }

  void persist_cursor() {
    if (!cur_field_valid_) {
      cur_field_ = cursors_.field(cur_);
      cur_field_valid_ = true;
    }
    cursors_.set(cur_field_, cur_i_);
  }

  void note_cycle(uint32_t u, uint32_t w) {
    if (!cyclic_) {
      cyclic_ = true;
      wit_from_ = u;
      wit_to_ = w;
    }
  }

  std::optional<DfsEvent> step() {
    while (true) {
      if (cur_i_ < cur_hi_ - cur_lo_) {
        const uint64_t s = cur_lo_ + cur_i_;
        const uint32_t w = s_nbr_[s];
        ++cur_i_;
        if (twin_skip_ && parent_marks_.access(s)) continue;  // link back to the parent
        if (w == cur_) {
          if (directed_) note_cycle(cur_, w);  // a directed self-loop is a cycle
          return DfsEvent{DfsEvent::Type::non_tree_edge, cur_, w, s,
                          NonTreeKind::parallel_or_self};
        }
        if (!visited_.access(w)) {
          // Issue the two random-segment fetches early so the bookkeeping
          // below overlaps their latency.
          __builtin_prefetch(&p_nbr_[p_off_[w]]);
          __builtin_prefetch(&s_nbr_[s_off_[w]]);
          tree_marks_.set1(s);
          visited_.set1(w);
          persist_cursor();
          mark_parent(w, cur_);
          pend_[0] = {DfsEvent::Type::tree_edge, cur_, w, s, NonTreeKind::back};
          pend_[1] = {DfsEvent::Type::discover, w, 0, 0, NonTreeKind::back};
          pend_n_ = 2;
          pend_i_ = 1;
          enter_fresh(w);
          return pend_[0];
        }
        if (directed_) {
          if (!finished_.access(w)) {
            note_cycle(cur_, w);
            return DfsEvent{DfsEvent::Type::non_tree_edge, cur_, w, s, NonTreeKind::back};
          }
          return DfsEvent{DfsEvent::Type::non_tree_edge, cur_, w, s,
                          NonTreeKind::forward_or_cross};
        }
        if (!finished_.access(w))
          return DfsEvent{DfsEvent::Type::non_tree_edge, cur_, w, s, NonTreeKind::back};
        // Undirected second sighting of an already reported edge: the head is
        // finished, hence a descendant; silent.
        continue;
      }
      // Segment exhausted: finish cur and hand control back to its parent.
      parent_marks_.prefetch(p_off_[cur_]);
      __builtin_prefetch(&p_nbr_[p_off_[cur_]]);
      finished_.set1(cur_);
      if (roots_.access(cur_)) {
        active_ = false;
        return DfsEvent{DfsEvent::Type::finish, cur_, 0, 0, NonTreeKind::back};
      }
      const uint32_t child = cur_;
      const uint32_t parent = parent_lookup(child);
      pend_[0] = {DfsEvent::Type::finish, child, 0, 0, NonTreeKind::back};
      pend_[1] = {DfsEvent::Type::retreat, child, parent, 0, NonTreeKind::back};
      pend_n_ = 2;
      pend_i_ = 1;
      enter_resume(parent);
#ifndef NDEBUG
      // The stored cursor is one past the rightmost tree mark in the
      // parent's segment: the resume shortcut agrees with the mark vector.
      const auto rm = tree_marks_.rightmost_set_in_range(cur_lo_, cur_hi_);
      assert(rm.has_value() && *rm == cur_lo_ + cur_i_ - 1);
#endif
      return pend_[0];
    }
  }

  void mark_parent(uint32_t child, uint32_t parent) {
    const uint64_t lo = p_off_[child], hi = p_off_[child + 1];
    for (uint64_t j = lo; j < hi; ++j) {
      if (p_nbr_[j] == parent) {
        parent_marks_.set1(j);
        return;
      }
    }
    assert(false && "tree edge with no parent-side twin");
  }

  uint32_t parent_lookup(uint32_t v) const {
    const auto s = parent_marks_.leftmost_set_in_range(p_off_[v], p_off_[v + 1]);
    assert(s.has_value());
    return p_nbr_[*s];
  }

  uint32_t n_;
  bool directed_, reverse_, twin_skip_ = false, auto_sweep_;
  SpaceLedger* ledger_;
  std::span<const uint32_t> s_off_, s_nbr_, p_off_, p_nbr_;

  MarkVec tree_marks_, parent_marks_, roots_, visited_, finished_;
  CursorArray cursors_;

  bool active_ = false;
  uint32_t cur_ = 0;
  uint64_t cur_lo_ = 0, cur_hi_ = 0, cur_i_ = 0;
  CursorArray::Field cur_field_{};
  bool cur_field_valid_ = false;
  uint32_t sweep_ = 0;
  uint32_t root_count_ = 0;
  bool cyclic_ = false;
  uint32_t wit_from_ = 0, wit_to_ = 0;

  DfsEvent pend_[2]{};
  int pend_n_ = 0, pend_i_ = 0;
};

/// Runs a full DFS (restarting over unvisited vertices in increasing id),
/// feeding every event to `sink`, and returns the frozen forest.
template <class Sink>
DfsForest dfs_run(const AdjGraph& g, Sink&& sink, SpaceLedger* ledger = nullptr,
                  DfsEngine::Side side = DfsEngine::Side::forward) {
  DfsEngine eng(g, side, ledger);
  while (auto ev = eng.next()) sink(*ev);
  return std::move(eng).take_forest();
}

inline DfsForest dfs_run(const AdjGraph& g, SpaceLedger* ledger = nullptr) {
  return dfs_run(g, [](const DfsEvent&) {}, ledger);
}

}  // namespace bitgraph
