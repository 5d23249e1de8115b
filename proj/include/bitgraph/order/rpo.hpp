#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <span>

#include "bitgraph/audit/space_ledger.hpp"
#include "bitgraph/dfs/forest.hpp"
#include "bitgraph/graph/adj_graph.hpp"

namespace bitgraph {

/// Streams the vertices of a frozen forest in reverse postorder.
///
/// Realized without replaying the DFS or storing the order: reverse
/// postorder equals a preorder walk with root order and child order both
/// reversed. (Induction: for a tree with root r and children c1..cd,
/// postorder is post(c1)..post(cd) r, so its reverse is r followed by the
/// reversed postorders of cd..c1 — a visit of r and then the right-to-left
/// recursion; forests reverse the root sequence the same way.) Roots are
/// therefore taken in decreasing vertex id (restarts swept increasing ids)
/// and children from the rightmost tree mark leftward, read off the frozen
/// mark vector by backward range scans that telescope to one pass per
/// segment.
///
/// Working space beyond the frozen forest: the forest's own cursor array
/// (reset and reused as per-vertex consumed-from-the-right counters) and
/// O(lg n)-bit registers. Single consumer; streams over one forest must be
/// sequential, never concurrent.
class RpoStream {
 public:
  RpoStream(const AdjGraph& g, DfsForest& f, SpaceLedger* ledger = nullptr) : g_(&g), f_(&f) {
    if (ledger) ledger->ensure_register_bucket();
    off_ = f.scan_offsets(g);
    nbr_ = f.scan_neighbors(g);
    f_->cursors.reset_all();
    sweep_ = g.num_vertices();
  }

  std::optional<uint32_t> next() {
    while (true) {
      if (!active_) {
        while (sweep_ > 0) {
          --sweep_;
          if (f_->roots.access(sweep_)) {
            enter_fresh(sweep_);
            active_ = true;
            ++emitted_;
            return sweep_;
          }
        }
        return std::nullopt;
      }
      const uint64_t upper = hi_ - consumed_;
      // Backward scan from the cursor; successive queries on one vertex
      // telescope, so a segment is read at most once per stream.
      if (const auto s = f_->tree_marks.rightmost_set_in_range(lo_, upper)) {
        consumed_ = hi_ - *s;
        persist_cursor();
        const uint32_t child = nbr_[*s];
        enter_fresh(child);
        ++emitted_;
        return child;
      }
      if (f_->roots.access(cur_)) {
        active_ = false;
        continue;
      }
      enter_resume(*f_->parent_of(*g_, cur_));
    }
  }

  uint64_t emitted() const { return emitted_; }

 private:
  void enter_fresh(uint32_t v) {
    cur_ = v;
    lo_ = off_[v];
    hi_ = off_[v + 1];
    consumed_ = 0;
    field_valid_ = false;
  }

  void enter_resume(uint32_t v) {
    cur_ = v;
    lo_ = off_[v];
    hi_ = off_[v + 1];
    field_ = f_->cursors.field(v);
    field_valid_ = true;
    consumed_ = f_->cursors.get(field_);
  }

  void persist_cursor() {
    if (!field_valid_) {
      field_ = f_->cursors.field(cur_);
      field_valid_ = true;
    }
    f_->cursors.set(field_, consumed_);
  }

  const AdjGraph* g_;
  DfsForest* f_;
  std::span<const uint32_t> off_, nbr_;
  bool active_ = false;
  uint32_t cur_ = 0;
  uint64_t lo_ = 0, hi_ = 0, consumed_ = 0;
  CursorArray::Field field_{};
  bool field_valid_ = false;
  uint32_t sweep_ = 0;
  uint64_t emitted_ = 0;
};

}  // namespace bitgraph
