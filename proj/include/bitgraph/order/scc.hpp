#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/order/rpo.hpp"

namespace bitgraph {

/// Strongly connected components, streamed one member at a time.
///
/// Two interleaved passes: vertices are pulled lazily from the reverse
/// postorder of a forward DFS, and each unvisited one seeds a DFS over the
/// transposed arrays whose discoveries form the next component. The order is
/// consumed as a generator precisely so that no n*ceil(lg n)-bit order array
/// ever exists; working space is the frozen forward forest plus the reverse
/// pass's own mark vectors and cursors.
///
/// Component ids are 0, 1, 2, ... in discovery order.
class SccStream {
 public:
  struct Item {
    uint32_t component = 0;
    uint32_t vertex = 0;
  };

  explicit SccStream(const AdjGraph& g, SpaceLedger* ledger = nullptr)
      : forest_(make_forest(g, ledger)),
        rpo_(g, forest_, ledger),
        sweep_(g, DfsEngine::Side::reverse, ledger, /*auto_sweep=*/false) {}

  std::optional<Item> next() {
    while (true) {
      if (sweep_.in_component()) {
        if (auto ev = sweep_.next()) {
          if (ev->type == DfsEvent::Type::discover)
            return Item{next_component_ - 1, ev->a};
          continue;
        }
      }
      const auto v = rpo_.next();
      if (!v) return std::nullopt;
      if (sweep_.is_visited(*v)) continue;
      sweep_.start_root(*v);
      ++next_component_;
    }
  }

 private:
  static DfsForest make_forest(const AdjGraph& g, SpaceLedger* ledger) {
    if (!g.directed()) throw std::invalid_argument("scc: undirected input");
    return dfs_run(g, ledger);
  }

  DfsForest forest_;
  RpoStream rpo_;
  DfsEngine sweep_;
  uint32_t next_component_ = 0;
};

/// Component label per vertex (a consumer-side buffer, not working space).
inline std::vector<uint32_t> scc_labels(const AdjGraph& g, SpaceLedger* ledger = nullptr) {
  std::vector<uint32_t> label(g.num_vertices(), 0);
  SccStream s(g, ledger);
  while (auto item = s.next()) label[item->vertex] = item->component;
  return label;
}

/// True iff the graph is strongly connected: the component stream yields
/// exactly one component. Exits as soon as a second component starts.
inline bool sc_test(const AdjGraph& g, SpaceLedger* ledger = nullptr) {
  SccStream s(g, ledger);
  auto first = s.next();
  if (!first) return false;  // empty graph: no component at all
  while (auto item = s.next()) {
    if (item->component != 0) return false;
  }
  return true;
}

}  // namespace bitgraph
