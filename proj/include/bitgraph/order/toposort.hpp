#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/order/rpo.hpp"

namespace bitgraph {

/// A directed cycle was found; (from, to) is a witnessed back edge, i.e. an
/// edge of the graph whose head is a forest ancestor of its tail (or the
/// tail itself for a self-loop).
struct CyclicError {
  uint32_t from = 0, to = 0;
};

/// Topological sort by reverse postorder of a full DFS. Emits one vertex at
/// a time into `emit`; on a cyclic input emits nothing and returns the
/// witness instead. Callers needing random access buffer the stream
/// themselves, outside the audited working space.
template <class Emit>
std::optional<CyclicError> toposort_stream(const AdjGraph& g, Emit&& emit,
                                           SpaceLedger* ledger = nullptr) {
  if (!g.directed()) throw std::invalid_argument("toposort: undirected input");
  DfsForest f = dfs_run(g, ledger);
  if (f.cyclic) return CyclicError{f.witness_from, f.witness_to};
  RpoStream rpo(g, f, ledger);
  while (auto v = rpo.next()) emit(*v);
  return std::nullopt;
}

inline std::variant<std::vector<uint32_t>, CyclicError> toposort(const AdjGraph& g,
                                                                 SpaceLedger* ledger = nullptr) {
  std::vector<uint32_t> order;
  order.reserve(g.num_vertices());
  if (auto err = toposort_stream(g, [&](uint32_t v) { order.push_back(v); }, ledger))
    return *err;
  return order;
}

}  // namespace bitgraph
