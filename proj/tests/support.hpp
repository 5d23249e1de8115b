#pragma once

// Shared helpers for the test suites: small graph literals, the seeded mixed
// corpus, and normalizers for comparing outputs against the oracles.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bitgraph/bitgraph.hpp"

namespace testsupport {

using bitgraph::AdjGraph;
using Edges = std::vector<std::pair<uint32_t, uint32_t>>;

inline AdjGraph undirected(uint32_t n, Edges e) {
  return AdjGraph::from_edges(n, false, std::move(e));
}
inline AdjGraph directed(uint32_t n, Edges e) {
  return AdjGraph::from_edges(n, true, std::move(e));
}

// 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3
inline AdjGraph diamond_dag() { return directed(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
inline AdjGraph directed_3cycle() { return directed(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline AdjGraph path3() { return undirected(3, {{0, 1}, {1, 2}}); }
// Lists in input order 0:[1,2], 1:[0,2], 2:[1,0].
inline AdjGraph triangle_spec_order() { return undirected(3, {{0, 1}, {2, 1}, {2, 0}}); }

// Mixed deterministic corpus used by the conformance and identity suites.
struct CorpusEntry {
  std::string name;
  AdjGraph graph;
};

inline std::vector<CorpusEntry> corpus(uint64_t seed = 42, uint32_t random_per_kind = 20) {
  using bitgraph::oracle::GenSpec;
  using K = GenSpec::Kind;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, AdjGraph g) {
    out.push_back({std::move(name), std::move(g)});
  };
  add("empty-undirected", undirected(0, {}));
  add("empty-directed", directed(0, {}));
  add("single", undirected(1, {}));
  add("two-isolated", undirected(2, {}));
  add("path3", path3());
  add("triangle", triangle_spec_order());
  add("diamond", diamond_dag());
  add("3cycle", directed_3cycle());
  add("self-loop-directed", directed(2, {{0, 0}, {0, 1}}));
  add("self-loop-undirected", undirected(2, {{0, 0}, {0, 1}}));
  add("parallel-pendant", undirected(3, {{0, 1}, {0, 1}, {1, 2}}));
  add("star", undirected(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}}));
  add("isolated-plus-edge", undirected(3, {{1, 2}}));
  add("barbell6", bitgraph::oracle::generate({K::barbell, 6, 0, 0}));
  add("cycle5", bitgraph::oracle::generate({K::cycle, 5, 0, 0}));

  bitgraph::oracle::SplitMix64 rng(seed);
  for (uint32_t i = 0; i < random_per_kind; ++i) {
    const auto n = static_cast<uint32_t>(2 + rng.next_below(120));
    const uint64_t m = rng.next_below(4 * n + 1);
    add("gnm-und-" + std::to_string(i),
        bitgraph::oracle::generate({K::gnm_undirected, n, m, rng.next()}));
    add("gnm-dir-" + std::to_string(i),
        bitgraph::oracle::generate({K::gnm_directed, n, m, rng.next()}));
    if (i < random_per_kind / 2) {
      add("dag-" + std::to_string(i),
          bitgraph::oracle::generate({K::random_dag, n, m, rng.next()}));
      add("tree+k-" + std::to_string(i),
          bitgraph::oracle::generate(
              {K::random_tree_plus_k, n, rng.next_below(n + 1), rng.next()}));
    }
  }
  return out;
}

// Partition of [0, n) induced by labels, as sorted classes sorted by first
// member; label values themselves don't matter.
inline std::vector<std::vector<uint32_t>> canonical_partition(const std::vector<uint32_t>& label) {
  std::vector<std::vector<uint32_t>> classes;
  std::vector<int64_t> pos(label.size() + 1, -1);
  for (uint32_t v = 0; v < label.size(); ++v) {
    if (pos[label[v]] < 0) {
      pos[label[v]] = static_cast<int64_t>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<size_t>(pos[label[v]])].push_back(v);
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

inline bitgraph::oracle::EdgeSet as_edge_set(
    const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  bitgraph::oracle::EdgeSet s;
  for (auto [u, v] : pairs) s.insert(std::minmax(u, v));
  return s;
}

inline std::vector<bitgraph::DfsEvent> collect_events(const AdjGraph& g,
                                                      bitgraph::DfsForest* forest_out = nullptr) {
  std::vector<bitgraph::DfsEvent> events;
  auto f = bitgraph::dfs_run(g, [&](const bitgraph::DfsEvent& e) { events.push_back(e); });
  if (forest_out) *forest_out = std::move(f);
  return events;
}

inline std::vector<uint32_t> collect_rpo(const AdjGraph& g, bitgraph::DfsForest& f) {
  bitgraph::RpoStream rpo(g, f);
  std::vector<uint32_t> order;
  while (auto v = rpo.next()) order.push_back(*v);
  return order;
}

inline std::vector<uint32_t> finish_order_of(const std::vector<bitgraph::DfsEvent>& events) {
  std::vector<uint32_t> order;
  for (const auto& e : events)
    if (e.type == bitgraph::DfsEvent::Type::finish) order.push_back(e.a);
  return order;
}

}  // namespace testsupport
