#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitgraph/graph/adj_graph.hpp"
#include "bitgraph/oracle/rng.hpp"

namespace bitgraph::oracle {

/// Seeded graph generators. Identical spec => byte-identical graph.
struct GenSpec {
  enum class Kind {
    gnm_undirected,        // m edges, endpoints uniform, no self-loops, parallels allowed
    gnm_directed,          // m edges, endpoints uniform, self-loops allowed
    random_dag,            // m edges forward-oriented over a random permutation
    random_tree_plus_k,    // random recursive tree plus k extra undirected edges
    barbell,               // two cliques of n/2 joined by one edge
    path,                  // undirected path 0-1-...-(n-1)
    cycle,                 // undirected cycle
  };
  Kind kind = Kind::gnm_undirected;
  uint32_t n = 0;
  uint64_t mk = 0;  // m for gnm/dag, k for tree_plus_k; ignored otherwise
  uint64_t seed = 0;
};

inline GenSpec::Kind kind_from_name(const std::string& name) {
  using K = GenSpec::Kind;
  if (name == "gnm-undirected") return K::gnm_undirected;
  if (name == "gnm-directed") return K::gnm_directed;
  if (name == "random-dag") return K::random_dag;
  if (name == "random-tree-plus-k-edges") return K::random_tree_plus_k;
  if (name == "barbell") return K::barbell;
  if (name == "path") return K::path;
  if (name == "cycle") return K::cycle;
  throw std::invalid_argument("unknown generator kind `" + name + "`");
}

inline AdjGraph generate(const GenSpec& spec) {
  using K = GenSpec::Kind;
  SplitMix64 rng(spec.seed);
  const uint32_t n = spec.n;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  auto distinct_pair = [&]() {
    uint32_t u, v;
    do {
      u = static_cast<uint32_t>(rng.next_below(n));
      v = static_cast<uint32_t>(rng.next_below(n));
    } while (u == v);
    return std::pair{u, v};
  };

  switch (spec.kind) {
    case K::gnm_undirected: {
      if (n < 2 && spec.mk > 0) throw std::invalid_argument("gnm-undirected needs n >= 2");
      edges.reserve(spec.mk);
      for (uint64_t i = 0; i < spec.mk; ++i) edges.push_back(distinct_pair());
      return AdjGraph::from_edges(n, false, std::move(edges));
    }
    case K::gnm_directed: {
      if (n == 0 && spec.mk > 0) throw std::invalid_argument("gnm-directed needs n >= 1");
      edges.reserve(spec.mk);
      for (uint64_t i = 0; i < spec.mk; ++i) {
        const auto u = static_cast<uint32_t>(rng.next_below(n));
        const auto v = static_cast<uint32_t>(rng.next_below(n));
        edges.emplace_back(u, v);
      }
      return AdjGraph::from_edges(n, true, std::move(edges));
    }
    case K::random_dag: {
      if (n < 2 && spec.mk > 0) throw std::invalid_argument("random-dag needs n >= 2");
      std::vector<uint32_t> pos(n);
      std::iota(pos.begin(), pos.end(), 0);
      for (uint32_t i = n; i > 1; --i) {  // Fisher-Yates over positions
        const auto j = static_cast<uint32_t>(rng.next_below(i));
        std::swap(pos[i - 1], pos[j]);
      }
      edges.reserve(spec.mk);
      for (uint64_t i = 0; i < spec.mk; ++i) {
        auto [u, v] = distinct_pair();
        if (pos[u] > pos[v]) std::swap(u, v);
        edges.emplace_back(u, v);
      }
      return AdjGraph::from_edges(n, true, std::move(edges));
    }
    case K::random_tree_plus_k: {
      edges.reserve(n > 0 ? n - 1 + spec.mk : 0);
      for (uint32_t v = 1; v < n; ++v)
        edges.emplace_back(static_cast<uint32_t>(rng.next_below(v)), v);
      for (uint64_t i = 0; i < spec.mk; ++i) edges.push_back(distinct_pair());
      return AdjGraph::from_edges(n, false, std::move(edges));
    }
    case K::barbell: {
      if (n < 6 || n % 2 != 0) throw std::invalid_argument("barbell needs even n >= 6");
      const uint32_t half = n / 2;
      for (uint32_t i = 0; i < half; ++i)
        for (uint32_t j = i + 1; j < half; ++j) edges.emplace_back(i, j);
      for (uint32_t i = half; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      edges.emplace_back(half - 1, half);
      return AdjGraph::from_edges(n, false, std::move(edges));
    }
    case K::path: {
      for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return AdjGraph::from_edges(n, false, std::move(edges));
    }
    case K::cycle: {
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return AdjGraph::from_edges(n, false, std::move(edges));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace bitgraph::oracle
