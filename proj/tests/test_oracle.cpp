#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "bitgraph/oracle/generate.hpp"
#include "bitgraph/oracle/reference.hpp"
#include "support.hpp"

using namespace bitgraph;
using oracle::GenSpec;
using K = GenSpec::Kind;

TEST_CASE("generators are deterministic byte for byte") {
  for (auto kind : {K::gnm_undirected, K::gnm_directed, K::random_dag, K::random_tree_plus_k}) {
    const GenSpec spec{kind, 40, 90, 7};
    std::ostringstream a, b;
    oracle::generate(spec).save_edgelist(a);
    oracle::generate(spec).save_edgelist(b);
    REQUIRE(a.str() == b.str());
  }
}

TEST_CASE("generator shapes") {
  const AdjGraph p = oracle::generate({K::path, 3, 0, 0});
  CHECK(p.num_edges() == 2);
  CHECK(p.degree(1) == 2);

  const AdjGraph c = oracle::generate({K::cycle, 5, 0, 0});
  CHECK(c.num_edges() == 5);
  for (uint32_t v = 0; v < 5; ++v) CHECK(c.degree(v) == 2);

  const AdjGraph b = oracle::generate({K::barbell, 6, 0, 0});
  CHECK(b.num_edges() == 7);  // two triangles plus the joining edge
  CHECK(oracle::ref_bridges(b) == oracle::EdgeSet{{2, 3}});

  const AdjGraph g = oracle::generate({K::gnm_undirected, 10, 15, 7});
  CHECK(g.num_edges() == 15);
  for (auto [u, v] : g.edges()) {
    CHECK(u < 10);
    CHECK(v < 10);
    CHECK(u != v);  // no undirected self-loops from the generator
  }

  const AdjGraph d = oracle::generate({K::random_dag, 30, 120, 9});
  CHECK(oracle::ref_toposort(d).has_value());
}

TEST_CASE("a pure random tree is all bridges") {
  const AdjGraph t = oracle::generate({K::random_tree_plus_k, 40, 0, 3});
  CHECK(oracle::ref_bridges(t).size() == 39);
}

TEST_CASE("ref_dfs on forced orders") {
  const auto path = oracle::ref_dfs(testsupport::path3());
  CHECK(path.finish_order == std::vector<uint32_t>{2, 1, 0});
  const auto dia = oracle::ref_dfs(testsupport::diamond_dag());
  CHECK(dia.finish_order == std::vector<uint32_t>{3, 1, 2, 0});
  CHECK_FALSE(dia.cyclic);
  const auto cyc = oracle::ref_dfs(testsupport::directed_3cycle());
  CHECK(cyc.cyclic);
  CHECK(cyc.witness_from == 2);
  CHECK(cyc.witness_to == 0);
}

TEST_CASE("ref oracles agree with each other on small graphs") {
  oracle::SplitMix64 rng(100);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<uint32_t>(2 + rng.next_below(30));
    const AdjGraph g = oracle::generate({K::gnm_directed, n, rng.next_below(3 * n), rng.next()});
    REQUIRE(testsupport::canonical_partition(oracle::ref_scc(g)) ==
            testsupport::canonical_partition(oracle::brute_scc(g)));
    // Kahn succeeds exactly when no vertex shares a class with another or loops.
    const auto topo = oracle::ref_toposort(g);
    bool self_loop = false;
    for (auto [u, v] : g.edges()) self_loop = self_loop || u == v;
    const auto part = testsupport::canonical_partition(oracle::brute_scc(g));
    bool nontrivial = self_loop;
    for (const auto& cls : part) nontrivial = nontrivial || cls.size() > 1;
    REQUIRE(topo.has_value() == !nontrivial);
    if (topo) {
      std::vector<uint32_t> pos(n);
      for (uint32_t i = 0; i < n; ++i) pos[(*topo)[i]] = i;
      for (auto [u, v] : g.edges()) REQUIRE(pos[u] < pos[v]);
    }
  }
}

TEST_CASE("ref_bridges equals deletion brute force on small graphs") {
  oracle::SplitMix64 rng(200);
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<uint32_t>(2 + rng.next_below(8));
    const AdjGraph g =
        oracle::generate({K::gnm_undirected, n, rng.next_below(2 * n + 2), rng.next()});
    REQUIRE(oracle::ref_bridges(g) == oracle::brute_bridges(g));
  }
}

TEST_CASE("articulation points on knowns") {
  const auto cut_path = oracle::ref_articulation_points(testsupport::path3());
  CHECK(cut_path == std::vector<bool>{false, true, false});
  const auto cut_tri = oracle::ref_articulation_points(testsupport::triangle_spec_order());
  CHECK(cut_tri == std::vector<bool>{false, false, false});
  const auto barbell = oracle::generate({K::barbell, 6, 0, 0});
  const auto cut_bar = oracle::ref_articulation_points(barbell);
  CHECK(cut_bar == std::vector<bool>{false, false, true, true, false, false});
}
