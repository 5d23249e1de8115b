#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitgraph/audit/space_ledger.hpp"
#include "bitgraph/bridges/bridges.hpp"
#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/oracle/generate.hpp"
#include "bitgraph/order/scc.hpp"
#include "bitgraph/order/toposort.hpp"

namespace bitgraph {

enum class Algo { dfs, rpo, toposort, scc, sc_test, bridges, two_ec_test };

inline const char* algo_name(Algo a) {
  switch (a) {
    case Algo::dfs: return "dfs";
    case Algo::rpo: return "rpo";
    case Algo::toposort: return "toposort";
    case Algo::scc: return "scc";
    case Algo::sc_test: return "sc_test";
    case Algo::bridges: return "bridges";
    case Algo::two_ec_test: return "two_ec_test";
  }
  return "?";
}

inline Algo algo_from_name(const std::string& s) {
  for (Algo a : {Algo::dfs, Algo::rpo, Algo::toposort, Algo::scc, Algo::sc_test, Algo::bridges,
                 Algo::two_ec_test})
    if (s == algo_name(a)) return a;
  throw std::invalid_argument("unknown algorithm id `" + s + "`");
}

namespace detail {
// FNV-1a over the run's output tokens; identical runs hash identically.
struct Digest {
  uint64_t h = 0xcbf29ce484222325ULL;
  void mix(uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
};
}  // namespace detail

struct RunReport {
  uint64_t digest = 0;
  SpaceLedger ledger;
};

/// Runs one audited algorithm: the ledger records every structure the run
/// allocates plus the fixed register bucket, and the digest summarizes the
/// output stream.
inline RunReport run_audited(Algo algo, const AdjGraph& g) {
  RunReport rep;
  rep.ledger.ensure_register_bucket();
  rep.ledger.set_input_bits(g.input_bits());
  detail::Digest d;
  SpaceLedger* led = &rep.ledger;
  switch (algo) {
    case Algo::dfs: {
      dfs_run(g, [&](const DfsEvent& e) {
        d.mix(static_cast<uint64_t>(e.type));
        d.mix(e.a);
        d.mix(e.b);
        d.mix(e.slot);
        d.mix(static_cast<uint64_t>(e.kind));
      }, led);
      break;
    }
    case Algo::rpo: {
      DfsForest f = dfs_run(g, led);
      RpoStream rpo(g, f, led);
      while (auto v = rpo.next()) d.mix(*v);
      break;
    }
    case Algo::toposort: {
      if (auto err = toposort_stream(g, [&](uint32_t v) { d.mix(v); }, led)) {
        d.mix(0xC1C11C);
        d.mix(err->from);
        d.mix(err->to);
      }
      break;
    }
    case Algo::scc: {
      SccStream s(g, led);
      while (auto item = s.next()) {
        d.mix(item->component);
        d.mix(item->vertex);
      }
      break;
    }
    case Algo::sc_test:
      d.mix(sc_test(g, led) ? 1 : 0);
      break;
    case Algo::bridges: {
      DfsForest f = dfs_run(g, led);
      BridgeResult r = find_bridges(g, f, led);
      for (auto [u, v] : r.bridges) {
        d.mix(u);
        d.mix(v);
      }
      break;
    }
    case Algo::two_ec_test:
      d.mix(two_ec_test(g, led) ? 1 : 0);
      break;
  }
  rep.digest = d.h;
  return rep;
}

struct ScalingRow {
  uint32_t n = 0;
  uint64_t m = 0;
  uint64_t slots = 0;
  uint64_t peak_bits = 0;
  double bits_per_ns = 0;   // peak / (n + slots)
  uint64_t nanos = 0;       // min over repetitions
  double nanos_per_nm = 0;  // nanos / (n + m)
  bool pass = true;
};

/// Ladder input per algorithm: undirected G(n,m) for dfs and bridges,
/// directed G(n,m) for scc and the connectivity tests, random DAGs for
/// toposort and rpo.
inline AdjGraph ladder_graph(Algo algo, uint32_t n, uint64_t m, uint64_t seed) {
  using K = oracle::GenSpec::Kind;
  K kind;
  switch (algo) {
    case Algo::dfs:
    case Algo::bridges:
    case Algo::two_ec_test: kind = K::gnm_undirected; break;
    case Algo::scc:
    case Algo::sc_test: kind = K::gnm_directed; break;
    case Algo::toposort:
    case Algo::rpo: kind = K::random_dag; break;
    default: kind = K::gnm_undirected;
  }
  return oracle::generate({kind, n, m, seed});
}

/// Runs the size ladder and emits one TSV row per point:
///   algo n m peak_bits bits_per_ns nanos nanos_per_nm pass|fail
/// bits_per_ns divides by (n + total slots), nanos_per_nm by (n + m); a row
/// fails when either ratio exceeds twice the first row's. nanos is the
/// minimum of `reps` repetitions and the only column golden tests mask.
/// Input-representation bits (adjacency arrays, and slot maps when built)
/// are reported by the ledger separately and never enter peak_bits.
inline std::vector<ScalingRow> scaling_report(Algo algo,
                                              const std::vector<std::pair<uint32_t, uint64_t>>& sizes,
                                              uint64_t seed, std::ostream* tsv = nullptr,
                                              int reps = 3) {
  std::vector<AdjGraph> graphs;
  std::vector<ScalingRow> rows;
  uint64_t max_elems = 1;
  for (auto [n, m] : sizes) {
    graphs.push_back(ladder_graph(algo, n, m, seed));
    ScalingRow row;
    row.n = n;
    row.m = m;
    row.slots = graphs.back().total_slots();
    row.nanos = UINT64_MAX;
    rows.push_back(row);
    max_elems = std::max<uint64_t>(max_elems, static_cast<uint64_t>(n) + m);
  }
  // Timing design: every point is measured in a batch covering roughly the
  // element count of the largest point, so all windows have comparable
  // length and none is at the mercy of an instantaneous clock state; whole
  // ladder sweeps are repeated with per-point minima so transient machine
  // noise lands on all sizes alike. nanos is per run: window / batch. The
  // first sweep is untimed warmup and collects the ledgers.
  for (int i = 0; i <= reps; ++i) {
    for (size_t p = 0; p < graphs.size(); ++p) {
      const uint64_t elems = static_cast<uint64_t>(rows[p].n) + rows[p].m;
      const uint64_t batch = i == 0 ? 1 : std::max<uint64_t>(1, 2 * max_elems / elems);
      const auto t0 = std::chrono::steady_clock::now();
      for (uint64_t b = 0; b < batch; ++b) {
        const RunReport rep = run_audited(algo, graphs[p]);
        if (i == 0) rows[p].peak_bits = rep.ledger.peak_working_bits();
      }
      const auto t1 = std::chrono::steady_clock::now();
      if (i == 0) continue;
      const auto window = static_cast<uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
      rows[p].nanos = std::min(rows[p].nanos, window / batch);
    }
  }
  for (size_t p = 0; p < rows.size(); ++p) {
    ScalingRow& row = rows[p];
    row.bits_per_ns = static_cast<double>(row.peak_bits) / static_cast<double>(row.n + row.slots);
    row.nanos_per_nm = static_cast<double>(row.nanos) / static_cast<double>(row.n + row.m);
    if (p > 0) {
      row.pass = row.bits_per_ns <= 2.0 * rows.front().bits_per_ns &&
                 row.nanos_per_nm <= 2.0 * rows.front().nanos_per_nm;
    }
    if (tsv) {
      *tsv << algo_name(algo) << '\t' << row.n << '\t' << row.m << '\t' << row.peak_bits << '\t'
           << row.bits_per_ns << '\t' << row.nanos << '\t' << row.nanos_per_nm << '\t'
           << (row.pass ? "pass" : "fail") << '\n';
    }
  }
  return rows;
}

inline std::vector<std::pair<uint32_t, uint64_t>> default_ladder() {
  std::vector<std::pair<uint32_t, uint64_t>> sizes;
  for (uint32_t n = 1u << 10; n <= (1u << 16); n <<= 1) sizes.emplace_back(n, 4ull * n);
  return sizes;
}

}  // namespace bitgraph
