#pragma once

// Umbrella header: adjacency-array graphs, the bit-vector substrate, DFS
// without cross pointers, reverse-postorder / topological-sort / SCC
// streams, bridge finding, the working-space audit, and the classical
// oracles used by the test suites.

#include "bitgraph/audit/run_audited.hpp"
#include "bitgraph/audit/space_ledger.hpp"
#include "bitgraph/bits/bitvec.hpp"
#include "bitgraph/bits/cursor_array.hpp"
#include "bitgraph/bits/markvec.hpp"
#include "bitgraph/bridges/bridges.hpp"
#include "bitgraph/dfs/engine.hpp"
#include "bitgraph/dfs/forest.hpp"
#include "bitgraph/graph/adj_graph.hpp"
#include "bitgraph/graph/slot_map.hpp"
#include "bitgraph/oracle/generate.hpp"
#include "bitgraph/oracle/reference.hpp"
#include "bitgraph/oracle/rng.hpp"
#include "bitgraph/order/rpo.hpp"
#include "bitgraph/order/scc.hpp"
#include "bitgraph/order/toposort.hpp"
