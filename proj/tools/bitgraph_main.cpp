// bitgraph: space-lean graph algorithms over adjacency-array inputs.
//
// Subcommands: dfs, rpo, toposort, scc, sc-test, bridges, 2ec-test, audit,
// gen, verify. Graphs come from --input (or stdin) as edge-list text or the
// SGR1 binary format. Decision subcommands print true/false and exit 0/1;
// parse and usage problems exit 2.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bitgraph/bitgraph.hpp"

namespace {

using namespace bitgraph;

struct InputOpts {
  std::string path;  // empty: stdin
  std::string format = "edgelist";
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
  cmd->add_option("--input,-i", in.path, "input graph file (default: stdin)");
  cmd->add_option("--format,-f", in.format, "edgelist|binary")
      ->check(CLI::IsMember({"edgelist", "binary"}));
}

AdjGraph load_graph(const InputOpts& in) {
  auto parse = [&](std::istream& s) {
    return in.format == "binary" ? AdjGraph::load_binary(s) : AdjGraph::load_edgelist(s);
  };
  if (in.path.empty()) return parse(std::cin);
  std::ifstream f(in.path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + in.path);
  return parse(f);
}

const char* kind_str(NonTreeKind k) {
  switch (k) {
    case NonTreeKind::back: return "back";
    case NonTreeKind::forward_or_cross: return "forward-or-cross";
    case NonTreeKind::parallel_or_self: return "parallel-or-self";
  }
  return "?";
}

void print_event(std::ostream& out, const DfsEvent& e) {
  using T = DfsEvent::Type;
  switch (e.type) {
    case T::new_root: out << "root " << e.a << '\n'; break;
    case T::discover: out << "discover " << e.a << '\n'; break;
    case T::tree_edge: out << "tree " << e.a << ' ' << e.b << ' ' << e.slot << '\n'; break;
    case T::non_tree_edge:
      out << "nontree " << e.a << ' ' << e.b << ' ' << e.slot << ' ' << kind_str(e.kind) << '\n';
      break;
    case T::retreat: out << "retreat " << e.a << ' ' << e.b << '\n'; break;
    case T::finish: out << "finish " << e.a << '\n'; break;
  }
}

int cmd_dfs(const InputOpts& in, bool events) {
  const AdjGraph g = load_graph(in);
  uint64_t tree_edges = 0;
  DfsForest f = dfs_run(g, [&](const DfsEvent& e) {
    if (e.type == DfsEvent::Type::tree_edge) ++tree_edges;
    if (events) print_event(std::cout, e);
  });
  if (!events) {
    std::cout << "roots " << f.root_count << " tree_edges " << tree_edges;
    if (g.directed()) std::cout << " cyclic " << (f.cyclic ? "true" : "false");
    std::cout << '\n';
  }
  return 0;
}

int cmd_rpo(const InputOpts& in) {
  const AdjGraph g = load_graph(in);
  DfsForest f = dfs_run(g);
  RpoStream rpo(g, f);
  while (auto v = rpo.next()) std::cout << *v << '\n';
  return 0;
}

int cmd_toposort(const InputOpts& in) {
  const AdjGraph g = load_graph(in);
  std::ostringstream buf;
  if (auto err = toposort_stream(g, [&](uint32_t v) { buf << v << '\n'; })) {
    std::cerr << "error: graph is cyclic (witness edge " << err->from << " -> " << err->to
              << ")\n";
    return 1;
  }
  std::cout << buf.str();
  return 0;
}

int cmd_scc(const InputOpts& in) {
  const AdjGraph g = load_graph(in);
  SccStream s(g);
  uint32_t cur = UINT32_MAX;
  while (auto item = s.next()) {
    if (item->component != cur) {
      if (cur != UINT32_MAX) std::cout << '\n';
      std::cout << item->component << ':';
      cur = item->component;
    }
    std::cout << ' ' << item->vertex;
  }
  if (cur != UINT32_MAX) std::cout << '\n';
  return 0;
}

int cmd_sc_test(const InputOpts& in) {
  const bool sc = sc_test(load_graph(in));
  std::cout << (sc ? "true" : "false") << '\n';
  return sc ? 0 : 1;
}

int cmd_bridges(const InputOpts& in) {
  const AdjGraph g = load_graph(in);
  DfsForest f = dfs_run(g);
  const BridgeResult r = find_bridges(g, f);
  for (auto [u, v] : r.bridges)
    std::cout << std::min(u, v) << ' ' << std::max(u, v) << '\n';
  return 0;
}

int cmd_2ec_test(const InputOpts& in) {
  const bool ok = two_ec_test(load_graph(in));
  std::cout << (ok ? "true" : "false") << '\n';
  return ok ? 0 : 1;
}

int cmd_gen(const std::string& kind, uint32_t n, uint64_t m, uint64_t k, uint64_t seed) {
  oracle::GenSpec spec;
  spec.kind = oracle::kind_from_name(kind);
  spec.n = n;
  spec.mk = kind == "random-tree-plus-k-edges" ? k : m;
  spec.seed = seed;
  oracle::generate(spec).save_edgelist(std::cout);
  return 0;
}

int cmd_audit(const std::string& algo_str, const InputOpts& in, bool have_input,
              const std::string& sizes_str, uint64_t seed, int reps) {
  const Algo algo = algo_from_name(algo_str);
  if (have_input) {
    const AdjGraph g = load_graph(in);
    const RunReport rep = run_audited(algo, g);
    std::cout << "# structure\tbits\n";
    for (const auto& e : rep.ledger.entries())
      std::cout << e.name << '\t' << e.bits << (e.live ? "" : "\t(freed)") << '\n';
    std::cout << "peak_working_bits\t" << rep.ledger.peak_working_bits() << '\n'
              << "input_bits\t" << rep.ledger.input_bits() << '\n'
              << "output_digest\t" << rep.digest << '\n';
    return 0;
  }
  std::vector<std::pair<uint32_t, uint64_t>> sizes;
  if (sizes_str.empty()) {
    sizes = default_ladder();
  } else {
    std::istringstream ss(sizes_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw CLI::ValidationError("--sizes expects n:m,n:m,...");
      sizes.emplace_back(static_cast<uint32_t>(std::stoull(tok.substr(0, colon))),
                         std::stoull(tok.substr(colon + 1)));
    }
  }
  std::cout << "# input representation bits are reported separately by the ledger and never "
               "counted in peak_bits\n";
  std::cout << "# algo\tn\tm\tpeak_bits\tbits_per_ns\tnanos\tnanos_per_nm\tpass|fail\n";
  const auto rows = scaling_report(algo, sizes, seed, &std::cout, reps);
  for (const auto& row : rows)
    if (!row.pass) return 1;
  return 0;
}

// Subject-vs-oracle equivalence over a seeded corpus.
int cmd_verify(uint64_t seed, uint32_t trials);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-lean DFS, ordering, connectivity and bridge algorithms"};
  app.require_subcommand(1);

  InputOpts in;
  bool events = false;

  auto* c_dfs = app.add_subcommand("dfs", "run DFS; --events dumps one event per line");
  add_input_opts(c_dfs, in);
  c_dfs->add_flag("--events", events, "dump the event stream");

  auto* c_rpo = app.add_subcommand("rpo", "reverse postorder, one vertex per line");
  add_input_opts(c_rpo, in);
  auto* c_topo = app.add_subcommand("toposort", "topological order, one vertex per line");
  add_input_opts(c_topo, in);
  auto* c_scc = app.add_subcommand("scc", "strongly connected components");
  add_input_opts(c_scc, in);
  auto* c_sct = app.add_subcommand("sc-test", "strong connectivity test");
  add_input_opts(c_sct, in);
  auto* c_br = app.add_subcommand("bridges", "bridges, one `u v` line each (u < v)");
  add_input_opts(c_br, in);
  auto* c_2ec = app.add_subcommand("2ec-test", "2-edge-connectivity test");
  add_input_opts(c_2ec, in);

  auto* c_gen = app.add_subcommand("gen", "emit a generated graph as edge-list text");
  std::string kind = "gnm-undirected";
  uint32_t gen_n = 0;
  uint64_t gen_m = 0, gen_k = 0, seed = 0;
  c_gen->add_option("--kind", kind,
                    "path|cycle|barbell|gnm-undirected|gnm-directed|random-dag|"
                    "random-tree-plus-k-edges");
  c_gen->add_option("--n", gen_n, "vertex count")->required();
  c_gen->add_option("--m", gen_m, "edge count (gnm / random-dag)");
  c_gen->add_option("--k", gen_k, "extra edges (random-tree-plus-k-edges)");
  c_gen->add_option("--seed", seed, "generator seed");

  auto* c_audit = app.add_subcommand("audit", "working-space ledger / scaling TSV");
  std::string algo_str = "dfs", sizes_str;
  int reps = 3;
  c_audit->add_option("--algo", algo_str,
                      "dfs|rpo|toposort|scc|sc_test|bridges|two_ec_test")->required();
  add_input_opts(c_audit, in);
  c_audit->add_option("--sizes", sizes_str, "ladder as n:m,n:m,... (default 2^10..2^16, m=4n)");
  c_audit->add_option("--seed", seed, "generator seed for the ladder");
  c_audit->add_option("--reps", reps, "timing repetitions per point");

  auto* c_verify = app.add_subcommand("verify", "subject-vs-oracle equivalence corpus");
  uint32_t trials = 200;
  uint64_t vseed = 42;
  c_verify->add_option("--seed", vseed, "corpus seed");
  c_verify->add_option("--trials", trials, "trials per algorithm");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_dfs->parsed()) return cmd_dfs(in, events);
    if (c_rpo->parsed()) return cmd_rpo(in);
    if (c_topo->parsed()) return cmd_toposort(in);
    if (c_scc->parsed()) return cmd_scc(in);
    if (c_sct->parsed()) return cmd_sc_test(in);
    if (c_br->parsed()) return cmd_bridges(in);
    if (c_2ec->parsed()) return cmd_2ec_test(in);
    if (c_gen->parsed()) return cmd_gen(kind, gen_n, gen_m, gen_k, seed);
    if (c_audit->parsed())
      return cmd_audit(algo_str, in, !in.path.empty(), sizes_str, seed, reps);
    if (c_verify->parsed()) return cmd_verify(vseed, trials);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

namespace {

// One verify trial per algorithm per round; all must agree with the oracle.
int cmd_verify(uint64_t seed, uint32_t trials) {
  using oracle::GenSpec;
  using K = GenSpec::Kind;
  struct Line {
    const char* name;
    uint32_t ok = 0;
  };
  Line lines[] = {{"dfs"}, {"rpo"}, {"toposort"}, {"scc"}, {"sc-test"}, {"bridges"},
                  {"2ec-test"}};
  oracle::SplitMix64 rng(seed);
  auto canonical = [](const std::vector<uint32_t>& label) {
    std::vector<std::vector<uint32_t>> classes;
    std::vector<int64_t> where(label.size(), -1);
    std::vector<uint32_t> remap(label.size(), 0);
    uint32_t next = 0;
    for (uint32_t v = 0; v < label.size(); ++v) {
      if (where[label[v]] < 0) {
        where[label[v]] = next;
        remap[next] = label[v];
        classes.emplace_back();
        ++next;
      }
      classes[static_cast<size_t>(where[label[v]])].push_back(v);
    }
    return classes;
  };

  for (uint32_t t = 0; t < trials; ++t) {
    const auto n = static_cast<uint32_t>(2 + rng.next_below(60));
    const uint64_t mu = rng.next_below(3 * n + 1);
    const uint64_t md = rng.next_below(3 * n + 1);
    const AdjGraph gu = oracle::generate({K::gnm_undirected, n, mu, rng.next()});
    const AdjGraph gd = oracle::generate({K::gnm_directed, n, md, rng.next()});
    const AdjGraph dag = oracle::generate({K::random_dag, n, md, rng.next()});

    // dfs: event streams equal on both graphs
    {
      std::vector<DfsEvent> got;
      dfs_run(gu, [&](const DfsEvent& e) { got.push_back(e); });
      std::vector<DfsEvent> got_d;
      dfs_run(gd, [&](const DfsEvent& e) { got_d.push_back(e); });
      if (got == oracle::ref_dfs(gu).events && got_d == oracle::ref_dfs(gd).events)
        ++lines[0].ok;
    }
    // rpo: reversed stream equals the finish order
    {
      DfsForest f = dfs_run(gd);
      RpoStream rpo(gd, f);
      std::vector<uint32_t> order;
      while (auto v = rpo.next()) order.push_back(*v);
      std::vector<uint32_t> rev(order.rbegin(), order.rend());
      if (rev == oracle::ref_dfs(gd).finish_order) ++lines[1].ok;
    }
    // toposort: valid on DAGs, cyclic graphs witnessed
    {
      bool ok = true;
      const auto res = toposort(dag);
      if (const auto* order = std::get_if<std::vector<uint32_t>>(&res)) {
        std::vector<uint32_t> pos(n, 0);
        for (uint32_t i = 0; i < order->size(); ++i) pos[(*order)[i]] = i;
        for (auto [u, v] : dag.edges()) ok = ok && pos[u] < pos[v];
        ok = ok && order->size() == n;
      } else {
        ok = false;
      }
      const auto res2 = toposort(gd);
      const bool oracle_cyclic = !oracle::ref_toposort(gd).has_value();
      ok = ok && std::holds_alternative<CyclicError>(res2) == oracle_cyclic;
      if (ok) ++lines[2].ok;
    }
    // scc vs closure brute force
    if (canonical(scc_labels(gd)) == canonical(oracle::brute_scc(gd))) ++lines[3].ok;
    // sc-test vs oracle labels
    {
      const auto labels = oracle::ref_scc(gd);
      const bool want = n > 0 && *std::max_element(labels.begin(), labels.end()) == 0;
      if (sc_test(gd) == want) ++lines[4].ok;
    }
    // bridges vs lowpoint oracle
    {
      DfsForest f = dfs_run(gu);
      const auto got = find_bridges(gu, f);
      oracle::EdgeSet got_set;
      for (auto [u, v] : got.bridges) got_set.insert(std::minmax(u, v));
      if (got_set == oracle::ref_bridges(gu)) ++lines[5].ok;
    }
    // 2ec-test vs oracle definition
    {
      const bool want = oracle::component_count(gu) == 1 && n >= 2 &&
                        oracle::ref_bridges(gu).empty();
      if (two_ec_test(gu) == want) ++lines[6].ok;
    }
  }

  bool all_ok = true;
  for (const auto& l : lines) {
    std::cout << l.name << ": " << l.ok << '/' << trials << (l.ok == trials ? " OK" : " FAIL")
              << '\n';
    all_ok = all_ok && l.ok == trials;
  }
  return all_ok ? 0 : 1;
}

}  // namespace
