#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ktdom/bench.hpp"
#include "ktdom/coloring.hpp"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/exact.hpp"
#include "ktdom/generators.hpp"
#include "ktdom/instance_io.hpp"
#include "ktdom/ktree.hpp"

namespace {

using namespace ktdom;

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing \"" + path + "\"");
}

std::string stats_line(const Graph& g, int k) {
  const long long vk = static_cast<long long>(k_vertex_set(g, k).size());
  std::string line = "n=" + std::to_string(g.vertex_count()) +
                     " m=" + std::to_string(g.edge_count()) + " |V_" + std::to_string(k) +
                     "|=" + std::to_string(vk);
  if (g.vertex_count() >= k + 1) {
    const auto [num, den] = bound_value(g.vertex_count(), vk, k);
    line += " bound=" + std::to_string(num) + "/" + std::to_string(den) +
            " floor=" + std::to_string(num / den);
  } else {
    line += " bound=undefined floor=undefined";
  }
  return line;
}

// Recognize or report the defect on stderr; exit code 1 for non-k-trees.
KTree recognize_or_fail(const Graph& g, int k) {
  const RecognitionResult rec = recognize(g, k);
  if (!rec.accepted) {
    throw std::runtime_error("not a " + std::to_string(k) + "-tree: " + rec.reason);
  }
  return ktree_from_elimination(g, k, rec.elimination);
}

std::string joined(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

struct GenArgs {
  std::string kind;
  int k = 0;
  int n = -1;
  int t = -1;
  int m = -1;
  std::uint64_t seed = 0;
  bool k_given = false;
  bool seed_given = false;
  std::string output;
};

int run_gen(const GenArgs& a) {
  auto need = [&](bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error("gen --kind " + a.kind + ": " + msg);
  };
  const bool size_n = a.n >= 0, size_t_ = a.t >= 0, size_m = a.m >= 0;

  Graph g;
  int file_k = a.k;
  if (a.kind == "complete") {
    need(a.k_given, "requires --k");
    need(!size_n && !size_t_ && !size_m && !a.seed_given, "takes only --k");
    g = gen_complete(a.k).graph;
  } else if (a.kind == "random") {
    need(a.k_given && size_n, "requires --k and --n");
    need(!size_t_ && !size_m, "takes --k, --n and --seed only");
    g = gen_random_ktree(a.k, a.n, a.seed).graph;
  } else if (a.kind == "kpath") {
    need(a.k_given && size_t_, "requires --k and --t");
    need(!size_n && !size_m && !a.seed_given, "takes --k and --t only");
    g = gen_kpath(a.k, a.t).graph;
  } else if (a.kind == "tight") {
    need(a.k_given && size_t_, "requires --k and --t");
    need(!size_n && !size_m && !a.seed_given, "takes --k and --t only");
    g = gen_tight(a.k, a.t).graph;
  } else if (a.kind == "caterpillar") {
    need(size_m, "requires --m");
    need(!a.k_given && !size_n && !size_t_ && !a.seed_given, "takes --m only");
    g = gen_caterpillar(a.m);
    file_k = 1;
  } else {
    throw std::runtime_error("unknown kind \"" + a.kind + "\"");
  }
  emit(serialize_instance(g, file_k), a.output);
  return 0;
}

int run_check(const std::string& path) {
  const Instance inst = load_instance(path);
  std::cout << stats_line(inst.graph, inst.k) << "\n";
  const RecognitionResult rec = recognize(inst.graph, inst.k);
  if (!rec.accepted) {
    std::cerr << "not a " << inst.k << "-tree: " << rec.reason << "\n";
    return 1;
  }
  return 0;
}

int run_color(const std::string& path) {
  const Instance inst = load_instance(path);
  const KTree t = recognize_or_fail(inst.graph, inst.k);
  const Coloring c = rainbow_coloring(t);
  std::string out;
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    out += std::to_string(v) + " " + std::to_string(c.colors[static_cast<std::size_t>(v)]) + "\n";
  }
  std::cout << out;
  return 0;
}

int run_dominate(const std::string& path) {
  const Instance inst = load_instance(path);
  const KTree t = recognize_or_fail(inst.graph, inst.k);
  const DominationCertificate cert = construct_independent_dominating_set(t);

  std::cout << stats_line(inst.graph, inst.k) << "\n";
  if (cert.chosen_color == 0) {
    std::cout << "base_case: K_" << (cert.k + 1) << "\n";
  } else {
    long long total = 0;
    for (const CandidateClass& cl : cert.classes) {
      std::cout << "class " << cl.color << ": |Z|=" << cl.zclass.size()
                << " |S|=" << cl.residual.size() << " |D|=" << cl.size() << "\n";
      total += cl.size();
    }
    std::cout << "identity_total=" << total << " expected=" << cert.bound_num << "\n";
    std::cout << "chosen_color=" << cert.chosen_color << "\n";
  }
  std::cout << "chosen_size=" << cert.chosen.size() << "\n";
  std::cout << "chosen_set: " << joined(cert.chosen) << "\n";

  const CertificateReport rep = verify_certificate(inst.graph, cert);
  std::cout << "verify: " << (rep.valid() ? "PASS" : "FAIL") << "\n";
  if (!rep.valid()) {
    for (const std::string& v : rep.violations) std::cerr << "violation: " << v << "\n";
    return 1;
  }
  return 0;
}

int run_exact(const std::string& path, std::uint64_t node_limit) {
  const Instance inst = load_instance(path);
  const OracleResult res = exact_gamma_i(inst.graph, node_limit);
  if (res.size >= 0) {
    std::cout << "gamma_i=" << res.size << "\n";
    std::cout << "witness: " << joined(res.witness) << "\n";
  } else {
    std::cout << "gamma_i=unknown\n";
    std::cout << "witness: (none)\n";
  }
  std::cout << "nodes_explored=" << res.nodes_explored << "\n";
  std::cout << "limit_hit=" << (res.limit_hit ? 1 : 0) << "\n";
  return res.limit_hit ? 2 : 0;
}

int run_bench_cmd(const BenchOptions& opts, const std::string& csv_path) {
  const std::vector<BenchRow> rows = run_bench(opts);
  emit(to_csv(rows), csv_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-tree independent domination toolkit"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", gen_args.kind, "complete|random|kpath|tight|caterpillar")->required();
  CLI::Option* k_opt = gen->add_option("--k", gen_args.k, "clique parameter");
  gen->add_option("--n", gen_args.n, "vertex count (random)");
  gen->add_option("--t", gen_args.t, "block count (kpath, tight)");
  gen->add_option("--m", gen_args.m, "path length (caterpillar)");
  CLI::Option* seed_opt = gen->add_option("--seed", gen_args.seed, "generator seed (random)");
  gen->add_option("-o,--output", gen_args.output, "output file (default: stdout)");

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "recognize an instance as a k-tree");
  check->add_option("file", check_path, "instance file")->required();

  std::string color_path;
  CLI::App* color = app.add_subcommand("color", "print the rainbow coloring, one \"v color\" per line");
  color->add_option("file", color_path, "instance file")->required();

  std::string dom_path;
  CLI::App* dominate = app.add_subcommand("dominate", "build and verify the domination certificate");
  dominate->add_option("file", dom_path, "instance file")->required();

  std::string exact_path;
  std::uint64_t node_limit = kDefaultNodeLimit;
  CLI::App* exact = app.add_subcommand("exact", "exact gamma_i by branch and bound");
  exact->add_option("file", exact_path, "instance file")->required();
  exact->add_option("--node-limit", node_limit, "search budget in branch nodes");

  BenchOptions bopts;
  std::string csv_path;
  CLI::App* bench = app.add_subcommand("bench", "batch random trials, CSV summary");
  bench->add_option("--k", bopts.k, "clique parameter")->required();
  bench->add_option("--n", bopts.n, "vertices per trial")->required();
  bench->add_option("--trials", bopts.trials, "number of trials")->required();
  bench->add_option("--seed", bopts.seed, "master seed (default 0)");
  bench->add_option("--exact-max", bopts.exact_max, "run the oracle only when n <= this (default 20)");
  bench->add_option("--node-limit", bopts.node_limit, "oracle budget per trial");
  bench->add_option("--csv", csv_path, "output file (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      gen_args.k_given = k_opt->count() > 0;
      gen_args.seed_given = seed_opt->count() > 0;
      return run_gen(gen_args);
    }
    if (check->parsed()) return run_check(check_path);
    if (color->parsed()) return run_color(color_path);
    if (dominate->parsed()) return run_dominate(dom_path);
    if (exact->parsed()) return run_exact(exact_path, node_limit);
    if (bench->parsed()) return run_bench_cmd(bopts, csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
