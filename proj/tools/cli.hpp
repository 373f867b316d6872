#ifndef NEARCONV_TOOLS_CLI_HPP
#define NEARCONV_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nearconv/nearconv.hpp"

namespace nearconv::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInputError = 2;

struct RunConfig {
  std::string algo = "auto";
  std::uint64_t seed = 0;
  bool items = false;
  unsigned threads = 1;
  std::string mode = "min";
  std::vector<std::string> inputs;
  std::string gen_kind;
  gen::InstanceSpec instance;
  gen::SeqSpec seq;
  std::size_t trials = 0;
  std::string sweep;
  std::string csv;
};

namespace detail {

template <class T, class Reader>
T read_file(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open '" + path + "'");
  try {
    return reader(in);
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const Algorithm algo = bench::parse_algorithm(cfg.algo);
  const KnapsackInstance inst = read_file<KnapsackInstance>(cfg.inputs.at(0), io::read_instance);
  SolveOptions opt;
  opt.threads = cfg.threads;
  io::write_solution(out, solve(inst, algo, cfg.seed, opt), cfg.items);
  return kOk;
}

inline int cmd_convolve(const RunConfig& cfg, std::ostream& out) {
  const IntSeq f = read_file<IntSeq>(cfg.inputs.at(0), io::read_sequence);
  const IntSeq g = read_file<IntSeq>(cfg.inputs.at(1), io::read_sequence);
  io::write_sequence(out, cfg.mode == "max" ? maxplus_nearconcave(f, g) : minplus_nearconvex(f, g));
  return kOk;
}

inline int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.gen_kind == "instance") {
    io::write_instance(out, gen::instance(cfg.instance, cfg.seed));
  } else {
    io::write_sequence(out, gen::near_convex(cfg.seq, cfg.seed));
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  acceptance::Config ac;
  ac.seed = cfg.seed;
  ac.trials = cfg.trials;
  const auto results = acceptance::run_all(ac, [&](const acceptance::Result& r) {
    acceptance::print(out, r);
    out.flush();
  });
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? kOk : kVerifyFailed;
}

inline int cmd_bench(const RunConfig& cfg) {
  const bench::Sweep sw = bench::parse_sweep(cfg.sweep);
  std::ofstream csv(cfg.csv);
  if (!csv) throw input_error("cannot write '" + cfg.csv + "'");
  bench::write_header(csv);
  bench::run(sw, cfg.seed, &csv);
  return kOk;
}

}  // namespace detail

// Parses args (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-convex min-plus convolution and 0-1 knapsack"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* solve = app.add_subcommand("solve", "Solve a knapsack instance file");
  solve->add_option("--algo", cfg.algo, "bellman, fast, symmetric or auto")
      ->check(CLI::IsMember({"bellman", "fast", "symmetric", "auto"}));
  solve->add_option("--seed", cfg.seed, "Random seed");
  solve->add_flag("--items", cfg.items, "Also print the chosen items");
  solve->add_option("--threads", cfg.threads, "Worker threads for independent groups")->check(CLI::Range(1U, 256U));
  solve->add_option("file", cfg.inputs, "Instance file")->required()->expected(1);

  auto* convolve = app.add_subcommand("convolve", "Convolve two sequence files");
  convolve->add_option("--mode", cfg.mode, "min or max")->check(CLI::IsMember({"min", "max"}));
  convolve->add_option("files", cfg.inputs, "Sequence files F G")->required()->expected(2);

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance or a near-convex sequence");
  gen_cmd->require_subcommand(1);
  auto* gen_inst = gen_cmd->add_subcommand("instance", "Knapsack instance with uniform profits and weights");
  gen_inst->add_option("--seed", cfg.seed, "Random seed");
  gen_inst->add_option("--n", cfg.instance.n, "Number of items");
  gen_inst->add_option("--pmax", cfg.instance.pmax, "Largest profit");
  gen_inst->add_option("--wmax", cfg.instance.wmax, "Largest weight");
  gen_inst->add_option("--capacity", cfg.instance.capacity, "Budget W (0: n*wmax/4)");
  auto* gen_seq = gen_cmd->add_subcommand("seq", "Convex base plus noise in [0, delta]");
  gen_seq->add_option("--seed", cfg.seed, "Random seed");
  gen_seq->add_option("--len", cfg.seq.length, "Length");
  gen_seq->add_option("--delta", cfg.seq.delta, "Noise bound");
  gen_seq->add_option("--max-slope", cfg.seq.max_slope, "Largest absolute slope of the base");
  gen_seq->add_option("--offset", cfg.seq.offset, "Offset of the first entry");

  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--trials", cfg.trials, "Corpus size per criterion (0: defaults)");
  verify->add_option("--seed", cfg.seed, "Base seed");

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark solvers over a parameter sweep");
  bench_cmd->add_option("--sweep", cfg.sweep, "key=v1,v2;... over n, pmax, wmax, W, seeds, algos");
  bench_cmd->add_option("--out", cfg.csv, "CSV output path")->required();
  bench_cmd->add_option("--seed", cfg.seed, "Base seed");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (solve->parsed()) return detail::cmd_solve(cfg, out);
    if (convolve->parsed()) return detail::cmd_convolve(cfg, out);
    if (gen_inst->parsed()) {
      cfg.gen_kind = "instance";
      return detail::cmd_gen(cfg, out);
    }
    if (gen_seq->parsed()) {
      cfg.gen_kind = "seq";
      return detail::cmd_gen(cfg, out);
    }
    if (verify->parsed()) return detail::cmd_verify(cfg, out);
    if (bench_cmd->parsed()) return detail::cmd_bench(cfg);
  } catch (const input_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace nearconv::cli

#endif  // NEARCONV_TOOLS_CLI_HPP
