// Copyright 2026 The nashinit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "nashinit/experiments.hpp"
#include "nashinit/fictitious_play.hpp"
#include "nashinit/game_io.hpp"
#include "nashinit/initializers.hpp"
#include "nashinit/sampling.hpp"
#include "nashinit/seeding.hpp"

namespace nashinit::cli {
namespace {

namespace fs = std::filesystem;

// Raised for flag values that parse but make no sense together.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  int players = 3;
  int actions = 5;
  int games = kDefaultGames;
  std::vector<int> inits;
  int iters = 10'000;
  int pool = kDefaultPoolSize;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 1;
  std::string out = "results";
  int threads = 0;
  bool paper_scale = false;
  bool sequential = false;
};

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("NASH_INIT_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("NASH_INIT_THREADS must be a positive integer, got '") +
                     env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<InitAlgorithmId> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<InitAlgorithmId> ids;
  for (const std::string& name : names) {
    auto id = parse_init_algorithm(name);
    if (!id) {
      throw UsageError("unknown algorithm '" + name + "'; valid ids: " +
                       valid_algorithm_names());
    }
    ids.push_back(*id);
  }
  return ids;
}

UpdateOrder update_order(bool sequential) {
  return sequential ? UpdateOrder::kSequential : UpdateOrder::kSimultaneous;
}

std::ofstream open_output(const fs::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream stream(path);
  if (!stream) throw OutputError("cannot write '" + path.string() + "'");
  return stream;
}

void add_common_flags(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--players", flags.players, "Players per game (n)")
      ->check(CLI::Range(2, 16));
  cmd.add_option("--actions", flags.actions, "Pure strategies per player (m)")
      ->check(CLI::Range(2, 1 << 16));
  cmd.add_option("--games", flags.games, "Random games (G)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--inits", flags.inits,
                 "Initializations per algorithm (K); comma list for sweeps")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  cmd.add_option("--iters", flags.iters, "Fictitious-play iterations (T)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--pool", flags.pool, "Sampled pool size (H)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--algorithms", flags.algorithms,
                 "Comma list of " + valid_algorithm_names())
      ->delimiter(',');
  cmd.add_option("--seed", flags.seed, "Master seed");
  cmd.add_option("--out", flags.out, "Output directory");
  cmd.add_option("--threads", flags.threads,
                 "Worker threads (falls back to NASH_INIT_THREADS)")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--paper-scale", flags.paper_scale,
               "Use 10,000 games and a 100,000-profile pool unless overridden");
  cmd.add_flag("--sequential-updates", flags.sequential,
               "Players update in turn within an iteration");
}

ExperimentConfig build_config(const CLI::App& cmd, const CommonFlags& flags,
                              bool sweep) {
  ExperimentConfig config;
  config.num_players = flags.players;
  config.num_actions = flags.actions;
  config.num_games = flags.games;
  config.iterations = flags.iters;
  config.pool_size = flags.pool;
  config.master_seed = flags.seed;
  config.update_order = update_order(flags.sequential);
  config.threads = resolve_threads(flags.threads);
  if (sweep && cmd.count("--games") == 0) config.num_games = kDefaultSweepGames;
  if (flags.paper_scale) {
    if (cmd.count("--games") == 0) config.num_games = kPaperScaleGames;
    if (cmd.count("--pool") == 0) config.pool_size = kPaperScalePoolSize;
  }
  if (!flags.inits.empty()) {
    config.k_values = flags.inits;
    std::sort(config.k_values.begin(), config.k_values.end());
    config.k_values.erase(
        std::unique(config.k_values.begin(), config.k_values.end()),
        config.k_values.end());
  } else if (sweep) {
    config.k_values = {2, 3, 5, 10, 20};
  }
  if (!flags.algorithms.empty()) {
    config.algorithms = parse_algorithms(flags.algorithms);
  } else if (sweep) {
    config.algorithms = {InitAlgorithmId::kClassic, InitAlgorithmId::kMacQueen2,
                         InitAlgorithmId::kMaximinUnsampled,
                         InitAlgorithmId::kFictitiousPlayPP};
  }
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return config;
}

void print_table(std::ostream& out, const ExperimentResult& result) {
  out << std::left << std::setw(12) << "algorithm" << std::setw(5) << "K"
      << "mean epsilon* +/- ci95\n";
  for (const AggregateRow& a : result.aggregates) {
    out << std::left << std::setw(12) << to_string(a.algorithm) << std::setw(5)
        << a.k << std::fixed << std::setprecision(5) << a.mean << " +/- "
        << std::scientific << std::setprecision(2) << a.ci95 << '\n'
        << std::defaultfloat;
  }
  if (result.truncated) {
    out << "truncated after " << result.completed_games << " games\n";
  }
}

int run_experiment_command(const CLI::App& cmd, const CommonFlags& flags,
                           bool sweep, std::ostream& out) {
  const ExperimentConfig config = build_config(cmd, flags, sweep);
  const fs::path dir(flags.out);
  // Open every output before computing so a bad path fails fast.
  std::ofstream rows_file = open_output(dir / "rows.csv");
  std::ofstream aggregates_file = open_output(dir / "aggregates.csv");
  std::optional<std::ofstream> figure_file;
  if (sweep) figure_file = open_output(dir / "figure.csv");

  out << "seed: " << config.master_seed << '\n';
  out << "n=" << config.num_players << " m=" << config.num_actions
      << " games=" << config.num_games << " T=" << config.iterations
      << " H=" << config.pool_size << " threads=" << config.threads << '\n';

  const ExperimentResult result =
      sweep ? k_sweep(config) : run_experiment(config);
  write_rows_csv(rows_file, result);
  write_aggregates_csv(aggregates_file, result.aggregates);
  if (figure_file) write_figure_csv(*figure_file, result.aggregates);
  rows_file.close();
  aggregates_file.close();
  if (!rows_file || !aggregates_file || (figure_file && !*figure_file)) {
    throw OutputError("failed writing results under '" + dir.string() + "'");
  }
  print_table(out, result);
  return kExitOk;
}

struct SolveFlags {
  std::string game_file;
  std::string algorithm = "maximin-u";
  int inits = 5;
  int iters = 10'000;
  int pool = kDefaultPoolSize;
  std::uint64_t seed = 1;
  std::string out;
  std::string trajectory;
  int stride = 100;
  int threads = 0;
  bool sequential = false;
};

int run_solve(const SolveFlags& flags, std::ostream& out) {
  auto id = parse_init_algorithm(flags.algorithm);
  if (!id) {
    throw UsageError("unknown algorithm '" + flags.algorithm +
                     "'; valid ids: " + valid_algorithm_names());
  }
  const InitAlgorithm algorithm{*id, flags.inits, flags.pool};
  try {
    algorithm.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int threads = resolve_threads(flags.threads);

  std::ifstream in(flags.game_file);
  if (!in) throw FormatError("cannot open game file '" + flags.game_file + "'");
  const Game game = read_game_json(in);

  std::optional<std::ofstream> solution_file;
  if (!flags.out.empty()) solution_file = open_output(flags.out);
  std::optional<std::ofstream> trajectory_file;
  if (!flags.trajectory.empty()) trajectory_file = open_output(flags.trajectory);

  const int n = game.num_players();
  const int m = game.num_actions();
  std::optional<ProfilePool> pool;
  if (uses_pool(*id)) {
    Rng pool_rng = make_stream(flags.seed, "pool");
    pool = sample_pool(n, m, static_cast<std::size_t>(flags.pool), pool_rng);
  }
  const InitBatch batch =
      generate_init_batch(algorithm, n, m, stream_seed(flags.seed, flags.algorithm),
                          pool ? &*pool : nullptr);

  FPRunConfig fp_config;
  fp_config.iterations = flags.iters;
  fp_config.update_order = update_order(flags.sequential);
  fp_config.record_trajectory = trajectory_file.has_value();
  fp_config.trajectory_stride = flags.stride;
  const FPResult result = fp_multi(game, batch, fp_config, threads);

  out << "seed: " << flags.seed << '\n';
  out << "algorithm: " << flags.algorithm << " K=" << batch.profiles.size()
      << " T=" << flags.iters << '\n';
  out << "best initialization: " << result.init_index << '\n';
  for (int i = 0; i < n; ++i) {
    out << "player " << i << ':';
    for (double p : result.final_profile.strategy(i)) out << ' ' << format_double(p);
    out << '\n';
  }
  out << "epsilon*: " << format_double(result.epsilon_report.epsilon) << '\n';

  if (solution_file) {
    write_solution_json(*solution_file, result, flags.algorithm);
    if (!*solution_file) throw OutputError("failed writing '" + flags.out + "'");
  }
  if (trajectory_file) {
    write_trajectory_csv(*trajectory_file, result);
    if (!*trajectory_file) {
      throw OutputError("failed writing '" + flags.trajectory + "'");
    }
  }
  return kExitOk;
}

struct GenFlags {
  int players = 3;
  int actions = 5;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen_game(const GenFlags& flags, std::ostream& out) {
  Game game = [&] {
    try {
      return random_game(flags.players, flags.actions, flags.seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (flags.out.empty()) {
    write_game_json(out, game);
    return kExitOk;
  }
  std::ofstream file = open_output(flags.out);
  write_game_json(file, game);
  if (!file) throw OutputError("failed writing '" + flags.out + "'");
  out << "seed: " << flags.seed << '\n' << "wrote " << flags.out << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Fictitious play with multiple initializations", "nashinit"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  CLI::App* solve = app.add_subcommand("solve", "Approximate an equilibrium of a game file");
  solve->add_option("game", solve_flags.game_file, "Game JSON file")->required();
  solve->add_option("--algorithm", solve_flags.algorithm, valid_algorithm_names());
  solve->add_option("--inits", solve_flags.inits, "Initializations (K)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--iters", solve_flags.iters, "Fictitious-play iterations (T)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--pool", solve_flags.pool, "Sampled pool size (H)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--seed", solve_flags.seed, "Seed");
  solve->add_option("--out", solve_flags.out, "Write the solution as JSON");
  solve->add_option("--trajectory", solve_flags.trajectory,
                    "Write the winning run's averages as CSV");
  solve->add_option("--stride", solve_flags.stride, "Trajectory snapshot stride")
      ->check(CLI::PositiveNumber);
  solve->add_option("--threads", solve_flags.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--sequential-updates", solve_flags.sequential,
                  "Players update in turn within an iteration");

  CommonFlags experiment_flags;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Score algorithms over random games");
  add_common_flags(*experiment, experiment_flags);

  CommonFlags sweep_flags;
  CLI::App* sweep = app.add_subcommand("sweep", "Score algorithms across K values");
  add_common_flags(*sweep, sweep_flags);

  GenFlags gen_flags;
  CLI::App* gen = app.add_subcommand("gen-game", "Write a uniform random game as JSON");
  gen->add_option("--players", gen_flags.players, "Players (n)");
  gen->add_option("--actions", gen_flags.actions, "Pure strategies per player (m)");
  gen->add_option("--seed", gen_flags.seed, "Seed");
  gen->add_option("--out", gen_flags.out, "Output file (stdout when omitted)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (solve->parsed() || experiment->parsed() || sweep->parsed()) {
      err << "run with --help for usage\n";
    }
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return run_solve(solve_flags, out);
    if (experiment->parsed()) {
      return run_experiment_command(*experiment, experiment_flags, false, out);
    }
    if (sweep->parsed()) {
      return run_experiment_command(*sweep, sweep_flags, true, out);
    }
    if (gen->parsed()) return run_gen_game(gen_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const OutputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOutput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace nashinit::cli
