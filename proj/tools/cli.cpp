#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "pegsol/automaton.hpp"
#include "pegsol/board.hpp"
#include "pegsol/errors.hpp"
#include "pegsol/generate.hpp"
#include "pegsol/minpegs.hpp"
#include "pegsol/oracle.hpp"
#include "pegsol/solver.hpp"

namespace pegsol::cli {
namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsageError = 2;
constexpr int kInternalError = 3;

// Run `handle` on the positional configuration if one was given, otherwise on
// every stdin line (batch mode).  A bad line throws ParseError, which aborts
// the batch at that line and surfaces as a usage error.
void for_each_config(const std::string& positional, std::istream& in,
                     const std::function<void(const Configuration&)>& handle) {
  if (!positional.empty()) {
    handle(Configuration::parse(positional));
    return;
  }
  std::string line;
  while (std::getline(in, line)) handle(Configuration::parse(line));
}

template <typename F>
double time_ms(F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::forward<F>(body)();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int run_check(const std::string& cfg, bool as_json, std::istream& in, std::ostream& out) {
  for_each_config(cfg, in, [&](const Configuration& c) {
    const bool ok = accepts(c);
    if (as_json)
      out << json{{"configuration", c.to_string()}, {"solvable", ok}}.dump() << "\n";
    else
      out << (ok ? "solvable" : "unsolvable") << "\n";
  });
  return kOk;
}

int run_solve(const std::string& cfg, bool as_json, std::istream& in, std::ostream& out) {
  for_each_config(cfg, in, [&](const Configuration& c) {
    try {
      const Plan plan = solve_single(c);
      if (as_json)
        out << to_json_string(plan) << "\n";
      else
        out << to_text(plan) << "\n";
    } catch (const UnsolvableError&) {
      if (as_json)
        out << json{{"configuration", c.to_string()}, {"solvable", false}}.dump() << "\n";
      else
        out << "unsolvable\n";
    }
  });
  return kOk;
}

int run_min(const std::string& cfg, bool as_json, std::istream& in, std::ostream& out) {
  for_each_config(cfg, in, [&](const Configuration& c) {
    const SolveResult result = solve_min(c);
    if (as_json)
      out << to_json_string(result) << "\n";
    else
      out << to_text(result);
  });
  return kOk;
}

int run_count(int n, bool as_json, std::ostream& out) {
  const std::uint64_t total = count_solvable(n);
  if (as_json)
    out << json{{"n", n}, {"count", total}}.dump() << "\n";
  else
    out << total << "\n";
  return kOk;
}

int run_enum(int n, bool as_json, std::ostream& out) {
  const std::vector<Configuration> all = enumerate_solvable(n);
  if (as_json) {
    json names = json::array();
    for (const Configuration& c : all) names.push_back(c.to_string());
    out << json{{"n", n}, {"configurations", std::move(names)}}.dump() << "\n";
  } else {
    for (const Configuration& c : all) out << c.to_string() << "\n";
  }
  return kOk;
}

int run_oracle(const std::string& cfg, bool as_json, bool want_min, bool override_guard,
               std::istream& in, std::ostream& out) {
  Oracle::Options options;
  options.override_size_guard = override_guard;
  Oracle oracle(options);
  for_each_config(cfg, in, [&](const Configuration& c) {
    if (want_min) {
      const Index k = oracle.min_pegs(c);
      if (as_json)
        out << json{{"configuration", c.to_string()}, {"min_pegs", k}}.dump() << "\n";
      else
        out << k << "\n";
    } else {
      const bool ok = oracle.solvable(c);
      if (as_json)
        out << json{{"configuration", c.to_string()}, {"solvable", ok}}.dump() << "\n";
      else
        out << (ok ? "solvable" : "unsolvable") << "\n";
    }
  });
  return kOk;
}

// Replays every configuration of length <= maxlen against the exhaustive
// search: language membership must match solvability, solve_min must match
// the true minimum, its combined plan must actually reach that minimum, and
// the partition graph's shortest path must have length cells + pegs-left.
int run_verify(int maxlen, bool as_json, std::ostream& out) {
  Oracle oracle;
  const Dfa& dfa = solvable_dfa();
  std::uint64_t checked = 0;
  std::uint64_t membership_bad = 0;
  std::uint64_t min_bad = 0;
  std::uint64_t replay_bad = 0;
  std::string text;
  for (int len = 1; len <= maxlen; ++len) {
    text.assign(static_cast<std::size_t>(len), '0');
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      for (int i = 0; i < len; ++i) text[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? '1' : '0';
      const Configuration c = Configuration::parse(text);
      ++checked;
      const Index truth = oracle.min_pegs(c);
      if (dfa.accepts(c) != (truth == 1)) ++membership_bad;
      const SolveResult result = solve_min(c);
      bool wrong = result.k != truth;
      if (!wrong && c.peg_count() > 0) {
        const PartitionResult partition = min_peg_partition(c);
        wrong = partition.shortest_path_length != c.size() + partition.k;
      }
      if (wrong) {
        ++min_bad;
        continue;
      }
      try {
        if (replay_moves(c, result.combined.moves).peg_count() != truth) ++replay_bad;
      } catch (const Error&) {
        ++replay_bad;
      }
    }
  }
  const bool passed = membership_bad == 0 && min_bad == 0 && replay_bad == 0;
  if (as_json) {
    out << json{{"maxlen", maxlen},
                {"checked", checked},
                {"membership_mismatches", membership_bad},
                {"min_pegs_mismatches", min_bad},
                {"replay_failures", replay_bad},
                {"passed", passed}}
               .dump()
        << "\n";
  } else {
    out << "membership vs exhaustive search: " << checked << " configurations, "
        << membership_bad << " mismatches\n";
    out << "minimum pegs vs exhaustive search: " << checked << " configurations, " << min_bad
        << " mismatches, " << replay_bad << " replay failures\n";
    out << (passed ? "all checks passed\n" : "FAILED\n");
  }
  return passed ? kOk : kInternalError;
}

int run_bench(Index length, std::uint64_t seed, bool as_json, std::ostream& out) {
  Configuration board;
  const double generate_ms = time_ms([&] { board = generate_solvable(length, seed); });
  Plan plan;
  const double single_ms = time_ms([&] { plan = solve_single(board); });
  SolveResult result;
  const double min_ms = time_ms([&] { result = solve_min(board); });
  if (as_json) {
    out << json{{"length", length},
                {"seed", seed},
                {"pegs", board.peg_count()},
                {"generate_ms", generate_ms},
                {"solve_single_ms", single_ms},
                {"solve_min_ms", min_ms},
                {"k", result.k}}
               .dump()
        << "\n";
  } else {
    out << std::fixed << std::setprecision(3);
    out << "length=" << length << " seed=" << seed << " pegs=" << board.peg_count()
        << " generate_ms=" << generate_ms << " solve_single_ms=" << single_ms
        << " solve_min_ms=" << min_ms << " k=" << result.k << "\n";
  }
  return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"one-dimensional peg solitaire: decide, solve, count, and cross-check boards"};
  app.require_subcommand(1);

  static const std::string kConfigHelp =
      "board as a string of 0s (holes) and 1s (pegs); omit it to read one board per line "
      "from standard input";

  std::string check_cfg;
  bool check_json = false;
  CLI::App* check = app.add_subcommand("check", "decide whether the board reduces to one peg");
  check->add_option("configuration", check_cfg, kConfigHelp);
  check->add_flag("--json", check_json, "emit JSON");

  std::string solve_cfg;
  bool solve_json = false;
  CLI::App* solve = app.add_subcommand("solve", "print a hop sequence reaching one peg");
  solve->add_option("configuration", solve_cfg, kConfigHelp);
  solve->add_flag("--json", solve_json, "emit JSON");

  std::string min_cfg;
  bool min_json = false;
  CLI::App* min = app.add_subcommand(
      "min", "reduce the board to the fewest reachable pegs, segment by segment");
  min->add_option("configuration", min_cfg, kConfigHelp);
  min->add_flag("--json", min_json, "emit JSON");

  int count_n = 0;
  bool count_json = false;
  CLI::App* count =
      app.add_subcommand("count", "number of solvable board classes with exactly n pegs");
  count->add_option("n", count_n, "peg count (n >= 1)")->required();
  count->add_flag("--json", count_json, "emit JSON");

  int enum_n = 0;
  bool enum_json = false;
  CLI::App* enumerate =
      app.add_subcommand("enum", "list the solvable board classes with exactly n pegs");
  enumerate->add_option("n", enum_n, "peg count (n >= 1)")->required();
  enumerate->add_flag("--json", enum_json, "emit JSON");

  std::string oracle_cfg;
  bool oracle_json = false;
  bool oracle_min = false;
  bool oracle_override = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "answer by exhaustive game-tree search instead of the fast path");
  oracle->add_option("configuration", oracle_cfg, kConfigHelp);
  oracle->add_flag("--min", oracle_min, "print the fewest reachable pegs instead of solvability");
  oracle->add_flag("--override-size-guard", oracle_override,
                   "search boards longer than the safety cap (may take very long)");
  oracle->add_flag("--json", oracle_json, "emit JSON");

  int verify_maxlen = 12;
  bool verify_json = false;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check the fast path against exhaustive search on every small board");
  verify->add_option("--maxlen", verify_maxlen, "largest board length to sweep (default 12)")
      ->check(CLI::Range(1, 16));
  verify->add_flag("--json", verify_json, "emit JSON");

  Index bench_len = 100000;
  std::uint64_t bench_seed = 1;
  bool bench_json = false;
  CLI::App* bench =
      app.add_subcommand("bench", "generate a solvable board and time the solvers on it");
  bench->add_option("--len", bench_len, "board length (default 100000)")
      ->check(CLI::Range(static_cast<Index>(1), static_cast<Index>(100000000)));
  bench->add_option("--seed", bench_seed, "generator seed (default 1)");
  bench->add_flag("--json", bench_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success))
      return app.exit(e, out, err); // --help and friends
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*check) return run_check(check_cfg, check_json, in, out);
    if (*solve) return run_solve(solve_cfg, solve_json, in, out);
    if (*min) return run_min(min_cfg, min_json, in, out);
    if (*count) return run_count(count_n, count_json, out);
    if (*enumerate) return run_enum(enum_n, enum_json, out);
    if (*oracle)
      return run_oracle(oracle_cfg, oracle_json, oracle_min, oracle_override, in, out);
    if (*verify) return run_verify(verify_maxlen, verify_json, out);
    if (*bench) return run_bench(bench_len, bench_seed, bench_json, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kOk;
}

} // namespace pegsol::cli
