// seqvote: winner determination for sequential majority voting over
// weighted, incomplete profiles.
//
// Exit codes: 0 ok, 2 parse/usage error, 3 cyclic vote or even total weight,
// 4 budget exceeded, 5 undetermined contest, 6 odd partition sum,
// 7 selfcheck violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqvote/seqvote.hpp"

namespace {

using namespace seqvote;

enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kInvalidProfile = 3,
  kBudget = 4,
  kIncomplete = 5,
  kOddSum = 6,
  kViolation = 7,
};

struct WinnersArgs {
  std::string file;
  std::string notion = "all";
  std::string source = "profile";
  std::string method = "auto";
  bool witness = false;
  std::optional<std::uint64_t> budget;
  std::size_t max_unknown = kDefaultMaxUnknownPairs;
};

int cmd_graph(const std::string &file) {
  const Profile p = read_profile_file(file);
  std::cout << render_graph(majority_graph(p));
  return kOk;
}

int cmd_winners(const WinnersArgs &args) {
  const Profile p = read_profile_file(args.file);
  std::vector<Notion> notions;
  if (args.notion == "all") {
    notions.assign(kAllNotions.begin(), kAllNotions.end());
  } else if (auto n = parse_notion(args.notion)) {
    notions.push_back(*n);
  } else {
    throw SyntaxError("unknown notion '" + args.notion + "'");
  }
  const bool brute = args.method == "brute";
  const bool graph_level = args.source == "graph";
  const auto &names = p.candidates();

  std::string lines;
  std::string witnesses;
  if (graph_level) {
    const MajorityGraph g = majority_graph(p);
    for (auto n : notions) {
      CandidateSubset w = brute ? oracle_winners(g, n, args.budget.value_or(kOracleBudget))
                                : solve_graph(g, n, args.max_unknown);
      lines += render_report_line(n, w, names);
    }
  } else if (brute) {
    const std::uint64_t budget = args.budget.value_or(kOracleBudget);
    std::optional<OracleResult> plain, fair;
    for (auto n : notions) {
      auto &slot = is_fair(n) ? fair : plain;
      if (!slot)
        slot = oracle_profile(p, is_fair(n), budget);
      lines += render_report_line(n, slot->get(n), names);
      if (!args.witness)
        continue;
      const auto base = base_notion(n);
      if (base == Notion::WP || base == Notion::WC) {
        const auto &ws = base == Notion::WP ? slot->wp_witness : slot->wc_witness;
        for (const auto &w : ws)
          if (w)
            witnesses += render_witness(n, *w);
      }
    }
  } else {
    SolveOptions opt;
    opt.budget = args.budget.value_or(kDefaultBudget);
    opt.witnesses = args.witness;
    for (auto n : notions) {
      const WinnerReport r = solve_profile(p, n, opt);
      lines += render_report_line(n, r.winners, names);
      for (const auto &w : r.witnesses)
        witnesses += render_witness(n, w);
    }
  }
  std::cout << lines << witnesses;
  return kOk;
}

int cmd_eval(const std::string &file, const std::string &agenda_text) {
  const Profile p = read_profile_file(file);
  const Agenda t = parse_agenda(agenda_text, p.candidates());
  const Candidate w = evaluate(t, majority_graph(p));
  std::cout << "winner: " << p.candidates().name(w) << '\n';
  return kOk;
}

int cmd_reduce(const std::vector<std::uint64_t> &integers, const std::vector<std::string> &extra,
               const std::string &out_file) {
  ReductionInstance r = extend_candidates(reduce_partition(integers), extra);
  std::string header = "# partition instance:";
  for (auto x : integers)
    header += ' ' + std::to_string(x);
  header += " (k = " + std::to_string(r.k) + ")\n# designated: " + r.profile.candidates().name(r.designated) + '\n';
  const std::string text = header + render_profile(r.profile);
  if (out_file.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out)
    throw IoError("cannot write '" + out_file + "'");
  out << text;
  std::cout << "designated: " << r.profile.candidates().name(r.designated) << '\n';
  return kOk;
}

int cmd_selfcheck(const SelfCheckConfig &cfg) {
  const auto result = run_selfcheck(cfg, &std::cout);
  return result.passed() ? kOk : kViolation;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sequential majority voting: winners over weighted incomplete profiles"};
  app.require_subcommand(1);

  std::string graph_file;
  auto *graph = app.add_subcommand("graph", "Print the majority graph of a profile");
  graph->add_option("file", graph_file, "Profile file")->required();

  WinnersArgs wargs;
  auto *winners = app.add_subcommand("winners", "Compute winner sets");
  winners->add_option("file", wargs.file, "Profile file")->required();
  winners->add_option("--notion", wargs.notion, "all|wc|sc|wp|sp|fwc|fsc|fwp|fsp")
      ->check(CLI::IsMember({"all", "wc", "sc", "wp", "sp", "fwc", "fsc", "fwp", "fsp"}, CLI::ignore_case));
  winners->add_option("--source", wargs.source, "profile|graph")->check(CLI::IsMember({"profile", "graph"}));
  winners->add_option("--method", wargs.method, "auto|brute")->check(CLI::IsMember({"auto", "brute"}));
  winners->add_flag("--witness", wargs.witness, "Print a completion and agenda for each possible winner");
  winners->add_option("--budget", wargs.budget, "Cap on completions x agendas");
  winners->add_option("--max-unknown", wargs.max_unknown, "Cap on unknown pairs for graph-level enumeration");

  std::string eval_file, agenda_text;
  auto *eval = app.add_subcommand("eval", "Evaluate one agenda on a profile");
  eval->add_option("file", eval_file, "Profile file")->required();
  eval->add_option("--agenda", agenda_text, "Agenda such as ((A,B),C)")->required();

  std::vector<std::uint64_t> integers;
  std::vector<std::string> extra;
  std::string reduce_out;
  auto *reduce = app.add_subcommand("reduce", "Build the partition reduction instance");
  reduce->add_option("integers", integers, "Positive integers with an even sum")->required();
  reduce->add_option("-o,--output", reduce_out, "Write the profile here instead of stdout");
  reduce->add_option("--extra", extra, "Extra candidates placed below A, B and C");

  SelfCheckConfig cfg;
  bool no_oracle = false;
  auto *selfcheck = app.add_subcommand("selfcheck", "Check the winner relations on random profiles");
  selfcheck->add_option("--candidates", cfg.candidates, "Candidates per profile")->check(CLI::Range(1, 8));
  selfcheck->add_option("--votes", cfg.votes, "Maximum votes per profile")->check(CLI::Range(1, 12));
  selfcheck->add_option("--trials", cfg.trials, "Number of random profiles");
  selfcheck->add_option("--seed", cfg.seed, "Random seed");
  selfcheck->add_option("--max-weight", cfg.max_weight, "Maximum vote weight")->check(CLI::Range(1, 1000));
  selfcheck->add_option("--budget", cfg.budget, "Search budget per profile");
  selfcheck->add_flag("--no-oracle", no_oracle, "Skip comparison with the definitional oracle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  cfg.compare_oracle = !no_oracle;

  try {
    if (*graph)
      return cmd_graph(graph_file);
    if (*winners)
      return cmd_winners(wargs);
    if (*eval)
      return cmd_eval(eval_file, agenda_text);
    if (*reduce)
      return cmd_reduce(integers, extra, reduce_out);
    if (*selfcheck)
      return cmd_selfcheck(cfg);
  } catch (const CycleError &e) {
    std::cerr << "error: CycleError: " << e.what() << '\n';
    return kInvalidProfile;
  } catch (const EvenTotalWeightError &e) {
    std::cerr << "error: EvenTotalWeightError: " << e.what() << '\n';
    return kInvalidProfile;
  } catch (const BudgetExceededError &e) {
    std::cerr << "error: BudgetExceededError: " << e.what() << '\n';
    return kBudget;
  } catch (const IncompleteGraphError &e) {
    std::cerr << "error: IncompleteGraphError: " << e.what() << '\n';
    return kIncomplete;
  } catch (const OddSumError &e) {
    std::cerr << "error: OddSumError: " << e.what() << '\n';
    return kOddSum;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kParse;
  }
  return kParse;
}
