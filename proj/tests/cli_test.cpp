#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_util.hpp"

using namespace seqvote;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string &args, bool merge_stderr = false) {
  const std::string cmd = std::string(SEQVOTE_CLI) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string &name) { return std::string(SEQVOTE_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string &name) {
  return std::filesystem::temp_directory_path() / ("seqvote_cli_test_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, Graph) {
  const auto r = run("graph " + data("mixed.prof"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "A > B\nA ? C\nB ? C\n");
}

TEST(Cli, WinnersAll) {
  const auto r = run("winners " + data("mixed.prof"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "WC: A C\nSC: -\nWP: A B C\nSP: -\nFWC: A C\nFSC: -\nFWP: A B C\nFSP: -\n");
  EXPECT_EQ(run("winners --method brute " + data("mixed.prof")).out, r.out);
}

TEST(Cli, WinnersBySource) {
  EXPECT_EQ(run("winners --notion wp " + data("lone_partial.prof")).out, "WP: A C\n");
  EXPECT_EQ(run("winners --notion WP --source graph " + data("lone_partial.prof")).out, "WP: A B C\n");
  EXPECT_EQ(run("winners --notion wp --source graph --method brute " + data("lone_partial.prof")).out, "WP: A B C\n");
}

TEST(Cli, SingleCandidate) {
  const auto r = run("winners " + data("single.prof"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "WC: A\nSC: A\nWP: A\nSP: A\nFWC: A\nFSC: A\nFWP: A\nFSP: A\n");
}

TEST(Cli, WitnessesParseBackAndVerify) {
  const auto r = run("winners --notion wp --witness " + data("mixed.prof"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("WP: A B C\n", 0), 0u);
  const auto original = read_profile_file(data("mixed.prof"));
  std::size_t found = 0;
  for (std::size_t pos = r.out.find("witness WP "); pos != std::string::npos;
       pos = r.out.find("witness WP ", pos + 1)) {
    const auto name = r.out.substr(pos + 11, 1);
    const auto body_start = r.out.find('\n', pos) + 1;
    const auto agenda_pos = r.out.find("agenda: ", body_start);
    const auto agenda_end = r.out.find('\n', agenda_pos);
    const auto completion = parse_profile("candidates: A B C\n" + r.out.substr(body_start, agenda_pos - body_start));
    const auto agenda = parse_agenda(r.out.substr(agenda_pos + 8, agenda_end - agenda_pos - 8), original.candidates());
    EXPECT_TRUE(verify_witness(original.candidates().at(name), completion, agenda, original, false)) << r.out;
    ++found;
  }
  EXPECT_EQ(found, 3u);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run("eval " + data("condorcet.prof") + " --agenda '((A,B),C)'").out, "winner: A\n");
  EXPECT_EQ(run("eval " + data("cyclic.prof") + " --agenda '((A,B),C)'").out, "winner: C\n");
  EXPECT_EQ(run("eval " + data("lone_partial.prof") + " --agenda '((A,C),B)'").code, 5);
  EXPECT_EQ(run("eval " + data("condorcet.prof") + " --agenda '((A,A),C)'").code, 2);
}

TEST(Cli, ReduceRoundTrip) {
  const auto path = temp_file("reduce22.prof");
  const auto r = run("reduce 2 2 -o " + path.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "designated: B\n");
  const auto p = read_profile_file(path.string());
  ASSERT_EQ(p.votes().size(), 5u);
  const std::uint64_t weights[] = {1, 3, 3, 4, 4};
  for (std::size_t i = 0; i < 5; ++i)
    EXPECT_EQ(p.votes()[i].weight, weights[i]);
  EXPECT_EQ(run("winners --notion fwp " + path.string()).out, "FWP: A B C\n");
  std::filesystem::remove(path);

  const auto no = temp_file("reduce13.prof");
  ASSERT_EQ(run("reduce 1 3 -o " + no.string()).code, 0);
  EXPECT_EQ(run("winners --notion wp " + no.string()).out.find('B'), std::string::npos);
  std::filesystem::remove(no);

  const auto stdout_run = run("reduce 1 1 --extra D");
  EXPECT_EQ(stdout_run.code, 0);
  EXPECT_NE(stdout_run.out.find("candidates: A B C D\n"), std::string::npos);
  EXPECT_NE(stdout_run.out.find("# designated: B\n"), std::string::npos);
}

TEST(Cli, SelfCheck) {
  const auto a = run("selfcheck --candidates 4 --votes 3 --trials 30 --seed 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_NE(a.out.find("result: pass"), std::string::npos);
  EXPECT_EQ(run("selfcheck --candidates 4 --votes 3 --trials 30 --seed 1").out, a.out);
  EXPECT_NE(run("selfcheck --candidates 4 --votes 3 --trials 30 --seed 2").out, a.out);
  EXPECT_EQ(run("selfcheck --candidates 1 --trials 5").code, 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("winners " + data("bad_syntax.prof")).code, 2);
  EXPECT_EQ(run("winners " + data("missing.prof")).code, 2);
  EXPECT_EQ(run("winners --notion xx " + data("mixed.prof")).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("graph " + data("bad_cycle.prof")).code, 3);
  EXPECT_EQ(run("graph " + data("even.prof")).code, 3);
  EXPECT_EQ(run("winners --notion wp --budget 1 " + data("mixed.prof")).code, 4);
  EXPECT_EQ(run("reduce 1 2").code, 6);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, ErrorsGoToStderr) {
  const auto r = run("graph " + data("bad_cycle.prof"), true);
  EXPECT_NE(r.out.find("CycleError"), std::string::npos);
  EXPECT_NE(r.out.find("line 2"), std::string::npos);
  EXPECT_EQ(run("graph " + data("bad_cycle.prof")).out, "");
}

TEST(Cli, WritesToMissingDirectoryFail) {
  EXPECT_EQ(run("reduce 1 1 -o /nonexistent-dir/x.prof").code, 2);
}
