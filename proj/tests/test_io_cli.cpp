#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "bicluster/cli.hpp"
#include "oracle.hpp"

using namespace bicluster;

namespace {

/// Writes text to a fresh file under the test temp directory.
std::string temp_graph(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("bicluster_test_" + name + ".txt");
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Run run(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  int code = f(out, err);
  return {code, out.str(), err.str()};
}

const char* kP4 = "4 3\n0 1\n1 2\n2 3\n";
const char* kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n";
const char* kK3 = "3 3\n0 1\n1 2\n0 2\n";

}  // namespace

TEST(ParseGraph, Examples) {
  EXPECT_EQ(parse_graph("4 3\n0 1\n1 2\n2 3"), Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(parse_graph("1 0"), Graph(1));
  EXPECT_EQ(parse_graph(kK3), Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(ParseGraph, CommentsBlankLinesAndCrlf) {
  auto g = parse_graph("# header comment\r\n\r\n3 2\r\n  # inner\r\n0 1\r\n\r\n2 1\r\n# tail\r\n");
  EXPECT_EQ(g, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of("3 1\n0 0\n"), 2u);         // self-loop
  EXPECT_EQ(line_of("3 2\n0 1\n1 0\n"), 3u);    // duplicate
  EXPECT_EQ(line_of("3 1\n0 3\n"), 2u);         // out of range
  EXPECT_EQ(line_of("# c\nthree 1\n"), 2u);     // malformed header
  EXPECT_EQ(line_of("3 1 7\n"), 1u);            // malformed header
  EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);    // too many edges
  EXPECT_EQ(line_of("3 2\n0 1\n"), 2u);         // too few edges
  EXPECT_EQ(line_of("# only comments\n"), 1u);  // missing header
  EXPECT_EQ(line_of("3 1\n0 -1\n"), 2u);
}

TEST(ParseGraph, RoundTripsGeneratedGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = generate_planted(4 + seed % 25, seed % 7, seed);
    std::ostringstream out;
    write_graph(out, g);
    EXPECT_EQ(parse_graph(out.str()), g);
  }
}

TEST(EditScript, FormatAndParse) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  EditSet f{VertexPair(0, 3), VertexPair(1, 2)};
  std::ostringstream out;
  write_edit_script(out, g, f);
  EXPECT_EQ(out.str(), "k 2\nadd 0 3\ndel 1 2\n");
  std::istringstream in(out.str());
  EXPECT_EQ(parse_edit_script(in, g), f);

  std::istringstream wrong_verb("k 1\nadd 0 1\n");
  EXPECT_THROW(parse_edit_script(wrong_verb, g), ParseError);
  std::istringstream wrong_count("k 2\ndel 0 1\n");
  EXPECT_THROW(parse_edit_script(wrong_count, g), ParseError);
}

TEST(Generate, DeterministicAndPlanted) {
  auto a = generate_planted(20, 5, 99);
  EXPECT_EQ(a, generate_planted(20, 5, 99));
  EXPECT_TRUE(is_bicluster(generate_planted(20, 0, 99)));
  EXPECT_THROW(generate_planted(0, 0, 1), InputError);
  EXPECT_THROW(generate_planted(3, 4, 1), InputError);
}

TEST(Generate, SolutionNeverExceedsPlantedBudget) {
  Solver solver;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::size_t n = 5 + seed % 11;
    std::size_t b = seed % 5;
    auto g = generate_planted(n, b, seed);
    ASSERT_LE(solver.solve_minimum(g).edits.size(), b);
  }
}

TEST(Cli, Decide) {
  auto p4 = temp_graph("p4", kP4);
  auto c5 = temp_graph("c5", kC5);
  auto yes = run([&](auto& o, auto& e) { return cli::cmd_decide(p4, 1, o, e); });
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "k 1\ndel 0 1\n");
  auto no = run([&](auto& o, auto& e) { return cli::cmd_decide(p4, 0, o, e); });
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "NO\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_decide(c5, 1, o, e); }).code, 1);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_decide(c5, 2, o, e); }).code, 0);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_decide(p4, -1, o, e); }).code, 2);
}

TEST(Cli, Solve) {
  auto k22 = temp_graph("k22", "4 4\n0 2\n0 3\n1 2\n1 3\n");
  auto two = temp_graph("twop4", "8 6\n0 1\n1 2\n2 3\n4 5\n5 6\n6 7\n");
  auto k3 = temp_graph("k3", kK3);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_solve(k22, o, e); }).out, "k 0\n");
  auto r = run([&](auto& o, auto& e) { return cli::cmd_solve(two, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 4), "k 2\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_solve(k3, o, e); }).out, "k 1\ndel 0 1\n");
}

TEST(Cli, SolveOutputVerifies) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(6, 0.5, rng);
    std::ostringstream text;
    write_graph(text, g);
    auto path = temp_graph("rand", text.str());
    auto r = run([&](auto& o, auto& e) { return cli::cmd_solve(path, o, e); });
    ASSERT_EQ(r.code, 0);
    std::istringstream script(r.out);
    auto edits = parse_edit_script(script, g);
    EXPECT_TRUE(is_bicluster(symmetric_difference(g, edits)));
    EXPECT_EQ(edits.size(), oracle::minimum_edit_size(g));
  }
}

TEST(Cli, Recognize) {
  auto k22 = temp_graph("k22", "4 4\n0 2\n0 3\n1 2\n1 3\n");
  auto p4 = temp_graph("p4", kP4);
  auto k3 = temp_graph("k3", kK3);
  auto c5 = temp_graph("c5", kC5);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_recognize(k22, o, e); }).out, "BICLUSTER\n");
  auto r = run([&](auto& o, auto& e) { return cli::cmd_recognize(p4, o, e); });
  EXPECT_EQ(r.out, "NOT-BICLUSTER p4 0 1 2 3\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_recognize(k3, o, e); }).out,
            "NOT-BICLUSTER triangle 0 1 2\n");
  auto c = run([&](auto& o, auto& e) { return cli::cmd_recognize(c5, o, e); });
  EXPECT_EQ(c.out.rfind("NOT-BICLUSTER odd-cycle", 0), 0u);
}

TEST(Cli, MinEdits) {
  auto p4 = temp_graph("p4", kP4);
  auto r = run([&](auto& o, auto& e) { return cli::cmd_min_edits(p4, o, e); });
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "fmin 4\nF 1 del 0 1\nF 1 add 0 3\nF 1 del 1 2\nF 1 del 2 3\n");
  auto big = temp_graph("big", "7 0\n");
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_min_edits(big, o, e); }).code, 2);
}

TEST(Cli, ParseErrorsExitTwo) {
  auto bad = temp_graph("bad", "3 1\n0 0\n");
  auto r = run([&](auto& o, auto& e) { return cli::cmd_solve(bad, o, e); });
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run([&](auto& o, auto& e) { return cli::cmd_recognize("/nonexistent/x", o, e); }).code, 2);
}

TEST(Cli, VerifyBranchingB1) {
  std::ostringstream out;
  EXPECT_EQ(cli::cmd_verify_branching({Rule::B1, false}, out), 0);
  EXPECT_NE(out.str().find("B1 (1,1,1) 3.000000"), std::string::npos);
}

TEST(Cli, Gen) {
  auto a = run([](auto& o, auto& e) { return cli::cmd_gen(12, 0, 5, o, e); });
  auto b = run([](auto& o, auto& e) { return cli::cmd_gen(12, 0, 5, o, e); });
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("# planted budget 0 seed 5\n", 0), 0u);
  EXPECT_TRUE(is_bicluster(parse_graph(a.out)));
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_gen(0, 1, 5, o, e); }).code, 2);
  EXPECT_EQ(run([](auto& o, auto& e) { return cli::cmd_gen(5, -1, 5, o, e); }).code, 2);
}
