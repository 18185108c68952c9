#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sbci/axioms.hpp"
#include "sbci/cli.hpp"
#include "sbci/error.hpp"
#include "sbci/fixtures.hpp"
#include "sbci/render.hpp"
#include "sbci/search.hpp"
#include "sbci/text_format.hpp"

using namespace sbci;
namespace fs = std::filesystem;

namespace {

std::string fixture_path(std::string_view name) {
  return std::string(SBCI_FIXTURE_DIR) + "/" + std::string(name) + ".alg";
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content = {}) {
  const fs::path p = fs::temp_directory_path() / ("sbci_test_" + name);
  if (!content.empty()) std::ofstream(p) << content;
  return p;
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t col) {
  try {
    parse_algebra(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), col) << e.what();
  }
}

}  // namespace

TEST(TextFormat, RoundTripsFixtures) {
  for (auto name : fixture_names()) {
    const FiniteAlgebra a = fixture(name);
    EXPECT_EQ(parse_algebra(render_algebra(a)), a) << name;
    EXPECT_EQ(load_algebra(fixture_path(name)), a) << name;
  }
}

TEST(TextFormat, RoundTripsRandomAlgebras) {
  std::mt19937 rng(21);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 12;
    std::optional<Table> dbl;
    if (i % 2) dbl = oracle::random_table(n, rng);
    std::vector<std::string> labels;
    if (i % 3 == 0) {
      for (std::size_t k = 0; k < n; ++k) labels.push_back("e" + std::to_string(k * 7));
    }
    const FiniteAlgebra a(static_cast<Elem>(i % n), oracle::random_table(n, rng), dbl, labels);
    const std::string text = render_algebra(a);
    EXPECT_EQ(parse_algebra(text), a);
    EXPECT_EQ(render_algebra(parse_algebra(text)), text);
  }
}

TEST(TextFormat, AcceptsCommentsBlankLinesAndSplitLabels) {
  const FiniteAlgebra a = parse_algebra(
      "# header comment\r\n\nn 2 top 0\n  # indented comment\narrow:\n0 1\n0   0\n\n"
      "labels:\none\ntwo\n");
  EXPECT_EQ(a, FiniteAlgebra(0, Table(2, {0, 1, 0, 0}), {}, {"one", "two"}));
}

TEST(TextFormat, ErrorsCarryLineAndColumn) {
  expect_parse_error("n 2 top 0\narrow:\n0 1\n0 2\n", 4, 3);
  expect_parse_error("n 2 top 5\narrow:\n0 1\n0 0\n", 1, 9);
  expect_parse_error("m 2 top 0\n", 1, 1);
  expect_parse_error("n 2 top\n", 1, 8);
  expect_parse_error("n x top 0\n", 1, 3);
  expect_parse_error("n 2 top 0\narrow:\n0 1\n0\n", 4, 2);
  expect_parse_error("n 2 top 0\narrow:\n0 1\n0 0 1\n", 4, 5);
  expect_parse_error("n 2 top 0\nrows:\n", 2, 1);
  expect_parse_error("n 2 top 0\narrow:\n0 1\n", 4, 1);
  expect_parse_error("n 2 top 0\n", 2, 1);
  expect_parse_error("", 1, 1);
  expect_parse_error("n 2 top 0\narrow:\n0 1\n0 0\nlabels:\na b c\n", 6, 5);
  expect_parse_error("n 2 top 0\narrow:\n0 1\n0 0\narrow:\n0 1\n0 0\n", 5, 1);
  expect_parse_error("n 2 top 0\narrow: 0\n", 2, 8);
  expect_parse_error("n 2 top 0\narrow:\n0 -1\n0 0\n", 3, 3);
  EXPECT_THROW(load_algebra("/nonexistent/file.alg"), Error);
}

TEST(TextFormat, RejectsUnwritableLabels) {
  EXPECT_THROW(render_algebra(FiniteAlgebra(0, Table(1), {}, {"a b"})), Error);
}

TEST(Fixtures, FilesMatchBuiltins) {
  for (auto name : fixture_names()) {
    std::ifstream in(fixture_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), render_algebra(fixture(name))) << name;
  }
  EXPECT_THROW(fixture("nope"), Error);
}

TEST(Render, MachineRoundTrip) {
  RunReport run;
  run.command = "check";
  run.reports.push_back(check_pbci(fixture("gd-fd-chain")));
  run.reports.push_back(check_sbck(fixture("gd-fd-chain")));
  AxiomReport sampled;
  sampled.system = "grid";
  sampled.sampled = true;
  Verdict v;
  v.axiom = "x";
  v.status = Status::skipped;
  v.point = {0.1, 1.0 / 3.0, 0x1p-53, -0.0};
  v.detail = "quote \" and newline\n";
  sampled.verdicts.push_back(v);
  run.reports.push_back(sampled);
  run.notes = {{"k", "v"}};
  run.algebras = {render_algebra(fixture("2-chain"))};
  run.timings = {{"total", 0.125}};
  run.exit_code = 1;
  const RunReport back = parse_machine(render_machine(run));
  EXPECT_EQ(back, run);
  EXPECT_EQ(render_machine(back), render_machine(run));
  EXPECT_THROW(parse_machine("{"), ParseError);
  EXPECT_THROW(parse_machine("{}"), ParseError);
}

TEST(Render, TextShowsSampledPassAndLabels) {
  RunReport run;
  AxiomReport r;
  r.system = "grid";
  r.sampled = true;
  r.verdicts.push_back(Verdict{"SBCI1", Status::pass, {}, {}, {}, {}});
  run.reports.push_back(r);
  run.reports.push_back(check_pbci(fixture("gd-fd-chain")));
  const std::string t = render_text(run);
  EXPECT_NE(t.find("[grid] sampled-pass"), std::string::npos);
  EXPECT_NE(t.find("SBCI1  sampled-pass"), std::string::npos);
  EXPECT_NE(t.find("(3/4, 1/2, 0)"), std::string::npos);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(cli({"check", fixture_path("powerset-of-2"), "bci,bck"}).code, 0);
  EXPECT_EQ(cli({"check", fixture_path("one-element"),
                 "bci,bck,properties-a,sbci,sbci-derived,sbck,pbci,condition-star,"
                 "distributivity,coincide"})
                .code,
            0);
  const CliResult gf = cli({"check", fixture_path("gd-fd-chain"), "pbci"});
  EXPECT_EQ(gf.code, 1);
  EXPECT_NE(gf.out.find("PB-2  fail"), std::string::npos);
  EXPECT_EQ(cli({"check", fixture_path("one-element"), "bci,nope"}).code, 2);
  EXPECT_EQ(cli({"check", "/nonexistent.alg"}).code, 2);
  const fs::path bad = temp_file("bad.alg", "n 2 top 0\narrow:\n0 1\n0 7\n");
  const CliResult r = cli({"check", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4, column 3"), std::string::npos);
  fs::remove(bad);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"--format", "xml", "check", fixture_path("2-chain")}).code, 2);
  EXPECT_EQ(cli({"demo", "nope"}).code, 2);
  EXPECT_EQ(cli({"demo", "markov", "--grid", "1"}).code, 2);
  EXPECT_EQ(cli({"fixture"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Intervalize) {
  const fs::path out = temp_file("ps.alg");
  const CliResult r = cli({"intervalize", fixture_path("powerset-of-2"), "--out", out.string(), "--verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  const FiniteAlgebra ia = load_algebra(out.string());
  EXPECT_EQ(ia.size(), 9u);
  EXPECT_TRUE(ia.has_double_arrow());
  EXPECT_EQ(ia.label(ia.top()), "[{},{}]");
  EXPECT_TRUE(check_sbci(ia).passed());
  fs::remove(out);

  const CliResult one = cli({"intervalize", fixture_path("one-element")});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(parse_algebra(one.out.substr(0, one.out.find("\n\n") + 1)).size(), 1u);

  const CliResult gate = cli({"intervalize", fixture_path("perturbed-distributivity")});
  EXPECT_EQ(gate.code, 1);
  EXPECT_NE(gate.out.find("failed-gate: distributivity"), std::string::npos);
}

TEST(Cli, SearchAndIntersection) {
  const CliResult one = cli({"search", "1", "--require", "bci"});
  EXPECT_EQ(one.code, 0);
  EXPECT_NE(one.out.find("count: 1\n"), std::string::npos);
  SearchTask t;
  t.size = 2;
  t.require = {"bci"};
  const CliResult two = cli({"--format", "machine", "search", "2", "--require", "bci"});
  const RunReport r = parse_machine(two.out);
  EXPECT_EQ(r.algebras.size(), naive_count(t));
  for (const auto& a : r.algebras) EXPECT_TRUE(check_bci(parse_algebra(a)).passed());
  EXPECT_EQ(cli({"search", "5", "--require", "sbci"}).code, 2);
  EXPECT_EQ(cli({"search", "2", "--require", "bci", "--forbid", "zzz"}).code, 2);
  const CliResult lim = cli({"search", "3", "--require", "bci", "--limit", "2"});
  EXPECT_NE(lim.out.find("count: 2\n"), std::string::npos);
  EXPECT_NE(lim.out.find("exhaustive: no"), std::string::npos);

  const CliResult in = cli({"intersection", "2"});
  EXPECT_EQ(in.code, 0);
  EXPECT_NE(in.out.find("violations: 0"), std::string::npos);
  EXPECT_EQ(cli({"intersection", "9"}).code, 2);
}

TEST(Cli, Demos) {
  const CliResult m = cli({"demo", "markov"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("[0,0]"), std::string::npos);
  EXPECT_NE(m.out.find("0.4 (excluded by Markov)"), std::string::npos);
  const CliResult y = cli({"demo", "yager"});
  EXPECT_EQ(y.code, 0);
  EXPECT_NE(y.out.find("0.812252"), std::string::npos);
  EXPECT_NE(y.out.find("order property"), std::string::npos);
  const CliResult g = cli({"demo", "godel-fodor", "--grid", "21"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("(0.75, 0.5, 0.2) computed  (0.5, 0.25)"), std::string::npos);
  for (const char* d : {"reichenbach-lk", "weber", "interval-lk"}) {
    EXPECT_EQ(cli({"demo", d, "--grid", "21"}).code, 0) << d;
  }
}

TEST(Cli, FixtureCommand) {
  const CliResult l = cli({"fixture", "--list"});
  EXPECT_NE(l.out.find("powerset-of-2\n"), std::string::npos);
  EXPECT_EQ(cli({"fixture", "2-chain"}).out, render_algebra(fixture("2-chain")));
  EXPECT_EQ(cli({"fixture", "nope"}).code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", fixture_path("gd-fd-chain"), "pbci,sbci,coincide"},
        std::vector<std::string>{"--format", "machine", "demo", "weber", "--grid", "31"},
        std::vector<std::string>{"--format", "machine", "intervalize",
                                 fixture_path("powerset-of-2"), "--verify"}}) {
    const CliResult a = cli(args), b = cli(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Cli, MachineOutputMatchesExitCode) {
  const CliResult r = cli({"--format", "machine", "check", fixture_path("gd-fd-chain"), "pbci"});
  const RunReport rep = parse_machine(r.out);
  EXPECT_EQ(rep.exit_code, r.code);
  const Verdict& v = rep.reports.at(0).at("PB-2");
  EXPECT_EQ(v.witness_labels, (std::vector<std::string>{"3/4", "1/2", "0"}));
}
