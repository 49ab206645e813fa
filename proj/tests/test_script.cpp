#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "biamalg/script.hpp"
#include "biamalg/version.hpp"

using namespace biamalg;
using namespace biamalg::script;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string shipped(const std::string& name) { return read_file(std::string(BIAMALG_SCRIPTS_DIR) + "/" + name); }

ParseError parse_failure(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ParseError& e) {
    return e;
  }
  throw std::runtime_error("script parsed: " + text);
}

const json& statement_for(const json& report, const std::string& source) {
  for (const auto& s : report.at("statements"))
    if (s.at("source") == source) return s;
  throw std::runtime_error("no statement " + source);
}

}  // namespace

TEST(Parse, SingleDefinition) {
  auto s = parse_script("ring A = zmod 4");
  ASSERT_EQ(s.statements.size(), 1u);
  const auto& st = s.statements[0];
  EXPECT_EQ(st.kind, StatementKind::ring);
  EXPECT_EQ(st.name, "A");
  EXPECT_EQ(st.op, "zmod");
  EXPECT_EQ(st.args, (std::vector<std::string>{"4"}));
  EXPECT_EQ(st.line, 1u);
}

TEST(Parse, CommentsAndBlankLines) {
  auto s = parse_script("# header\n\nring A = zmod 4  # trailing\n   \nring B = zmod 2\n");
  ASSERT_EQ(s.statements.size(), 2u);
  EXPECT_EQ(s.statements[1].line, 5u);
}

TEST(Parse, EmptyScript) { EXPECT_TRUE(parse_script("").statements.empty()); }

TEST(Parse, PolyquoAndCyclicPower) {
  auto s = parse_script("ring A = polyquo 2 x y : x^2 y^2\nideal m = span A x y\nmodule E = cyclic A m ^2");
  EXPECT_EQ(s.statements[0].args, (std::vector<std::string>{"2", "x", "y", ":", "x^2", "y^2"}));
  EXPECT_EQ(s.statements[2].args, (std::vector<std::string>{"A", "m", "^", "2"}));
}

TEST(ParseError, UseBeforeDefinition) {
  auto e = parse_failure("ring A = zmod 4\ncheck gaussian X");
  EXPECT_EQ(e.kind(), ParseErrorKind::undefined_name);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 16u);
}

TEST(ParseError, Redefinition) {
  auto e = parse_failure("ring A = zmod 4\nring A = zmod 2");
  EXPECT_EQ(e.kind(), ParseErrorKind::redefinition);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 6u);
}

TEST(ParseError, UnknownCommandAndConstructor) {
  EXPECT_EQ(parse_failure("rng A = zmod 4").kind(), ParseErrorKind::unknown_command);
  EXPECT_EQ(parse_failure("ring A = zmodd 4").kind(), ParseErrorKind::unknown_command);
  EXPECT_EQ(parse_failure("ring A = zmod 4\ncheck noetherian A").kind(), ParseErrorKind::unknown_command);
  EXPECT_EQ(parse_failure("verify thm9.9").kind(), ParseErrorKind::unknown_command);
}

TEST(ParseError, KindMismatch) {
  auto e = parse_failure("ring A = zmod 4\nideal I = span A 2\ncheck local I");
  EXPECT_EQ(e.kind(), ParseErrorKind::kind_mismatch);
  EXPECT_EQ(e.line(), 3u);
}

TEST(ParseError, Syntax) {
  for (const char* bad : {"ring A zmod 4", "ring = zmod 4", "ring A =", "ring A = zmod", "ring A = zmod four",
                          "ring A = zmod 4 5", "ring 1A = zmod 4", "ring A = polyquo 2 x y x^2",
                          "ring A = zmod 4\nideal I = span A 2\nmodule E = cyclic A I ^",
                          "ring A = zmod 4\nhom h = table A A 0-1",
                          "ring A = zmod 4\nhom h = id A\nideal I = span A 2\nverify thm2.1 regular h h I I"})
    EXPECT_EQ(parse_failure(bad).kind(), ParseErrorKind::syntax) << bad;
}

TEST(ParseError, MessageCarriesPosition) {
  auto e = parse_failure("\n\nring A = zmod x");
  std::string what = e.what();
  EXPECT_NE(what.find("line 3"), std::string::npos);
  EXPECT_NE(what.find("syntax-error"), std::string::npos);
}

TEST(RoundTrip, ShippedScripts) {
  for (const char* name : {"example_2_5.bam", "example_2_7.bam"}) {
    auto s = parse_script(shipped(name));
    EXPECT_EQ(parse_script(print_script(s)), s) << name;
  }
}

TEST(RoundTrip, IrregularSpacing) {
  auto s = parse_script("ring   A =\tzmod 4\nideal I = span A   2 # c\nhom h = table A A 0->0 1->1 2->2 3->3");
  auto printed = print_script(s);
  EXPECT_EQ(printed, "ring A = zmod 4\nideal I = span A 2\nhom h = table A A 0->0 1->1 2->2 3->3\n");
  EXPECT_EQ(parse_script(printed), s);
}

TEST(Embedded, MatchesShippedFiles) {
  EXPECT_EQ(std::string(*example_script("2.5")), shipped("example_2_5.bam"));
  EXPECT_EQ(std::string(*example_script("2.7")), shipped("example_2_7.bam"));
  EXPECT_FALSE(example_script("2.6").has_value());
}

TEST(Run, EmptyScriptIsSuccessful) {
  auto report = run_script(parse_script(""));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.exit_code(), 0);
  auto j = to_json(report);
  EXPECT_TRUE(j.at("statements").empty());
  EXPECT_EQ(j.at("version"), std::string(kVersion));
}

TEST(Run, GaussianExampleScript) {
  auto report = run_script(parse_script(shipped("example_2_5.bam")));
  EXPECT_EQ(report.exit_code(), 0);
  auto j = to_json(report);
  EXPECT_EQ(statement_for(j, "ring D = biamalg f g J m1").at("result").at("size"), 32);
  EXPECT_EQ(statement_for(j, "check gaussian D").at("result").at("holds"), true);
  const auto& arith = statement_for(j, "check arithmetical D").at("result");
  EXPECT_EQ(arith.at("holds"), false);
  EXPECT_EQ(arith.at("witness").at("elements").size(), 2u);
}

TEST(Run, PruferExampleScript) {
  auto report = run_script(parse_script(shipped("example_2_7.bam")));
  EXPECT_EQ(report.exit_code(), 0);
  auto j = to_json(report);
  EXPECT_EQ(statement_for(j, "ring D = biamalg f g J Jp").at("result").at("size"), 256);
  EXPECT_EQ(statement_for(j, "check prufer D").at("result").at("holds"), true);
  const auto& g = statement_for(j, "check gaussian D").at("result");
  EXPECT_EQ(g.at("holds"), false);
  EXPECT_EQ(g.at("witness").at("elements").size(), 2u);
  EXPECT_EQ(statement_for(j, "check gaussian A1").at("result").at("witness").at("elements"),
            json::array({"x", "y"}));
}

TEST(Run, ReportIsDeterministic) {
  auto s = parse_script(shipped("example_2_7.bam"));
  RunOptions o;
  o.seed = 5;
  EXPECT_EQ(to_json(run_script(s, o)).dump(), to_json(run_script(s, o)).dump());
  EXPECT_EQ(render_text(run_script(s, o)), render_text(run_script(s, o)));
}

TEST(Run, TimingsOnlyWhenVerbose) {
  auto s = parse_script("ring A = zmod 4");
  EXPECT_FALSE(to_json(run_script(s)).at("statements")[0].contains("elapsed_ms"));
  RunOptions o;
  o.verbose = true;
  EXPECT_TRUE(to_json(run_script(s, o)).at("statements")[0].contains("elapsed_ms"));
}

TEST(Run, FailuresDoNotAbortIndependentStatements) {
  auto s = parse_script("ring A = zmod 4\nideal I = span A 9\ncheck local A\nmodule E = cyclic A I\nring B = trivext A E");
  auto report = run_script(s);
  ASSERT_EQ(report.statements.size(), 5u);
  EXPECT_EQ(report.statements[1].status, "error");
  EXPECT_EQ(report.statements[1].error_kind, "invalid-argument");
  EXPECT_EQ(report.statements[2].status, "ok");
  EXPECT_EQ(report.statements[3].status, "skipped");
  EXPECT_EQ(report.statements[4].status, "skipped");
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(Run, FailFastStops) {
  auto s = parse_script("ring A = zmod 4\nideal I = span A 9\ncheck local A");
  RunOptions o;
  o.fail_fast = true;
  auto report = run_script(s, o);
  EXPECT_EQ(report.statements.size(), 2u);
  EXPECT_EQ(report.exit_code(), 1);
}

TEST(Run, ElementCapAppliesToScripts) {
  RunOptions o;
  o.max_elements = 16;
  auto report = run_script(parse_script("ring A = zmod 17"), o);
  EXPECT_EQ(report.statements[0].status, "error");
  EXPECT_EQ(report.statements[0].error_kind, "size-limit");
}

TEST(Run, HypothesisNotMetIsNotAFailure) {
  auto report = run_script(parse_script(
      "ring A = zmod 4\nideal I = span A 2\nhom f = id A\nverify thm2.1 gaussian f f I I\nverify cor2.3 prufer A I"));
  EXPECT_EQ(report.statements[3].status, "hypothesis_not_met");
  EXPECT_EQ(report.exit_code(), 0);
  auto text = render_text(report);
  EXPECT_NE(text.find("✗ J x J' is a regular ideal"), std::string::npos);
}

TEST(Run, EveryConstructorRuns) {
  const char* text =
      "ring Z6 = zmod 6\n"
      "ring Z2 = zmod 2\n"
      "ring P = product Z2 Z6\n"
      "ideal T = span Z6 2\n"
      "ring Q = quotient Z6 T\n"
      "hom q = quomap Z6 T\n"
      "hom t = table Z6 Z2 0->0 1->1 2->0 3->1 4->0 5->1\n"
      "hom i = id Z6\n"
      "hom c = compose q i\n"
      "ring Dup = duplicate Z6 T\n"
      "ring Am = amalg i T\n"
      "module E = cyclic Z6 T ^ 2\n"
      "ring X = trivext Z6 E\n"
      "hom inc = inject_trivext Z6 E\n"
      "hom pr = project_trivext X\n"
      "check local X\n"
      "check total_quotients Dup\n"
      "check prufer P\n"
      "check arithmetical Am\n"
      "verify cor2.2 gaussian i T\n"
      "verify prop5.7 i i T T T\n"
      "verify example2.5\n";
  auto report = run_script(parse_script(text));
  for (const auto& r : report.statements) EXPECT_NE(r.status, "error") << print_statement(r.statement) << ": " << r.error_message.value_or("");
  auto j = to_json(report);
  EXPECT_EQ(statement_for(j, "ring Dup = duplicate Z6 T").at("result").at("size"), 18);
  EXPECT_EQ(statement_for(j, "ring X = trivext Z6 E").at("result").at("size"), 24);
  EXPECT_EQ(statement_for(j, "ring Q = quotient Z6 T").at("result").at("size"), 2);
}

TEST(Run, ProjectTrivextNeedsTrivialExtension) {
  auto report = run_script(parse_script("ring A = zmod 4\nhom p = project_trivext A"));
  EXPECT_EQ(report.statements[1].status, "error");
}

TEST(Render, JsonTopLevelAndWitnessLabels) {
  auto report = run_script(parse_script("ring A = polyquo 2 x y : x^2 y^2\ncheck gaussian A"));
  auto j = to_json(report);
  for (const char* key : {"version", "seed", "status", "statements"}) EXPECT_TRUE(j.contains(key)) << key;
  const auto& s = j.at("statements")[1];
  for (const char* key : {"line", "source", "kind", "name", "op", "status", "result", "error"})
    EXPECT_TRUE(s.contains(key)) << key;
  EXPECT_EQ(s.at("result").at("witness").at("elements"), json::array({"x", "y"}));
}

TEST(Render, TextAndJsonCarryTheSameVerdicts) {
  auto report = run_script(parse_script(shipped("example_2_5.bam")));
  auto j = to_json(report);
  auto text = render_text(report);
  for (const auto& s : j.at("statements")) {
    if (s.at("kind") != "check") continue;
    const bool holds = s.at("result").at("holds");
    auto at = text.find(s.at("source").get<std::string>());
    ASSERT_NE(at, std::string::npos);
    auto line = text.substr(text.find('\n', at) + 1, 40);
    EXPECT_NE(line.find(holds ? "✓ holds" : "✗ fails"), std::string::npos) << s.at("source");
  }
}
