#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <steinberg/cli.hpp>

#ifndef STEINBERG_SAMPLES_DIR
#define STEINBERG_SAMPLES_DIR "samples"
#endif

namespace {

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const code = steinberg::cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
  }

  bool has(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

  std::string sample(std::string const& rel) {
    return std::string(STEINBERG_SAMPLES_DIR) + "/" + rel;
  }

}  // namespace

TEST(Cli, AnalyzeBuiltin) {
  auto const r = run({"analyze", "R2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has(r.out, "congruence-simple over B: YES")) << r.out;
  EXPECT_TRUE(has(r.out, "condition (L): true"));
  auto const m = run({"--machine", "analyze", "R2"});
  EXPECT_TRUE(has(m.out, "hs={},{v}\n")) << m.out;
  EXPECT_TRUE(has(m.out, "simple.B=true\n"));
}

TEST(Cli, AnalyzeSampleFiles) {
  for (auto name : {"E2", "E4", "R1", "R2", "Romega"}) {
    auto const file = run({"--machine", "analyze", sample(std::string("graphs/") + name + ".graph")});
    auto const builtin = run({"--machine", "analyze", name});
    EXPECT_EQ(file.code, 0) << file.err;
    EXPECT_EQ(file.out, builtin.out) << name;
  }
  auto const r1 = run({"analyze", "R1"});
  EXPECT_TRUE(has(r1.out, "congruence-simple over B: NO")) << r1.out;
}

TEST(Cli, UnknownGraph) {
  auto const r = run({"analyze", "no/such/graph"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ClosureAndCycles) {
  auto const c = run({"closure", "E2", "w"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "closure: {v,w}\n");
  auto const y = run({"cycles", "R1"});
  EXPECT_TRUE(has(y.out, "c base=v exit=false")) << y.out;
}

TEST(Cli, Equality) {
  auto const t = run({"eq", "R2", "v", "e.e* + f.f*"});
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(t.out, "true\n");
  auto const f = run({"eq", "R2", "v", "e.e*"});
  EXPECT_EQ(f.out, "false\n");
  auto const m = run({"--machine", "eq", "R2", "v", "e.e* + f.f*"});
  EXPECT_EQ(m.out, "equal=true\n");
}

TEST(Cli, OutOfScopeExitsWithTwo) {
  auto const r = run({"eq", "Romega", "v", "v"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "out of scope: ")) << r.err;
}

TEST(Cli, BoundExceededExitsWithTwo) {
  auto const r = run({"--max-carrier", "8", "congruences", "fun4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(has(r.err, "bound exceeded: ")) << r.err;
}

TEST(Cli, SyntaxErrorsReportTheColumn) {
  auto const r = run({"eval", "E2", "e."});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has(r.err, "syntax error at column 2: expected a factor after '.'")) << r.err;
}

TEST(Cli, EvalAndImage) {
  auto const e = run({"eval", "R2", "e e* + f f*"});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_TRUE(has(e.out, "Z(v; v)")) << e.out;
  auto const i = run({"image", "Romega", "Z(v;v;~e0)"});
  EXPECT_EQ(i.code, 0) << i.err;
  EXPECT_TRUE(has(i.out, "in image of pi_E: false")) << i.out;
}

TEST(Cli, Congruences) {
  auto const b = run({"congruences", "B"});
  EXPECT_TRUE(has(b.out, "congruence-simple: true")) << b.out;
  auto const f = run({"--machine", "congruences", "fun2"});
  EXPECT_TRUE(has(f.out, "simple=false\n")) << f.out;
  EXPECT_TRUE(has(f.out, "witness=0 0 2 2\n"));
  auto const m = run({"congruences", "--file", sample("algebras/M2.alg")});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_TRUE(has(m.out, "congruences: 2\n")) << m.out;
  auto const z = run({"--machine", "congruences", "--file", sample("algebras/BZ2.alg")});
  EXPECT_TRUE(has(z.out, "simple=false\n")) << z.out;
}

TEST(Cli, VerifyAndDemo) {
  auto const v = run({"verify", "theorem"});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_TRUE(has(v.out, "PASS"));
  auto const d = run({"demo", "rose-omega"});
  EXPECT_EQ(d.code, 0);
  EXPECT_TRUE(has(d.out, "L_B(E) ≅ A_B(G_E): no"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"analyze"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LimitsFromEnvironment) {
  ::setenv("STEINBERG_MAX_CARRIER", "8", 1);
  auto const r = run({"congruences", "fun4"});
  ::unsetenv("STEINBERG_MAX_CARRIER");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run({"congruences", "fun4"}).code, 0);
}
