#include <doctest.h>

#include <json.hpp>

#include "mprod/cli.hpp"

using mprod::cli::run;
namespace cli = mprod::cli;

namespace {
  bool has(cli::Result const& r, std::string const& s) {
    return r.output.find(s) != std::string::npos;
  }

  std::string const kV5 = std::string(MPROD_SOURCE_DIR) + "/data/V5.var";
}

TEST_SUITE("cli") {
  TEST_CASE("replica of the shipped algebra") {
    auto r = run({"replica", "--algebra", "paper_A.alg", "--variety", "S"});
    CHECK(r.exit_code == cli::kOk);
    CHECK(has(r, "{{a,e},{b,f}}"));
  }

  TEST_CASE("homomorphic-image probe reports the violation") {
    auto r = run({"hprobe", "--algebra", "paper_A.alg", "--inner", "CS", "--outer", "S"});
    CHECK(r.exit_code == cli::kNegative);
    CHECK(has(r, "{{a},{e,f},{b}}"));
  }

  TEST_CASE("check-id exit codes") {
    CHECK(run({"check-id", "--variety", "RS", "mul(mul(x,y),z) = mul(x,z)"}).exit_code == cli::kOk);
    CHECK(run({"check-id", "--variety", "GRP", "mul(x,y) = mul(y,x)"}).exit_code == cli::kNegative);
    CHECK(run({"check-id", "--variety", kV5, "mul(x,x) = mul(y,y)"}).exit_code == cli::kUnknown);
    CHECK(run({"check-id", "--variety", "RS", "mul(x,y"}).exit_code == cli::kUsage);
    CHECK(run({"check-id", "--variety", "NOPE", "x = x"}).exit_code == cli::kUsage);
    CHECK(run({"no-such-command"}).exit_code == cli::kUsage);
    CHECK(run({"replica", "--algebra", "paper_A.alg", "--variety", "S", "--bogus"}).exit_code == cli::kUsage);
  }

  TEST_CASE("membership and hypotheses") {
    CHECK(run({"member", "--algebra", "paper_A.alg", "--inner", "CS", "--outer", "S"}).exit_code == cli::kOk);
    CHECK(run({"hypotheses", "--inner", kV5, "--outer", "RS", "--f", "mul(x,mul(y,y))", "--g",
               "mul(mul(x,x),y)"}).exit_code == cli::kOk);
    auto fg = run({"find-fg", "--inner", "CS", "--outer", "S", "--max-size", "2"});
    CHECK(fg.exit_code == cli::kUnknown);
  }

  TEST_CASE("polarization") {
    CHECK(has(run({"classify", "--variety", "CS"}), "PurelyPolarized"));
    CHECK(has(run({"classify", "--variety", "RS"}), "NotPolarized"));
  }

  TEST_CASE("json output parses") {
    auto r = run({"--json", "replica", "--algebra", "paper_A.alg", "--variety", "S"});
    REQUIRE(r.exit_code == cli::kOk);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j.is_object());
    auto s = run({"--json", "sigma-w", "--inner", "LZ", "--outer", "S", "--identity", "mul(x,y) = x", "--term-bound", "2"});
    REQUIRE(s.exit_code == cli::kOk);
    auto js = nlohmann::json::parse(s.output);
    CHECK(js.dump().find("term_bound") != std::string::npos);
  }

  TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"sigma-w", "--inner", "LZ", "--outer", "S", "--identity", "mul(x,y) = x", "--term-bound", "2"};
    CHECK(run(args).output == run(args).output);
  }

  TEST_CASE("examples list") {
    auto r = run({"examples"});
    CHECK(r.exit_code == cli::kOk);
    CHECK(has(r, "paper_A"));
    CHECK(has(run({"examples", "paper_A"}), "op mul 2"));
  }
}
