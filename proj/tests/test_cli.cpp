#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sumset/cli.hpp"
#include "sumset/errors.hpp"

using namespace sumset;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "sumset");
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  auto r = run_cli({"compute", "--set", "0,1,2", "--h", "3", "--r", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("{1,2,3,4,5}") != std::string::npos);
  CHECK(r.out.find("cardinality: 5") != std::string::npos);

  r = run_cli({"bound", "--k", "5", "--h", "3", "--r", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "11\n");

  r = run_cli({"verify", "direct", "--set", "0,1,2,3,4 mod 5", "--h", "3", "--r", "2"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("equality") != std::string::npos);

  r = run_cli({"verify", "direct", "--set", "0,1,2,3,4", "--p", "5", "--h", "3", "--r", "2",
               "--format", "records"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["cardinality"] == 5);
  CHECK(j["bound_value"] == 5);
}

TEST_CASE("cli subcommands") {
  CHECK(run_cli({"verify", "lemma1", "--set", "0,1,2,3", "--m", "2", "--r", "3"}).status == 0);
  CHECK(run_cli({"verify", "lemma1", "--set", "0,1,2,3", "--h", "6", "--r", "3"}).status == 0);
  CHECK(run_cli({"verify", "lemma1", "--set", "0,1,2,3", "--h", "7", "--r", "3"}).status == 1);
  CHECK(run_cli({"verify", "complement", "--set", "0,1,3,7", "--h", "5", "--r", "2"}).status == 0);
  CHECK(run_cli({"verify", "inclusions", "--set", "0,1,2,3,4,5", "--h", "7", "--r", "3"}).status == 0);

  auto r = run_cli({"decompose", "--set", "0,1,2", "--counts", "2,1,1", "--r", "2", "-v"});
  CHECK(r.status == 0);
  CHECK(r.out.find("{0,1} + {0,2}") != std::string::npos);
  CHECK(r.out.find("step 2") != std::string::npos);

  r = run_cli({"scan", "extremal", "--k", "5", "--h", "4", "--r", "2", "--max-diameter", "12"});
  CHECK(r.status == 0);
  CHECK(r.out.find("0,1,2,3,4  (AP)") != std::string::npos);

  r = run_cli({"scan", "inverse-eh", "--p", "11", "--k", "5", "--all-subsets", "--format", "records"});
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["candidates"] == 462);

  r = run_cli({"bound", "--k", "5", "--h", "2", "--kind", "erdos-heilbronn", "--p", "11"});
  CHECK(r.out == "7\n");
}

TEST_CASE("cli manifest scans") {
  const std::string path = "sumset_test_manifest.txt";
  {
    std::ofstream f(path);
    f << "kind = extremal\nk = 5\nr = 2\nh = 2..9\nmax_diameter = 7\n";
  }
  auto r = run_cli({"scan", "extremal", "--manifest", path, "--format", "records"});
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j["command"] == "scan-extremal");
  }
  CHECK(n == 8);

  r = run_cli({"scan", "inverse-eh", "--manifest", path});
  CHECK(r.status == cli::kDomainError);
  std::remove(path.c_str());
}

TEST_CASE("cli exit statuses") {
  // Domain errors.
  CHECK(run_cli({"compute", "--set", "0,1", "--h", "5", "--r", "2"}).status == cli::kDomainError);
  CHECK(run_cli({"compute", "--set", "0,1 mod 6", "--h", "1", "--r", "1"}).status == cli::kDomainError);
  CHECK(run_cli({"bound", "--k", "3", "--h", "4", "--kind", "restricted"}).status == cli::kDomainError);
  CHECK(run_cli({"verify", "direct", "--set", "0,1 mod 5", "--h", "1", "--r", "2"}).status ==
        cli::kDomainError);

  // Parse errors name the offending token.
  auto r = run_cli({"compute", "--set", "0,1,q", "--h", "1", "--r", "1"});
  CHECK(r.status == cli::kDomainError);
  CHECK(r.err.find("'q'") != std::string::npos);
  r = run_cli({"compute", "--set", "0,1", "--h", "one", "--r", "1"});
  CHECK(r.status == cli::kDomainError);
  CHECK(r.err.find("one") != std::string::npos);
  CHECK(run_cli({"frobnicate"}).status == cli::kDomainError);
  CHECK(run_cli({}).status == cli::kDomainError);
  CHECK(run_cli({"--help"}).status == cli::kOk);

  // Resource cap.
  r = run_cli({"scan", "extremal", "--k", "5", "--h", "4", "--r", "2", "--max-diameter", "60", "--cap", "1000"});
  CHECK(r.status == cli::kResourceCap);
  CHECK(r.err.find("487635") != std::string::npos);  // C(60, 4)

  // Verification failures, from fabricated reports.
  CHECK(cli::exit_code(BoundReport{BoundKind::kDirectIntegers, GroundSet({0}), 1, 1, 0, 1}) ==
        cli::kVerificationFailed);
  CHECK(cli::exit_code(ComplementReport{SumParams(1, 1), 2, 3, 4}) == cli::kVerificationFailed);
  Lemma1Report lemma;
  lemma.equal = false;
  CHECK(cli::exit_code(lemma) == cli::kVerificationFailed);
  ScanReport scan;
  scan.within_hypothesis = true;
  scan.counterexamples.push_back(GroundSet({0, 1, 3, 4, 9}));
  CHECK(cli::exit_code(scan) == cli::kVerificationFailed);
  WitnessReport w{SumParams(3, 2), "case1", {}, {}, std::nullopt, {}};
  w.b_inclusion.status = CheckStatus::kFailed;
  CHECK(cli::exit_code(w) == cli::kVerificationFailed);

  CHECK(cli::exit_code(InvariantViolation("x")) == cli::kVerificationFailed);
  CHECK(cli::exit_code(ResourceCapExceeded("x", 2, 1)) == cli::kResourceCap);
  CHECK(cli::exit_code(DomainError("x")) == cli::kDomainError);
  CHECK(cli::exit_code(std::runtime_error("x")) == -1);
}

TEST_CASE("structured output round-trips") {
  const std::vector<std::vector<std::string>> commands = {
      {"compute", "--set", "0,1,3,7 mod 11", "--h", "4", "--r", "2"},
      {"compute", "--set", "-2,5,6", "--h", "5", "--r", "3"},
      {"verify", "complement", "--set", "0,1,2", "--h", "4", "--r", "2"},
      {"verify", "inclusions", "--set", "0,1,3,4,9", "--h", "5", "--r", "3"},
  };
  for (const auto& cmd : commands) {
    auto args = cmd;
    args.insert(args.end(), {"--format", "records"});
    const auto first = run_cli(args);
    REQUIRE(first.status == 0);
    const auto rec = nlohmann::json::parse(first.out);

    std::vector<std::string> again = {cmd[0]};
    if (cmd[0] == "verify") again.push_back(cmd[1]);
    again.insert(again.end(), {"--set", rec["set"].get<std::string>(), "--h",
                               std::to_string(rec["h"].get<std::int64_t>()), "--r",
                               std::to_string(rec["r"].get<std::int64_t>()), "--format", "records"});
    CHECK(run_cli(again).out == first.out);
  }
}
