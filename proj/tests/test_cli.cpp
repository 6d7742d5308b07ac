#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "grouplaw/cli.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = grouplaw::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string src_path(const std::string& rel) {
  return std::string(GROUPLAW_SOURCE_DIR) + "/" + rel;
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                       : "/tmp") +
                     "/" + name;
  std::ofstream(path) << body;
  return path;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli construct summarizes a group") {
  CliRun r = run_cli({"construct", "W4374"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "order: 4374"));
  CHECK(contains(r.out, "derived length: 3"));
  CHECK(contains(r.out, "derived series orders: 4374 243 3 1"));
  CHECK(contains(r.out, "nilpotent: no"));

  CliRun j = run_cli({"construct", "Z(12)", "--json"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["order"] == 12);
  CHECK(doc["abelian"] == true);
  CHECK(doc["derived_length"] == 1);
  CHECK(doc["nilpotency_class"] == 1);
  CHECK(doc["exponent"] == 12);
}

TEST_CASE("cli power reports the power subgroup") {
  CliRun r = run_cli({"power", "W4374", "--m", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "power subgroup order: 162"));
  CHECK(contains(r.out, "derived length: 2"));
  CHECK(contains(r.out, "normal: yes"));
}

TEST_CASE("cli law-check exit codes track the verdict") {
  CHECK(run_cli({"law-check", "Z(6)", "--law", "[x,y]"}).code == 0);

  CliRun fail = run_cli({"law-check", "sym(3)", "--law", "[x,y]"});
  CHECK(fail.code == 1);
  CHECK(contains(fail.out, "verdict: fails"));
  CHECK(contains(fail.out, "witness:"));

  CliRun budget = run_cli(
      {"law-check", "sym(3)", "--law", "[x,y]", "--strategy", "exhaustive:500"});
  CHECK(budget.code == 1);
  CHECK(contains(budget.out, "strategy: exhaustive"));
}

TEST_CASE("cli rejects bad input with exit 2 and a pointed message") {
  CliRun bad_law = run_cli({"law-check", "Z(5)", "--law", "[x,"});
  CHECK(bad_law.code == 2);
  CHECK(contains(bad_law.err, "position"));

  CliRun bad_strategy =
      run_cli({"law-check", "Z(5)", "--law", "[x,y]", "--strategy", "bogus"});
  CHECK(bad_strategy.code == 2);
  CHECK(contains(bad_strategy.err, "bogus"));

  CliRun bad_spec = run_cli({"construct", "Q(8)"});
  CHECK(bad_spec.code == 2);

  CliRun bad_sub = run_cli({"frobnicate"});
  CHECK(bad_sub.code == 2);
  CHECK(contains(bad_sub.err, "frobnicate"));

  CliRun no_sub = run_cli({});
  CHECK(no_sub.code == 2);

  CliRun bad_file = run_cli({"trace-check", "/definitely/not/here.txt"});
  CHECK(bad_file.code == 2);
  CHECK(contains(bad_file.err, "/definitely/not/here.txt"));
}

TEST_CASE("cli help exits zero") {
  CliRun r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Usage: grouplaw"));
  CHECK(contains(r.out, "verify-paper"));
}

TEST_CASE("cli detect agrees with the library report") {
  CliRun r = run_cli({"detect", "hol(7)", "--law", "[[x^2,y^2]^3,y^3]", "--m",
                      "2", "--n", "3", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["order_G"] == 42);
  CHECK(doc["order_m"] == 21);
  CHECK(doc["order_n"] == 14);
  CHECK(doc["in_m"] == "holds");
  CHECK(doc["in_n"] == "holds");
  CHECK(doc["in_G"] == "fails");
  CHECK(doc["whole_matches_power_subgroups"] == false);
  CHECK(doc["warning"] == "");

  CliRun warned =
      run_cli({"detect", "Z(8)", "--law", "[x,y]", "--m", "2", "--n", "4"});
  CHECK(warned.code == 0);
  CHECK(contains(warned.out, "warning:"));
}

TEST_CASE("cli json output is byte-stable across runs") {
  std::vector<std::string> cmd = {"detect",    "hol(9)", "--law", "[x^2,x^y]",
                                  "--m",       "2",      "--n",   "3",
                                  "--json"};
  CHECK(run_cli(cmd).out == run_cli(cmd).out);

  std::vector<std::string> cons = {"construct", "W4374", "--json"};
  CHECK(run_cli(cons).out == run_cli(cons).out);
}

TEST_CASE("cli certify checks the bundled example certificate") {
  std::string pres = src_path("data/examples/commuting_pair_presentation.txt");
  std::string cert = src_path("data/examples/square_commutes_certificate.txt");
  CliRun r = run_cli({"certify", pres, cert});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "valid"));

  std::string broken = write_temp(
      "grouplaw_broken_cert.txt",
      "target: [a^2,b]\nstep: rel=0 sign=1 conj=b\nstep: rel=0 sign=1 conj=1\n");
  CliRun bad = run_cli({"certify", pres, broken});
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "invalid"));
  std::remove(broken.c_str());
}

TEST_CASE("cli trace-check replays a bundled trace") {
  CliRun r = run_cli({"trace-check", src_path("data/traces/ab_yx.txt")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "start: axybabz"));
  CHECK(contains(r.out, "end: abaxybz"));
  CHECK(contains(r.out, "valid"));
}

TEST_CASE("cli its-abelian runs the pipeline") {
  CliRun r = run_cli({"its-abelian", "--m", "2", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "stage trace-suite: pass"));
  CHECK(contains(r.out, "stage extension-map: pass"));
  CHECK(contains(r.out, "stage class2-quotient: pass"));
  CHECK(contains(r.out, "result: pass"));

  CHECK(run_cli({"its-abelian", "--m", "2", "--n", "4"}).code == 2);
}

TEST_CASE("cli truncation-witness") {
  CliRun r = run_cli({"truncation-witness", "--m", "2", "--n", "3", "--bound",
                      "5", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["found"] == true);
  CHECK(doc["order"] == 6);
  CHECK(doc["abelian"] == false);

  CliRun none =
      run_cli({"truncation-witness", "--m", "2", "--n", "3", "--bound", "1"});
  CHECK(none.code == 1);
  CHECK(contains(none.out, "search exhausted"));
}

TEST_CASE("cli search-1458 modes") {
  CliRun full = run_cli({"search-1458", "--json"});
  CHECK(full.code == 0);
  auto doc = nlohmann::json::parse(full.out);
  CHECK(doc["found"] == true);
  CHECK(doc["order"] == 1458);
  CHECK(doc["derived_length"] == 3);
  CHECK(doc["power2_derived_length"] == 2);
  CHECK(doc["power3_derived_length"] == 2);

  CliRun desc = run_cli({"search-1458", "--mode", "descended"});
  CHECK(desc.code == 1);
  CHECK(contains(desc.out, "no group found"));
}

TEST_CASE("cli verify-paper selection and reporting") {
  CliRun one = run_cli({"verify-paper", "--only", "W-derived-length"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "pass  W-derived-length"));
  CHECK(contains(one.out, "all checks passed (1 run)"));

  CliRun unknown = run_cli({"verify-paper", "--only", "nope"});
  CHECK(unknown.code == 2);
  CHECK(contains(unknown.err, "nope"));

  CliRun pair = run_cli(
      {"verify-paper", "--only", "truncation-witness,its-abelian", "--json"});
  CHECK(pair.code == 0);
  auto doc = nlohmann::json::parse(pair.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  // canonical order, not flag order
  CHECK(doc[0]["name"] == "its-abelian");
  CHECK(doc[1]["name"] == "truncation-witness");
  for (const auto& row : doc) {
    CHECK(row["status"] == "pass");
    CHECK(row.contains("expected"));
    CHECK(row.contains("actual"));
    CHECK(row.contains("millis"));
  }
}
