#include "woc/cli.hpp"
#include "woc/counting.hpp"
#include "woc/verify.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace woc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("count prints the exact TSV header") {
  const auto r = run({"count", "--condition", "tie", "--n-max", "5"});
  REQUIRE(r.code == cli::kExitOk);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 6);
  CHECK(ls[0] == "n\ta\tdelta\tb\tw");
  CHECK(ls[5] == "5\t120\t96\t119\t239");
}

TEST_CASE("count examples") {
  auto r = run({"count", "--condition", "strict123", "--n-max", "5", "--engine", "all"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("# match: true") != std::string::npos);
  CHECK(r.out.find("5\t284\t") != std::string::npos);

  r = run({"count", "--condition", "<,=", "--n-max", "4", "--engine", "sim"});
  CHECK(lines(r.out)[4] == "4\t60\t10\t11\t71");

  r = run({"count", "--condition", "kequal:3", "--n-max", "4"});
  CHECK(lines(r.out)[4].substr(lines(r.out)[4].rfind('\t') + 1) == "73");
}

TEST_CASE("JSON and TSV carry the same numbers") {
  const auto tsv = run({"count", "--condition", "mixed123", "--n-max", "7"});
  const auto js = run({"count", "--condition", "mixed123", "--n-max", "7", "--format", "json"});
  REQUIRE(js.code == cli::kExitOk);
  const auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["condition"] == "mixed123");
  CHECK(doc["relations"] == "<=,<");
  const auto& rows = doc["engines"][0]["rows"];
  const auto ls = lines(tsv.out);
  REQUIRE(rows.size() + 1 == ls.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string expect = std::to_string(row["n"].get<int>()) + '\t' + row["a"].get<std::string>() + '\t' +
                               row["delta"].get<std::string>() + '\t' + row["b"].get<std::string>() + '\t' +
                               row["w"].get<std::string>();
    CHECK(ls[i + 1] == expect);
  }
}

TEST_CASE("output is deterministic across thread counts") {
  const auto a = run({"count", "--condition", "weak123", "--n-max", "8", "--engine", "sim", "--threads", "1"});
  const auto b = run({"count", "--condition", "weak123", "--n-max", "8", "--engine", "sim", "--threads", "4"});
  CHECK(a.out == b.out);
  const auto c = run({"enumerate", "--condition", "<,<", "--n", "5", "--threads", "1"});
  const auto d = run({"enumerate", "--condition", "<,<", "--n", "5", "--threads", "4"});
  CHECK(c.out == d.out);
  CHECK(lines(c.out).size() == 284);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--condition", "tie", "--n", "3", "--which", "inactive"});
  CHECK(lines(r.out).size() == 5);
  r = run({"enumerate", "--condition", "le", "--n", "4"});
  CHECK(r.out == "x4<x3<x2<x1\n");
  r = run({"enumerate", "--condition", "strict123", "--n", "3", "--which", "inactive-at-n"});
  CHECK(r.out == "x1<x2<x3\n");
}

TEST_CASE("series") {
  auto r = run({"series", "C", "--order", "3"});
  CHECK(r.out == "n\tcoeff\n0\t1\n1\t1\n2\t2\n3\t5\n");
  r = run({"series", "W4", "--order", "9"});
  CHECK(lines(r.out).back() == "9\t118765");
  r = run({"series", "E", "--order", "4", "--format", "json"});
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["series"] == "E");
  r = run({"series", "--list"});
  CHECK(r.out.find("W5\tunivariate") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"count", "--condition", "bogus", "--n-max", "3"}).code == cli::kExitUsage);
  CHECK(run({"count", "--condition", "<,<,=", "--n-max", "3", "--engine", "series"}).code == cli::kExitUsage);
  CHECK(run({"count", "--condition", "tie"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"series", "Z9"}).code == cli::kExitUsage);
  CHECK(run({"count", "--condition", "tie", "--n-max", "9", "--engine", "sim", "--frontier-cap", "1000"}).code ==
        cli::kExitResource);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify quick passes") {
  const auto r = run({"verify"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify catches a corrupted Narayana value") {
  verify::Hooks hooks;
  hooks.formula.narayana = [](int n, int v) { return counting::narayana(n, v) + (n == 5 && v == 2 ? 1 : 0); };
  const auto results = verify::run(verify::Scope::Quick, hooks);
  CHECK_FALSE(verify::all_passed(results));
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  CHECK(failed >= 1);
}
