#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "quasiramsey/cli.hpp"
#include "quasiramsey/serialize.hpp"

using namespace quasiramsey;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("quasiramsey_test_" + name);
}

}  // namespace

TEST_CASE("extract on K_4") {
  const Run r = run({"extract", "--k", "3"}, "C~\n");
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verified"] == true);
  CHECK(j["achieved"] == 2);
}

TEST_CASE("extract on 2-vertex graphs") {
  for (const char* g : {"A?", "A_"}) {
    const Run r = run({"extract", "--k", "2"}, std::string(g) + "\n");
    CHECK(r.code == kExitOk);
    CHECK(nlohmann::json::parse(r.out)["achieved"] == 1);
  }
}

TEST_CASE("extract reports parse errors with the line number") {
  const Run r = run({"extract", "--k", "2"}, "C~\n\nC\n");
  CHECK(r.code == kExitInput);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"extract", "--k", "5"}, "C~\n").code == kExitInput);
  CHECK(run({"extract"}, "C~\n").code == kExitInput);
  CHECK(run({"extract", "--k", "2", "--mode", "bogus"}, "C~\n").code == kExitInput);
}

TEST_CASE("gen") {
  CHECK(run({"gen", "--n", "5", "--p", "1", "--seed", "0"}).out == "D~{\n");
  const Run two = run({"gen", "--n", "9", "--seed", "4", "--count", "2"});
  std::istringstream lines(two.out);
  std::string a, b;
  std::getline(lines, a);
  std::getline(lines, b);
  CHECK(a == run({"gen", "--n", "9", "--seed", "4"}).out.substr(0, a.size()));
  CHECK(b == run({"gen", "--n", "9", "--seed", "5"}).out.substr(0, b.size()));
}

TEST_CASE("extract then verify") {
  const Run g = run({"gen", "--n", "134", "--p", "0.5", "--seed", "11"});
  const Run e = run({"extract", "--k", "8", "--seed", "11"}, g.out);
  CHECK(e.code == kExitOk);
  CHECK(nlohmann::json::parse(e.out)["verified"] == true);

  const auto graphs = temp_path("graphs.g6");
  std::ofstream(graphs) << g.out;
  const Run v = run({"verify", "--graphs", graphs.string()}, e.out);
  CHECK(v.code == kExitOk);
  CHECK(v.out == "verified\n");

  auto cert = nlohmann::json::parse(e.out);
  cert["achieved"] = cert["achieved"].get<int>() + 1;
  const Run bad = run({"verify", "--graphs", graphs.string()}, cert.dump() + "\n");
  CHECK(bad.code == kExitUnverified);
  CHECK(run({"verify", "--graphs", graphs.string()}, "{}\n").code == kExitInput);
  std::filesystem::remove(graphs);
}

TEST_CASE("oracle") {
  const Run r = run({"oracle", "--k", "3", "--c", "1/2"}, "Dhc\n");  // C_5
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["original"]["min_degree"] == 1);
  CHECK(j["holds"] == true);
}

TEST_CASE("rstar") {
  const auto cache = temp_path("cache.jsonl");
  std::filesystem::remove(cache);
  const Run r = run({"rstar", "--c", "1/2", "--k", "2", "--nmax", "4", "--cache", cache.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "2\n");
  std::ifstream in(cache);
  std::string line;
  std::getline(in, line);
  const auto rec = nlohmann::json::parse(line);
  CHECK(rec["n"] == 2);
  CHECK(rec["code_version"] == kCodeVersion);
  CHECK(run({"rstar", "--c", "1/2", "--k", "2", "--nmax", "4", "--cache", cache.string()}).out == "2\n");
  CHECK(run({"rstar", "--c", "1/2", "--k", "3", "--nmax", "9", "--no-cache"}).code == kExitGuard);
  std::filesystem::remove(cache);
}

TEST_CASE("disc") {
  const Run r = run({"disc", "--backend", "exact"}, "2 3\n0\n1\n0 1\n");
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["disc"] == 1);
  const Run p = run({"disc", "--backend", "exact", "--p", "0.5"}, "4 1\n0 1 2 3\n");
  CHECK(nlohmann::json::parse(p.out)["deviation"] == 0.0);
  CHECK(run({"disc"}, "2 1\n0 7\n").code == kExitInput);
}

TEST_CASE("lower_bound_scan") {
  const Run a = run({"experiment", "lower_bound_scan", "--n", "18", "--k", "8", "--trials", "20", "--seed", "1"});
  const Run b = run({"experiment", "lower_bound_scan", "--n", "18", "--k", "8", "--trials", "20", "--seed", "1"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "n,k,seed,best_min_degree,threshold,violates");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.rfind("18,8,", 0) == 0);
  }
  CHECK(rows == 20);
  CHECK(run({"experiment", "lower_bound_scan", "--n", "30", "--k", "8"}).code == kExitGuard);
  CHECK(run({"experiment", "nonsense"}).code == kExitInput);
  CHECK(run({"experiment", "lower_bound_scan", "--n", "9:3"}).code == kExitInput);
}

TEST_CASE("output does not depend on the thread count") {
  const Run g = run({"gen", "--n", "14", "--seed", "3", "--count", "12"});
  setenv("QUASIRAMSEY_THREADS", "1", 1);
  const Run one = run({"extract", "--k", "4"}, g.out);
  setenv("QUASIRAMSEY_THREADS", "8", 1);
  const Run many = run({"extract", "--k", "4"}, g.out);
  unsetenv("QUASIRAMSEY_THREADS");
  CHECK(one.out == many.out);
  CHECK(one.code == many.code);
}

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
}
