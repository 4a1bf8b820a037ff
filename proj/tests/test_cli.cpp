#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

using itree::cli::run_cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("itree_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = (scratch() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return nlohmann::json::parse(text.substr(start == std::string::npos ? 0 : start + 1));
}

}  // namespace

TEST_CASE("gen") {
  auto layered = run({"gen", "ms-layered", "--m", "4"});
  CHECK(layered.code == 0);
  CHECK(layered.out.rfind("16 ", 0) == 0);
  CHECK(layered.err.find("16 vertices") != std::string::npos);

  auto dyadic = run({"gen", "dyadic", "--k", "2"});
  CHECK(dyadic.code == 0);
  auto inst = nlohmann::json::parse(dyadic.out);
  CHECK(inst["a_count"] == 4);
  CHECK(inst["b_items"].size() == 12);

  CHECK(run({"gen", "ms-layered", "--m", "1"}).code == 2);
  CHECK(run({"gen", "ms-layered"}).code == 2);
  CHECK(run({"gen", "nonsense"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto path = (scratch() / "lg.txt").string();
  auto to_file = run({"gen", "line-graph", "--r", "4", "--depth", "2", "--out", path});
  CHECK(to_file.code == 0);
  CHECK(to_file.out.find("9 vertices") != std::string::npos);
  CHECK(slurp(path).rfind("9 ", 0) == 0);
}

TEST_CASE("find and verify") {
  const auto graph = (scratch() / "ms5.txt").string();
  REQUIRE(run({"gen", "ms-layered", "--m", "5", "--out", graph}).code == 0);

  for (const char* root : {"0", "12", "24"}) {
    auto found = run({"find", graph, "--root", root, "--r", "3"});
    CHECK(found.code == 0);
    auto report = nlohmann::json::parse(found.out);
    CHECK(report["verified"] == true);
    CHECK(report["bound_required"] == 5.0);
    CHECK(report["bound_achieved"].get<int>() >= 5);
    CHECK(report["status"] == "valid");
  }

  const auto report_path = (scratch() / "report.json").string();
  REQUIRE(run({"find", graph, "--root", "3", "--out", report_path}).code == 0);
  auto verified = run({"verify", graph, report_path});
  CHECK(verified.code == 0);
  CHECK(verified.out == "valid\n");

  auto report = nlohmann::json::parse(slurp(report_path));
  auto cert = report["certificate"];
  cert["claimed_bound"] = 1000;
  auto tampered = run({"verify", graph, write("tampered.json", cert.dump())});
  CHECK(tampered.code == 1);
  CHECK(tampered.out == "bound-unmet\n");

  // Vertices 0 and 1 of the 4-cycle plus both 2 and 3 close a cycle.
  const auto square = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  auto cyclic = run({"verify", square, write("cyc.json", R"({"root":0,"vertices":[0,1,2,3],"claimed_bound":1})")});
  CHECK(cyclic.code == 1);
  CHECK(cyclic.out == "not-induced-tree\n");
  auto missing = run({"verify", square, write("miss.json", R"({"root":3,"vertices":[0,1],"claimed_bound":1})")});
  CHECK(missing.out == "root-missing\n");
}

TEST_CASE("find errors and edge cases") {
  const auto k4 = write("k4.txt", "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  auto clique = run({"find", k4, "--r", "4"});
  CHECK(clique.code == 2);
  CHECK(clique.err.find("witness: [0,1,2,3]") != std::string::npos);

  auto single = run({"find", write("one.txt", "1 0\n")});
  CHECK(single.code == 0);
  CHECK(nlohmann::json::parse(single.out)["bound_achieved"] == 1);

  auto dup = run({"find", write("dup.txt", "3 3\n0 1\n1 2\n2 1\n")});
  CHECK(dup.code == 2);
  CHECK(dup.err.find("line 4") != std::string::npos);

  CHECK(run({"find", k4, "--root", "9"}).code == 2);
  CHECK(run({"find", k4, "--r", "2"}).code == 2);
  CHECK(run({"find", (scratch() / "absent.txt").string()}).code == 2);
}

TEST_CASE("find on instances") {
  const auto alpha = (scratch() / "alpha.json").string();
  REQUIRE(run({"gen", "alpha-counterexample", "--t", "50", "--out", alpha}).code == 0);
  auto half = run({"find", alpha});
  CHECK(half.code == 0);
  CHECK(nlohmann::json::parse(half.out)["algorithm"] == "select_weighted");
  // Past exponent 1/2 the sqrt-type inequality fails on this family.
  auto over = run({"find", alpha, "--alpha", "0.6"});
  CHECK(over.code == 2);  // a_count 50 is beyond the exact solver's default budget
  const auto small = (scratch() / "alpha20.json").string();
  REQUIRE(run({"gen", "alpha-counterexample", "--t", "20", "--out", small}).code == 0);
  auto fails = run({"find", small, "--alpha", "0.6"});
  CHECK(fails.code == 1);
  CHECK(nlohmann::json::parse(fails.out)["verified"] == false);
}

TEST_CASE("oracle") {
  const auto k5 = write("k5.txt", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  auto clique = run({"oracle", k5});
  CHECK(clique.code == 0);
  CHECK(nlohmann::json::parse(clique.out)["size"] == 2);

  const auto ms4 = (scratch() / "ms4.txt").string();
  REQUIRE(run({"gen", "ms-layered", "--m", "4", "--out", ms4}).code == 0);
  CHECK(nlohmann::json::parse(run({"oracle", ms4}).out)["size"] == 7);

  const auto ms5 = (scratch() / "ms5b.txt").string();
  REQUIRE(run({"gen", "ms-layered", "--m", "5", "--out", ms5}).code == 0);
  auto over = run({"oracle", ms5});
  CHECK(over.code == 2);
  CHECK(over.err.find("budget") != std::string::npos);
  CHECK(nlohmann::json::parse(run({"oracle", ms5, "--max-n", "25"}).out)["size"] == 9);

  const auto through = (scratch() / "through.txt").string();
  REQUIRE(run({"gen", "ms-through", "--m", "4", "--out", through}).code == 0);
  auto at_v = nlohmann::json::parse(run({"oracle", through, "--root", "0"}).out);
  CHECK(at_v["size"] == 4);
  CHECK(at_v["algorithm"] == "oracle/through-vertex");

  const auto dy = (scratch() / "dy.json").string();
  REQUIRE(run({"gen", "dyadic", "--k", "2", "--out", dy}).code == 0);
  auto naive = nlohmann::json::parse(run({"oracle", dy, "--alpha", "1"}).out);
  CHECK(naive["selection"]["value"] == 7.0);
}

TEST_CASE("reports are reproducible") {
  const auto graph = (scratch() / "rtf.txt").string();
  REQUIRE(run({"gen", "random-triangle-free", "--n", "40", "--p", "0.15", "--seed", "7", "--out", graph}).code == 0);
  auto first = run({"find", graph, "--root", "5", "--no-timing"});
  auto second = run({"find", graph, "--root", "5", "--no-timing"});
  CHECK(first.code == 0);
  CHECK(first.out == second.out);

  auto gen_a = run({"gen", "random-kr-free", "--n", "30", "--r", "4", "--p", "0.3", "--seed", "1"});
  auto gen_b = run({"gen", "random-kr-free", "--n", "30", "--r", "4", "--p", "0.3", "--seed", "1"});
  CHECK(gen_a.out == gen_b.out);
}

TEST_CASE("bench") {
  SUBCASE("admissible: exact and naive agree") {
    auto res = run({"bench", "admissible", "--seed", "1", "--no-timing"});
    CHECK(res.code == 0);
    std::istringstream lines(res.out);
    std::string line;
    int equality_rows = 0;
    while (std::getline(lines, line)) {
      auto row = nlohmann::json::parse(line);
      if (row.contains("summary")) continue;
      if (row["sense"] == "==") {
        ++equality_rows;
        CHECK(row["verified"] == true);
      }
    }
    CHECK(equality_rows == 200);
    CHECK(last_line(res.out)["all_verified"] == true);
  }
  SUBCASE("triangle-free") {
    auto res = run({"bench", "triangle-free", "--seed", "1"});
    CHECK(res.code == 0);
    auto summary = last_line(res.out);
    CHECK(summary["rows"] == 1500);
    CHECK(summary["min_slack"].get<double>() >= 0.0);
  }
  SUBCASE("kr-free with CSV mirror") {
    const auto path = (scratch() / "kr.jsonl").string();
    auto res = run({"bench", "kr-free", "--seed", "1", "--out", path, "--no-timing"});
    CHECK(res.code == 0);
    CHECK(last_line(res.out)["all_verified"] == true);
    const auto csv = slurp((scratch() / "kr.csv").string());
    CHECK(csv.rfind("instance,algorithm,n,r,", 0) == 0);
    CHECK(csv.find("\nsummary,kr-free,") != std::string::npos);
    auto again = run({"bench", "kr-free", "--seed", "1", "--out", path + "2", "--no-timing"});
    CHECK(slurp(path) == slurp(path + "2"));
  }
  SUBCASE("unknown suite") {
    CHECK(run({"bench", "everything"}).code == 2);
  }
}
