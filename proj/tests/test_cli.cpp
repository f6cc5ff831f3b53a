#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#ifndef PERMDEPTH_TEST_DATA_DIR
#define PERMDEPTH_TEST_DATA_DIR "tests/data"
#endif

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = permdepth::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("table: golden last row via sfrac") {
  Result r = run_cli({"table", "--n", "8", "--method", "sfrac"});
  REQUIRE(r.status == 0);
  std::istringstream lines(r.out);
  std::string line, last;
  while (std::getline(lines, line))
    if (!line.empty()) last = line;
  CHECK(last ==
        "8\t1\t7\t33\t115\t327\t765\t1523\t2553\t3696\t4852\t5708\t5892"
        "\t5452\t4212\t2844\t1764\t576");
}

TEST_CASE("table: n = 0") {
  Result r = run_cli({"table", "--n", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "0\t1\n");
}

TEST_CASE("table: brute and jfrac emit identical tsv") {
  Result a = run_cli({"table", "--n", "6", "--method", "brute"});
  Result b = run_cli({"table", "--n", "6", "--method", "jfrac"});
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("table: json rows are arrays of decimal strings") {
  Result r = run_cli({"table", "--n", "4", "--format", "json"});
  REQUIRE(r.status == 0);
  auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == nlohmann::json::array({"1"}));
  CHECK(rows[4] == nlohmann::json::array({"1", "3", "7", "9", "4"}));
}

TEST_CASE("table: bfile matches the vendored A062869 prefix") {
  Result r = run_cli({"table", "--n", "8", "--format", "bfile"});
  REQUIRE(r.status == 0);
  CHECK(r.out ==
        read_file(std::string(PERMDEPTH_TEST_DATA_DIR) +
                  "/a062869_rows_1_8.txt"));
}

TEST_CASE("table: ceilings and --force") {
  Result refused = run_cli({"table", "--n", "10", "--method", "brute"});
  CHECK(refused.status != 0);
  CHECK(refused.err.find("ceiling") != std::string::npos);

  Result forced =
      run_cli({"table", "--n", "10", "--method", "brute", "--force"});
  Result reference = run_cli({"table", "--n", "10", "--method", "jfrac"});
  REQUIRE(forced.status == 0);
  CHECK(forced.out == reference.out);
}

TEST_CASE("table: --jobs does not change the output") {
  Result serial = run_cli({"table", "--n", "7", "--method", "motzkin"});
  Result parallel =
      run_cli({"table", "--n", "7", "--method", "motzkin", "--jobs", "3"});
  CHECK(serial.out == parallel.out);
}

TEST_CASE("depth: known permutations") {
  Result r = run_cli({"depth", "3715246"});
  REQUIRE(r.status == 0);
  CHECK(r.out == "depth 8\ndisplacement 16\npath UUDUDHD\narea 8\n");

  Result one = run_cli({"depth", "1"});
  CHECK(one.status == 0);
  CHECK(one.out == "depth 0\ndisplacement 0\npath H\narea 0\n");

  Result r2 = run_cli({"depth", "3542176"});
  CHECK(r2.out == "depth 7\ndisplacement 14\npath UUHDDUD\narea 7\n");
}

TEST_CASE("depth: parse errors exit nonzero") {
  Result r = run_cli({"depth", "3,3,1"});
  CHECK(r.status != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("repeated") != std::string::npos);
}

TEST_CASE("preimage: counts and listing") {
  Result count = run_cli({"preimage", "UUHDDUD"});
  CHECK(count.status == 0);
  CHECK(count.out == "20\n");

  Result listed = run_cli({"preimage", "UHHD", "--list"});
  REQUIRE(listed.status == 0);
  std::istringstream lines(listed.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "9");
  std::set<std::string> perms;
  while (std::getline(lines, line)) perms.insert(line);
  CHECK(perms == std::set<std::string>{"2341", "2413", "2431", "3142", "3241",
                                       "4123", "4132", "4213", "4231"});

  Result identity = run_cli({"preimage", "HHH"});
  CHECK(identity.out == "1\n");
}

TEST_CASE("preimage: bad path reports the position") {
  Result r = run_cli({"preimage", "DU"});
  CHECK(r.status != 0);
  CHECK(r.err.find("position 1") != std::string::npos);
}

TEST_CASE("poly: golden coefficient rows") {
  CHECK(run_cli({"poly", "--k", "4"}).out.starts_with("4 31 27 9 1\n"));
  CHECK(run_cli({"poly", "--k", "0"}).out.starts_with("1\n"));
  CHECK(run_cli({"poly", "--k", "5"}).out.starts_with("24 113 116 54 12 1\n"));
}

TEST_CASE("poly: nmax validation") {
  Result r = run_cli({"poly", "--k", "30", "--nmax", "40"});
  CHECK(r.status != 0);
}

TEST_CASE("check: passes and reports methods") {
  Result r = run_cli({"check", "--n", "8"});
  CHECK(r.status == 0);
  CHECK(r.out.find("check passed") != std::string::npos);

  Result r9 = run_cli({"check", "--n", "9"});
  CHECK(r9.status == 0);
  CHECK(r9.out.find("brute n<=9") != std::string::npos);

  Result r0 = run_cli({"check", "--n", "0"});
  CHECK(r0.status == 0);
}

TEST_CASE("check: methods are capped at their ceilings") {
  Result r = run_cli({"check", "--n", "11"});
  CHECK(r.status == 0);
  CHECK(r.out.find("brute n<=9") != std::string::npos);
  CHECK(r.out.find("motzkin n<=11") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run_cli({"table"}).status != 0);
  CHECK(run_cli({"nonsense"}).status != 0);
  CHECK(run_cli({"table", "--n", "4", "--method", "magic"}).status != 0);
}

TEST_SUITE_END();
