#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "lietrees/cache.hpp"
#include "lietrees/cli.hpp"

using namespace lietrees;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Drops the "time:" line, the only field allowed to differ between runs.
std::string without_time(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line))
    if (line.rfind("time:", 0) != 0) out += line + '\n';
  return out;
}

}  // namespace

TEST_CASE("enum") {
  auto r = run({"enum", "--n", "3"});
  CHECK(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string first;
  std::getline(in, first);
  CHECK(first == "12");
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  CHECK(lines == 12);
  CHECK(run({"enum", "--n", "1"}).out == "1\n1\n");
  CHECK(run({"enum", "--n", "0"}).code == kExitUsage);
  CHECK(run({"enum"}).code == kExitUsage);
  CHECK(run({"enum", "--n", "two"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("rank") {
  auto lie = run({"rank", "--n", "4", "--relations", "as,ihx"});
  CHECK(lie.code == kExitOk);
  CHECK(lie.out.find("rank: 6\n") != std::string::npos);
  auto odd = run({"rank", "--n", "5", "--relations", "as,ihx,stu2", "--parity", "odd"});
  CHECK(odd.out.find("rank: 3\n") != std::string::npos);
  CHECK(odd.out.find("torsion: none") != std::string::npos);
  CHECK(odd.out.find("exact over Z") != std::string::npos);
  auto json = run({"rank", "--n", "3", "--format", "json"});
  CHECK(json.code == kExitOk);
  CHECK(nlohmann::json::parse(json.out)["rank"] == 2);

  CHECK(run({"rank", "--n", "4", "--relations", "as,ihx,stu2"}).code == kExitUsage);
  CHECK(run({"rank", "--n", "4", "--parity", "odd"}).code == kExitUsage);
  CHECK(run({"rank", "--n", "7", "--method", "snf"}).code == kExitUsage);
  CHECK(run({"rank", "--n", "4", "--method", "quick"}).code == kExitUsage);
  CHECK(run({"rank", "--n", "4", "--relations", "as,xyz"}).code == kExitUsage);
}

TEST_CASE("table") {
  auto r = run({"table", "--max-n", "2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "n,rank_lie,rank_at_odd,rank_at_even,torsion_lie,torsion_at_odd,torsion_at_even,certification\n"
        "1,1,0,0,none,none,none,exact over Z\n"
        "2,1,1,1,none,none,none,exact over Z\n");
  auto md = run({"table", "--max-n", "4"});
  CHECK(md.code == kExitOk);
  CHECK(md.out.find("| 2, 2 |") != std::string::npos);
}

TEST_CASE("reduce") {
  auto zero = run({"reduce", "--vector", "1*[1,2] 1*[2,1]"});
  CHECK(zero.code == kExitOk);
  CHECK(zero.out.find("ZERO in Lie(n)") != std::string::npos);
  auto one = run({"reduce", "--vector", "1*[1,2]"});
  CHECK(one.out.find("coordinates: (1)") != std::string::npos);
  CHECK(one.out.find("NONZERO") != std::string::npos);
  auto ihx = run({"reduce", "--vector", "1*[1,[2,3]] -1*[[1,2],3] -1*[2,[1,3]]"});
  CHECK(ihx.out.find("ZERO in Lie(n)") != std::string::npos);
  CHECK(ihx.out.find("NONZERO") == std::string::npos);
  auto stu = run({"reduce", "--vector", "1*[[1,2],3]", "--relations", "as,ihx,stu2", "--parity", "odd"});
  CHECK(stu.out.find("ZERO in A^T,odd_n") != std::string::npos);
  auto dec = run({"reduce", "--vector", "1*[1{a},2{b}] 1*[2{b},1{a}]", "--group", "a,b"});
  CHECK(dec.out.find("ZERO in Lie_G(n)") != std::string::npos);

  auto bad = run({"reduce", "--vector", "1*[1,2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("position") != std::string::npos);
  CHECK(run({"reduce", "--vector", "1*[1,2] 1*[[1,2],3]"}).code == kExitUsage);
  CHECK(run({"reduce"}).code == kExitUsage);
}

TEST_CASE("magnus") {
  auto r = run({"magnus", "--tree", "[1,2]", "--truncate", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("word: x1 x2 x1^-1 x2^-1") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"magnus", "--tree", "[[1,2],3]", "--truncate", "3"}).out.find("PASS") != std::string::npos);
  CHECK(run({"magnus", "--tree", "[1,2]", "--truncate", "1"}).code == kExitUsage);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--max-n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"rank", "--n", "5", "--relations", "as,ihx,stu2", "--parity", "even"};
  CHECK(without_time(run(args).out) == without_time(run(args).out));
  std::vector<std::string> table{"table", "--max-n", "4", "--format", "csv"};
  CHECK(run(table).out == run(table).out);
}

TEST_CASE("cached and fresh results agree") {
  auto dir = std::filesystem::temp_directory_path() / "lietrees_cli_cache_test";
  std::filesystem::remove_all(dir);
  std::vector<std::string> args{"rank",     "--n",    "5", "--relations", "as,ihx,stu2", "--parity",
                                "even",     "--format", "json", "--cache-dir", dir.string()};
  auto fresh = run(args);
  auto cached = run(args);
  CHECK(fresh.code == kExitOk);
  CHECK(cached.code == kExitOk);
  auto a = nlohmann::json::parse(fresh.out), b = nlohmann::json::parse(cached.out);
  CHECK(a["snf"] == b["snf"]);
  CHECK(a["rank"] == b["rank"]);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()) == 1);
  std::filesystem::remove_all(dir);
}
