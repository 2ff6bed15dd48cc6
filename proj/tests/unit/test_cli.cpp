#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "modtors/cli/driver.hpp"

using namespace modtors;
using namespace modtors::cli;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& f) {
  std::ifstream is(f);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cache directory resolution") {
    ::unsetenv(kCacheEnv);
    CHECK(resolve_cache_dir(std::nullopt) == fs::path(".modtors-cache"));
    ::setenv(kCacheEnv, "/tmp/from-env", 1);
    CHECK(resolve_cache_dir(std::nullopt) == fs::path("/tmp/from-env"));
    CHECK(resolve_cache_dir(std::string("flag")) == fs::path("flag"));
    ::unsetenv(kCacheEnv);
  }

  TEST_CASE("prime ranges") {
    CHECK(primes_in(194, 230) == std::vector<std::uint64_t>{197, 199, 211, 223, 227, 229});
    CHECK(primes_in(1, 10) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_in(24, 28).empty());
  }

  TEST_CASE("exclude writes one certificate per prime, identical on a warm cache") {
    auto root = fs::temp_directory_path() / "modtors_cli_test";
    fs::remove_all(root);
    ExcludeConfig cfg;
    cfg.d = 6;
    cfg.primes = {73, 197};
    cfg.cache_dir = root / "cache";
    cfg.out_dir = root / "cold";
    cfg.jobs = 2;
    auto cold = cmd_exclude(cfg);
    REQUIRE(cold.tasks.size() == 2);
    CHECK(cold.tasks[0].verdict == "inconclusive");
    CHECK(cold.tasks[1].verdict == "excluded");
    CHECK(cold.excluded == 1);
    CHECK(cold.inconclusive == 1);
    CHECK(fs::is_directory(cfg.cache_dir));
    cfg.out_dir = root / "warm";
    auto warm = cmd_exclude(cfg);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(seen.insert(cold.tasks[i].certificate).second);
      CHECK(slurp(root / "cold" / cold.tasks[i].certificate) == slurp(root / "warm" / warm.tasks[i].certificate));
    }
    auto manifest = nlohmann::json::parse(slurp(root / "warm" / "manifest.json"));
    CHECK(manifest.at("tasks").size() == 2);
    CHECK(manifest.at("summary").at("excluded") == 1);
    CHECK(manifest.at("tool_version") == kToolVersion);

    std::ofstream(root / "exp.json") << R"({"excluded": [73, 197]})";
    auto bad = expectation_mismatches(warm, load_expectations(root / "exp.json"));
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].find("p=73") == 0);
    std::ofstream(root / "exp.json") << R"({"excluded": [197], "inconclusive": [73]})";
    CHECK(expectation_mismatches(warm, load_expectations(root / "exp.json")).empty());
    fs::remove_all(root);
  }

  TEST_CASE("a corrupt cache entry is rebuilt") {
    auto root = fs::temp_directory_path() / "modtors_cli_corrupt";
    fs::remove_all(root);
    auto first = load_level("x0", 37, {}, root);
    REQUIRE(std::distance(fs::directory_iterator(root), fs::directory_iterator{}) == 1);
    auto file = fs::directory_iterator(root)->path();
    std::ofstream(file) << "{ truncated";
    auto again = load_level("x0", 37, {}, root);
    CHECK(again.hecke == first.hecke);
    CHECK(again.winding == first.winding);
    CHECK(nlohmann::json::accept(slurp(file)));
    fs::remove_all(root);
  }

  TEST_CASE("argument validation") {
    ExcludeConfig cfg;
    cfg.primes = {197};
    cfg.d = 2;
    CHECK_THROWS_AS(cmd_exclude(cfg), std::invalid_argument);
    cfg.d = 3;
    cfg.primes = {91};
    CHECK_THROWS_AS(cmd_exclude(cfg), std::invalid_argument);
    cfg.primes = {97};
    cfg.model = "x1";
    CHECK_THROWS_AS(cmd_exclude(cfg), std::invalid_argument);
    CHECK_THROWS_AS(cmd_md_table(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(cmd_md_table(3, 27), std::invalid_argument);
  }

  TEST_CASE("d = 3 at p = 7 is inconclusive") {
    ExcludeConfig cfg;
    cfg.d = 3;
    cfg.primes = {7};
    for (const char* model : {"x0", "xmu"}) {
      cfg.model = model;
      auto m = cmd_exclude(cfg);
      CHECK(m.tasks.at(0).verdict == "inconclusive");
    }
  }

  TEST_CASE("M_d table output") {
    auto rows = cmd_md_table(3, 5);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.pass);
    auto text = format_md_table(rows);
    CHECK(text.find("29") != std::string::npos);
    CHECK(text.find("41") != std::string::npos);
    auto searched = cmd_md_table(3, 3, true);
    REQUIRE(searched.size() == 1);
    CHECK(searched[0].searched);
    CHECK(searched[0].pass);
    CHECK(searched[0].m <= 29);
  }

  TEST_CASE("thin wrappers") {
    CHECK(cmd_gate(26).at("holds") == true);
    CHECK(cmd_gate(25).at("holds") == false);
    auto pc = cmd_pointcount(6, 6, 2, 300);
    CHECK(pc.at("rows").at(0).at("exceptions").get<std::vector<std::uint64_t>>().back() == 73);
    auto x = cmd_x173();
    CHECK(x.at("parameter_count") == 24);
    CHECK(x.at("frobenius_orbits").size() == 4);
  }
}
