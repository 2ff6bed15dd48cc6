#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "modtors/cli/driver.hpp"

using namespace modtors;

namespace {

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular-symbol and point-count verifications with certificate output"};
  app.require_subcommand(1);

  auto* md = app.add_subcommand("md-table", "verify the reference M_d rank table over F_3");
  std::size_t md_min = 3, md_max = 26;
  bool md_search = false, md_json = false;
  md->add_option("--d-min", md_min)->capture_default_str();
  md->add_option("--d-max", md_max)->capture_default_str();
  md->add_flag("--search", md_search, "report the least passing M instead (not the reference value)");
  md->add_flag("--json", md_json);

  auto* ex = app.add_subcommand("exclude", "run the exclusion criterion per prime and write certificates");
  cli::ExcludeConfig cfg;
  std::optional<std::string> cache_flag;
  std::string out_dir = "modtors-out", recipe = "annihilator", expectations;
  bool fast = false;
  std::vector<std::uint64_t> poly_range;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  ex->add_option("--d", cfg.d, "degree, 3..7")->required();
  ex->add_option("--p-min", cfg.p_min);
  ex->add_option("--p-max", cfg.p_max);
  ex->add_option("--primes", cfg.primes, "explicit primes instead of a range");
  ex->add_option("--model", cfg.model)->check(CLI::IsMember({"x0", "xmu"}))->capture_default_str();
  ex->add_option("--h-gens", cfg.h_generators, "generators of H for --model xmu (default: trivial H)");
  ex->add_flag("--fast", fast, "use the D_r variant of the independence check on X_H");
  ex->add_option("--t1-recipe", recipe)->check(CLI::IsMember({"annihilator", "polynomial"}))->capture_default_str();
  ex->add_option("--t1-budget", cfg.strategy.t1_budget)->capture_default_str();
  ex->add_option("--poly-n", poly_range, "n range for the polynomial recipe")->expected(2);
  ex->add_option("--t2-primes", cfg.strategy.t2_primes)->delimiter(',');
  ex->add_option("--cache-dir", cache_flag);
  ex->add_option("--jobs", cfg.jobs)->capture_default_str();
  ex->add_option("--out", out_dir, "output directory for certificates and manifest")->capture_default_str();
  ex->add_option("--expectations", expectations, "JSON file with expected verdicts");

  auto* pc = app.add_subcommand("pointcount", "primes where the reduction of X_1(p) has extra points");
  unsigned pc_dmin = 3, pc_dmax = 7;
  std::uint64_t pc_ell = 2, pc_pmax = 300;
  pc->add_option("--d-min", pc_dmin)->capture_default_str();
  pc->add_option("--d-max", pc_dmax)->capture_default_str();
  pc->add_option("--ell", pc_ell)->capture_default_str();
  pc->add_option("--p-max", pc_pmax)->capture_default_str();

  app.add_subcommand("x173", "report on the order-73 curves over F_64");

  auto* gate = app.add_subcommand("gate", "the large-degree inequality");
  std::size_t gate_d = 26;
  gate->add_option("--d", gate_d)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (md->parsed()) {
      auto rows = cli::cmd_md_table(md_min, md_max, md_search);
      bool ok = true;
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows) {
        ok = ok && r.pass;
        j.push_back({{"d", r.d}, {"M_d", r.m}, {"pass", r.pass}, {"authoritative", !r.searched}});
      }
      if (md_json)
        print(j);
      else
        std::cout << cli::format_md_table(rows);
      for (const auto& r : rows)
        if (!r.pass) std::cerr << "d=" << r.d << ": M=" << r.m << " does not pass\n";
      return ok ? 0 : 1;
    }
    if (ex->parsed()) {
      cfg.strategy.fast = fast;
      cfg.strategy.recipe = recipe == "polynomial" ? criterion::T1Recipe::polynomial : criterion::T1Recipe::annihilator;
      if (poly_range.size() == 2) {
        cfg.strategy.poly_n_min = poly_range[0];
        cfg.strategy.poly_n_max = poly_range[1];
      }
      cfg.cache_dir = cli::resolve_cache_dir(cache_flag);
      cfg.out_dir = out_dir;
      if (cfg.primes.empty() && (cfg.p_min == 0 || cfg.p_max < cfg.p_min)) {
        std::cerr << "exclude: give --primes or --p-min <= --p-max\n";
        return 2;
      }
      auto m = cli::cmd_exclude(cfg);
      for (const auto& t : m.tasks)
        std::cout << "p=" << t.p << " " << t.verdict << " " << t.seconds << "s" << (t.reason.empty() ? "" : " (" + t.reason + ")") << "\n";
      std::cout << "excluded=" << m.excluded << " inconclusive=" << m.inconclusive << " errors=" << m.errors << "\n";
      if (m.errors) return 2;
      if (!expectations.empty()) {
        auto bad = cli::expectation_mismatches(m, cli::load_expectations(expectations));
        for (const auto& b : bad) std::cerr << b << "\n";
        if (!bad.empty()) return 1;
      }
      return 0;
    }
    if (pc->parsed()) {
      print(cli::cmd_pointcount(pc_dmin, pc_dmax, pc_ell, pc_pmax));
      return 0;
    }
    if (app.got_subcommand("x173")) {
      print(cli::cmd_x173());
      return 0;
    }
    if (gate->parsed()) {
      auto j = cli::cmd_gate(gate_d);
      print(j);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
