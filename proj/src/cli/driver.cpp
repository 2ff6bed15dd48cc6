#include "modtors/cli/driver.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "modtors/curves2/x1_73.hpp"
#include "modtors/exact/binary_field.hpp"
#include "modtors/modsym/modsym0.hpp"
#include "modtors/modsym/modsymH.hpp"
#include "modtors/oesterle/oesterle.hpp"
#include "modtors/pointcount/waterhouse.hpp"

namespace modtors::cli {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv(kCacheEnv); env && *env) return env;
  return ".modtors-cache";
}

criterion::LevelData load_level(const std::string& model, std::uint64_t p, const std::vector<std::uint64_t>& h_generators,
                                const fs::path& cache_dir, std::size_t min_bound) {
  std::unique_ptr<HeckeSource> src;
  std::vector<std::uint64_t> gens;
  if (model == "x0") {
    src = std::make_unique<modsym0::Gamma0Space>(p);
  } else if (model == "xmu") {
    gens = h_generators.empty() ? std::vector<std::uint64_t>{1} : h_generators;
    src = std::make_unique<modsymH::GammaHSpace>(p, gens);
  } else {
    throw std::invalid_argument("unknown model '" + model + "' (expected x0 or xmu)");
  }
  const std::string name = src->model_name();
  fs::path file;
  if (!cache_dir.empty()) {
    // keyed by min_bound as well: the collected range, and so the certificate, depends on it
    file = cache_dir / ("b" + std::to_string(min_bound) + "_" + criterion::cache_file_name(name, p, gens));
    if (auto cached = criterion::load_level_data(file, name, p, gens, src->basis_hash())) return *cached;
  }
  auto data = criterion::collect_level_data(*src, gens, min_bound);
  if (!file.empty()) criterion::save_level_data(data, file);
  return data;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= n && prime; ++q) prime = n % q != 0;
    if (prime) out.push_back(n);
  }
  return out;
}

std::string certificate_text(const criterion::ExclusionCertificate& c) { return c.to_json().dump(2) + "\n"; }

json RunManifest::to_json() const {
  json tasks_json = json::array();
  for (const auto& t : tasks)
    tasks_json.push_back({{"p", t.p}, {"verdict", t.verdict}, {"reason", t.reason}, {"certificate", t.certificate}, {"seconds", t.seconds}});
  return {{"format", "modtors-manifest-v1"},
          {"tool_version", version},
          {"command", command},
          {"parameters", parameters},
          {"tasks", tasks_json},
          {"summary", {{"excluded", excluded}, {"inconclusive", inconclusive}, {"errors", errors}}}};
}

RunManifest cmd_exclude(const ExcludeConfig& cfg) {
  if (cfg.d < 3 || cfg.d > 7) throw std::invalid_argument("exclude: d must lie in 3..7");
  if (cfg.model != "x0" && cfg.model != "xmu") throw std::invalid_argument("exclude: model must be x0 or xmu");
  std::vector<std::uint64_t> primes = cfg.primes.empty() ? primes_in(cfg.p_min, cfg.p_max) : cfg.primes;
  for (auto p : primes)
    if (p < 5 || primes_in(p, p).empty()) throw std::invalid_argument("exclude: " + std::to_string(p) + " is not a prime >= 5");

  RunManifest m;
  m.command = "exclude";
  m.parameters = {{"d", cfg.d},
                  {"primes", primes},
                  {"model", cfg.model},
                  {"h_generators", cfg.h_generators},
                  {"fast", cfg.strategy.fast},
                  {"t1_recipe", cfg.strategy.recipe == criterion::T1Recipe::annihilator ? "annihilator" : "polynomial"},
                  {"t1_budget", cfg.strategy.t1_budget},
                  {"poly_n", {cfg.strategy.poly_n_min, cfg.strategy.poly_n_max}},
                  {"t2_primes", cfg.strategy.t2_primes}};
  m.tasks.resize(primes.size());
  if (!cfg.out_dir.empty()) fs::create_directories(cfg.out_dir / "certificates");

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      TaskRecord& t = m.tasks[i];
      t.p = primes[i];
      auto start = std::chrono::steady_clock::now();
      try {
        const std::size_t bound = cfg.strategy.recipe == criterion::T1Recipe::polynomial
                                      ? std::max<std::size_t>(20, cfg.strategy.poly_n_max)
                                      : 20;
        auto level = load_level(cfg.model, t.p, cfg.h_generators, cfg.cache_dir, bound);
        auto cert = criterion::exclude_prime(level, cfg.d, cfg.strategy);
        t.verdict = criterion::to_string(cert.verdict);
        t.reason = cert.reason;
        if (!cfg.out_dir.empty()) {
          t.certificate = "certificates/" + cfg.model + "_d" + std::to_string(cfg.d) + "_p" + std::to_string(t.p) + ".json";
          std::ofstream(cfg.out_dir / t.certificate) << certificate_text(cert);
        }
        t.result = std::move(cert);
      } catch (const std::exception& e) {
        t.verdict = "error";
        t.reason = e.what();
      }
      t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, primes.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& t : m.tasks) {
    if (t.verdict == "excluded") ++m.excluded;
    else if (t.verdict == "inconclusive") ++m.inconclusive;
    else ++m.errors;
  }
  if (!cfg.out_dir.empty()) std::ofstream(cfg.out_dir / "manifest.json") << m.to_json().dump(2) << "\n";
  return m;
}

Expectations load_expectations(const fs::path& file) {
  std::ifstream is(file);
  if (!is) throw std::runtime_error("cannot read expectations file " + file.string());
  json j = json::parse(is);
  Expectations e;
  if (j.contains("excluded")) e.excluded = j.at("excluded").get<std::vector<std::uint64_t>>();
  if (j.contains("inconclusive")) e.inconclusive = j.at("inconclusive").get<std::vector<std::uint64_t>>();
  return e;
}

std::vector<std::string> expectation_mismatches(const RunManifest& m, const Expectations& e) {
  std::set<std::uint64_t> ex(e.excluded.begin(), e.excluded.end()), inc(e.inconclusive.begin(), e.inconclusive.end());
  std::vector<std::string> out;
  for (const auto& t : m.tasks) {
    std::string want = ex.count(t.p) ? "excluded" : inc.count(t.p) ? "inconclusive" : "";
    if (!want.empty() && t.verdict != want)
      out.push_back("p=" + std::to_string(t.p) + ": expected " + want + ", got " + t.verdict + " (" + t.reason + ")");
  }
  return out;
}

std::vector<MdRow> cmd_md_table(std::size_t d_min, std::size_t d_max, bool search) {
  if (d_min < 3 || d_max > 26 || d_min > d_max) throw std::invalid_argument("md-table: need 3 <= d_min <= d_max <= 26");
  std::vector<MdRow> rows;
  for (const auto& [d, m] : oesterle::md_table()) {
    if (d < d_min || d > d_max) continue;
    if (search) {
      auto found = oesterle::find_Md(d);
      rows.push_back({d, found.value_or(0), found.has_value(), true});
    } else {
      rows.push_back({d, m, oesterle::check_Md(d, m), false});
    }
  }
  return rows;
}

std::string format_md_table(const std::vector<MdRow>& rows) {
  std::ostringstream d_line, m_line, pass_line;
  d_line << "d   ";
  m_line << "M_d ";
  pass_line << "F_3 ";
  for (const auto& r : rows) {
    auto w = static_cast<int>(std::max<std::size_t>(4, std::to_string(r.m).size() + 1));
    d_line.width(w);
    d_line << r.d;
    m_line.width(w);
    m_line << r.m;
    pass_line.width(w);
    pass_line << (r.pass ? "ok" : "FAIL");
  }
  return d_line.str() + "\n" + m_line.str() + "\n" + pass_line.str() + "\n";
}

json cmd_pointcount(unsigned d_min, unsigned d_max, std::uint64_t ell, std::uint64_t p_max) {
  if (d_min < 1 || d_min > d_max) throw std::invalid_argument("pointcount: need 1 <= d_min <= d_max");
  json rows = json::array();
  for (unsigned d = d_min; d <= d_max; ++d)
    rows.push_back({{"d", d}, {"exceptions", pointcount::condition3_exceptions(d, ell, p_max)}});
  return {{"command", "pointcount"}, {"ell", ell}, {"p_max", p_max}, {"rows", rows}};
}

json cmd_x173() {
  auto r = curves2::analyze_x1_73(default_binary_modulus(6));
  auto bits = [](const std::vector<curves2::F2k>& v) {
    std::vector<std::uint32_t> out;
    for (const auto& x : v) out.push_back(x.bits());
    return out;
  };
  json orbits = json::array();
  for (const auto& o : r.frobenius_orbits) orbits.push_back(bits(o));
  return {{"command", "x173"},
          {"field_modulus", r.modulus},
          {"parameter_count", r.parameters.size()},
          {"parameters", bits(r.parameters)},
          {"all_roots_of_sextic_product", r.all_roots_of_sextic_product},
          {"frobenius_orbits", orbits},
          {"diamond_10_on_orbits", r.diamond_image},
          {"diamond_10_order", r.diamond_order},
          {"point_counts", r.point_counts},
          {"frobenius_trace", r.frobenius_trace},
          {"frobenius_charpoly", r.frobenius_charpoly}};
}

json cmd_gate(std::size_t d) { return {{"command", "gate"}, {"d", d}, {"holds", oesterle::asymptotic_gate(d)}}; }

}  // namespace modtors::cli
