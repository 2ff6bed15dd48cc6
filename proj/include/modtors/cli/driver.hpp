#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modtors/criterion/certificate.hpp"

namespace modtors::cli {

inline constexpr const char* kToolVersion = "modtors 1.0.0";
inline constexpr const char* kCacheEnv = "MODTORS_CACHE_DIR";

// Flag value, else the environment override, else ".modtors-cache".
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

// Level data for X0(p) (model "x0") or X_H(p) (model "xmu", H given by generators; empty means trivial H),
// read from the cache when it is valid, rebuilt and rewritten otherwise.  An empty
// cache_dir disables caching.
criterion::LevelData load_level(const std::string& model, std::uint64_t p, const std::vector<std::uint64_t>& h_generators,
                                const std::filesystem::path& cache_dir, std::size_t min_bound = 20);

struct ExcludeConfig {
  std::size_t d = 7;
  std::uint64_t p_min = 0, p_max = 0;
  std::vector<std::uint64_t> primes;  // used instead of the range when non-empty
  std::string model = "x0";
  std::vector<std::uint64_t> h_generators;
  criterion::Strategy strategy;
  std::filesystem::path cache_dir;
  std::filesystem::path out_dir;  // certificates/ and manifest.json go here; nothing is written when empty
  std::size_t jobs = 1;
};

struct TaskRecord {
  std::uint64_t p = 0;
  std::string verdict;  // "excluded", "inconclusive" or "error"
  std::string reason;
  std::string certificate;  // file name relative to the output directory
  double seconds = 0;
  std::optional<criterion::ExclusionCertificate> result;
};

struct RunManifest {
  std::string version = kToolVersion;
  std::string command;
  nlohmann::json parameters;
  std::vector<TaskRecord> tasks;
  std::size_t excluded = 0, inconclusive = 0, errors = 0;

  nlohmann::json to_json() const;
};

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// One certificate per prime; per-prime failures are recorded as "error" tasks and do not stop the run.
RunManifest cmd_exclude(const ExcludeConfig& config);

// Certificate body as written to disk; contains no timestamps.
std::string certificate_text(const criterion::ExclusionCertificate& c);

// Expectations file: {"excluded": [p, ...], "inconclusive": [p, ...]}.
struct Expectations {
  std::vector<std::uint64_t> excluded, inconclusive;
};
Expectations load_expectations(const std::filesystem::path& file);
// Lines describing each task whose verdict differs from the expectation.
std::vector<std::string> expectation_mismatches(const RunManifest& m, const Expectations& e);

struct MdRow {
  std::size_t d = 0;
  std::uint64_t m = 0;
  bool pass = false;
  bool searched = false;  // m came from a search rather than the reference table
};
// Reference rows for d_min..d_max (3 <= d_min <= d_max <= 26); with search, the least passing M instead.
std::vector<MdRow> cmd_md_table(std::size_t d_min, std::size_t d_max, bool search = false);
std::string format_md_table(const std::vector<MdRow>& rows);

nlohmann::json cmd_pointcount(unsigned d_min, unsigned d_max, std::uint64_t ell, std::uint64_t p_max);
nlohmann::json cmd_x173();
nlohmann::json cmd_gate(std::size_t d);

}  // namespace modtors::cli
