#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modtors/exact/matrix.hpp"
#include "modtors/modsym/cuspidal.hpp"

namespace modtors::criterion {

// Everything the criterion needs from a level, on the integral cuspidal basis: T_n for 1 <= n <= bound
// (n prime to p), the diamonds on class representatives, and the winding element.
struct LevelData {
  std::string model;  // "X0" or "XH"
  std::uint64_t p = 0;
  std::vector<std::uint64_t> h_generators;
  std::uint64_t basis_hash = 0;
  std::size_t cuspidal_rank = 0;
  std::size_t bound = 0;
  std::map<std::uint64_t, IntMatrix> hecke;
  std::vector<std::uint64_t> diamond_classes;
  std::map<std::uint64_t, IntMatrix> diamonds;
  RatVector winding;
  // Q-dimension of the span of the collected operators; equals genus() after collection.
  std::size_t hecke_rank = 0;

  std::size_t genus() const { return cuspidal_rank / 2; }
  const IntMatrix& T(std::uint64_t n) const;
  // <k> for any unit k; identity on X0.
  IntMatrix diamond(std::uint64_t k) const;
};

// Collects T_n for n = 1, 2, ... until n >= max(min_bound, ceil(p/6) + 2) and the Q-span of the
// collected operators (with diamonds) reaches dimension genus = dim T_Q; throws if that never happens
// below a hard cap.
LevelData collect_level_data(const HeckeSource& src, const std::vector<std::uint64_t>& h_generators, std::size_t min_bound = 20);

// JSON cache.  load returns nullopt for a missing, stale or corrupt file (wrong format id, level, subgroup,
// basis hash or checksum); the caller rebuilds.
std::string cache_file_name(const std::string& model, std::uint64_t p, const std::vector<std::uint64_t>& h_generators);
void save_level_data(const LevelData& data, const std::filesystem::path& file);
std::optional<LevelData> load_level_data(const std::filesystem::path& file, const std::string& model, std::uint64_t p,
                                         const std::vector<std::uint64_t>& h_generators, std::uint64_t basis_hash);

}  // namespace modtors::criterion
