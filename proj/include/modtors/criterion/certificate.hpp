#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "modtors/criterion/kamienny.hpp"
#include "modtors/criterion/level_data.hpp"

namespace modtors::criterion {

// Only two verdicts exist: the method never asserts that torsion of order p occurs.
enum class Verdict { excluded, inconclusive };
std::string to_string(Verdict v);

enum class T1Recipe {
  annihilator,  // combinations of a Z-basis of Ann(A_e)
  polynomial,   // polynomial in a single T_n, for n in a range
};

struct Strategy {
  bool fast = true;  // D_r variant for Gamma_H levels; ignored on X0
  T1Recipe recipe = T1Recipe::annihilator;
  std::size_t t1_budget = 40;
  std::uint64_t poly_n_min = 2, poly_n_max = 60;
  std::vector<std::uint64_t> t2_primes{3, 5, 7, 11, 13, 17, 19};
};

struct PointcountRecord {
  unsigned degree = 0;
  bool no_noncuspidal_points = false;  // Y_1(p)(F_{2^d'}) empty
  bool cusps_rational = false;         // cusp field condition
};

struct ExclusionCertificate {
  std::size_t d = 0;
  std::uint64_t p = 0;
  std::string model;  // "X0" or "XH"
  std::vector<std::uint64_t> h_generators;
  std::string variant;  // "x0", "h-full" or "h-fast"
  Verdict verdict = Verdict::inconclusive;
  std::string reason;

  // condition 1: the pair (t1, t2)
  bool pair_found = false;
  std::string t1_recipe;
  std::vector<std::string> t1_coordinates;  // lattice coordinates, when the recipe has them
  std::uint64_t t2_q = 0;
  std::string t2_formula;
  std::size_t pairs_tried = 0;
  // condition 2: rank evidence of the accepted pair (or of the last pair tried)
  KamiennyResult kamienny;
  // condition 3
  std::vector<PointcountRecord> pointcount;
  bool condition3 = false;

  std::uint64_t basis_hash = 0;
  std::size_t hecke_bound = 0;
  std::size_t genus = 0;
  std::size_t dim_ae = 0;
  std::size_t dim_ann = 0;

  nlohmann::json to_json() const;
};

ExclusionCertificate exclude_prime(const LevelData& level, std::size_t d, const Strategy& strategy = {});

}  // namespace modtors::criterion
