#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modtors/criterion/level_data.hpp"
#include "modtors/exact/gf2.hpp"
#include "modtors/exact/matrix.hpp"

namespace modtors::criterion {

// Independence is tested on the images in End(H_1 (x) F_2), flattened.  Independence there implies
// independence in the Hecke algebra mod 2, so a pass is sound and a failure only means inconclusive.
struct RankEvidence {
  std::string label;
  std::size_t vectors = 0;
  std::size_t length = 0;
  std::size_t rank = 0;
  std::size_t required = 0;
  std::uint64_t ell = 2;
};

struct KamiennyResult {
  bool passed = false;
  std::vector<RankEvidence> evidence;
  std::string failure;  // first failing sub-check, empty on success
  std::size_t checks = 0;
};

// t is only used mod 2.

// T_1 t, ..., T_d t independent.  Requires 2d < p.
KamiennyResult kamienny_check_x0(const LevelData& level, std::size_t d, const gf2::BitMatrix& t);
inline KamiennyResult kamienny_check_x0(const LevelData& level, std::size_t d, const IntMatrix& t) {
  return kamienny_check_x0(level, d, gf2::BitMatrix::from_int(t));
}

// Every translation class of ordered sums of oo-cusps: {T_i <d_j> t : i <= n_j} independent.
KamiennyResult kamienny_check_h(const LevelData& level, std::size_t d, const gf2::BitMatrix& t);
inline KamiennyResult kamienny_check_h(const LevelData& level, std::size_t d, const IntMatrix& t) {
  return kamienny_check_h(level, d, gf2::BitMatrix::from_int(t));
}

// Index set D_r for floor(d/2) <= r <= d: pairs (diamond class representative, i).
std::vector<std::pair<std::uint64_t, std::size_t>> faster_index_set(const std::vector<std::uint64_t>& classes, std::size_t d,
                                                                    std::size_t r);

// For each ceil(d/2) <= r <= d, no d (or fewer) of {T_i <k> t : (k, i) in D_r} are dependent, i.e.
// every nonzero dependency among them has weight >= d + 1.
KamiennyResult kamienny_check_h_fast(const LevelData& level, std::size_t d, const gf2::BitMatrix& t);
inline KamiennyResult kamienny_check_h_fast(const LevelData& level, std::size_t d, const IntMatrix& t) {
  return kamienny_check_h_fast(level, d, gf2::BitMatrix::from_int(t));
}

// Least weight of a nonzero dependency among the rows if it is at most bound, bound + 1 if there is none
// that small, nullopt if deciding that would exceed the search budget.
std::optional<std::size_t> minimum_dependency_weight(const gf2::BitMatrix& rows, std::size_t bound);

}  // namespace modtors::criterion
