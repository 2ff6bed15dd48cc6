#pragma once

#include <cstdint>
#include <vector>

#include "modtors/curves2/weierstrass.hpp"

namespace modtors::curves2 {

// b in F_64 (given modulus) with E_{b,1} smooth and (0,0) of order 73.
std::vector<F2k> find_73_parameters(std::uint32_t modulus);

// (b^6 + b + 1)(b^6 + b^3 + 1)(b^6 + b^5 + b^2 + b + 1)(b^6 + b^5 + b^4 + b + 1)
F2k sextic_product(const F2k& b);

struct X173Report {
  std::uint32_t modulus = 0;
  std::vector<F2k> parameters;
  std::vector<std::vector<F2k>> frobenius_orbits;
  // orbit i is sent to diamond_image[i] by (E, P) -> (E, 10 P)
  std::vector<std::size_t> diamond_image;
  std::size_t diamond_order = 0;
  std::vector<std::uint64_t> point_counts;
  std::int64_t frobenius_trace = 0;
  // x^2 - trace x + 64, coefficients from the constant term up
  std::vector<std::int64_t> frobenius_charpoly;
  bool all_roots_of_sextic_product = false;
};

X173Report analyze_x1_73(std::uint32_t modulus);

}  // namespace modtors::curves2
