#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace modtors::pointcount {

struct WaterhouseResult {
  // conditions[i] is statement i+1 of the emptiness criterion
  std::array<bool, 5> conditions{};
  bool empty = false;
  // set when Y_1(p) has points but statement 1 holds: every such point is then supersingular
  bool supersingular_only = false;
};

// Whether Y_1(p)(F_{l^d}) is empty, via the five arithmetic conditions.  Requires p >= 5, l != p.
WaterhouseResult waterhouse(std::uint64_t p, std::uint64_t ell, unsigned d);
bool waterhouse_empty(std::uint64_t p, std::uint64_t ell, unsigned d);

// True iff the non-rational cusps of X_1(p) stay undefined over F_{l^d}: p divides neither l^d - 1 nor l^d + 1.
bool cusp_field_condition(std::uint64_t p, std::uint64_t ell, unsigned d);

// X_1(p)(F_{l^d'}) consists of reductions of rational cusps for every d' <= d.
bool condition3_holds(std::uint64_t p, unsigned d, std::uint64_t ell = 2);

// p > (l^{d/2} + 1)^2, compared exactly.
bool above_hasse_window(std::uint64_t p, std::uint64_t ell, unsigned d);

// Primes p_min <= p <= p_max (p >= 5, p != l) at which condition3_holds fails.
std::vector<std::uint64_t> condition3_exceptions(unsigned d, std::uint64_t ell, std::uint64_t p_max, std::uint64_t p_min = 5);

}  // namespace modtors::pointcount
