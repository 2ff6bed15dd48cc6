#include "modtors/pointcount/waterhouse.hpp"

#include <stdexcept>

#include "modtors/exact/bigint.hpp"
#include "modtors/exact/prime_field.hpp"

namespace modtors::pointcount {

namespace {

Int ipow(std::uint64_t b, unsigned e) {
  Int r = 1;
  for (unsigned i = 0; i < e; ++i) r *= static_cast<unsigned long>(b);
  return r;
}

bool divides(std::uint64_t p, const Int& n) { return mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) != 0; }

void check_args(std::uint64_t p, std::uint64_t ell, unsigned d) {
  if (p == 2 || p == 3) throw std::invalid_argument("waterhouse: statement 1 is false for p = 2 or 3; p must be at least 5");
  if (!is_prime(p) || !is_prime(ell)) throw std::invalid_argument("waterhouse: p and l must be prime");
  if (p == ell) throw std::invalid_argument("waterhouse: l must differ from p");
  if (d == 0) throw std::invalid_argument("waterhouse: d must be positive");
}

}  // namespace

WaterhouseResult waterhouse(std::uint64_t p, std::uint64_t ell, unsigned d) {
  check_args(p, ell, d);
  const Int q = ipow(ell, d);
  WaterhouseResult r;
  // (1): n = q + 1 - t with t^2 < 4q and l not dividing n - 1 = q - t
  r.conditions[0] = true;
  for (Int t = 0; t * t < 4 * q; ++t)
    for (int sgn_t : {1, -1}) {
      Int tt = t * sgn_t;
      if (divides(ell, tt)) continue;
      if (divides(p, q + 1 - tt)) r.conditions[0] = false;
    }
  const bool even = d % 2 == 0;
  r.conditions[1] = true;
  r.conditions[2] = true;
  r.conditions[3] = true;
  r.conditions[4] = true;
  if (even) {
    Int h = ipow(ell, d / 2);
    r.conditions[1] = !divides(p, q + 1 + 2 * h) && !divides(p, q + 1 - 2 * h);
    if (ell % 3 != 1) r.conditions[2] = !divides(p, q + 1 + h) && !divides(p, q + 1 - h);
  }
  if (!even && (ell == 2 || ell == 3)) {
    Int h = ipow(ell, (d + 1) / 2);
    r.conditions[3] = !divides(p, q + 1 + h) && !divides(p, q + 1 - h);
  }
  if (!even || ell % 4 != 1) r.conditions[4] = !divides(p, q + 1);
  r.empty = r.conditions[0] && r.conditions[1] && r.conditions[2] && r.conditions[3] && r.conditions[4];
  // statement 1 covers the traces prime to l (ordinary curves); when it holds, any points come from supersingular ones
  r.supersingular_only = r.conditions[0] && !r.empty;
  return r;
}

bool waterhouse_empty(std::uint64_t p, std::uint64_t ell, unsigned d) { return waterhouse(p, ell, d).empty; }

bool cusp_field_condition(std::uint64_t p, std::uint64_t ell, unsigned d) {
  check_args(p, ell, d);
  Int q = ipow(ell, d);
  return !divides(p, q - 1) && !divides(p, q + 1);
}

bool condition3_holds(std::uint64_t p, unsigned d, std::uint64_t ell) {
  for (unsigned dd = 1; dd <= d; ++dd)
    if (!waterhouse_empty(p, ell, dd) || !cusp_field_condition(p, ell, dd)) return false;
  return true;
}

bool above_hasse_window(std::uint64_t p, std::uint64_t ell, unsigned d) {
  // p > l^d + 1 + 2 l^{d/2}  <=>  p - l^d - 1 > 0 and (p - l^d - 1)^2 > 4 l^d
  Int q = ipow(ell, d);
  Int s = Int(static_cast<unsigned long>(p)) - q - 1;
  return s > 0 && s * s > 4 * q;
}

std::vector<std::uint64_t> condition3_exceptions(unsigned d, std::uint64_t ell, std::uint64_t p_max, std::uint64_t p_min) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(p_max)) {
    if (p < p_min || p < 5 || p == ell) continue;
    if (!condition3_holds(p, d, ell)) out.push_back(p);
  }
  return out;
}

}  // namespace modtors::pointcount
