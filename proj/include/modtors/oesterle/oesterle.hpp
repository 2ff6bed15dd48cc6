#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "modtors/exact/bigint.hpp"
#include "modtors/exact/matrix.hpp"

namespace modtors::modsym0 {
class Gamma0Space;
}

namespace modtors::oesterle {

// 1 for x > 0, 1/2 for x = 0, 0 for x < 0.
Rat H_fn(const Rat& x);

// Least k* in [1, p) with k k* = -1 mod p.
std::uint64_t k_star(std::uint64_t p, std::uint64_t k);

// #{a', b', c', d' >= 1 : a'd' + b'c' = r, d' i = c' mod p}; the primed count also asks gcd(c', d') = 1.
std::uint64_t v_r(std::uint64_t p, std::uint64_t r, std::int64_t i);
std::uint64_t v_r_prime(std::uint64_t p, std::uint64_t r, std::int64_t i);

// I_r e . lambda(k) and I'_r e . lambda(k) by the divisor-sum formulas; 1 <= r, k < p.
Int ire_dot_lambda(std::uint64_t p, std::uint64_t r, std::uint64_t k);
Int ire_prime_dot_lambda(std::uint64_t p, std::uint64_t r, std::uint64_t k);

// Data attached to a coprime pair 1 <= d < c < p / r: ad - bc = 1 with 0 <= a < c, 0 <= b < d, k = c/d and
// k* = -d/c mod p, dk = up + c and ck* = u*p - d.
struct IntersectionQuery {
  std::uint64_t p, r;
  std::int64_t a, b, c, d;
  std::uint64_t k, k_star;
  std::int64_t u, u_star;
};
IntersectionQuery make_query(std::uint64_t p, std::uint64_t r, std::int64_t c, std::int64_t d);

// I'_r e . lambda(k) for k = c/d, in terms of floors of ru/d, rb/d, ra/c, ru*/c.
Int ire_prime_dot_lambda_cd(const IntersectionQuery& q);

// I'_r e . {0, a/c} = floor(ra/c) - floor(ru*/c) with a p u* = 1 mod c; needs c >= 2, cr < p, 1 <= a < c coprime.
Int ire_prime_dot_path(std::uint64_t p, std::uint64_t r, std::int64_t a, std::int64_t c);

// Modular-symbol side (relative coordinates of the X_0(p) space).
IntVector ire_vector(const modsym0::Gamma0Space& s, std::uint64_t r);        // I_r e
IntVector ire_prime_vector(const modsym0::Gamma0Space& s, std::uint64_t r);  // I'_r e, Moebius inversion
IntMatrix t_prime(const modsym0::Gamma0Space& s, std::uint64_t r);           // T_r = sum_{s | r} T'_s
IntMatrix l_element(const modsym0::Gamma0Space& s, std::uint64_t r);        // T'_2r - 2 T'_r

int moebius(std::uint64_t n);

// eps(n) = 0 if n mod M lies in (0, M/2), 1 otherwise; only units are accepted.
class EpsTable {
 public:
  explicit EpsTable(std::uint64_t m);
  std::uint64_t modulus() const { return m_; }
  int operator()(std::int64_t n) const;
  const std::vector<std::uint64_t>& units() const { return units_; }

 private:
  std::uint64_t m_;
  std::vector<std::uint64_t> units_;
};

// Rows r = 1..d, columns the units a of Z/M in increasing order, entries eps(ra) - eps(ru/a).
IntMatrix r_matrix(std::size_t d, std::uint64_t m, std::uint64_t u);
// rank of r_matrix(d, M, u) mod ell is d for every unit u.
bool check_Md(std::size_t d, std::uint64_t m, std::uint64_t ell = 3);
// Least odd M >= 3 passing check_Md; may differ from the reference table, which only needs some passing M.
std::optional<std::uint64_t> find_Md(std::size_t d, std::uint64_t m_max = 1000, std::uint64_t ell = 3);

// Reference values of M_d for d = 3..26.
const std::vector<std::pair<std::size_t, std::uint64_t>>& md_table();

// (3^(d/2) + 1)^2 > 65 (2d)^6, decided in integers.
bool asymptotic_gate(std::size_t d);

}  // namespace modtors::oesterle
