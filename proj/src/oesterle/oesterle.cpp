#include "modtors/oesterle/oesterle.hpp"

#include <numeric>
#include <stdexcept>

#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"
#include "modtors/modsym/modsym0.hpp"

namespace modtors::oesterle {

namespace {

std::int64_t floor_of(std::int64_t a, std::int64_t b) { return floor_div(a, b); }

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s <= n; ++s)
    if (n % s == 0) out.push_back(s);
  return out;
}

template <class Pred>
std::uint64_t count_quadruples(std::uint64_t p, std::uint64_t r, std::int64_t i, Pred keep) {
  std::uint64_t count = 0;
  const std::int64_t im = mod_floor(i, static_cast<std::int64_t>(p));
  for (std::uint64_t dd = 1; dd < r; ++dd)
    for (std::uint64_t aa = 1; aa * dd < r; ++aa) {
      const std::uint64_t rest = r - aa * dd;
      for (std::uint64_t cc = 1; cc <= rest; ++cc) {
        if (rest % cc != 0) continue;
        if ((static_cast<unsigned __int128>(dd) * static_cast<std::uint64_t>(im)) % p != cc % p) continue;
        if (keep(cc, dd)) ++count;
      }
    }
  return count;
}

void check_range(std::uint64_t p, std::uint64_t r, std::uint64_t k) {
  if (r < 1 || r >= p) throw std::invalid_argument("intersection formula: requires 1 <= r < p");
  if (k < 1 || k >= p) throw std::invalid_argument("intersection formula: requires 1 <= k < p");
}

}  // namespace

Rat H_fn(const Rat& x) {
  if (sgn(x) > 0) return 1;
  if (sgn(x) == 0) return Rat(1, 2);
  return 0;
}

std::uint64_t k_star(std::uint64_t p, std::uint64_t k) { return p - invmod(k % p, p); }

std::uint64_t v_r(std::uint64_t p, std::uint64_t r, std::int64_t i) {
  return count_quadruples(p, r, i, [](std::uint64_t, std::uint64_t) { return true; });
}

std::uint64_t v_r_prime(std::uint64_t p, std::uint64_t r, std::int64_t i) {
  return count_quadruples(p, r, i, [](std::uint64_t c, std::uint64_t d) { return std::gcd(c, d) == 1; });
}

Int ire_dot_lambda(std::uint64_t p, std::uint64_t r, std::uint64_t k) {
  check_range(p, r, k);
  const std::uint64_t ks = k_star(p, k);
  std::int64_t total = 0;
  for (auto s : divisors(r))
    total += static_cast<std::int64_t>(s * k / p) - static_cast<std::int64_t>(s * ks / p);
  total += static_cast<std::int64_t>(v_r(p, r, static_cast<std::int64_t>(k))) - static_cast<std::int64_t>(v_r(p, r, static_cast<std::int64_t>(ks)));
  return Int(static_cast<long>(total));
}

Int ire_prime_dot_lambda(std::uint64_t p, std::uint64_t r, std::uint64_t k) {
  check_range(p, r, k);
  const std::uint64_t ks = k_star(p, k);
  std::int64_t total = static_cast<std::int64_t>(r * k / p) - static_cast<std::int64_t>(r * ks / p);
  total += static_cast<std::int64_t>(v_r_prime(p, r, static_cast<std::int64_t>(k))) -
           static_cast<std::int64_t>(v_r_prime(p, r, static_cast<std::int64_t>(ks)));
  return Int(static_cast<long>(total));
}

IntersectionQuery make_query(std::uint64_t p, std::uint64_t r, std::int64_t c, std::int64_t d) {
  const std::int64_t pi = static_cast<std::int64_t>(p), ri = static_cast<std::int64_t>(r);
  if (r < 1 || d < 1 || d >= c || c * ri >= pi || std::gcd(c, d) != 1)
    throw std::invalid_argument("make_query: requires 1 <= d < c < p/r with gcd(c, d) = 1");
  IntersectionQuery q{p, r, 0, 0, c, d, 0, 0, 0, 0};
  // a = d^{-1} mod c (a = 0 only when c = 1, excluded), then b = (ad - 1)/c
  q.a = c == 1 ? 0 : static_cast<std::int64_t>(invmod(static_cast<std::uint64_t>(d % c), static_cast<std::uint64_t>(c)));
  q.b = (q.a * d - 1) / c;
  q.k = mulmod(static_cast<std::uint64_t>(c), invmod(static_cast<std::uint64_t>(d), p), p);
  q.k_star = k_star(p, q.k);
  q.u = (d * static_cast<std::int64_t>(q.k) - c) / pi;
  q.u_star = (c * static_cast<std::int64_t>(q.k_star) + d) / pi;
  if (q.a * d - q.b * c != 1 || q.b < 0 || q.b >= d) throw std::logic_error("make_query: bad (a, b)");
  if (d * static_cast<std::int64_t>(q.k) != q.u * pi + c || c * static_cast<std::int64_t>(q.k_star) != q.u_star * pi - d)
    throw std::logic_error("make_query: bad (u, u*)");
  return q;
}

Int ire_prime_dot_lambda_cd(const IntersectionQuery& q) {
  const std::int64_t r = static_cast<std::int64_t>(q.r);
  return Int(static_cast<long>(floor_of(r * q.u, q.d) - floor_of(r * q.b, q.d) + floor_of(r * q.a, q.c) - floor_of(r * q.u_star, q.c)));
}

Int ire_prime_dot_path(std::uint64_t p, std::uint64_t r, std::int64_t a, std::int64_t c) {
  if (c < 2 || c * static_cast<std::int64_t>(r) >= static_cast<std::int64_t>(p) || a < 1 || a >= c || std::gcd(a, c) != 1)
    throw std::invalid_argument("ire_prime_dot_path: requires c >= 2, cr < p, 1 <= a < c coprime");
  const std::uint64_t cu = static_cast<std::uint64_t>(c);
  const std::int64_t us = static_cast<std::int64_t>(invmod(mulmod(static_cast<std::uint64_t>(a), p % cu, cu), cu));
  const std::int64_t ri = static_cast<std::int64_t>(r);
  return Int(static_cast<long>(floor_of(ri * a, c) - floor_of(ri * us, c)));
}

int moebius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("moebius: n must be positive");
  int mu = 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    n /= q;
    if (n % q == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

IntVector ire_vector(const modsym0::Gamma0Space& s, std::uint64_t r) { return s.merel_Ire(r); }

IntVector ire_prime_vector(const modsym0::Gamma0Space& s, std::uint64_t r) {
  IntVector acc;
  for (auto t : divisors(r)) {
    const int mu = moebius(r / t);
    if (mu == 0) continue;
    IntVector v = s.merel_Ire(t);
    if (acc.empty()) acc.assign(v.size(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += mu * v[i];
  }
  return acc;
}

IntMatrix t_prime(const modsym0::Gamma0Space& s, std::uint64_t r) {
  IntMatrix acc(s.dimension(), s.dimension());
  for (auto t : divisors(r)) {
    const int mu = moebius(r / t);
    if (mu != 0) acc += s.hecke_matrix(t) * Int(mu);
  }
  return acc;
}

IntMatrix l_element(const modsym0::Gamma0Space& s, std::uint64_t r) { return t_prime(s, 2 * r) - t_prime(s, r) * Int(2); }

EpsTable::EpsTable(std::uint64_t m) : m_(m) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("EpsTable: modulus must be odd and >= 3");
  for (std::uint64_t a = 1; a < m; ++a)
    if (std::gcd(a, m) == 1) units_.push_back(a);
}

int EpsTable::operator()(std::int64_t n) const {
  const std::int64_t m = static_cast<std::int64_t>(m_);
  const std::int64_t x = mod_floor(n, m);
  if (std::gcd(static_cast<std::uint64_t>(x), m_) != 1) throw std::invalid_argument("EpsTable: argument is not a unit");
  return 2 * x < m ? 0 : 1;
}

IntMatrix r_matrix(std::size_t d, std::uint64_t m, std::uint64_t u) {
  EpsTable eps(m);
  if (std::gcd(u % m, m) != 1) throw std::invalid_argument("r_matrix: u must be a unit");
  const auto& units = eps.units();
  IntMatrix out(d, units.size());
  for (std::size_t r = 1; r <= d; ++r)
    for (std::size_t j = 0; j < units.size(); ++j) {
      const std::uint64_t a = units[j];
      if (std::gcd(static_cast<std::uint64_t>(r), m) != 1) {
        // r a is not a unit; the table is only used with d < smallest prime factor of M
        throw std::invalid_argument("r_matrix: every row index must be prime to M");
      }
      const std::uint64_t ra = (r * a) % m;
      const std::uint64_t rua = mulmod(mulmod(r % m, u % m, m), invmod(a, m), m);
      out(r - 1, j) = eps(static_cast<std::int64_t>(ra)) - eps(static_cast<std::int64_t>(rua));
    }
  return out;
}

bool check_Md(std::size_t d, std::uint64_t m, std::uint64_t ell) {
  EpsTable eps(m);
  for (std::size_t r = 1; r <= d; ++r)
    if (std::gcd(static_cast<std::uint64_t>(r), m) != 1) return false;
  for (auto u : eps.units())
    if (rank_mod(r_matrix(d, m, u), ell) != d) return false;
  return true;
}

std::optional<std::uint64_t> find_Md(std::size_t d, std::uint64_t m_max, std::uint64_t ell) {
  for (std::uint64_t m = 3; m <= m_max; m += 2)
    if (check_Md(d, m, ell)) return m;
  return std::nullopt;
}

const std::vector<std::pair<std::size_t, std::uint64_t>>& md_table() {
  static const std::vector<std::pair<std::size_t, std::uint64_t>> table{
      {3, 29},  {4, 37},  {5, 41},  {6, 43},  {7, 47},   {8, 47},   {9, 53},   {10, 53},  {11, 53},  {12, 61},  {13, 73},  {14, 73},
      {15, 79}, {16, 79}, {17, 89}, {18, 89}, {19, 89},  {20, 101}, {21, 101}, {22, 109}, {23, 109}, {24, 109}, {25, 127}, {26, 127}};
  return table;
}

bool asymptotic_gate(std::size_t d) {
  if (d == 0) throw std::invalid_argument("asymptotic_gate: d must be positive");
  Int bound, three_d, two_d = Int(static_cast<unsigned long>(2 * d));
  mpz_pow_ui(bound.get_mpz_t(), two_d.get_mpz_t(), 6);
  bound *= 65;
  mpz_ui_pow_ui(three_d.get_mpz_t(), 3, d);
  if (d % 2 == 0) {
    Int x;
    mpz_ui_pow_ui(x.get_mpz_t(), 3, d / 2);
    return (x + 1) * (x + 1) > bound;
  }
  // (x + 1)^2 = 3^d + 1 + 2x with x = 3^(d/2) irrational: compare 2x with c = bound - 3^d - 1
  Int c = bound - three_d - 1;
  if (sgn(c) < 0) return true;
  return 4 * three_d > c * c;
}

}  // namespace modtors::oesterle
