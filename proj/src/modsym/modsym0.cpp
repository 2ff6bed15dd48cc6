#include "modtors/modsym/modsym0.hpp"

#include <stdexcept>
#include <string>

#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"

namespace modtors::modsym0 {

namespace {

std::uint64_t red(std::int64_t x, std::uint64_t p) { return static_cast<std::uint64_t>(mod_floor(x, static_cast<std::int64_t>(p))); }

int legendre_minus1(std::uint64_t p) { return p % 4 == 1 ? 1 : -1; }
int legendre_minus3(std::uint64_t p) { return p % 3 == 1 ? 1 : -1; }

}  // namespace

std::size_t genus_x0(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("genus_x0: level must be prime");
  // 12 g = 12 + (p + 1) - 3 nu2 - 4 nu3 - 6 nu_inf
  long nu2 = p == 2 ? 1 : (p == 3 ? 0 : 1 + legendre_minus1(p));
  long nu3 = p == 3 ? 1 : (p == 2 ? 0 : 1 + legendre_minus3(p));
  long twelve_g = 12 + static_cast<long>(p + 1) - 3 * nu2 - 4 * nu3 - 12;
  return static_cast<std::size_t>(twelve_g / 12);
}

std::int64_t lambda_intersection(std::uint64_t p, std::uint64_t k, std::uint64_t k2) {
  k %= p;
  k2 %= p;
  if (k == 0 || k2 == 0) throw std::invalid_argument("lambda_intersection: lambda(0) is not cuspidal");
  std::int64_t ks = static_cast<std::int64_t>(mulmod(p - 1, invmod(k, p), p));
  std::int64_t k2s = static_cast<std::int64_t>(mulmod(p - 1, invmod(k2, p), p));
  std::int64_t a = static_cast<std::int64_t>(k), b = static_cast<std::int64_t>(k2);
  if (b == a || b == ks) return 0;
  auto h2 = [](std::int64_t x) -> std::int64_t { return x > 0 ? 2 : (x == 0 ? 1 : 0); };
  std::int64_t twice = -h2(b - a) + h2(b - ks) + h2(k2s - a) - h2(k2s - ks);
  if (twice % 2 != 0) throw std::logic_error("lambda_intersection: half-integers did not cancel");
  return twice / 2;
}

Gamma0Space::Gamma0Space(std::uint64_t p)
    : p_(p),
      inv_([p] {
        if (!is_prime(p)) throw std::invalid_argument("Gamma0Space: level " + std::to_string(p) + " is not prime");
        std::vector<std::uint64_t> inv(p, 0);
        for (std::uint64_t x = 1; x < p; ++x) inv[x] = invmod(x, p);
        return inv;
      }()),
      quotient_(p + 1,
                [this](std::size_t i) {
                  ManinIndex m = manin_index(i);
                  return symbol_index(static_cast<std::int64_t>(m.d), -static_cast<std::int64_t>(m.c));
                },
                [this](std::size_t i) {
                  ManinIndex m = manin_index(i);
                  return symbol_index(static_cast<std::int64_t>(m.d), -static_cast<std::int64_t>(m.c + m.d));
                }) {
  boundary_ = IntMatrix(2, quotient_.rank());
  for (std::size_t j = 0; j < quotient_.rank(); ++j) {
    ManinIndex m = manin_index(quotient_.basis_symbols()[j]);
    // symbol (c:d) is {b/d, a/c}; boundary = [a/c] - [b/d]; a cusp x/y is oo iff p | y.
    boundary_(m.c == 0 ? 0 : 1, j) += 1;
    boundary_(m.d == 0 ? 0 : 1, j) -= 1;
  }
  cusp_ = CuspidalLattice(boundary_);
  basis_gram_ = IntMatrix(quotient_.rank(), quotient_.rank());
  for (std::size_t i = 0; i < quotient_.rank(); ++i) {
    ManinIndex a = manin_index(quotient_.basis_symbols()[i]);
    if (a.d == 0 || a.c == 0) continue;
    for (std::size_t j = 0; j < quotient_.rank(); ++j) {
      ManinIndex b = manin_index(quotient_.basis_symbols()[j]);
      if (b.d == 0 || b.c == 0) continue;
      basis_gram_(i, j) = lambda_intersection(p_, a.c, b.c);
    }
  }
}

std::size_t Gamma0Space::symbol_index(std::int64_t c, std::int64_t d) const {
  std::uint64_t cc = red(c, p_), dd = red(d, p_);
  if (dd != 0) return static_cast<std::size_t>(mulmod(cc, inv_[dd], p_));
  if (cc != 0) return static_cast<std::size_t>(p_);
  throw std::invalid_argument("Gamma0Space::symbol_index: (0,0) is not a point of P^1");
}

ManinIndex Gamma0Space::manin_index(std::size_t i) const {
  if (i > p_) throw std::out_of_range("Gamma0Space::manin_index");
  if (i == p_) return {1, 0};
  return {i, 1};
}

IntVector Gamma0Space::symbol_vector(std::int64_t c, std::int64_t d) const {
  IntVector v(dimension(), Int(0));
  for (auto [j, a] : quotient_.symbol(symbol_index(c, d))) v[j] += a;
  return v;
}

IntVector Gamma0Space::path_symbol(const Fraction& from, const Fraction& to) const {
  auto from_zero = [this](const Fraction& x) {
    IntVector v(dimension(), Int(0));
    auto conv = convergents(x);
    for (std::size_t t = 1; t < conv.size(); ++t) {
      std::int64_t s = (t % 2 == 1) ? 1 : -1;
      for (auto [j, a] : quotient_.symbol(symbol_index(s * conv[t].second, conv[t - 1].second))) v[j] += a;
    }
    return v;
  };
  IntVector a = from_zero(from), b = from_zero(to);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
  return b;
}

IntMatrix Gamma0Space::hecke_matrix(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("hecke_matrix: n must be positive");
  const auto hm = heilbronn_merel(n);
  const std::size_t dim = dimension();
  IntMatrix t(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    ManinIndex m = manin_index(quotient_.basis_symbols()[j]);
    std::int64_t c = static_cast<std::int64_t>(m.c), d = static_cast<std::int64_t>(m.d);
    SparseVec acc;
    for (const auto& h : hm) {
      std::uint64_t c2 = red(c * h.a + d * h.c, p_), d2 = red(c * h.b + d * h.d, p_);
      if (c2 == 0 && d2 == 0) continue;
      sparse_axpy(acc, 1, quotient_.symbol(symbol_index(static_cast<std::int64_t>(c2), static_cast<std::int64_t>(d2))));
    }
    for (auto [i, a] : acc) t(i, j) = a;
  }
  return t;
}

IntVector Gamma0Space::merel_Ire(std::uint64_t r) const {
  if (r == 0 || r >= p_) throw std::invalid_argument("merel_Ire: need 1 <= r < p");
  const std::int64_t rr = static_cast<std::int64_t>(r);
  IntVector v(dimension(), Int(0));
  for (std::int64_t a = 1; a <= rr; ++a)
    for (std::int64_t d = 2; d <= rr; ++d)
      for (std::int64_t c = 1; c < d; ++c) {
        std::int64_t bc = a * d - rr;
        if (bc < 0 || bc % c != 0) continue;
        std::int64_t b = bc / c;
        if (b >= a) continue;
        for (auto [j, x] : quotient_.symbol(symbol_index(c, d))) v[j] -= x;
      }
  return v;
}

RatVector Gamma0Space::cuspidal_winding() const {
  const std::size_t g2 = cuspidal_rank();
  if (g2 == 0) return {};
  auto target = cusp_.coordinates(merel_Ire(2));
  if (!target) throw std::logic_error("winding_element: merel_Ire(2) is not cuspidal");
  RatMatrix a = to_rational(cuspidal_hecke(2));
  for (std::size_t i = 0; i < g2; ++i) a(i, i) -= 3;
  if (rank(a) != g2) throw std::logic_error("winding_element: T_2 - 3 is singular on the cuspidal space");
  auto x = solve(a, to_rational(*target));
  if (!x) throw std::logic_error("winding_element: no solution");
  return *x;
}

RatVector Gamma0Space::winding_element() const {
  if (cuspidal_rank() == 0) return RatVector(dimension(), Rat(0));
  return cusp_.lift(cuspidal_winding());
}

Rat Gamma0Space::pairing(const RatVector& v, const RatVector& w) const {
  if (!is_cuspidal(v) || !is_cuspidal(w)) throw std::invalid_argument("pairing: both vectors must be cuspidal");
  RatVector gw = to_rational(basis_gram_) * w;
  Rat s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * gw[i];
  return s;
}

Int Gamma0Space::pairing(const IntVector& v, const IntVector& w) const {
  Rat r = pairing(to_rational(v), to_rational(w));
  if (r.get_den() != 1) throw std::logic_error("pairing: integral vectors gave a non-integral pairing");
  return r.get_num();
}

IntMatrix Gamma0Space::gram_matrix() const {
  IntMatrix k = cusp_.basis_matrix();
  return k.transpose() * basis_gram_ * k;
}

}  // namespace modtors::modsym0
