#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"
#include "modtors/modsym/modsym0.hpp"

using namespace modtors;
using modtors::modsym0::Gamma0Space;

namespace {

// Geometric oracle: chord C_k joins the p-th roots of unity at angles k and k* (k k* = -1 mod p).
int chord_intersection(std::uint64_t p, std::uint64_t k, std::uint64_t k2) {
  auto pt = [p](std::uint64_t j) { return std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(p)); };
  auto star = [p](std::uint64_t j) { return mulmod(p - 1, invmod(j, p), p); };
  using C = std::complex<double>;
  auto cross = [](C a, C b) { return a.real() * b.imag() - a.imag() * b.real(); };
  C a0 = pt(k2), a1 = pt(star(k2)), b0 = pt(k), b1 = pt(star(k));
  std::uint64_t ends[] = {k2, star(k2), k, star(k)};
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j)
      if (ends[i] == ends[j]) return 0;
  double s1 = cross(a1 - a0, b0 - a0), s2 = cross(a1 - a0, b1 - a0);
  double s3 = cross(b1 - b0, a0 - b0), s4 = cross(b1 - b0, a1 - b0);
  if (s1 * s2 >= 0 || s3 * s4 >= 0) return 0;
  double c = cross(a1 - a0, b1 - b0);
  return c > 0 ? 1 : -1;
}

std::uint64_t sigma1(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) s += d;
  return s;
}

IntMatrix sub_scalar(IntMatrix m, long c) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) -= c;
  return m;
}

}  // namespace

TEST_SUITE("modsym0") {
  TEST_CASE("cuspidal rank is twice the genus") {
    CHECK(modsym0::genus_x0(11) == 1);
    CHECK(modsym0::genus_x0(37) == 2);
    CHECK(modsym0::genus_x0(389) == 32);
    CHECK(modsym0::genus_x0(13) == 0);
    for (std::uint64_t p : primes_up_to(200)) {
      Gamma0Space s(p);
      CHECK(s.cuspidal_rank() == 2 * modsym0::genus_x0(p));
      CHECK(s.dimension() == s.cuspidal_rank() + 1);
    }
  }

  TEST_CASE("non-prime level is rejected") { CHECK_THROWS_AS(Gamma0Space(15), std::invalid_argument); }

  TEST_CASE("every two- and three-term relation vanishes in the quotient") {
    for (std::uint64_t p : {2ULL, 3ULL, 11ULL, 37ULL, 97ULL}) {
      Gamma0Space s(p);
      IntMatrix rel = s.quotient().relation_matrix();
      for (std::size_t r = 0; r < rel.rows(); ++r) {
        IntVector acc(s.dimension(), Int(0));
        for (std::size_t i = 0; i < rel.cols(); ++i)
          if (sgn(rel(r, i)) != 0)
            for (auto [j, a] : s.quotient().symbol(i)) acc[j] += rel(r, i) * a;
        CHECK(is_zero(acc));
      }
    }
  }

  TEST_CASE("lambda(k) + lambda(k*) = 0") {
    for (std::uint64_t p : primes_up_to(61)) {
      Gamma0Space s(p);
      for (std::uint64_t k = 1; k < p; ++k) {
        std::uint64_t ks = mulmod(p - 1, invmod(k, p), p);
        IntVector a = s.lambda_symbol(static_cast<std::int64_t>(k)), b = s.lambda_symbol(static_cast<std::int64_t>(ks));
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        CHECK(is_zero(a));
      }
    }
  }

  TEST_CASE("paths from continued fractions") {
    Gamma0Space s(43);
    CHECK(s.path_symbol(Fraction::make(0, 1), Fraction::infinity()) == s.lambda_symbol(0));
    CHECK(is_zero(s.path_symbol(Fraction::make(3, 7), Fraction::make(3, 7))));
    for (std::int64_t k = 1; k < 43; ++k) CHECK(s.path_symbol(Fraction::make(0, 1), Fraction::make(1, k)) == s.lambda_symbol(k));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-200, 200), den(1, 200);
    for (int trial = 0; trial < 200; ++trial) {
      Fraction x = Fraction::make(num(rng), den(rng)), y = Fraction::make(num(rng), den(rng)), z = Fraction::make(num(rng), den(rng));
      IntVector a = s.path_symbol(x, y), b = s.path_symbol(y, z), c = s.path_symbol(x, z);
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      CHECK(a == c);
      // the boundary of {x, y} is [y] - [x]
      IntVector d = s.boundary(s.path_symbol(x, y));
      auto cusp_row = [](const Fraction& f) { return (f.den % 43 == 0) ? 0 : 1; };
      IntVector expect(2, Int(0));
      expect[cusp_row(y)] += 1;
      expect[cusp_row(x)] -= 1;
      CHECK(d == expect);
    }
  }

  TEST_CASE("Hecke operators commute and satisfy the multiplicative relations") {
    for (std::uint64_t p : {11ULL, 37ULL, 43ULL, 67ULL}) {
      Gamma0Space s(p);
      IntMatrix t2 = s.hecke_matrix(2), t3 = s.hecke_matrix(3), t4 = s.hecke_matrix(4), t6 = s.hecke_matrix(6);
      CHECK(t2 * t3 == t3 * t2);
      CHECK(t6 == t2 * t3);
      CHECK(t4 == sub_scalar(t2 * t2, 2));
      IntMatrix t9 = s.hecke_matrix(9);
      CHECK(t9 == sub_scalar(t3 * t3, 3));
    }
  }

  TEST_CASE("boundary map intertwines T_n with sigma_1(n)") {
    for (std::uint64_t p : {11ULL, 31ULL, 53ULL}) {
      Gamma0Space s(p);
      for (std::uint64_t n : {2ULL, 3ULL, 4ULL, 5ULL, 6ULL, 7ULL, 12ULL}) {
        if (n % p == 0) continue;
        IntMatrix lhs = s.boundary_matrix() * s.hecke_matrix(n);
        IntMatrix rhs = s.boundary_matrix();
        for (std::size_t i = 0; i < rhs.rows(); ++i)
          for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) *= static_cast<long>(sigma1(n));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("Hecke eigenvalues at level 11 and 37") {
    // 11a: a_2 = -2, a_3 = -1, a_5 = 1, a_7 = -2
    Gamma0Space s11(11);
    CHECK(s11.cuspidal_hecke(2) == IntMatrix::identity(2) * Int(-2));
    CHECK(s11.cuspidal_hecke(3) == IntMatrix::identity(2) * Int(-1));
    CHECK(s11.cuspidal_hecke(5) == IntMatrix::identity(2));
    CHECK(s11.cuspidal_hecke(7) == IntMatrix::identity(2) * Int(-2));
    // 37a has a_2 = -2, 37b has a_2 = 0
    Gamma0Space s37(37);
    IntPoly cp = charpoly(s37.cuspidal_hecke(2));
    IntPoly expect({Int(0), Int(0), Int(4), Int(4), Int(1)});
    CHECK(cp == expect);
  }

  TEST_CASE("H-formula pairing matches the chord oracle") {
    for (std::uint64_t p : primes_up_to(31)) {
      if (p < 5) continue;
      Gamma0Space s(p);
      for (std::uint64_t k = 1; k < p; ++k)
        for (std::uint64_t k2 = 1; k2 < p; ++k2) {
          int chord = chord_intersection(p, k, k2);
          CHECK(modsym0::lambda_intersection(p, k, k2) == chord);
          // bilinear extension through basis coordinates gives the same number
          Int viaBasis = s.pairing(s.lambda_symbol(static_cast<std::int64_t>(k)), s.lambda_symbol(static_cast<std::int64_t>(k2)));
          CHECK(viaBasis == chord);
        }
    }
  }

  TEST_CASE("pairing is alternating and unimodular") {
    for (std::uint64_t p : primes_up_to(110)) {
      Gamma0Space s(p);
      if (s.cuspidal_rank() == 0) continue;
      IntMatrix g = s.gram_matrix();
      CHECK(g.transpose() == g * Int(-1));
      Int det = determinant(g);
      CHECK(abs(det) == 1);
    }
    Gamma0Space s11(11);
    CHECK(determinant(s11.gram_matrix()) == 1);
    IntVector relzero = s11.lambda_symbol(0);
    CHECK_THROWS_AS(s11.pairing(relzero, relzero), std::invalid_argument);
  }

  TEST_CASE("winding element") {
    for (std::uint64_t p : {11ULL, 37ULL, 43ULL, 61ULL, 97ULL, 101ULL}) {
      Gamma0Space s(p);
      RatVector e = s.winding_element();
      CHECK(s.is_cuspidal(e));
      // {0, oo} + e lies in the Eisenstein part, killed by T_l - l - 1
      RatVector v = e;
      IntVector l0 = s.lambda_symbol(0);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rat(l0[i]);
      for (std::uint64_t l : {2ULL, 3ULL, 5ULL}) CHECK(is_zero(to_rational(sub_scalar(s.hecke_matrix(l), static_cast<long>(l + 1))) * v));
      // denominator is the order of the cuspidal subgroup, num((p - 1) / 12)
      Int den = 1;
      for (const auto& x : e) den = lcm(den, Int(x.get_den()));
      Rat n(static_cast<long>(p - 1), 12);
      n.canonicalize();
      CHECK(den == n.get_num());
    }
  }

  TEST_CASE("Merel's I_r relation to the winding element") {
    for (std::uint64_t p : {11ULL, 37ULL, 43ULL, 61ULL}) {
      Gamma0Space s(p);
      RatVector e = s.winding_element();
      for (std::uint64_t r = 1; r < std::min<std::uint64_t>(p, 12); ++r) {
        IntVector ir = s.merel_Ire(r);
        CHECK(s.is_cuspidal(to_rational(ir)));
        RatVector lhs = to_rational(sub_scalar(s.hecke_matrix(r), static_cast<long>(sigma1(r)))) * e;
        CHECK(lhs == to_rational(ir));
      }
    }
  }

  TEST_CASE("small Merel sums by brute force") {
    Gamma0Space s(11);
    CHECK(is_zero(s.merel_Ire(1)));
    IntVector two = s.lambda_symbol(static_cast<std::int64_t>(invmod(2, 11)));
    for (auto& x : two) x = -x;
    CHECK(s.merel_Ire(2) == two);
    // independent enumeration of a > b >= 0, d > c > 0, ad - bc = 3 over a generous box
    IntVector expect(s.dimension(), Int(0));
    for (std::int64_t a = 0; a < 10; ++a)
      for (std::int64_t b = 0; b < a; ++b)
        for (std::int64_t d = 0; d < 10; ++d)
          for (std::int64_t c = 1; c < d; ++c)
            if (a * d - b * c == 3) {
              IntVector l = s.lambda_symbol(static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(c), invmod(static_cast<std::uint64_t>(d), 11), 11)));
              for (std::size_t i = 0; i < l.size(); ++i) expect[i] -= l[i];
            }
    CHECK(s.merel_Ire(3) == expect);
    CHECK_THROWS_AS(s.merel_Ire(11), std::invalid_argument);
  }

  TEST_CASE("Merel consistency on the listed levels") {
    for (std::uint64_t p : {17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 67ULL}) {
      Gamma0Space s(p);
      RatVector e = s.winding_element();
      for (std::uint64_t r = 1; r <= 10; ++r) {
        RatVector lhs = to_rational(sub_scalar(s.hecke_matrix(r), static_cast<long>(sigma1(r)))) * e;
        CHECK(lhs == to_rational(s.merel_Ire(r)));
      }
      for (auto& x : e) CHECK(Rat(x * Rat(static_cast<long>(p - 1))).get_den() == 1);
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) CHECK(is_zero(Gamma0Space(p).winding_element()));
    CHECK(!is_zero(Gamma0Space(11).winding_element()));
  }

  TEST_CASE("T_m and T_n commute for m, n <= 12") {
    Gamma0Space s(29);
    std::vector<IntMatrix> t;
    for (std::uint64_t n = 1; n <= 12; ++n) t.push_back(s.hecke_matrix(n));
    CHECK(t[0] == IntMatrix::identity(s.dimension()));
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = i + 1; j < t.size(); ++j) CHECK(t[i] * t[j] == t[j] * t[i]);
  }
}
