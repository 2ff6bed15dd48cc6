#include <numeric>

#include "doctest.h"
#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"
#include "modtors/modsym/modsym0.hpp"
#include "modtors/oesterle/oesterle.hpp"

using namespace modtors;
using namespace modtors::oesterle;

TEST_SUITE("oesterle") {
  TEST_CASE("H function") {
    CHECK(H_fn(Rat(5)) == 1);
    CHECK(H_fn(Rat(0)) == Rat(1, 2));
    CHECK(H_fn(Rat(-2)) == 0);
    for (int n = -5; n <= 5; ++n) CHECK(H_fn(Rat(n, 3)) + H_fn(Rat(-n, 3)) == 1);
  }

  TEST_CASE("v_r counts") {
    for (std::int64_t i = 0; i < 31; ++i) CHECK(v_r(31, 1, i) == 0);
    CHECK(v_r(31, 2, 1) == 1);
    for (std::int64_t i = 2; i < 31; ++i) CHECK(v_r(31, 2, i) == 0);
    CHECK(v_r(31, 2, 32) == 1);
    // divisor-sum relation for r < p
    for (std::uint64_t r = 1; r < 10; ++r)
      for (std::int64_t k = 0; k < 31; ++k) {
        std::uint64_t sum = 0;
        for (std::uint64_t s = 1; s <= r; ++s)
          if (r % s == 0) sum += v_r_prime(31, s, k);
        CHECK(v_r(31, r, k) == sum);
      }
  }

  TEST_CASE("divisor-sum closed forms equal the modular-symbol pairing") {
    for (std::uint64_t p : {29, 31, 37, 41}) {
      modsym0::Gamma0Space s(p);
      for (std::uint64_t r = 1; r <= 8; ++r) {
        auto ire = ire_vector(s, r);
        auto irp = ire_prime_vector(s, r);
        for (std::uint64_t k = 1; k < p; ++k) {
          auto lam = s.lambda_symbol(static_cast<std::int64_t>(k));
          CHECK(s.pairing(ire, lam) == ire_dot_lambda(p, r, k));
          CHECK(s.pairing(irp, lam) == ire_prime_dot_lambda(p, r, k));
          CHECK(ire_dot_lambda(p, r, k) == -ire_dot_lambda(p, r, k_star(p, k)));
        }
      }
    }
  }

  TEST_CASE("coprime-pair and path closed forms equal the modular-symbol pairing") {
    for (std::uint64_t p : {29, 31, 37, 41}) {
      modsym0::Gamma0Space s(p);
      const std::int64_t pi = static_cast<std::int64_t>(p);
      for (std::uint64_t r = 1; r <= 8; ++r) {
        auto irp = ire_prime_vector(s, r);
        const std::int64_t ri = static_cast<std::int64_t>(r);
        for (std::int64_t c = 2; c * ri < pi; ++c)
          for (std::int64_t x = 1; x < c; ++x) {
            if (std::gcd(c, x) != 1) continue;
            auto q = make_query(p, r, c, x);
            CHECK(q.u >= 0);
            CHECK(q.u < q.d);
            CHECK(q.u_star >= 0);
            CHECK(q.u_star < q.c);
            CHECK(s.pairing(irp, s.lambda_symbol(static_cast<std::int64_t>(q.k))) == ire_prime_dot_lambda_cd(q));
            auto path = s.path_symbol(Fraction{0, 1}, Fraction{x, c});
            CHECK(s.pairing(irp, path) == ire_prime_dot_path(p, r, x, c));
          }
      }
    }
  }

  TEST_CASE("closed-form edge cases") {
    for (std::uint64_t k = 1; k < 29; ++k) CHECK(ire_dot_lambda(29, 1, k) == 0);
    CHECK(ire_prime_dot_path(11, 1, 1, 3) == 0);
    CHECK_THROWS_AS(ire_dot_lambda(29, 29, 3), std::invalid_argument);
    CHECK_THROWS_AS(ire_prime_dot_path(29, 10, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_query(29, 5, 6, 1), std::invalid_argument);
    auto q = make_query(29, 1, 5, 1);
    CHECK(q.u == 0);
    CHECK(q.a == 1);
    CHECK(q.b == 0);
  }

  TEST_CASE("T'_r and L_r identities") {
    modsym0::Gamma0Space s(29);
    const std::size_t n = s.dimension();
    CHECK(t_prime(s, 1) == s.hecke_matrix(1));
    IntMatrix i2 = s.hecke_matrix(2) - IntMatrix::identity(n) * Int(3);
    CHECK(l_element(s, 1) == i2);
    for (std::uint64_t r = 1; 2 * r < 29; ++r) {
      IntMatrix lhs = i2 * t_prime(s, r);
      IntMatrix rhs = r % 2 == 1 ? l_element(s, r) : l_element(s, r) - l_element(s, r / 2);
      CHECK(lhs == rhs);
    }
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(moebius(30) == -1);
  }

  TEST_CASE("eps table") {
    EpsTable eps(29);
    for (auto a : eps.units()) CHECK(eps(static_cast<std::int64_t>(a)) + eps(static_cast<std::int64_t>(29 - a)) == 1);
    CHECK(eps(1) == 0);
    CHECK(eps(14) == 0);
    CHECK(eps(15) == 1);
    CHECK(eps(-1) == 1);
    EpsTable e9(9);
    CHECK(e9.units().size() == 6);
    CHECK_THROWS_AS(e9(3), std::invalid_argument);
    CHECK_THROWS_AS(EpsTable(10), std::invalid_argument);
  }

  TEST_CASE("R matrix entries and rank checks") {
    IntMatrix r = r_matrix(3, 29, 5);
    EpsTable eps(29);
    for (std::size_t i = 1; i <= 3; ++i)
      for (std::size_t j = 0; j < eps.units().size(); ++j) {
        const std::uint64_t a = eps.units()[j];
        const std::int64_t ra = static_cast<std::int64_t>(i * a);
        const std::int64_t rua = static_cast<std::int64_t>(mulmod(i * 5 % 29, invmod(a, 29), 29));
        CHECK(r(i - 1, j) == eps(ra) - eps(rua));
      }
    CHECK(check_Md(3, 29));
    CHECK(check_Md(26, 127));
    CHECK_FALSE(check_Md(1, 3));
    CHECK(r_matrix(1, 3, 1).is_zero());
    CHECK_THROWS_AS(check_Md(3, 30), std::invalid_argument);
  }

  TEST_CASE("R matrix entries are intersection numbers of L_r e with {0, a/M}") {
    const std::uint64_t m = 29;
    EpsTable eps(m);
    for (std::uint64_t p : {59, 233}) {
      modsym0::Gamma0Space s(p);
      const std::uint64_t u = invmod(p % m, m);
      for (std::uint64_t r = 1; 2 * r * m < p; ++r) {
        IntVector lre = ire_prime_vector(s, 2 * r);
        IntVector irp = ire_prime_vector(s, r);
        for (std::size_t i = 0; i < lre.size(); ++i) lre[i] -= 2 * irp[i];
        IntMatrix rm = r_matrix(r, m, u);
        for (std::size_t j = 0; j < eps.units().size(); ++j) {
          const std::int64_t a = static_cast<std::int64_t>(eps.units()[j]);
          auto path = s.path_symbol(Fraction{0, 1}, Fraction{a, static_cast<std::int64_t>(m)});
          CHECK(s.pairing(lre, path) == rm(r - 1, j));
        }
      }
    }
  }

  TEST_CASE("asymptotic gate") {
    CHECK(asymptotic_gate(26));
    CHECK_FALSE(asymptotic_gate(25));
    CHECK(asymptotic_gate(100));
    for (std::size_t d = 26; d <= 60; ++d) CHECK(asymptotic_gate(d));
    CHECK_FALSE(asymptotic_gate(1));
  }

  TEST_CASE("M_d search returns a passing modulus") {
    auto m3 = find_Md(3);
    REQUIRE(m3.has_value());
    CHECK(check_Md(3, *m3));
    CHECK(*m3 <= 29);
    CHECK(md_table().size() == 24);
  }
}
