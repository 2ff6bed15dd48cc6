#include <random>

#include "doctest.h"
#include "modtors/exact/binary_field.hpp"
#include "modtors/exact/gf2.hpp"
#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"

using namespace modtors;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> v;
  for (auto r : rows) {
    IntVector row;
    for (long x : r) row.emplace_back(x);
    v.push_back(row);
  }
  return IntMatrix::from_rows(v, v.empty() ? 0 : v[0].size());
}

}  // namespace

TEST_SUITE("exactalg") {
  TEST_CASE("rank_mod examples") {
    CHECK(rank_mod(IntMatrix::identity(2), 3) == 2);
    CHECK(rank_mod(IntMatrix(3, 4), 5) == 0);
    IntMatrix m = mat({{2, 4}, {1, 2}});
    CHECK(rank_mod(m, 2) == 1);
    CHECK(rank_mod(m, 2, RankPath::generic) == 1);
    CHECK(rank_mod(m, 3) == 1);
    CHECK_THROWS_AS(rank_mod(m, 4), std::invalid_argument);
  }

  TEST_CASE("bit-packed F2 elimination agrees with the generic path") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> dim(1, 64);
    for (int trial = 0; trial < 500; ++trial) {
      std::size_t r = dim(rng), c = dim(rng);
      IntMatrix m = random_matrix(rng, r, c, -3, 3);
      // Force some rank deficiency now and then.
      if (trial % 3 == 0 && r > 2)
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + m(1, j);
      REQUIRE(rank_mod(m, 2, RankPath::bitpacked) == rank_mod(m, 2, RankPath::generic));
    }
  }

  TEST_CASE("rank over Q bounds every modular rank") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix m = random_matrix(rng, 6, 7, -2, 2);
      if (trial % 2 == 0)
        for (std::size_t j = 0; j < 7; ++j) m(5, j) = 3 * m(0, j) - m(2, j);
      std::size_t rq = rank(m);
      for (std::uint64_t ell : {2, 3, 5, 7, 101}) CHECK(rq >= rank_mod(m, ell));
      CHECK(rq == rank_mod(m, (std::uint64_t{1} << 61) - 1));
    }
  }

  TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(RatMatrix::identity(3)).empty());
    CHECK(kernel_basis(RatMatrix(1, 3)).size() == 3);
    IntMatrix m = mat({{1, 1, 0}, {0, 0, 1}});
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == RatVector{Rat(-1), Rat(1), Rat(0)});
    CHECK(is_zero(to_rational(m) * k[0]));
  }

  TEST_CASE("kernel_basis on random matrices") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      IntMatrix m = random_matrix(rng, 4, 8, -5, 5);
      for (std::size_t j = 0; j < 8; ++j) m(3, j) = m(0, j) - 2 * m(1, j);
      auto k = kernel_basis(m);
      CHECK(k.size() == 8 - rank(m));
      for (const auto& v : k) CHECK(is_zero(to_rational(m) * v));
    }
  }

  TEST_CASE("integer_kernel is saturated") {
    // Q-kernel of [2 4 6] contains (-2,1,0); the Z-kernel basis has determinant-1 structure.
    IntMatrix m = mat({{2, 4, 6}});
    auto k = integer_kernel(m);
    REQUIRE(k.size() == 2);
    for (const auto& v : k) CHECK(is_zero(m * v));
    // (x,y,z) = (1,1,-1) is in the kernel and must be an integer combination of the basis.
    IntMatrix basis = IntMatrix::from_rows(k, 3);
    auto sol = solve(to_rational(basis.transpose()), RatVector{Rat(1), Rat(1), Rat(-1)});
    REQUIRE(sol);
    for (const auto& x : *sol) CHECK(x.get_den() == 1);
  }

  TEST_CASE("Hermite normal form") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix m = random_matrix(rng, 6, 5, -9, 9);
      for (std::size_t j = 0; j < 5; ++j) m(4, j) = 2 * m(0, j) + 3 * m(1, j);
      HermiteForm hf = hermite_form(m);
      CHECK(hf.transform * m == hf.h);
      CHECK(hf.h.rows() == rank(m));
      for (std::size_t i = 0; i < hf.h.rows(); ++i) {
        std::size_t pc = hf.pivots[i];
        CHECK(sgn(hf.h(i, pc)) > 0);
        for (std::size_t j = 0; j < pc; ++j) CHECK(sgn(hf.h(i, j)) == 0);
        for (std::size_t r = 0; r < i; ++r) {
          CHECK(sgn(hf.h(r, pc)) >= 0);
          CHECK(hf.h(r, pc) < hf.h(i, pc));
        }
      }
      // Every row of m is an integer combination of the rows of h.
      for (std::size_t i = 0; i < m.rows(); ++i) {
        auto c = solve(to_rational(hf.h.transpose()), to_rational(m.row(i)));
        REQUIRE(c);
        for (const auto& x : *c) CHECK(x.get_den() == 1);
      }
    }
  }

  TEST_CASE("modular Hermite form agrees with the plain one") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      IntMatrix m = random_matrix(rng, 9, 6, -7, 7);
      if (rank(m) < 6) continue;
      Int det = abs(determinant(m.submatrix({0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5})));
      if (sgn(det) == 0) continue;
      CHECK(hermite_form_modular(m, det) == hermite_form(m).h);
      CHECK(hermite_form_modular(m, det * 6) == hermite_form(m).h);
    }
    // an index-4 sublattice of Z^2
    IntMatrix m = mat({{2, 0}, {0, 2}, {2, 2}});
    CHECK(hermite_form_modular(m, Int(4)) == mat({{2, 0}, {0, 2}}));
  }

  TEST_CASE("selected integer kernel matches the plain one") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 30; ++trial) {
      IntMatrix m = random_matrix(rng, 4, 8, -6, 6);
      // repeat rows so that row selection matters
      std::vector<IntVector> rows;
      for (std::size_t i = 0; i < 4; ++i) rows.push_back(m.row(i));
      IntVector mix(8);
      for (std::size_t j = 0; j < 8; ++j) mix[j] = 3 * m(0, j) - 5 * m(2, j);
      rows.push_back(mix);
      IntMatrix big = IntMatrix::from_rows(rows, 8);
      auto a = integer_kernel_selected(big);
      auto b = integer_kernel(big);
      REQUIRE(a.size() == b.size());
      for (const auto& v : a) CHECK(is_zero(big * v));
      // same lattice: both Hermite forms agree
      if (!a.empty()) CHECK(hermite_form(IntMatrix::from_rows(a, 8)).h == hermite_form(IntMatrix::from_rows(b, 8)).h);
    }
    IntMatrix m = mat({{2, 4, 6}});
    auto k = integer_kernel_selected(m);
    CHECK(hermite_form(IntMatrix::from_rows(k, 3)).h == hermite_form(IntMatrix::from_rows(integer_kernel(m), 3)).h);
  }

  TEST_CASE("determinant, solve and inverse") {
    CHECK(determinant(mat({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m = random_matrix(rng, 5, 5, -4, 4);
      auto inv = inverse(to_rational(m));
      if (determinant(m) == 0) {
        CHECK(!inv);
        continue;
      }
      REQUIRE(inv);
      CHECK(to_rational(m) * *inv == RatMatrix::identity(5));
    }
    CHECK(!solve(to_rational(mat({{1, 1}, {1, 1}})), RatVector{Rat(1), Rat(2)}));
  }

  TEST_CASE("charpoly examples and Cayley-Hamilton") {
    CHECK(charpoly(IntMatrix::identity(2)) == IntPoly({Int(1), Int(-2), Int(1)}));
    CHECK(charpoly(IntMatrix(3, 3)) == IntPoly::monomial(Int(1), 3));
    CHECK(charpoly(mat({{0, 1}, {1, 0}})) == IntPoly({Int(-1), Int(0), Int(1)}));
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m = random_matrix(rng, 7, 7, -20, 20);
      IntPoly f = charpoly(m);
      CHECK(f.degree() == 7);
      CHECK(f.leading() == 1);
      CHECK(f.coeff(0) == determinant(-m));
      CHECK(evaluate(f, m).is_zero());
    }
  }

  TEST_CASE("squarefree decomposition") {
    RatPoly x({Rat(0), Rat(1)});
    RatPoly a = x - RatPoly::constant(Rat(1));
    RatPoly b = x + RatPoly::constant(Rat(2));
    RatPoly f = x * a * a * b * b * b;
    auto s = squarefree_decomposition(f);
    REQUIRE(s.size() == 3);
    CHECK(s[0] == x);
    CHECK(s[1] == a);
    CHECK(s[2] == b);
    auto s2 = squarefree_decomposition(a * a);
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].degree() == 0);
    CHECK(s2[1] == a);
  }

  TEST_CASE("prime fields") {
    CHECK(is_prime(2));
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK(!is_prime(1));
    CHECK(!is_prime(561));
    PrimeFieldElt a(5, 7), b(-3, 7);
    CHECK(b.value() == 4);
    CHECK((a * b).value() == 6);
    CHECK((a * a.inverse()).value() == 1);
    CHECK_THROWS_AS(PrimeFieldElt(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(a + PrimeFieldElt(1, 5), std::invalid_argument);
  }

  TEST_CASE("binary fields") {
    for (int k = 1; k <= 8; ++k) {
      std::uint32_t mod = default_binary_modulus(k);
      CHECK(is_irreducible_gf2(mod));
      std::uint32_t q = 1u << k;
      for (std::uint32_t x = 0; x < q; ++x) {
        BinaryFieldElt a(x, mod);
        CHECK(a.pow(q) == a);
      }
    }
    CHECK(is_irreducible_gf2(0b1100001));  // x^6 + x^5 + 1
    CHECK(!is_irreducible_gf2(0b1010001)); // x^6 + x^4 + 1 = (x^3 + x^2 + 1)^2
    std::uint32_t mod6 = default_binary_modulus(6);
    bool generator = false;
    for (std::uint32_t x = 1; x < 64; ++x) {
      auto o = BinaryFieldElt(x, mod6).order();
      CHECK(63 % o == 0);
      generator = generator || o == 63;
    }
    CHECK(generator);
    // Frobenius is a field automorphism of order 6.
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
      BinaryFieldElt a(rng() % 64, mod6), b(rng() % 64, mod6), c(rng() % 64, mod6);
      CHECK((a + b).square() == a.square() + b.square());
      CHECK((a * b).square() == a.square() * b.square());
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
    }
    BinaryFieldElt g(0b10, mod6);
    BinaryFieldElt y = g;
    int frob_order = 0;
    do {
      y = y.square();
      ++frob_order;
    } while (!(y == g));
    CHECK(frob_order == 6);
    CHECK_THROWS_AS(BinaryFieldElt(1, 0b1010001), std::invalid_argument);
  }

  TEST_CASE("bit matrices") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
      IntMatrix a = random_matrix(rng, 9, 7, 0, 1), b = random_matrix(rng, 7, 5, 0, 1);
      CHECK(gf2::BitMatrix::from_int(a) * gf2::BitMatrix::from_int(b) == gf2::BitMatrix::from_int(a * b));
      auto bm = gf2::BitMatrix::from_int(a);
      auto ker = bm.left_kernel();
      CHECK(ker.size() == 9 - bm.rank());
      for (const auto& v : ker) {
        gf2::BitVector acc(7);
        for (std::size_t i = 0; i < 9; ++i)
          if (v.get(i)) acc ^= bm.row(i);
        CHECK(acc.is_zero());
      }
    }
  }
}
