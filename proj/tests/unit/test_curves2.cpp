#include <random>
#include <stdexcept>

#include "doctest.h"
#include "modtors/curves2/weierstrass.hpp"
#include "modtors/curves2/x1_73.hpp"

using namespace modtors;
using namespace modtors::curves2;

namespace {

constexpr std::uint32_t kMod6a = 0b1000011;  // x^6 + x + 1
constexpr std::uint32_t kMod6b = 0b1100001;  // x^6 + x^5 + 1

F2k el(std::uint32_t bits, std::uint32_t m) { return F2k(bits, m); }

std::uint64_t isqrt_ceil_2(std::uint64_t q) {
  std::uint64_t s = 0;
  while (s * s < 4 * q) ++s;
  return s;
}

}  // namespace

TEST_SUITE("curves2") {
  TEST_CASE("j-invariant and discriminant") {
    const std::uint32_t m = kMod6a;
    CHECK(tate_discriminant(el(1, m), el(0, m)) == el(1, m));
    CHECK(j_invariant(el(1, m), el(0, m)) == el(1, m));
    for (std::uint32_t b = 0; b < 64; ++b)
      for (std::uint32_t c = 0; c < 64; ++c) {
        F2k bb = el(b, m), cc = el(c, m);
        F2k delta = tate_discriminant(bb, cc);
        CHECK(delta == Curve::tate(bb, cc).discriminant());
        if (delta.is_zero()) {
          CHECK_THROWS_AS(j_invariant(bb, cc), std::domain_error);
          continue;
        }
        CHECK(j_invariant(bb, cc).is_zero() == (c == 1));
      }
  }

  TEST_CASE("group law") {
    std::mt19937 rng(3);
    for (std::uint32_t m : {0b111u, 0b1011u, 0b10011u, kMod6a}) {
      int tested = 0;
      for (std::uint32_t b = 1; b < 64 && tested < 4; b += 5) {
        Curve e = Curve::tate(el(b % (1u << gf2_poly_degree(m)), m), el(3 % (1u << gf2_poly_degree(m)), m));
        if (!e.is_smooth()) continue;
        ++tested;
        auto pts = e.points();
        std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
        for (const auto& p : pts) {
          CHECK(e.add(p, Point::at_infinity()) == p);
          CHECK(e.add(p, e.negate(p)).infinity);
          CHECK(e.contains(e.add(p, p)));
        }
        for (int i = 0; i < 200; ++i) {
          Point a = pts[pick(rng)], b2 = pts[pick(rng)], c = pts[pick(rng)];
          CHECK(e.add(e.add(a, b2), c) == e.add(a, e.add(b2, c)));
        }
        for (const auto& p : pts) {
          auto o = e.order(p, pts.size());
          REQUIRE(o);
          CHECK(pts.size() % *o == 0);
          CHECK(e.multiply(static_cast<std::int64_t>(pts.size()), p).infinity);
        }
      }
      CHECK(tested > 0);
    }
  }

  TEST_CASE("Hasse bound") {
    for (int d = 1; d <= 3; ++d)
      for (auto n : group_orders(default_binary_modulus(d))) {
        std::int64_t q = 1 << d;
        std::int64_t a = static_cast<std::int64_t>(n) - q - 1;
        CHECK(a * a <= 4 * q);
      }
    for (int d = 4; d <= 6; ++d) {
      std::uint32_t m = default_binary_modulus(d);
      std::uint32_t q = 1u << d;
      for (std::uint32_t b = 0; b < q; ++b)
        for (std::uint32_t c = 0; c < q; ++c) {
          Curve e = Curve::tate(el(b, m), el(c, m));
          if (!e.is_smooth()) continue;
          std::int64_t a = static_cast<std::int64_t>(e.count_points()) - q - 1;
          CHECK(a * a <= 4 * static_cast<std::int64_t>(q));
        }
    }
    CHECK(hasse_upper(64) == 64 + 1 + isqrt_ceil_2(64));
  }

  TEST_CASE("Tate normalization") {
    std::mt19937 rng(11);
    const std::uint32_t m = kMod6a;
    std::uniform_int_distribution<std::uint32_t> any(0, 63), nonzero(1, 63);
    int normalized = 0;
    for (std::uint32_t b = 1; b < 64; ++b)
      for (std::uint32_t c = 0; c < 64; c += 7) {
        Curve e = Curve::tate(el(b, m), el(c, m));
        if (!e.is_smooth()) continue;
        Point o = Point::affine(el(0, m), el(0, m));
        auto ord = e.order(o, hasse_upper(64));
        REQUIRE(ord);
        if (*ord <= 3) {
          CHECK_THROWS_AS(tate_normalize(e, o), std::invalid_argument);
          continue;
        }
        ++normalized;
        CHECK(tate_normalize(e, o) == std::make_pair(el(b, m), el(c, m)));
        for (int trial = 0; trial < 3; ++trial) {
          Substitution sub{el(nonzero(rng), m), el(any(rng), m), el(any(rng), m), el(any(rng), m)};
          Curve e2 = sub.apply(e);
          Point o2 = sub.map_point(o);
          REQUIRE(e2.contains(o2));
          CHECK(tate_normalize(e2, o2) == std::make_pair(el(b, m), el(c, m)));
        }
      }
    CHECK(normalized > 100);
  }

  TEST_CASE("the root of b^6 + b + 1 gives a point of order 73") {
    F2k b = el(0b10, kMod6a);
    CHECK((b.pow(6) + b + el(1, kMod6a)).is_zero());
    Curve e = Curve::tate(b, el(1, kMod6a));
    CHECK(e.order(Point::affine(el(0, kMod6a), el(0, kMod6a)), 100) == std::optional<std::uint64_t>(73));
  }

  TEST_CASE("X_1(73) over F_64 under both moduli") {
    for (std::uint32_t m : {kMod6a, kMod6b}) {
      X173Report r = analyze_x1_73(m);
      CHECK(r.parameters.size() == 24);
      CHECK(r.all_roots_of_sextic_product);
      for (const auto& b : r.parameters) CHECK(!b.is_zero());
      REQUIRE(r.frobenius_orbits.size() == 4);
      for (const auto& o : r.frobenius_orbits) CHECK(o.size() == 6);
      CHECK(r.diamond_order == 4);
      for (std::size_t i = 0; i < 4; ++i) CHECK(r.diamond_image[i] != i);
      for (auto n : r.point_counts) CHECK(n == 73);
      CHECK(r.frobenius_trace == -8);
      CHECK(r.frobenius_charpoly == std::vector<std::int64_t>{64, 8, 1});
    }
  }
}
