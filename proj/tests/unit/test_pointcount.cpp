#include <map>

#include "doctest.h"
#include "modtors/curves2/weierstrass.hpp"
#include "modtors/exact/binary_field.hpp"
#include "modtors/exact/prime_field.hpp"
#include "modtors/pointcount/waterhouse.hpp"

using namespace modtors;
using namespace modtors::pointcount;

namespace {

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(hi))
    if (p >= lo) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> concat(std::vector<std::uint64_t> a, std::initializer_list<std::uint64_t> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_SUITE("pointcount") {
  TEST_CASE("Waterhouse examples") {
    CHECK(waterhouse_empty(73, 2, 5));
    auto r = waterhouse(73, 2, 6);
    CHECK(!r.empty);
    CHECK(r.supersingular_only);
    CHECK(!waterhouse_empty(13, 2, 3));
    CHECK(waterhouse(13, 2, 3).supersingular_only);
    auto seven = waterhouse(7, 2, 3);
    CHECK(!seven.conditions[0]);
    CHECK(!seven.supersingular_only);
    CHECK_THROWS_AS(waterhouse(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(waterhouse(2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(waterhouse(7, 7, 1), std::invalid_argument);
  }

  TEST_CASE("cusp field condition") {
    for (unsigned d = 1; d <= 6; ++d) CHECK(cusp_field_condition(73, 2, d));
    CHECK(!cusp_field_condition(7, 2, 3));
    CHECK(!cusp_field_condition(5, 2, 4));
  }

  TEST_CASE("condition 3 exception lists") {
    CHECK(condition3_exceptions(3, 2, 300) == std::vector<std::uint64_t>{5, 7, 13});
    CHECK(condition3_exceptions(4, 2, 300) == primes_between(5, 17));
    CHECK(condition3_exceptions(5, 2, 300) == concat(primes_between(5, 19), {31, 41}));
    CHECK(condition3_exceptions(6, 2, 300) == concat(primes_between(5, 19), {29, 31, 37, 41, 73}));
    CHECK(condition3_exceptions(7, 2, 300) == concat(primes_between(5, 43), {59, 61, 67, 71, 73, 113, 127}));
    CHECK(condition3_exceptions(6, 2, 300, 23) == std::vector<std::uint64_t>{29, 31, 37, 41, 73});
    CHECK(condition3_exceptions(4, 2, 300, 19).empty());
  }

  TEST_CASE("primes beyond the Hasse window satisfy condition 3") {
    for (unsigned d = 3; d <= 7; ++d) {
      std::size_t tested = 0;
      for (auto p : primes_up_to(5000)) {
        if (!above_hasse_window(p, 2, d)) continue;
        CHECK(condition3_holds(p, d));
        if (++tested == 50) break;
      }
      CHECK(tested == 50);
    }
    CHECK(!above_hasse_window(25, 2, 4));
    CHECK(above_hasse_window(26, 2, 4));
  }

  TEST_CASE("Waterhouse agrees with exhaustive enumeration over F_2, F_4, F_8") {
    for (unsigned d = 1; d <= 3; ++d) {
      auto orders = curves2::group_orders(default_binary_modulus(static_cast<int>(d)));
      for (auto p : primes_between(5, 31)) {
        bool exists = false;
        for (auto n : orders) exists = exists || n % p == 0;
        CHECK_MESSAGE(waterhouse_empty(p, 2, d) == !exists, "p=" << p << " d=" << d);
      }
    }
  }
}
