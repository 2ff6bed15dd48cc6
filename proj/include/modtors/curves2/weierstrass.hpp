#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "modtors/exact/binary_field.hpp"

namespace modtors::curves2 {

using F2k = BinaryFieldElt;

struct Point {
  bool infinity = true;
  F2k x, y;
  static Point at_infinity() { return {}; }
  static Point affine(const F2k& x, const F2k& y) { return {false, x, y}; }
  bool operator==(const Point& o) const { return infinity == o.infinity && (infinity || (x == o.x && y == o.y)); }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_{2^k}.
struct Curve {
  F2k a1, a2, a3, a4, a6;

  static Curve tate(const F2k& b, const F2k& c);
  std::uint32_t modulus() const { return a1.modulus(); }
  F2k discriminant() const;
  bool is_smooth() const { return !discriminant().is_zero(); }
  bool contains(const Point& p) const;
  Point negate(const Point& p) const;
  Point add(const Point& p, const Point& q) const;
  Point multiply(std::int64_t n, const Point& p) const;
  // Least n >= 1 with nP = 0, or nullopt if it exceeds the bound.
  std::optional<std::uint64_t> order(const Point& p, std::uint64_t bound) const;
  std::vector<Point> points() const;
  std::uint64_t count_points() const { return points().size(); }
  bool operator==(const Curve& o) const = default;
};

// Admissible change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Substitution {
  F2k u, r, s, t;
  Curve apply(const Curve& e) const;
  Point map_point(const Point& p) const;
};

// Discriminant b^3 (c^4 + c^3 + c^2 + b + c) of the Tate curve E_{b,c}.
F2k tate_discriminant(const F2k& b, const F2k& c);
// (c + 1)^12 / discriminant; throws on a singular curve.
F2k j_invariant(const F2k& b, const F2k& c);

// The unique (b, c) with (E, P) isomorphic to (E_{b,c}, (0,0)).  P must have order at least 4.
std::pair<F2k, F2k> tate_normalize(const Curve& e, const Point& p);

// Upper end of the Hasse interval, q + 1 + 2 sqrt(q) rounded up.
std::uint64_t hasse_upper(std::uint64_t q);

// Group orders of all smooth general Weierstrass curves over F_{2^k}, by enumeration.
std::set<std::uint64_t> group_orders(std::uint32_t modulus);
// Whether some elliptic curve over F_{2^k} (given modulus) has a rational point of order p.
bool exists_point_of_order(std::uint64_t p, std::uint32_t modulus);

}  // namespace modtors::curves2
