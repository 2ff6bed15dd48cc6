#include "modtors/curves2/weierstrass.hpp"

#include <set>
#include <stdexcept>

namespace modtors::curves2 {

Curve Curve::tate(const F2k& b, const F2k& c) {
  F2k one = F2k::one(b.modulus()), zero = F2k::zero(b.modulus());
  return {one + c, b, b, zero, zero};
}

F2k Curve::discriminant() const {
  F2k b8 = a1 * a1 * a6 + a1 * a3 * a4 + a2 * a3 * a3 + a4 * a4;
  F2k a1sq = a1 * a1, a3sq = a3 * a3;
  return a1sq * a1sq * b8 + a3sq * a3sq + a1sq * a1 * a3sq * a3;
}

bool Curve::contains(const Point& p) const {
  if (p.infinity) return true;
  return p.y * p.y + a1 * p.x * p.y + a3 * p.y == p.x * p.x * p.x + a2 * p.x * p.x + a4 * p.x + a6;
}

Point Curve::negate(const Point& p) const {
  if (p.infinity) return p;
  return Point::affine(p.x, p.y + a1 * p.x + a3);
}

Point Curve::add(const Point& p, const Point& q) const {
  if (p.infinity) return q;
  if (q.infinity) return p;
  F2k lambda, nu;
  if (p.x == q.x) {
    if (q == negate(p)) return Point::at_infinity();
    // doubling; the denominator a1 x + a3 vanishes only at 2-torsion, handled above
    F2k den = a1 * p.x + a3;
    lambda = (p.x * p.x + a4 + a1 * p.y) / den;
    nu = (p.x * p.x * p.x + a4 * p.x + a3 * p.y) / den;
  } else {
    F2k den = q.x + p.x;
    lambda = (q.y + p.y) / den;
    nu = (p.y * q.x + q.y * p.x) / den;
  }
  F2k x3 = lambda * lambda + a1 * lambda + a2 + p.x + q.x;
  F2k y3 = (lambda + a1) * x3 + nu + a3;
  return Point::affine(x3, y3);
}

Point Curve::multiply(std::int64_t n, const Point& p) const {
  Point base = n < 0 ? negate(p) : p;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Point acc = Point::at_infinity();
  while (k) {
    if (k & 1) acc = add(acc, base);
    base = add(base, base);
    k >>= 1;
  }
  return acc;
}

std::optional<std::uint64_t> Curve::order(const Point& p, std::uint64_t bound) const {
  if (!contains(p)) throw std::invalid_argument("Curve::order: point is not on the curve");
  Point acc = p;
  for (std::uint64_t n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = add(acc, p);
  }
  return std::nullopt;
}

std::vector<Point> Curve::points() const {
  const std::uint32_t m = modulus();
  const std::uint32_t q = F2k::one(m).field_size();
  std::vector<Point> out{Point::at_infinity()};
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      Point pt = Point::affine(F2k(x, m), F2k(y, m));
      if (contains(pt)) out.push_back(pt);
    }
  return out;
}

Curve Substitution::apply(const Curve& e) const {
  if (u.is_zero()) throw std::invalid_argument("Substitution: u must be nonzero");
  F2k u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  Curve out;
  out.a1 = e.a1 / u;
  out.a2 = (e.a2 + s * e.a1 + r + s * s) / u2;
  out.a3 = (e.a3 + r * e.a1) / u3;
  out.a4 = (e.a4 + s * e.a3 + (t + r * s) * e.a1 + r * r) / u4;
  out.a6 = (e.a6 + r * e.a4 + r * r * e.a2 + r * r * r + t * e.a3 + t * t + r * t * e.a1) / u6;
  return out;
}

Point Substitution::map_point(const Point& p) const {
  if (p.infinity) return p;
  F2k u2 = u * u;
  F2k x = (p.x + r) / u2;
  F2k y = (p.y + s * u2 * x + t) / (u2 * u);
  return Point::affine(x, y);
}

F2k tate_discriminant(const F2k& b, const F2k& c) {
  F2k c2 = c * c;
  return b * b * b * (c2 * c2 + c2 * c + c2 + b + c);
}

F2k j_invariant(const F2k& b, const F2k& c) {
  F2k delta = tate_discriminant(b, c);
  if (delta.is_zero()) throw std::domain_error("j_invariant: singular curve");
  return (c + F2k::one(c.modulus())).pow(12) / delta;
}

std::uint64_t hasse_upper(std::uint64_t q) {
  std::uint64_t s = 0;
  while (s * s < 4 * q) ++s;  // s = ceil(2 sqrt q)
  return q + 1 + s;
}

std::pair<F2k, F2k> tate_normalize(const Curve& e, const Point& p) {
  if (!e.is_smooth()) throw std::invalid_argument("tate_normalize: singular curve");
  if (p.infinity || !e.contains(p)) throw std::invalid_argument("tate_normalize: point not on the curve");
  const std::uint32_t m = e.modulus();
  const F2k one = F2k::one(m), zero = F2k::zero(m);
  auto ord = e.order(p, hasse_upper(one.field_size()));
  if (!ord || *ord <= 3) throw std::invalid_argument("tate_normalize: point must have order at least 4");
  auto step = [](const Curve& c, const Point& q, const Substitution& sub, Curve& c2, Point& q2) {
    c2 = sub.apply(c);
    q2 = sub.map_point(q);
    if (!c2.contains(q2)) throw std::logic_error("tate_normalize: substitution broke the curve equation");
  };
  Curve c1, c2, c3;
  Point q1, q2, q3;
  step(e, p, {one, p.x, zero, p.y}, c1, q1);
  if (!(q1 == Point::affine(zero, zero)) || !c1.a6.is_zero()) throw std::logic_error("tate_normalize: translation failed");
  if (c1.a3.is_zero()) throw std::logic_error("tate_normalize: vertical tangent at a point of order >= 4");
  step(c1, q1, {one, zero, c1.a4 / c1.a3, zero}, c2, q2);
  if (!c2.a4.is_zero()) throw std::logic_error("tate_normalize: tangent not horizontal");
  if (c2.a2.is_zero()) throw std::logic_error("tate_normalize: flex at a point of order >= 4");
  step(c2, q2, {c2.a3 / c2.a2, zero, zero, zero}, c3, q3);
  if (!(c3.a2 == c3.a3) || !c3.a4.is_zero() || !c3.a6.is_zero()) throw std::logic_error("tate_normalize: not in Tate form");
  F2k b = c3.a3, c = one + c3.a1;
  if (!(Curve::tate(b, c) == c3)) throw std::logic_error("tate_normalize: Tate form mismatch");
  return {b, c};
}

std::set<std::uint64_t> group_orders(std::uint32_t modulus) {
  const std::uint32_t q = F2k::one(modulus).field_size();
  std::vector<F2k> elts;
  for (std::uint32_t x = 0; x < q; ++x) elts.emplace_back(x, modulus);
  std::set<std::uint64_t> out;
  for (const auto& a1 : elts)
    for (const auto& a2 : elts)
      for (const auto& a3 : elts)
        for (const auto& a4 : elts)
          for (const auto& a6 : elts) {
            Curve e{a1, a2, a3, a4, a6};
            if (e.is_smooth()) out.insert(e.count_points());
          }
  return out;
}

bool exists_point_of_order(std::uint64_t p, std::uint32_t modulus) {
  // by Cauchy a point of order p exists iff p divides the group order
  for (auto n : group_orders(modulus))
    if (n % p == 0) return true;
  return false;
}

}  // namespace modtors::curves2
