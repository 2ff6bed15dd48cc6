#include "modtors/curves2/x1_73.hpp"

#include <algorithm>
#include <stdexcept>

namespace modtors::curves2 {

std::vector<F2k> find_73_parameters(std::uint32_t modulus) {
  if (gf2_poly_degree(modulus) != 6) throw std::invalid_argument("find_73_parameters: modulus must have degree 6");
  const F2k one = F2k::one(modulus), zero = F2k::zero(modulus);
  std::vector<F2k> out;
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    F2k b(bits, modulus);
    if (tate_discriminant(b, one).is_zero()) continue;
    Curve e = Curve::tate(b, one);
    auto ord = e.order(Point::affine(zero, zero), hasse_upper(64));
    if (ord && *ord == 73) out.push_back(b);
  }
  return out;
}

F2k sextic_product(const F2k& b) {
  const F2k one = F2k::one(b.modulus());
  F2k b2 = b * b, b3 = b2 * b, b4 = b2 * b2, b5 = b4 * b, b6 = b3 * b3;
  return (b6 + b + one) * (b6 + b3 + one) * (b6 + b5 + b2 + b + one) * (b6 + b5 + b4 + b + one);
}

X173Report analyze_x1_73(std::uint32_t modulus) {
  X173Report r;
  r.modulus = modulus;
  r.parameters = find_73_parameters(modulus);
  const F2k one = F2k::one(modulus), zero = F2k::zero(modulus);
  r.all_roots_of_sextic_product = true;
  for (std::uint32_t bits = 0; bits < 64; ++bits) {
    F2k b(bits, modulus);
    bool root = sextic_product(b).is_zero();
    bool found = std::find(r.parameters.begin(), r.parameters.end(), b) != r.parameters.end();
    if (root != found) r.all_roots_of_sextic_product = false;
  }
  // Frobenius orbits b -> b^2
  std::vector<bool> seen(r.parameters.size(), false);
  auto index_of = [&](const F2k& b) -> std::size_t {
    auto it = std::find(r.parameters.begin(), r.parameters.end(), b);
    if (it == r.parameters.end()) throw std::logic_error("analyze_x1_73: parameter set not closed");
    return static_cast<std::size_t>(it - r.parameters.begin());
  };
  std::vector<std::size_t> orbit_of(r.parameters.size());
  for (std::size_t i = 0; i < r.parameters.size(); ++i) {
    if (seen[i]) continue;
    std::vector<F2k> orbit;
    F2k b = r.parameters[i];
    do {
      std::size_t j = index_of(b);
      seen[j] = true;
      orbit_of[j] = r.frobenius_orbits.size();
      orbit.push_back(b);
      b = b.square();
    } while (!(b == r.parameters[i]));
    r.frobenius_orbits.push_back(orbit);
  }
  // <10>: (E, P) -> (E, 10 P), renormalized
  r.diamond_image.assign(r.frobenius_orbits.size(), 0);
  for (std::size_t o = 0; o < r.frobenius_orbits.size(); ++o) {
    std::size_t image = SIZE_MAX;
    for (const auto& b : r.frobenius_orbits[o]) {
      Curve e = Curve::tate(b, one);
      auto [b2, c2] = tate_normalize(e, e.multiply(10, Point::affine(zero, zero)));
      if (!(c2 == one)) throw std::logic_error("analyze_x1_73: image left the supersingular family");
      std::size_t img = orbit_of[index_of(b2)];
      if (image != SIZE_MAX && img != image) throw std::logic_error("analyze_x1_73: diamond does not respect Frobenius orbits");
      image = img;
    }
    r.diamond_image[o] = image;
  }
  // order of the permutation
  std::vector<std::size_t> cur(r.diamond_image.size());
  for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = i;
  for (std::size_t k = 1; k <= cur.size() + 1; ++k) {
    for (auto& c : cur) c = r.diamond_image[c];
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id = id && cur[i] == i;
    if (id) {
      r.diamond_order = k;
      break;
    }
  }
  for (const auto& b : r.parameters) r.point_counts.push_back(Curve::tate(b, one).count_points());
  if (!r.point_counts.empty()) {
    r.frobenius_trace = 64 + 1 - static_cast<std::int64_t>(r.point_counts.front());
    r.frobenius_charpoly = {64, -r.frobenius_trace, 1};
  }
  return r;
}

}  // namespace modtors::curves2
