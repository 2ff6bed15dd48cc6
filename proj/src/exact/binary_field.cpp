#include "modtors/exact/binary_field.hpp"

#include <stdexcept>

namespace modtors {

namespace {

// One conventional irreducible per degree; degree 6 is x^6 + x + 1.
constexpr std::uint32_t kModuli[9] = {
    0,
    0b11,         // x + 1
    0b111,        // x^2 + x + 1
    0b1011,       // x^3 + x + 1
    0b10011,      // x^4 + x + 1
    0b100101,     // x^5 + x^2 + 1
    0b1000011,    // x^6 + x + 1
    0b10000011,   // x^7 + x + 1
    0b100011101,  // x^8 + x^4 + x^3 + x^2 + 1
};

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  int dm = gf2_poly_degree(m);
  for (int d = gf2_poly_degree(a); d >= dm; d = gf2_poly_degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t m) {
  std::uint32_t r = 0;
  for (int i = 0; b >> i; ++i)
    if ((b >> i) & 1u) r ^= a << i;
  return poly_mod(r, m);
}

}  // namespace

int gf2_poly_degree(std::uint32_t poly) {
  int d = -1;
  while (poly) {
    poly >>= 1;
    ++d;
  }
  return d;
}

bool is_irreducible_gf2(std::uint32_t poly) {
  int n = gf2_poly_degree(poly);
  if (n < 1) return false;
  for (std::uint32_t f = 2; gf2_poly_degree(f) <= n / 2; ++f)
    if (poly_mod(poly, f) == 0) return false;
  return true;
}

std::uint32_t default_binary_modulus(int degree) {
  if (degree < 1 || degree > 8) throw std::invalid_argument("default_binary_modulus: degree must be in 1..8");
  return kModuli[degree];
}

BinaryFieldElt::BinaryFieldElt(std::uint32_t bits, std::uint32_t modulus) : bits_(bits), modulus_(modulus) {
  int k = gf2_poly_degree(modulus);
  if (k < 1 || k > 8 || !is_irreducible_gf2(modulus))
    throw std::invalid_argument("BinaryFieldElt: modulus must be irreducible of degree 1..8");
  if (gf2_poly_degree(bits) >= k) throw std::invalid_argument("BinaryFieldElt: coefficient vector longer than the degree");
}

BinaryFieldElt BinaryFieldElt::operator+(const BinaryFieldElt& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("BinaryFieldElt: mixed moduli");
  BinaryFieldElt r = *this;
  r.bits_ ^= o.bits_;
  return r;
}

BinaryFieldElt BinaryFieldElt::operator*(const BinaryFieldElt& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("BinaryFieldElt: mixed moduli");
  BinaryFieldElt r = *this;
  r.bits_ = clmul_mod(bits_, o.bits_, modulus_);
  return r;
}

BinaryFieldElt BinaryFieldElt::pow(std::uint64_t e) const {
  BinaryFieldElt r = one(modulus_), a = *this;
  while (e) {
    if (e & 1) r *= a;
    a *= a;
    e >>= 1;
  }
  return r;
}

BinaryFieldElt BinaryFieldElt::inverse() const {
  if (is_zero()) throw std::domain_error("BinaryFieldElt: inverse of zero");
  return pow(field_size() - 2);
}

std::uint64_t BinaryFieldElt::order() const {
  if (is_zero()) throw std::domain_error("BinaryFieldElt: order of zero");
  std::uint64_t n = 1;
  for (BinaryFieldElt x = *this; !(x == one(modulus_)); x *= *this) ++n;
  return n;
}

std::string BinaryFieldElt::to_string() const {
  if (bits_ == 0) return "0";
  std::string s;
  for (int i = degree() - 1; i >= 0; --i) {
    if (!((bits_ >> i) & 1u)) continue;
    if (!s.empty()) s += "+";
    s += i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i));
  }
  return s;
}

}  // namespace modtors
