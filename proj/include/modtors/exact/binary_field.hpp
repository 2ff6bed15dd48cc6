#pragma once

#include <cstdint>
#include <string>

namespace modtors {

// Conventional irreducible modulus of degree k (bit i = coefficient of x^i), 1 <= k <= 8.
std::uint32_t default_binary_modulus(int degree);
bool is_irreducible_gf2(std::uint32_t poly);
int gf2_poly_degree(std::uint32_t poly);

// Element of F_{2^k} in the polynomial basis of a fixed irreducible modulus.
class BinaryFieldElt {
 public:
  BinaryFieldElt() = default;
  BinaryFieldElt(std::uint32_t bits, std::uint32_t modulus);

  static BinaryFieldElt zero(std::uint32_t modulus) { return {0, modulus}; }
  static BinaryFieldElt one(std::uint32_t modulus) { return {1, modulus}; }

  std::uint32_t bits() const { return bits_; }
  std::uint32_t modulus() const { return modulus_; }
  int degree() const { return gf2_poly_degree(modulus_); }
  std::uint32_t field_size() const { return 1u << degree(); }
  bool is_zero() const { return bits_ == 0; }

  BinaryFieldElt operator+(const BinaryFieldElt& o) const;
  BinaryFieldElt operator-(const BinaryFieldElt& o) const { return *this + o; }
  BinaryFieldElt operator*(const BinaryFieldElt& o) const;
  BinaryFieldElt operator/(const BinaryFieldElt& o) const { return *this * o.inverse(); }
  BinaryFieldElt& operator+=(const BinaryFieldElt& o) { return *this = *this + o; }
  BinaryFieldElt& operator*=(const BinaryFieldElt& o) { return *this = *this * o; }
  BinaryFieldElt square() const { return *this * *this; }
  BinaryFieldElt pow(std::uint64_t e) const;
  BinaryFieldElt inverse() const;
  // Multiplicative order; throws on zero.
  std::uint64_t order() const;
  bool operator==(const BinaryFieldElt& o) const = default;
  auto operator<=>(const BinaryFieldElt& o) const = default;

  std::string to_string() const;

 private:
  std::uint32_t bits_ = 0;
  std::uint32_t modulus_ = 0b11;
};

}  // namespace modtors
