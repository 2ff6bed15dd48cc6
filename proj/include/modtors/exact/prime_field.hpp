#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace modtors {

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Inverse of a modulo m; throws if gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

// Element of F_ell.  The modulus travels with the value so mixing fields is caught.
class PrimeFieldElt {
 public:
  PrimeFieldElt(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  PrimeFieldElt operator+(const PrimeFieldElt& o) const;
  PrimeFieldElt operator-(const PrimeFieldElt& o) const;
  PrimeFieldElt operator*(const PrimeFieldElt& o) const;
  PrimeFieldElt operator-() const;
  PrimeFieldElt inverse() const;
  PrimeFieldElt pow(std::uint64_t e) const;
  bool operator==(const PrimeFieldElt& o) const = default;

 private:
  struct Unchecked {};
  PrimeFieldElt(std::uint64_t value, std::uint64_t modulus, Unchecked)
      : value_(value), modulus_(modulus) {}
  void same_field(const PrimeFieldElt& o) const;

  std::uint64_t value_;
  std::uint64_t modulus_;
};

}  // namespace modtors
