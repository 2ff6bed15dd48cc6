#include "modtors/exact/prime_field.hpp"

#include <numeric>
#include <string>

namespace modtors {

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1;
  __int128 r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("invmod: " + std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

PrimeFieldElt::PrimeFieldElt(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  if (!is_prime(modulus)) throw std::invalid_argument("PrimeFieldElt: modulus " + std::to_string(modulus) + " is not prime");
  std::int64_t m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  value_ = static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

void PrimeFieldElt::same_field(const PrimeFieldElt& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("PrimeFieldElt: mixed moduli");
}

PrimeFieldElt PrimeFieldElt::operator+(const PrimeFieldElt& o) const {
  same_field(o);
  std::uint64_t s = value_ + o.value_;
  if (s >= modulus_) s -= modulus_;
  return {s, modulus_, Unchecked{}};
}

PrimeFieldElt PrimeFieldElt::operator-(const PrimeFieldElt& o) const {
  same_field(o);
  return {value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_, modulus_, Unchecked{}};
}

PrimeFieldElt PrimeFieldElt::operator*(const PrimeFieldElt& o) const {
  same_field(o);
  return {mulmod(value_, o.value_, modulus_), modulus_, Unchecked{}};
}

PrimeFieldElt PrimeFieldElt::operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_, Unchecked{}}; }

PrimeFieldElt PrimeFieldElt::inverse() const {
  if (value_ == 0) throw std::domain_error("PrimeFieldElt: inverse of zero");
  return {invmod(value_, modulus_), modulus_, Unchecked{}};
}

PrimeFieldElt PrimeFieldElt::pow(std::uint64_t e) const { return {powmod(value_, e, modulus_), modulus_, Unchecked{}}; }

}  // namespace modtors
