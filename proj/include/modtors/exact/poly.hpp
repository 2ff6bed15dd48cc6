#pragma once

#include <string>
#include <vector>

#include "modtors/exact/matrix.hpp"

namespace modtors {

// Dense univariate polynomial, coefficients from the constant term upward.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly monomial(const T& a, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = a;
    return Poly(std::move(c));
  }
  static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + o * T(-1); }
  Poly operator*(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(r));
  }

  T operator()(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

RatPoly to_rational(const IntPoly& p);
// Exact conversion; throws if a coefficient is not integral.
IntPoly to_integer(const RatPoly& p);

// Quotient and remainder over Q; throws on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly monic(const RatPoly& p);
// Monic gcd (zero if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
// Yun decomposition of a monic polynomial: p = prod_{k>=1} factors[k-1]^k, each factor squarefree and monic.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

// p(M) by Horner's rule.
IntMatrix evaluate(const IntPoly& p, const IntMatrix& m);
// p(M) v without forming p(M).
IntVector evaluate_on(const IntPoly& p, const IntMatrix& m, const IntVector& v);

}  // namespace modtors
