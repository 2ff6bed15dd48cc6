#include "modtors/exact/poly.hpp"

#include <stdexcept>

namespace modtors {

template <class T>
std::string Poly<T>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    T a = c_[i];
    bool neg = sgn(a) < 0;
    if (neg) a = -a;
    if (!s.empty())
      s += neg ? " - " : " + ";
    else if (neg)
      s += "-";
    bool unit = (a == T(1));
    if (!unit || i == 0) s += a.get_str();
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

template class Poly<Int>;
template class Poly<Rat>;

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rat> c;
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return RatPoly(std::move(c));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Int> c;
  for (const auto& x : p.coeffs()) {
    if (x.get_den() != 1) throw std::domain_error("to_integer: non-integral coefficient " + x.get_str());
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1), Rat(0));
  Rat lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    Rat f = r[static_cast<std::size_t>(k)] / lead;
    if (sgn(f) == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rat(1) / p.leading());
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = monic(a), y = monic(b);
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).second;
    x = y;
    y = monic(r);
  }
  return monic(x);
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
  std::vector<RatPoly> out;
  if (p.degree() < 1) return out;
  RatPoly f = monic(p);
  RatPoly a = gcd(f, f.derivative());
  RatPoly b = divmod(f, a).first;
  RatPoly c = divmod(f.derivative(), a).first;
  RatPoly d = c - b.derivative();
  while (b.degree() >= 1) {
    RatPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  // Trailing factors that came out as 1 carry no information.
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("evaluate: matrix must be square");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

IntVector evaluate_on(const IntPoly& p, const IntMatrix& m, const IntVector& v) {
  IntVector acc(v.size(), Int(0));
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = m * acc;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += c[k] * v[i];
  }
  return acc;
}

}  // namespace modtors
