#include "modtors/modsym/modsymH.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>

#include "modtors/exact/linalg.hpp"
#include "modtors/exact/poly.hpp"
#include "modtors/exact/prime_field.hpp"

namespace modtors::modsymH {

namespace {

std::uint64_t red(std::int64_t x, std::uint64_t p) { return static_cast<std::uint64_t>(mod_floor(x, static_cast<std::int64_t>(p))); }

}  // namespace

SubgroupH::SubgroupH(std::uint64_t p, const std::vector<std::uint64_t>& generators) : p_(p), member_(p, false) {
  if (!is_prime(p)) throw std::invalid_argument("SubgroupH: " + std::to_string(p) + " is not prime");
  for (auto g : generators) {
    if (g % p == 0) throw std::invalid_argument("SubgroupH: generator divisible by p");
    gens_.push_back(g % p);
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
  std::vector<std::uint64_t> all = gens_;
  all.push_back(p - 1);
  member_[1] = true;
  elements_ = {1};
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (auto g : all) {
      std::uint64_t y = mulmod(elements_[i], g, p);
      if (!member_[y]) {
        member_[y] = true;
        elements_.push_back(y);
      }
    }
  std::sort(elements_.begin(), elements_.end());
  class_.assign(p, static_cast<std::size_t>(-1));
  for (std::uint64_t x = 1; x < p; ++x) {
    if (class_[x] != static_cast<std::size_t>(-1)) continue;
    for (auto h : elements_) class_[mulmod(x, h, p)] = reps_.size();
    reps_.push_back(x);
  }
}

std::size_t SubgroupH::class_of(std::uint64_t x) const {
  x %= p_;
  if (x == 0) throw std::invalid_argument("SubgroupH::class_of: 0 is not a unit");
  return class_[x];
}

std::size_t genus_xh(const SubgroupH& h) {
  const long p = static_cast<long>(h.prime());
  const long sz = static_cast<long>(h.order());
  const long m = (p - 1) / sz;
  const long mu = (p * p - 1) / sz;
  long nu2 = 0, nu3 = 0;
  if (p == 2 || p == 3) throw std::invalid_argument("genus_xh: p must be at least 5");
  // elliptic points of order 2 (resp. 3) exist above those of X_0(p) when a square root of -1
  // (resp. a primitive cube root of unity) lies in +-H
  for (long x = 1; x < p; ++x) {
    if ((x * x + 1) % p == 0 && h.contains(static_cast<std::uint64_t>(x))) nu2 = 2 * m;
    if ((x * x + x + 1) % p == 0 && h.contains(static_cast<std::uint64_t>(x))) nu3 = 2 * m;
  }
  const long nuinf = 2 * m;
  long twelve_g = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * nuinf;
  if (twelve_g % 12 != 0 || twelve_g < 0) throw std::logic_error("genus_xh: non-integral genus");
  return static_cast<std::size_t>(twelve_g / 12);
}

std::size_t OrderedCuspSum::degree() const {
  std::size_t d = 0;
  for (auto [c, n] : terms) d += n;
  return d;
}

GammaHSpace::GammaHSpace(std::uint64_t p, const std::vector<std::uint64_t>& generators)
    : p_(p),
      h_([&] {
        if (p < 5) throw std::invalid_argument("GammaHSpace: level must be a prime >= 5");
        return SubgroupH(p, generators);
      }()),
      reps_(),
      index_([&] {
        std::vector<std::uint32_t> idx(p * p, UINT32_MAX);
        for (std::uint64_t c = 0; c < p; ++c)
          for (std::uint64_t d = 0; d < p; ++d) {
            if ((c == 0 && d == 0) || idx[c * p + d] != UINT32_MAX) continue;
            auto id = static_cast<std::uint32_t>(reps_.size());
            for (auto h : h_.elements()) idx[mulmod(c, h, p) * p + mulmod(d, h, p)] = id;
            reps_.emplace_back(c, d);
          }
        return idx;
      }()),
      quotient_(reps_.size(),
                [this](std::size_t i) {
                  auto [c, d] = reps_[i];
                  return symbol_index(static_cast<std::int64_t>(d), -static_cast<std::int64_t>(c));
                },
                [this](std::size_t i) {
                  auto [c, d] = reps_[i];
                  return symbol_index(static_cast<std::int64_t>(d), -static_cast<std::int64_t>(c + d));
                }) {
  boundary_ = IntMatrix(cusp_count(), quotient_.rank());
  for (std::size_t j = 0; j < quotient_.rank(); ++j) {
    auto [c, d] = reps_[quotient_.basis_symbols()[j]];
    auto [end, start] = symbol_cusps(c, d);
    boundary_(cusp_id(end), j) += 1;
    boundary_(cusp_id(start), j) -= 1;
  }
  cusp_ = CuspidalLattice(boundary_);
  compute_winding();
}

std::size_t GammaHSpace::symbol_index(std::int64_t c, std::int64_t d) const {
  std::uint64_t cc = red(c, p_), dd = red(d, p_);
  if (cc == 0 && dd == 0) throw std::invalid_argument("GammaHSpace::symbol_index: (0,0) is not a symbol");
  return index_[cc * p_ + dd];
}

IntVector GammaHSpace::symbol_vector(std::int64_t c, std::int64_t d) const {
  IntVector v(dimension(), Int(0));
  for (auto [j, a] : quotient_.symbol(symbol_index(c, d))) v[j] += a;
  return v;
}

IntVector GammaHSpace::path_symbol(const Fraction& from, const Fraction& to) const {
  auto from_zero = [this](const Fraction& x) {
    IntVector v(dimension(), Int(0));
    auto conv = convergents(x);
    for (std::size_t t = 1; t < conv.size(); ++t) {
      std::int64_t s = (t % 2 == 1) ? 1 : -1;
      for (auto [j, a] : quotient_.symbol(symbol_index(s * conv[t].second, conv[t - 1].second))) v[j] += a;
    }
    return v;
  };
  IntVector a = from_zero(from), b = from_zero(to);
  for (std::size_t i = 0; i < b.size(); ++i) b[i] -= a[i];
  return b;
}

Cusp GammaHSpace::cusp_of(const Fraction& x) const {
  std::uint64_t num = red(x.num, p_), den = red(x.den, p_);
  if (den == 0) return {true, h_.class_of(num)};
  return {false, h_.class_of(den)};
}

std::pair<Cusp, Cusp> GammaHSpace::symbol_cusps(std::uint64_t c, std::uint64_t d) const {
  c %= p_;
  d %= p_;
  // g = [[a, b], [c, d]] with ad - bc = 1 mod p: end a/c, start b/d
  Cusp end = c == 0 ? Cusp{true, h_.class_of(invmod(d, p_))} : Cusp{false, h_.class_of(c)};
  Cusp start = d == 0 ? Cusp{true, h_.class_of(p_ - invmod(c, p_))} : Cusp{false, h_.class_of(d)};
  return {end, start};
}

std::size_t GammaHSpace::diamond_on_infinity_cusp(std::uint64_t k, std::size_t cls) const {
  // <k> sends the symbol (c, d) to (kc, kd); the cusp above oo with numerator 1/d goes to 1/(kd)
  return h_.class_of(mulmod(invmod(k % p_, p_), h_.class_reps()[cls], p_));
}

std::uint64_t GammaHSpace::diamond_to_infinity(std::size_t cls) const { return h_.class_reps()[cls]; }

IntMatrix GammaHSpace::hecke_matrix(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("hecke_matrix: n must be positive");
  const auto hm = heilbronn_merel(n);
  const std::size_t dim = dimension();
  IntMatrix t(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto [c0, d0] = reps_[quotient_.basis_symbols()[j]];
    auto c = static_cast<std::int64_t>(c0), d = static_cast<std::int64_t>(d0);
    SparseVec acc;
    for (const auto& h : hm) {
      std::uint64_t c2 = red(c * h.a + d * h.c, p_), d2 = red(c * h.b + d * h.d, p_);
      if (c2 == 0 && d2 == 0) continue;
      sparse_axpy(acc, 1, quotient_.symbol(index_[c2 * p_ + d2]));
    }
    for (auto [i, a] : acc) t(i, j) = a;
  }
  return t;
}

IntMatrix GammaHSpace::diamond_matrix(std::uint64_t k) const {
  if (k % p_ == 0) throw std::invalid_argument("diamond_matrix: k must be prime to p");
  const std::size_t dim = dimension();
  IntMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto [c, d] = reps_[quotient_.basis_symbols()[j]];
    std::uint64_t c2 = mulmod(c, k % p_, p_), d2 = mulmod(d, k % p_, p_);
    for (auto [i, a] : quotient_.symbol(index_[c2 * p_ + d2])) m(i, j) += a;
  }
  return m;
}

void GammaHSpace::compute_winding() {
  const std::size_t g2 = cuspidal_rank();
  if (g2 == 0) {
    winding_ = RatVector(dimension(), Rat(0));
    winding_q_ = 2;
    return;
  }
  IntVector zero_inf = symbol_vector(0, 1);
  for (std::uint64_t q : primes_up_to(50)) {
    if (q == p_) continue;
    IntMatrix t = hecke_matrix(q);
    auto [quot, rem] = divmod(to_rational(charpoly(t)), to_rational(charpoly(cusp_.restrict(t))));
    if (!rem.is_zero()) throw std::logic_error("winding_element: cuspidal characteristic polynomial does not divide");
    RatPoly sf = divmod(quot, gcd(quot, quot.derivative())).first;
    IntPoly f = to_integer(monic(sf));
    auto target = cusp_.coordinates(evaluate_on(f, t, zero_inf));
    if (!target) throw std::logic_error("winding_element: f(T) {0, oo} is not cuspidal");
    IntMatrix ft = evaluate(f, cusp_.restrict(t));
    if (rank(ft) != g2) continue;
    auto x = solve(to_rational(ft), to_rational(*target));
    if (!x) throw std::logic_error("winding_element: no solution");
    RatVector e = cusp_.lift(*x);
    for (auto& v : e) v = -v;
    winding_ = e;
    winding_q_ = q;
    return;
  }
  winding_error_ = "winding element unavailable: f(T_q) singular on the cuspidal space for every q < 50";
}

RatVector GammaHSpace::winding_element() const {
  if (!winding_) throw std::runtime_error(winding_error_);
  return *winding_;
}

RatVector GammaHSpace::cuspidal_winding() const {
  auto c = cusp_.coordinates(winding_element());
  if (!c) throw std::logic_error("winding element is not cuspidal");
  return *c;
}

std::uint64_t GammaHSpace::winding_prime() const {
  if (!winding_) throw std::runtime_error(winding_error_);
  return winding_q_;
}

std::uint64_t GammaHSpace::basis_hash() const {
  std::string s = "H:" + std::to_string(p_);
  for (auto g : h_.elements()) s += "," + std::to_string(g);
  return fnv1a(s, quotient_.basis_hash());
}

std::vector<OrderedCuspSum> enumerate_ordered_cusp_sums(const SubgroupH& h, std::size_t d, bool normalize) {
  if (d == 0) throw std::invalid_argument("enumerate_ordered_cusp_sums: d must be positive");
  const std::size_t m = h.index();
  const auto& reps = h.class_reps();
  const std::uint64_t p = h.prime();
  auto canonical = [](std::vector<std::pair<std::size_t, std::size_t>> terms) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return OrderedCuspSum{std::move(terms)};
  };
  std::set<OrderedCuspSum> out;
  std::vector<std::size_t> mult(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
    if (left == 0) {
      std::vector<std::pair<std::size_t, std::size_t>> terms;
      for (std::size_t i = 0; i < m; ++i)
        if (mult[i]) terms.emplace_back(i, mult[i]);
      OrderedCuspSum best = canonical(terms);
      if (normalize) {
        for (std::size_t g = 0; g < m; ++g) {
          auto moved = terms;
          for (auto& [c, n] : moved) c = h.class_of(mulmod(reps[g], reps[c], p));
          OrderedCuspSum cand = canonical(moved);
          if (cand < best) best = cand;
        }
      }
      out.insert(best);
      return;
    }
    for (std::size_t i = start; i < m; ++i) {
      ++mult[i];
      rec(i, left - 1);
      --mult[i];
    }
  };
  if (normalize) {
    // every class has a translate containing oo
    ++mult[0];
    rec(0, d - 1);
    --mult[0];
  } else {
    rec(0, d);
  }
  return {out.begin(), out.end()};
}

}  // namespace modtors::modsymH
