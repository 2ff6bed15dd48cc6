#include "modtors/criterion/winding.hpp"

#include <map>
#include <stdexcept>

#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"

namespace modtors::criterion {

namespace {

constexpr std::uint64_t kBigPrime = 2305843009213693951ULL;

}  // namespace

HeckeLattice::HeckeLattice(const LevelData& level) : n_(level.cuspidal_rank), rank_(level.genus()) {
  std::vector<const IntMatrix*> gens;
  for (const auto& [k, m] : level.diamonds) gens.push_back(&m);
  for (const auto& [n, m] : level.hecke) gens.push_back(&m);
  if (rank_ == 0) return;
  ModEchelon ech(n_ * n_, kBigPrime);
  std::vector<std::size_t> indep;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (ech.add(flatten(*gens[i]))) indep.push_back(i);
  if (ech.rank() != rank_) throw std::logic_error("HeckeLattice: generators do not span a space of dimension g");
  positions_ = ech.pivots();
  std::vector<IntVector> projected;
  for (auto* g : gens) projected.push_back(project(*g));
  std::vector<IntVector> psi_rows;
  for (auto i : indep) {
    independent_.push_back(*gens[i]);
    psi_rows.push_back(projected[i]);
  }
  IntMatrix psi = IntMatrix::from_rows(psi_rows, rank_);
  Int det = abs(determinant(psi));
  if (sgn(det) == 0) throw std::logic_error("HeckeLattice: projection is not injective");
  // the independent generators span a sublattice of index det, so det Z^g lies in the projected lattice
  hermite_ = hermite_form_modular(IntMatrix::from_rows(projected, rank_), det);
  auto inv = inverse(to_rational(psi));
  auto [den, num] = clear_denominators(to_rational(hermite_) * (*inv));
  den_ = den;
  coeff_ = num;
}

IntVector HeckeLattice::project(const IntMatrix& m) const {
  IntVector out;
  out.reserve(positions_.size());
  for (auto pos : positions_) out.push_back(m(pos / n_, pos % n_));
  return out;
}

IntMatrix HeckeLattice::element(const IntVector& y) const {
  if (y.size() != rank_) throw std::invalid_argument("HeckeLattice::element: wrong coordinate length");
  IntMatrix acc(n_, n_);
  for (std::size_t k = 0; k < rank_; ++k) {
    Int z = 0;
    for (std::size_t i = 0; i < rank_; ++i) z += y[i] * coeff_(i, k);
    if (sgn(z) == 0) continue;
    const IntMatrix& g = independent_[k];
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (sgn(g(a, b)) != 0) acc(a, b) += z * g(a, b);
  }
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      if (!mpz_divisible_p(acc(a, b).get_mpz_t(), den_.get_mpz_t())) throw std::logic_error("HeckeLattice::element: non-integral lattice element");
      mpz_divexact(acc(a, b).get_mpz_t(), acc(a, b).get_mpz_t(), den_.get_mpz_t());
    }
  return acc;
}

IntMatrix HeckeLattice::apply_basis_scaled(const IntVector& v) const {
  std::vector<IntVector> u;
  for (const auto& g : independent_) u.push_back(g * v);
  IntMatrix umat = IntMatrix::from_columns(u, n_);
  return umat * coeff_.transpose();
}

std::optional<IntVector> HeckeLattice::coordinates(const IntMatrix& m) const {
  if (rank_ == 0) return is_zero(flatten(m)) ? std::optional<IntVector>(IntVector{}) : std::nullopt;
  // psi(m) = y^T h
  auto y = solve(to_rational(hermite_.transpose()), to_rational(project(m)));
  if (!y) return std::nullopt;
  IntVector out;
  for (const auto& x : *y) {
    if (x.get_den() != 1) return std::nullopt;
    out.push_back(x.get_num());
  }
  if (!(element(out) == m)) return std::nullopt;
  return out;
}

IntVector HeckeLattice::basis_row_scaled(std::size_t i, std::size_t r) const {
  IntVector out(n_, Int(0));
  for (std::size_t k = 0; k < rank_; ++k) {
    const Int& z = coeff_(i, k);
    if (sgn(z) == 0) continue;
    for (std::size_t c = 0; c < n_; ++c)
      if (sgn(independent_[k](r, c)) != 0) out[c] += z * independent_[k](r, c);
  }
  return out;
}

IntVector HeckeLattice::project_product(const IntMatrix& x, const IntMatrix& y) const {
  IntVector out;
  out.reserve(positions_.size());
  for (auto pos : positions_) {
    const std::size_t r = pos / n_, c = pos % n_;
    Int acc = 0;
    for (std::size_t k = 0; k < n_; ++k)
      if (sgn(x(r, k)) != 0 && sgn(y(k, c)) != 0) acc += x(r, k) * y(k, c);
    out.push_back(std::move(acc));
  }
  return out;
}

WindingAnnihilator winding_annihilator(const HeckeLattice& lattice, const RatVector& e) {
  WindingAnnihilator out;
  const std::size_t g = lattice.rank();
  const std::size_t n = lattice.matrix_size();
  if (g == 0) return out;
  auto [eden, enumr] = clear_denominators(e);
  (void)eden;
  out.ae = integer_kernel_selected(lattice.apply_basis_scaled(enumr));
  for (const auto& a : out.ae) out.ae_matrices.push_back(lattice.element(a));
  if (out.ae.empty()) {
    for (std::size_t i = 0; i < g; ++i) {
      IntVector u(g, Int(0));
      u[i] = 1;
      out.ann.push_back(u);
    }
    return out;
  }
  // t = sum y_i b_i kills a iff the projection of t a vanishes; column i of the system is psi(scale b_i a)
  const auto& pos = lattice.positions();
  std::vector<IntVector> rows;
  std::map<std::size_t, std::vector<IntVector>> basis_rows;
  for (auto p : pos)
    if (!basis_rows.count(p / n))
      for (std::size_t i = 0; i < g; ++i) basis_rows[p / n].push_back(lattice.basis_row_scaled(i, p / n));
  for (const auto& a : out.ae_matrices)
    for (auto p : pos) {
      const std::size_t r = p / n, c = p % n;
      IntVector row(g, Int(0));
      for (std::size_t i = 0; i < g; ++i) {
        const IntVector& br = basis_rows[r][i];
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(br[k]) != 0 && sgn(a(k, c)) != 0) row[i] += br[k] * a(k, c);
      }
      rows.push_back(std::move(row));
    }
  out.ann = integer_kernel_selected(IntMatrix::from_rows(rows, g));
  return out;
}

bool kills_ae(const HeckeLattice& lattice, const IntMatrix& t, const WindingAnnihilator& w) {
  for (const auto& a : w.ae_matrices)
    if (!is_zero(lattice.project_product(t, a))) return false;
  return true;
}

std::vector<T1Candidate> t1_candidates(const HeckeLattice& lattice, const WindingAnnihilator& w, std::size_t budget) {
  std::vector<T1Candidate> out;
  if (lattice.rank() == 0) return {{"identity", {}, IntMatrix(0, 0)}};
  auto push = [&](const IntVector& y, std::string recipe) {
    if (out.size() >= budget || is_zero(y)) return;
    IntMatrix m = lattice.element(y);
    if (!kills_ae(lattice, m, w)) throw std::logic_error("t1_candidates: candidate does not kill A_e");
    out.push_back({std::move(recipe), y, std::move(m)});
  };
  const auto& a = w.ann;
  for (std::size_t i = 0; i < a.size(); ++i) push(a[i], "ann[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      IntVector s = a[i], d = a[i];
      for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] += a[j][k];
        d[k] -= a[j][k];
      }
      push(s, "ann[" + std::to_string(i) + "]+ann[" + std::to_string(j) + "]");
      push(d, "ann[" + std::to_string(i) + "]-ann[" + std::to_string(j) + "]");
    }
  return out;
}

PolynomialT1 t1_from_polynomial(const IntMatrix& t, const RatVector& e) {
  PolynomialT1 out;
  const std::size_t n = t.rows();
  auto parts = squarefree_decomposition(to_rational(charpoly(t)));
  RatPoly p = RatPoly::constant(Rat(1)), simple = RatPoly::constant(Rat(1));
  for (std::size_t k = 1; k <= parts.size(); ++k) {
    const RatPoly& f = parts[k - 1];
    if (f.degree() <= 0) continue;
    if (k % 2 == 1) throw std::logic_error("t1_from_polynomial: characteristic polynomial on H_1 is not a square");
    for (std::size_t j = 0; j < k / 2; ++j) p = p * f;
    if (k == 2) simple = f;
  }
  RatPoly rest = divmod(p, simple).first;
  // minimal polynomial of t on e via the Krylov sequence
  std::vector<RatVector> krylov{e};
  RatMatrix tr = to_rational(t);
  RatPoly me;
  if (is_zero(e)) {
    me = RatPoly::constant(Rat(1));
  } else {
    while (true) {
      RatVector next = tr * krylov.back();
      RatMatrix basis = RatMatrix::from_columns(krylov, n);
      auto c = solve(basis, next);
      if (c && basis * (*c) == next) {
        std::vector<Rat> coeffs(krylov.size() + 1);
        for (std::size_t i = 0; i < krylov.size(); ++i) coeffs[i] = -(*c)[i];
        coeffs[krylov.size()] = 1;
        me = RatPoly(coeffs);
        break;
      }
      krylov.push_back(next);
    }
  }
  RatPoly keep = divmod(simple, gcd(simple, me)).first;
  out.p = to_integer(monic(p));
  out.simple_part = to_integer(monic(simple));
  out.rest = to_integer(monic(rest));
  out.e_minimal = to_integer(monic(me));
  out.matrix = evaluate(out.rest, t) * evaluate(to_integer(monic(keep)), t);
  return out;
}

IntMatrix t2_element(const LevelData& level, std::uint64_t q) {
  if (q == 2) throw std::invalid_argument("t2_element: q must be odd");
  if (q == level.p) throw std::invalid_argument("t2_element: q must differ from p");
  if (!is_prime(q)) throw std::invalid_argument("t2_element: q must be prime");
  IntMatrix out = level.T(q) - level.diamond(q);
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) -= static_cast<long>(q);
  return out;
}

}  // namespace modtors::criterion
