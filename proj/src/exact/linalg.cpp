#include "modtors/exact/linalg.hpp"

#include <stdexcept>
#include <string>

#include "modtors/exact/gf2.hpp"
#include "modtors/exact/prime_field.hpp"

namespace modtors {

namespace {

std::uint64_t reduce(const Int& x, std::uint64_t ell) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), ell);
  return r.get_ui();
}

std::size_t rank_mod_generic(const IntMatrix& m, std::uint64_t ell) {
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = reduce(m(i, j), ell);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    std::uint64_t inv = invmod(a[r][c], ell);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, ell);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (a[r][j] == 0) continue;
        std::uint64_t s = mulmod(f, a[r][j], ell);
        a[i][j] = a[i][j] >= s ? a[i][j] - s : a[i][j] + ell - s;
      }
    }
    ++r;
  }
  return r;
}

IntMatrix integer_rows(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int den = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_num() * (den / m(i, j).get_den());
  }
  return r;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Rows (a, b) <- (s a + t b, u a + v b).
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int x = m(a, j), y = m(b, j);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    m(a, j) = s * x + t * y;
    m(b, j) = u * x + v * y;
  }
}

void combine_cols(IntMatrix& m, std::size_t a, std::size_t b, const Int& s, const Int& t, const Int& u, const Int& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int x = m(i, a), y = m(i, b);
    if (sgn(x) == 0 && sgn(y) == 0) continue;
    m(i, a) = s * x + t * y;
    m(i, b) = u * x + v * y;
  }
}

// Back-substitution on a fraction-free echelon form for the system restricted to columns [0, ncols).
// rhs(i) is the right-hand side of row i; free variables are zero.
RatVector back_substitute(const Echelon& e, std::size_t ncols, const std::vector<Rat>& rhs) {
  RatVector x(ncols, Rat(0));
  for (std::size_t i = e.pivots.size(); i-- > 0;) {
    std::size_t pc = e.pivots[i];
    Rat s = rhs[i];
    for (std::size_t j = pc + 1; j < ncols; ++j)
      if (sgn(e.form(i, j)) != 0 && sgn(x[j]) != 0) s -= Rat(e.form(i, j)) * x[j];
    x[pc] = s / Rat(e.form(i, pc));
  }
  return x;
}

}  // namespace

std::size_t rank_mod(const IntMatrix& m, std::uint64_t ell, RankPath path) {
  if (!is_prime(ell)) throw std::invalid_argument("rank_mod: " + std::to_string(ell) + " is not prime");
  bool packed = path == RankPath::bitpacked || (path == RankPath::automatic && ell == 2);
  if (packed) {
    if (ell != 2) throw std::invalid_argument("rank_mod: the bit-packed path is only for ell = 2");
    return gf2::BitMatrix::from_int(m).rank();
  }
  return rank_mod_generic(m, ell);
}

Echelon bareiss_echelon(const IntMatrix& m) {
  Echelon e{m, {}};
  IntMatrix& a = e.form;
  const std::size_t rows = a.rows(), cols = a.cols();
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(a, piv, r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

std::size_t rank(const IntMatrix& m) { return bareiss_echelon(m).pivots.size(); }
std::size_t rank(const RatMatrix& m) { return rank(integer_rows(m)); }

Int determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && sgn(a(piv, k)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      swap_rows(a, piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<RatVector> kernel_basis(const IntMatrix& m) {
  Echelon e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<RatVector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    // Solve with x_f = 1 and the other free variables zero.
    std::vector<Rat> rhs(e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) rhs[i] = -Rat(e.form(i, f));
    RatVector x = back_substitute(e, n, rhs);
    x[f] = 1;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) { return kernel_basis(integer_rows(m)); }

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (sgn(a(i, j)) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(i, c).get_mpz_t(), a(i, j).get_mpz_t());
      Int x = a(i, c) / g, y = a(i, j) / g;
      // (col_c, col_j) <- (s col_c + t col_j, -y col_c + x col_j), determinant 1.
      combine_cols(a, c, j, s, t, -y, x);
      combine_cols(u, c, j, s, t, -y, x);
    }
    if (sgn(a(i, c)) != 0) ++c;
  }
  if (c == n) return {};
  IntMatrix k(n - c, n);
  for (std::size_t r = 0; r < n - c; ++r)
    for (std::size_t i = 0; i < n; ++i) k(r, i) = u(i, c + r);
  HermiteForm hf = hermite_form(k);
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < hf.h.rows(); ++r) out.push_back(hf.h.row(r));
  return out;
}

HermiteForm hermite_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, c).get_mpz_t(), a(i, c).get_mpz_t());
      Int x = a(r, c) / g, y = a(i, c) / g;
      combine_rows(a, r, i, s, t, -y, x);
      combine_rows(u, r, i, s, t, -y, x);
    }
    if (sgn(a(r, c)) == 0) continue;
    if (sgn(a(r, c)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
      for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) a(i, j) -= q * a(r, j);
      for (std::size_t j = 0; j < rows; ++j) u(i, j) -= q * u(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  HermiteForm hf;
  std::vector<std::size_t> keep(r), all_cols(cols), all_rows(rows);
  for (std::size_t i = 0; i < r; ++i) keep[i] = i;
  for (std::size_t j = 0; j < cols; ++j) all_cols[j] = j;
  for (std::size_t j = 0; j < rows; ++j) all_rows[j] = j;
  hf.h = a.submatrix(keep, all_cols);
  hf.transform = u.submatrix(keep, all_rows);
  hf.pivots = std::move(pivots);
  return hf;
}

IntMatrix hermite_form_modular(const IntMatrix& m, const Int& det_multiple) {
  if (sgn(det_multiple) <= 0) throw std::invalid_argument("hermite_form_modular: modulus must be positive");
  const std::size_t n = m.cols();
  auto reduce = [](Int& x, const Int& r) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t()); };
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntVector v = m.row(i);
    for (auto& x : v) reduce(x, det_multiple);
    if (!is_zero(v)) gens.push_back(std::move(v));
  }
  IntMatrix h(n, n);
  Int r = det_multiple;
  for (std::size_t c = 0; c < n; ++c) {
    // gather column c into a single generator; the lattice restricted to coordinates >= c contains r Z^(n-c)
    std::size_t piv = gens.size();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (sgn(gens[k][c]) == 0) continue;
      if (piv == gens.size()) {
        piv = k;
        continue;
      }
      IntVector& a = gens[piv];
      IntVector& b = gens[k];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[c].get_mpz_t(), b[c].get_mpz_t());
      Int x = a[c] / g, y = b[c] / g;
      for (std::size_t j = c; j < n; ++j) {
        Int na = s * a[j] + t * b[j];
        Int nb = x * b[j] - y * a[j];
        reduce(na, r);
        reduce(nb, r);
        a[j] = std::move(na);
        b[j] = std::move(nb);
      }
    }
    IntVector row(n, Int(0));
    Int d;
    if (piv == gens.size()) {
      d = r;
      row[c] = r;
    } else {
      Int u, v;
      mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), gens[piv][c].get_mpz_t(), r.get_mpz_t());
      for (std::size_t j = c; j < n; ++j) {
        row[j] = u * gens[piv][j];
        reduce(row[j], r);
      }
      row[c] = d;
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(piv));
    }
    for (std::size_t j = 0; j < n; ++j) h(c, j) = row[j];
    r /= d;
    std::vector<IntVector> rest;
    for (auto& v : gens) {
      for (std::size_t j = c + 1; j < n; ++j) reduce(v[j], r);
      bool nz = false;
      for (std::size_t j = c + 1; j < n && !nz; ++j) nz = sgn(v[j]) != 0;
      if (nz) rest.push_back(std::move(v));
    }
    gens = std::move(rest);
  }
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = 0; i < c; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(c, c).get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t j = c; j < n; ++j) h(i, j) -= q * h(c, j);
    }
  return h;
}

namespace {

// Z-basis of the integer kernel.  The kernel lattice projects isomorphically onto the free coordinates, where
// it is cut out by congruences modulo the common denominator D of the rational kernel basis; the congruences are
// imposed one pivot at a time on a full-rank lattice that always contains D Z^k.
std::vector<IntVector> saturated_kernel(const IntMatrix& m) {
  Echelon e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  std::vector<RatVector> kb;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> rhs(e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) rhs[i] = -Rat(e.form(i, f));
    RatVector x = back_substitute(e, n, rhs);
    x[f] = 1;
    free.push_back(f);
    kb.push_back(std::move(x));
  }
  const std::size_t k = kb.size();
  if (k == 0) return {};
  Int den = 1;
  for (const auto& v : kb)
    for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  IntMatrix lam = IntMatrix::identity(k);
  if (den != 1) {
    Int big;
    mpz_pow_ui(big.get_mpz_t(), den.get_mpz_t(), k);
    auto reduce = [](Int& x, const Int& r) { mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), r.get_mpz_t()); };
    for (auto pc : e.pivots) {
      IntVector nu(k);
      for (std::size_t j = 0; j < k; ++j) nu[j] = Int(kb[j][pc] * Rat(den));
      std::vector<IntVector> rows;
      IntVector w;
      for (std::size_t i = 0; i < k; ++i) {
        rows.push_back(lam.row(i));
        Int acc = 0;
        for (std::size_t j = 0; j < k; ++j) acc += lam(i, j) * nu[j];
        reduce(acc, den);
        w.push_back(acc);
      }
      std::size_t piv = k;
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(w[i]) == 0) continue;
        if (piv == k) {
          piv = i;
          continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), w[piv].get_mpz_t(), w[i].get_mpz_t());
        Int x = w[piv] / g, y = w[i] / g;
        for (std::size_t j = 0; j < k; ++j) {
          Int a = s * rows[piv][j] + t * rows[i][j];
          Int b = x * rows[i][j] - y * rows[piv][j];
          reduce(a, big);
          reduce(b, big);
          rows[piv][j] = std::move(a);
          rows[i][j] = std::move(b);
        }
        w[piv] = g;
        w[i] = 0;
      }
      if (piv == k) continue;
      Int mult = den / gcd(w[piv], den);
      for (auto& x : rows[piv]) x *= mult;
      lam = hermite_form_modular(IntMatrix::from_rows(rows, k), big);
    }
  }
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < k; ++i) {
    IntVector x(n, Int(0));
    Rat acc;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) continue;
      acc = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (sgn(lam(i, j)) != 0) acc += Rat(lam(i, j)) * kb[j][c];
      if (acc.get_den() != 1) throw std::logic_error("saturated_kernel: non-integral kernel vector");
      x[c] = acc.get_num();
    }
    for (std::size_t j = 0; j < k; ++j) x[free[j]] = lam(i, j);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

std::vector<IntVector> integer_kernel_selected(const IntMatrix& m) {
  ModEchelon ech(m.cols(), 2305843009213693951ULL);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < m.rows() && ech.rank() < m.cols(); ++i) {
    IntVector r = m.row(i);
    if (ech.add(r)) rows.push_back(std::move(r));
  }
  std::vector<IntVector> k = saturated_kernel(IntMatrix::from_rows(rows, m.cols()));
  for (const auto& v : k)
    if (!is_zero(m * v)) return saturated_kernel(m);
  return k;
}

std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  RatMatrix aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon e = bareiss_echelon(integer_rows(aug));
  for (auto c : e.pivots)
    if (c >= n) return std::nullopt;
  RatMatrix x(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rat> rhs(e.pivots.size());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) rhs[i] = Rat(e.form(i, n + j));
    RatVector col = back_substitute(e, n, rhs);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
  }
  return x;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  RatMatrix bm(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  auto x = solve(a, bm);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix must be square");
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, RatMatrix::identity(m.rows()));
}

namespace {

// Characteristic polynomial mod ell via Hessenberg reduction; coefficients low to high.
std::vector<std::uint64_t> charpoly_mod(const IntMatrix& m, std::uint64_t ell) {
  const std::size_t n = m.rows();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = reduce(m(i, j), ell);
  auto sub = [ell](std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + ell - b; };
  auto add = [ell](std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= ell ? s - ell : s;
  };
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && h[piv][k - 1] == 0) ++piv;
    if (piv == n) continue;
    if (piv != k) {
      std::swap(h[piv], h[k]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k]);
    }
    std::uint64_t inv = invmod(h[k][k - 1], ell);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h[j][k - 1] == 0) continue;
      std::uint64_t f = mulmod(h[j][k - 1], inv, ell);
      for (std::size_t c = 0; c < n; ++c) h[j][c] = sub(h[j][c], mulmod(f, h[k][c], ell));
      for (std::size_t r = 0; r < n; ++r) h[r][k] = add(h[r][k], mulmod(f, h[r][j], ell));
    }
  }
  // p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<std::uint64_t>> p(n + 1);
  p[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t> cur(k + 1, 0);
    const auto& prev = p[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = add(cur[d + 1], prev[d]);
      cur[d] = sub(cur[d], mulmod(h[k - 1][k - 1], prev[d], ell));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod = mulmod(prod, h[i + 1][i], ell);
      if (prod == 0) break;
      std::uint64_t f = mulmod(h[i][k - 1], prod, ell);
      if (f == 0) continue;
      for (std::size_t d = 0; d < p[i].size(); ++d) cur[d] = sub(cur[d], mulmod(f, p[i][d], ell));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

}  // namespace

IntPoly charpoly(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("charpoly: matrix must be square");
  const std::size_t n = m.rows();
  // Eigenvalues are bounded by the largest absolute row sum R, so |c_k| <= C(n,k) R^k <= (2 max(R,1))^n.
  Int r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s += abs(m(i, j));
    if (s > r) r = s;
  }
  Int bound;
  mpz_pow_ui(bound.get_mpz_t(), Int(2 * r).get_mpz_t(), n);
  Int modulus = 1;
  std::vector<Int> coeffs(n + 1, Int(0));
  std::uint64_t ell = (std::uint64_t{1} << 61) - 1;
  while (modulus <= 2 * bound) {
    while (!is_prime(ell)) --ell;
    std::vector<std::uint64_t> c = charpoly_mod(m, ell);
    // CRT: x = coeffs (mod modulus), x = c (mod ell).
    Int ell_z;
    mpz_set_ui(ell_z.get_mpz_t(), ell);
    Int minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), ell_z.get_mpz_t());
    for (std::size_t k = 0; k <= n; ++k) {
      Int ck;
      mpz_set_ui(ck.get_mpz_t(), c[k]);
      Int t = ((ck - coeffs[k]) * minv) % ell_z;
      if (sgn(t) < 0) t += ell_z;
      coeffs[k] += modulus * t;
    }
    modulus *= ell_z;
    --ell;
  }
  Int half = modulus / 2;
  for (auto& x : coeffs)
    if (x > half) x -= modulus;
  return IntPoly(std::move(coeffs));
}

ModEchelon::ModEchelon(std::size_t dim, std::uint64_t ell) : dim_(dim), ell_(ell) {
  if (!is_prime(ell)) throw std::invalid_argument("ModEchelon: modulus is not prime");
}

bool ModEchelon::add(const IntVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("ModEchelon::add: dimension mismatch");
  std::vector<std::uint64_t> w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) w[j] = reduce(v[j], ell_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t f = w[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (rows_[r][j] == 0) continue;
      std::uint64_t s = mulmod(f, rows_[r][j], ell_);
      w[j] = w[j] >= s ? w[j] - s : w[j] + ell_ - s;
    }
  }
  std::size_t pc = 0;
  while (pc < dim_ && w[pc] == 0) ++pc;
  if (pc == dim_) return false;
  std::uint64_t inv = invmod(w[pc], ell_);
  for (auto& x : w) x = mulmod(x, inv, ell_);
  rows_.push_back(std::move(w));
  pivots_.push_back(pc);
  return true;
}

}  // namespace modtors
