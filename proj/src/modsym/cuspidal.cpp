#include "modtors/modsym/cuspidal.hpp"

#include <stdexcept>

#include "modtors/exact/linalg.hpp"

namespace modtors {

CuspidalLattice::CuspidalLattice(const IntMatrix& boundary) : dim_(boundary.cols()) {
  basis_ = integer_kernel(boundary);
  for (const auto& b : basis_) {
    std::size_t pc = 0;
    while (sgn(b[pc]) == 0) ++pc;
    pivots_.push_back(pc);
  }
}

IntMatrix CuspidalLattice::basis_matrix() const { return IntMatrix::from_columns(basis_, dim_); }

std::optional<RatVector> CuspidalLattice::coordinates(const RatVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("CuspidalLattice::coordinates: dimension mismatch");
  RatVector w = v;
  RatVector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    c[i] = w[pivots_[i]] / Rat(basis_[i][pivots_[i]]);
    if (sgn(c[i]) == 0) continue;
    for (std::size_t j = pivots_[i]; j < dim_; ++j)
      if (sgn(basis_[i][j]) != 0) w[j] -= c[i] * Rat(basis_[i][j]);
  }
  if (!is_zero(w)) return std::nullopt;
  return c;
}

std::optional<IntVector> CuspidalLattice::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("CuspidalLattice::coordinates: dimension mismatch");
  IntVector w = v;
  IntVector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w[pivots_[i]].get_mpz_t(), basis_[i][pivots_[i]].get_mpz_t());
    if (sgn(r) != 0) return std::nullopt;
    c[i] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = pivots_[i]; j < dim_; ++j)
      if (sgn(basis_[i][j]) != 0) w[j] -= q * basis_[i][j];
  }
  if (!is_zero(w)) return std::nullopt;
  return c;
}

RatVector CuspidalLattice::lift(const RatVector& c) const {
  RatVector v(dim_, Rat(0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(c[i]) != 0)
      for (std::size_t j = 0; j < dim_; ++j) v[j] += c[i] * Rat(basis_[i][j]);
  return v;
}

IntVector CuspidalLattice::lift(const IntVector& c) const {
  IntVector v(dim_, Int(0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (sgn(c[i]) != 0)
      for (std::size_t j = 0; j < dim_; ++j) v[j] += c[i] * basis_[i][j];
  return v;
}

IntMatrix CuspidalLattice::restrict(const IntMatrix& op) const {
  const std::size_t r = basis_.size();
  IntMatrix out(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    auto c = coordinates(op * basis_[j]);
    if (!c) throw std::logic_error("CuspidalLattice::restrict: operator does not preserve the cuspidal lattice");
    for (std::size_t i = 0; i < r; ++i) out(i, j) = (*c)[i];
  }
  return out;
}

}  // namespace modtors
