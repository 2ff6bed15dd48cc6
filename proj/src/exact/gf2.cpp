#include "modtors/exact/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace modtors::gf2 {

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t k = from >> 6;
  std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) {
      std::size_t i = (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
      return i < n_ ? i : n_;
    }
    if (++k == words_.size()) return n_;
    w = words_[k];
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_int(const IntMatrix& m) {
  BitMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) r.set(i, j, true);
  return r;
}

BitMatrix BitMatrix::from_rows(const std::vector<BitVector>& rows, std::size_t cols) {
  BitMatrix r;
  r.cols_ = cols;
  for (const auto& v : rows) {
    if (v.size() != cols) throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    r.rows_.push_back(v);
  }
  return r;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows()) throw std::invalid_argument("BitMatrix product: dimension mismatch");
  BitMatrix r(rows(), o.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = rows_[i].next_set(0); k < cols_; k = rows_[i].next_set(k + 1)) r.rows_[i] ^= o.rows_[k];
  return r;
}

BitMatrix BitMatrix::operator+(const BitMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("BitMatrix sum: dimension mismatch");
  BitMatrix r = *this;
  for (std::size_t i = 0; i < rows(); ++i) r.rows_[i] ^= o.rows_[i];
  return r;
}

bool BitMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.is_zero()) return false;
  return true;
}

BitVector BitMatrix::flatten() const {
  BitVector v(rows() * cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = rows_[i].next_set(0); j < cols_; j = rows_[i].next_set(j + 1)) v.set(i * cols_ + j, true);
  return v;
}

std::size_t BitMatrix::rank() const {
  std::vector<BitVector> a = rows_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && !a[piv].get(c)) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i)
      if (a[i].get(c)) a[i] ^= a[r];
    ++r;
  }
  return r;
}

std::vector<BitVector> BitMatrix::left_kernel() const {
  const std::size_t m = rows();
  std::vector<BitVector> a = rows_;
  std::vector<BitVector> comb(m, BitVector(m));
  for (std::size_t i = 0; i < m; ++i) comb[i].set(i, true);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && !a[piv].get(c)) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[r]);
    std::swap(comb[piv], comb[r]);
    for (std::size_t i = r + 1; i < m; ++i)
      if (a[i].get(c)) {
        a[i] ^= a[r];
        comb[i] ^= comb[r];
      }
    ++r;
  }
  return std::vector<BitVector>(comb.begin() + static_cast<std::ptrdiff_t>(r), comb.end());
}

}  // namespace modtors::gf2
