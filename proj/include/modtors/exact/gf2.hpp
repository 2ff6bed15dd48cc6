#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "modtors/exact/matrix.hpp"

namespace modtors::gf2 {

// Bit-packed vector over F_2.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    if (v)
      words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { words_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }
  BitVector& operator^=(const BitVector& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  bool is_zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::size_t weight() const;
  // Index of the first set bit at or after `from`, or size() if none.
  std::size_t next_set(std::size_t from) const;
  bool operator==(const BitVector& o) const = default;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bit-packed matrix over F_2, rows stored as BitVectors.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_int(const IntMatrix& m);
  // Rows are the given vectors.
  static BitMatrix from_rows(const std::vector<BitVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }
  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }

  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix operator+(const BitMatrix& o) const;
  bool operator==(const BitMatrix& o) const = default;
  bool is_zero() const;

  // All entries in row-major order as a single vector.
  BitVector flatten() const;

  std::size_t rank() const;
  // Basis of {x : x * M = 0}, i.e. the linear dependencies among the rows.
  std::vector<BitVector> left_kernel() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

}  // namespace modtors::gf2
