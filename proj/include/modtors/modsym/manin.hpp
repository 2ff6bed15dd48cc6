#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modtors/exact/matrix.hpp"

namespace modtors {

// Sparse integer combination of basis elements, sorted by index.
using SparseVec = std::vector<std::pair<std::uint32_t, std::int64_t>>;

void sparse_axpy(SparseVec& acc, std::int64_t a, const SparseVec& x);

// A cusp a/b in lowest terms with b >= 0; infinity is 1/0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  static Fraction infinity() { return {1, 0}; }
  static Fraction make(std::int64_t a, std::int64_t b);
  bool is_infinity() const { return den == 0; }
  bool operator==(const Fraction& o) const = default;
  std::string to_string() const;
};

// Convergents p_j/q_j of a/b, starting with p_{-2}/q_{-2} = 0/1 and p_{-1}/q_{-1} = 1/0.
std::vector<std::pair<std::int64_t, std::int64_t>> convergents(const Fraction& x);

// Integral quotient of the free module on Manin symbols by the two- and three-term relations.
// Symbols are 0..n-1; s and tau give the right action of [[0,-1],[1,0]] and [[0,-1],[1,-1]].
// Symbols fixed by s or tau are killed.  Elimination pivots only on coefficients +-1 (so the
// quotient is free); anything else is reported as an error.
class ManinQuotient {
 public:
  ManinQuotient(std::size_t n, const std::function<std::size_t(std::size_t)>& s,
                const std::function<std::size_t(std::size_t)>& tau);

  std::size_t rank() const { return free_.size(); }
  std::size_t symbol_count() const { return expr_.size(); }
  // Symbol index of each basis element, increasing.
  const std::vector<std::size_t>& basis_symbols() const { return free_; }
  const SparseVec& symbol(std::size_t i) const { return expr_[i]; }
  // Relation matrix: one row per two-term and three-term relation, columns indexed by symbols.
  IntMatrix relation_matrix() const;
  std::uint64_t basis_hash() const;

 private:
  std::vector<std::size_t> free_;
  std::vector<SparseVec> expr_;
  std::vector<std::size_t> s_image_, tau_image_;
};

// Heilbronn-Merel matrices [[a,b],[c,d]] with ad - bc = n, a > b >= 0, d > c >= 0.
struct Mat2 {
  std::int64_t a, b, c, d;
};
std::vector<Mat2> heilbronn_merel(std::uint64_t n);

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL);

}  // namespace modtors
