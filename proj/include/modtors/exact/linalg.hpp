#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modtors/exact/matrix.hpp"
#include "modtors/exact/poly.hpp"

namespace modtors {

enum class RankPath { automatic, generic, bitpacked };

// Rank of M reduced mod the prime ell.  For ell = 2 the automatic path is bit-packed.
std::size_t rank_mod(const IntMatrix& m, std::uint64_t ell, RankPath path = RankPath::automatic);

// Rank over Q (fraction-free elimination).
std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
Int determinant(const IntMatrix& m);

// Fraction-free row echelon form: pivot columns in increasing order, rows below rank are zero.
struct Echelon {
  IntMatrix form;
  std::vector<std::size_t> pivots;
};
Echelon bareiss_echelon(const IntMatrix& m);

// Basis of the right kernel over Q; one vector per free column, with a 1 in that column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
std::vector<RatVector> kernel_basis(const IntMatrix& m);

// Z-basis of {x in Z^n : M x = 0}, returned in Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Row Hermite normal form with zero rows dropped: transform * m == h, h upper echelon with positive
// pivots and entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;
  std::vector<std::size_t> pivots;
};
HermiteForm hermite_form(const IntMatrix& m);

// Hermite normal form (same conventions, no transform) of a full-rank row lattice in Z^n, given a positive
// multiple of its determinant; all intermediate entries stay below that multiple.
IntMatrix hermite_form_modular(const IntMatrix& m, const Int& det_multiple);

// Z-basis (not reduced) of the integer kernel, computed on a maximal subset of rows independent mod a large
// prime and then checked exactly against every row (falls back to all rows if the check fails).
std::vector<IntVector> integer_kernel_selected(const IntMatrix& m);

// Some solution X of A X = B (free variables set to zero), or nothing if inconsistent.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);

// Characteristic polynomial det(x I - M), monic of degree n.
IntPoly charpoly(const IntMatrix& m);

// Incremental row echelon over F_ell; used to pick independent vectors greedily.
class ModEchelon {
 public:
  ModEchelon(std::size_t dim, std::uint64_t ell);
  // Adds v if it is independent of the rows so far; returns whether it was added.
  bool add(const IntVector& v);
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  // Pivot column of each stored row, in insertion order.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t dim_;
  std::uint64_t ell_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace modtors
