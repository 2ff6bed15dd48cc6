#pragma once

#include <optional>

#include "modtors/exact/matrix.hpp"

namespace modtors {

// Saturated sublattice ker(boundary) of the relative lattice, with coordinates on its basis.
class CuspidalLattice {
 public:
  CuspidalLattice() = default;
  explicit CuspidalLattice(const IntMatrix& boundary);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return dim_; }
  // Basis vectors in the relative coordinates, in Hermite normal form.
  const std::vector<IntVector>& basis() const { return basis_; }
  IntMatrix basis_matrix() const;  // columns are basis vectors

  // Coordinates of v on the basis, or nothing if v is not in the rational span.
  std::optional<RatVector> coordinates(const RatVector& v) const;
  std::optional<IntVector> coordinates(const IntVector& v) const;
  RatVector lift(const RatVector& c) const;
  IntVector lift(const IntVector& c) const;
  // Matrix of an operator on the relative space restricted to the lattice (must preserve it).
  IntMatrix restrict(const IntMatrix& op) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivots_;
};

// What the criterion layer needs from a modular-symbol space.
class HeckeSource {
 public:
  virtual ~HeckeSource() = default;
  virtual std::uint64_t level() const = 0;
  virtual std::size_t cuspidal_rank() const = 0;
  virtual IntMatrix cuspidal_hecke(std::uint64_t n) const = 0;
  virtual IntMatrix cuspidal_diamond(std::uint64_t k) const = 0;
  // Representatives of (Z/p)^* / +-H, starting with 1.
  virtual std::vector<std::uint64_t> diamond_classes() const = 0;
  // Winding element on the cuspidal basis.
  virtual RatVector cuspidal_winding() const = 0;
  virtual std::uint64_t basis_hash() const = 0;
  virtual std::string model_name() const = 0;
};

}  // namespace modtors
