#pragma once

#include <cstdint>
#include <vector>

#include "modtors/modsym/cuspidal.hpp"
#include "modtors/modsym/manin.hpp"

namespace modtors::modsym0 {

// Point (c : d) of P^1(F_p), normalized to (k : 1) or (1 : 0).
struct ManinIndex {
  std::uint64_t c;
  std::uint64_t d;
  bool operator==(const ManinIndex& o) const = default;
};

// Genus of X_0(p) from the index and elliptic-point counts.
std::size_t genus_x0(std::uint64_t p);

// Lambda-symbol intersection number lambda(k) . lambda(k2) from the H-function formula.
std::int64_t lambda_intersection(std::uint64_t p, std::uint64_t k, std::uint64_t k2);

// Modular symbols for Gamma_0(p): relative homology H_1(X_0(p), cusps; Z) presented by Manin symbols.
// Cusps of the boundary map are ordered (oo, 0).
class Gamma0Space : public HeckeSource {
 public:
  explicit Gamma0Space(std::uint64_t p);

  std::uint64_t level() const override { return p_; }
  std::size_t dimension() const { return quotient_.rank(); }
  std::size_t cuspidal_rank() const override { return cusp_.rank(); }
  const ManinQuotient& quotient() const { return quotient_; }
  const CuspidalLattice& cuspidal() const { return cusp_; }

  std::size_t symbol_index(std::int64_t c, std::int64_t d) const;
  ManinIndex manin_index(std::size_t i) const;
  IntVector symbol_vector(std::int64_t c, std::int64_t d) const;

  const IntMatrix& boundary_matrix() const { return boundary_; }
  IntVector boundary(const IntVector& v) const { return boundary_ * v; }
  RatVector boundary(const RatVector& v) const { return to_rational(boundary_) * v; }
  bool is_cuspidal(const RatVector& v) const { return is_zero(boundary(v)); }

  IntVector lambda_symbol(std::int64_t k) const { return symbol_vector(k, 1); }
  IntVector path_symbol(const Fraction& from, const Fraction& to) const;

  // T_n on the relative space via Heilbronn-Merel matrices.
  IntMatrix hecke_matrix(std::uint64_t n) const;
  IntMatrix cuspidal_hecke(std::uint64_t n) const override { return cusp_.restrict(hecke_matrix(n)); }
  IntMatrix cuspidal_diamond(std::uint64_t) const override { return IntMatrix::identity(cuspidal_rank()); }
  std::vector<std::uint64_t> diamond_classes() const override { return {1}; }

  // -sum lambda(c/d) over a > b >= 0, d > c > 0, ad - bc = r; requires 1 <= r < p.
  IntVector merel_Ire(std::uint64_t r) const;

  // e with (T_2 - 3) e = merel_Ire(2) on the cuspidal space; relative coordinates.
  RatVector winding_element() const;
  RatVector cuspidal_winding() const override;

  // Intersection pairing of cuspidal vectors (relative coordinates).
  Rat pairing(const RatVector& v, const RatVector& w) const;
  Int pairing(const IntVector& v, const IntVector& w) const;
  // Gram matrix of the pairing on the cuspidal basis.
  IntMatrix gram_matrix() const;

  std::uint64_t basis_hash() const override { return quotient_.basis_hash(); }
  std::string model_name() const override { return "X0"; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> inv_;
  ManinQuotient quotient_;
  IntMatrix boundary_;
  CuspidalLattice cusp_;
  IntMatrix basis_gram_;  // lambda pairing between basis symbols (zero rows for non-cuspidal ones)
};

inline Gamma0Space build_space(std::uint64_t p) { return Gamma0Space(p); }

}  // namespace modtors::modsym0
