#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modtors/criterion/level_data.hpp"
#include "modtors/exact/matrix.hpp"
#include "modtors/exact/poly.hpp"

namespace modtors::criterion {

// Z-span L of the collected Hecke operators (and diamonds) inside End(H_1), with a Z-basis b_1..b_g.
// Elements of L are given by integer coordinates in that basis.  Coordinates are read off at g
// flattened matrix positions on which projection is injective over Q.
class HeckeLattice {
 public:
  explicit HeckeLattice(const LevelData& level);

  std::size_t rank() const { return rank_; }
  std::size_t matrix_size() const { return n_; }
  const std::vector<std::size_t>& positions() const { return positions_; }
  IntVector project(const IntMatrix& m) const;

  // sum_i y_i b_i
  IntMatrix element(const IntVector& y) const;
  // Matrix with column i equal to D b_i v, for the fixed positive integer D = scale().
  IntMatrix apply_basis_scaled(const IntVector& v) const;
  const Int& scale() const { return den_; }
  // Coordinates of a matrix lying in L (nullopt if it does not).
  std::optional<IntVector> coordinates(const IntMatrix& m) const;
  // scale() times row r of b_i.
  IntVector basis_row_scaled(std::size_t i, std::size_t r) const;
  // Projection of the product x y, read from the needed rows of x and columns of y.
  IntVector project_product(const IntMatrix& x, const IntMatrix& y) const;

 private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::size_t> positions_;
  std::vector<IntMatrix> independent_;  // generators independent over Q
  IntMatrix coeff_;                     // b_i = (1/den) sum_k coeff(i,k) independent_[k]
  Int den_ = 1;
  IntMatrix hermite_;                   // projected basis, one row per b_i
};

struct WindingAnnihilator {
  // Q-basis of A_e = {s in L_Q : s e = 0}, as primitive integer coordinate vectors.
  std::vector<IntVector> ae;
  // Z-basis of Ann(A_e) meet L, in lattice coordinates.
  std::vector<IntVector> ann;
  // The A_e basis as matrices.
  std::vector<IntMatrix> ae_matrices;
};

WindingAnnihilator winding_annihilator(const HeckeLattice& lattice, const RatVector& e);

// True iff t a = 0 for every a in the A_e basis.  t must lie in the Q-span of the Hecke operators, on which
// the lattice projection is injective, so the products are compared through their projections.
bool kills_ae(const HeckeLattice& lattice, const IntMatrix& t, const WindingAnnihilator& w);

struct T1Candidate {
  std::string recipe;
  IntVector coordinates;  // lattice coordinates; empty when built from a polynomial recipe
  IntMatrix matrix;
};

// Ann(A_e) basis elements first, then b_i + b_j and b_i - b_j for i < j, up to budget entries.
// Every returned candidate has been checked to kill A_e.
std::vector<T1Candidate> t1_candidates(const HeckeLattice& lattice, const WindingAnnihilator& w, std::size_t budget = 40);

// Polynomial recipe without factoring: with P the characteristic polynomial of t on cusp forms
// (its square is the one on H_1), A the product of its simple factors, B = P / A and m_e the minimal
// polynomial of t on e, returns B(t) (A / gcd(A, m_e))(t).
struct PolynomialT1 {
  IntPoly p, simple_part, rest, e_minimal;
  IntMatrix matrix;
};
PolynomialT1 t1_from_polynomial(const IntMatrix& t, const RatVector& e);

// T_q - <q> - q; rejects q = 2, q = p and composite q.
IntMatrix t2_element(const LevelData& level, std::uint64_t q);

}  // namespace modtors::criterion
