#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modtors/modsym/cuspidal.hpp"
#include "modtors/modsym/manin.hpp"

namespace modtors::modsymH {

// Subgroup +-H of (Z/p)^* generated by the given elements and -1.
class SubgroupH {
 public:
  SubgroupH(std::uint64_t p, const std::vector<std::uint64_t>& generators);
  std::uint64_t prime() const { return p_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(std::uint64_t x) const { return member_[x % p_]; }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  // Number of classes of (Z/p)^* / +-H.
  std::size_t index() const { return (p_ - 1) / elements_.size(); }
  // Class id of x (0 for the class of 1) and the least positive representative of each class.
  std::size_t class_of(std::uint64_t x) const;
  const std::vector<std::uint64_t>& class_reps() const { return reps_; }
  std::vector<std::uint64_t> sorted_generators() const { return gens_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> gens_;
  std::vector<bool> member_;
  std::vector<std::uint64_t> elements_;
  std::vector<std::size_t> class_;
  std::vector<std::uint64_t> reps_;
};

// Genus of X_H from the Riemann-Hurwitz count over the j-line.
std::size_t genus_xh(const SubgroupH& h);

// A cusp of X_H: above oo (p | denominator) classified by the numerator, above 0 by the denominator.
struct Cusp {
  bool above_infinity;
  std::size_t cls;  // class in (Z/p)^* / +-H
  bool operator==(const Cusp& o) const = default;
};

// Effective divisor of degree d supported on the cusps above oo, written as (cusp class, multiplicity)
// pairs sorted by decreasing multiplicity then class.
struct OrderedCuspSum {
  std::vector<std::pair<std::size_t, std::size_t>> terms;
  std::size_t degree() const;
  bool operator==(const OrderedCuspSum& o) const = default;
  auto operator<=>(const OrderedCuspSum& o) const = default;
};

// Modular symbols for Gamma_H(p), p >= 5 prime: Manin symbols (c, d) modulo +-H.
class GammaHSpace : public HeckeSource {
 public:
  GammaHSpace(std::uint64_t p, const std::vector<std::uint64_t>& generators);

  std::uint64_t level() const override { return p_; }
  const SubgroupH& subgroup() const { return h_; }
  std::size_t dimension() const { return quotient_.rank(); }
  std::size_t cuspidal_rank() const override { return cusp_.rank(); }
  const ManinQuotient& quotient() const { return quotient_; }
  const CuspidalLattice& cuspidal() const { return cusp_; }

  std::size_t symbol_count() const { return reps_.size(); }
  std::size_t symbol_index(std::int64_t c, std::int64_t d) const;
  std::pair<std::uint64_t, std::uint64_t> symbol_rep(std::size_t i) const { return reps_[i]; }
  IntVector symbol_vector(std::int64_t c, std::int64_t d) const;
  IntVector path_symbol(const Fraction& from, const Fraction& to) const;

  // Cusps are indexed 0..m-1 above oo and m..2m-1 above 0.
  std::size_t cusp_count() const { return 2 * h_.index(); }
  std::size_t cusp_id(const Cusp& c) const { return c.above_infinity ? c.cls : h_.index() + c.cls; }
  Cusp cusp_of(const Fraction& x) const;
  // Cusps (end, start) of the symbol (c, d) = {b/d, a/c}.
  std::pair<Cusp, Cusp> symbol_cusps(std::uint64_t c, std::uint64_t d) const;
  const IntMatrix& boundary_matrix() const { return boundary_; }
  bool is_cuspidal(const RatVector& v) const { return is_zero(to_rational(boundary_) * v); }
  // Class of the cusp <k> c for a cusp c above oo, consistent with diamond_matrix.
  std::size_t diamond_on_infinity_cusp(std::uint64_t k, std::size_t cls) const;
  // Some k with <k> (cusp cls above oo) = oo, as the class representative.
  std::uint64_t diamond_to_infinity(std::size_t cls) const;

  IntMatrix hecke_matrix(std::uint64_t n) const;
  IntMatrix diamond_matrix(std::uint64_t k) const;
  IntMatrix cuspidal_hecke(std::uint64_t n) const override { return cusp_.restrict(hecke_matrix(n)); }
  IntMatrix cuspidal_diamond(std::uint64_t k) const override { return cusp_.restrict(diamond_matrix(k)); }
  std::vector<std::uint64_t> diamond_classes() const override { return h_.class_reps(); }

  // Computed at construction.  e = -(f(T_q) restricted to cuspidal)^{-1} f(T_q) {0, oo}, f the squarefree characteristic polynomial of
  // T_q on the boundary quotient; q = 2 unless f(T_2) is singular on the cuspidal space.
  RatVector winding_element() const;
  RatVector cuspidal_winding() const override;
  std::uint64_t winding_prime() const;

  std::uint64_t basis_hash() const override;
  std::string model_name() const override { return "XH"; }

 private:
  void compute_winding();

  std::uint64_t p_;
  SubgroupH h_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> reps_;
  std::vector<std::uint32_t> index_;  // c * p + d -> symbol id
  ManinQuotient quotient_;
  IntMatrix boundary_;
  CuspidalLattice cusp_;
  std::optional<RatVector> winding_;
  std::string winding_error_;
  std::uint64_t winding_q_ = 0;
};

// Ordered cusp sums of degree d.  With normalize set, one representative per class under simultaneous
// diamond translation: the lexicographically least translate, whose first cusp is oo (class 0).
std::vector<OrderedCuspSum> enumerate_ordered_cusp_sums(const SubgroupH& h, std::size_t d, bool normalize = true);

}  // namespace modtors::modsymH
