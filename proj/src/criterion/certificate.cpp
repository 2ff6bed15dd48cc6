#include "modtors/criterion/certificate.hpp"

#include <stdexcept>

#include "modtors/criterion/winding.hpp"
#include "modtors/exact/gf2.hpp"
#include "modtors/pointcount/waterhouse.hpp"

namespace modtors::criterion {

namespace {

constexpr const char* kSoundnessNote =
    "independence is tested on the action on H_1 (x) F_2; a pass implies independence in the Hecke algebra mod 2, "
    "a failure is inconclusive";

struct Candidate {
  std::string recipe;
  IntVector coordinates;
  gf2::BitMatrix mod2;
};

std::vector<Candidate> candidates(const LevelData& level, const HeckeLattice& lattice, const WindingAnnihilator& ann,
                                  const Strategy& s) {
  std::vector<Candidate> out;
  if (s.recipe == T1Recipe::annihilator) {
    for (auto& c : t1_candidates(lattice, ann, s.t1_budget)) out.push_back({c.recipe, c.coordinates, gf2::BitMatrix::from_int(c.matrix)});
    return out;
  }
  for (std::uint64_t n = s.poly_n_min; n <= s.poly_n_max; ++n) {
    if (n % level.p == 0) continue;
    PolynomialT1 t1 = t1_from_polynomial(level.T(n), level.winding);
    if (t1.matrix.is_zero()) continue;
    if (!kills_ae(lattice, t1.matrix, ann)) throw std::logic_error("exclude_prime: polynomial recipe does not kill A_e");
    out.push_back({"t1(T_" + std::to_string(n) + ")", {}, gf2::BitMatrix::from_int(t1.matrix)});
  }
  return out;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::excluded ? "excluded" : "inconclusive"; }

ExclusionCertificate exclude_prime(const LevelData& level, std::size_t d, const Strategy& strategy) {
  if (d == 0 || d > 7) throw std::invalid_argument("exclude_prime: d must lie in 1..7");
  ExclusionCertificate c;
  c.d = d;
  c.p = level.p;
  c.model = level.model;
  c.h_generators = level.h_generators;
  c.variant = level.model == "X0" ? "x0" : (strategy.fast ? "h-fast" : "h-full");
  c.basis_hash = level.basis_hash;
  c.hecke_bound = level.bound;
  c.genus = level.genus();

  for (unsigned k = 1; k <= d; ++k)
    c.pointcount.push_back({k, pointcount::waterhouse_empty(level.p, 2, k), pointcount::cusp_field_condition(level.p, 2, k)});
  c.condition3 = pointcount::condition3_holds(level.p, static_cast<unsigned>(d));

  if (2 * d >= level.p) {
    c.reason = "Kamienny check needs 2d < p";
    if (!c.condition3) c.reason += "; point-count condition fails";
    return c;
  }
  HeckeLattice lattice(level);
  WindingAnnihilator ann = winding_annihilator(lattice, level.winding);
  c.dim_ae = ann.ae.size();
  c.dim_ann = ann.ann.size();

  std::vector<std::pair<std::uint64_t, gf2::BitMatrix>> t2s;
  for (auto q : strategy.t2_primes) {
    if (q == 2 || q == level.p) continue;
    t2s.emplace_back(q, gf2::BitMatrix::from_int(t2_element(level, q)));
  }
  auto check = [&](const gf2::BitMatrix& t) {
    if (level.model == "X0") return kamienny_check_x0(level, d, t);
    return strategy.fast ? kamienny_check_h_fast(level, d, t) : kamienny_check_h(level, d, t);
  };
  bool passed = false;
  for (const auto& t1 : candidates(level, lattice, ann, strategy)) {
    for (const auto& [q, t2] : t2s) {
      ++c.pairs_tried;
      c.kamienny = check(t1.mod2 * t2);
      c.t1_recipe = t1.recipe;
      c.t1_coordinates.clear();
      for (const auto& x : t1.coordinates) c.t1_coordinates.push_back(x.get_str());
      c.t2_q = q;
      c.t2_formula = "T_" + std::to_string(q) + " - <" + std::to_string(q) + "> - " + std::to_string(q);
      if (c.kamienny.passed) {
        passed = true;
        break;
      }
    }
    if (passed) break;
  }
  c.pair_found = passed;

  std::vector<std::string> failed;
  if (c.pairs_tried == 0)
    failed.push_back("no (t1, t2) candidates");
  else if (!passed)
    failed.push_back("no pair passes the independence check on H_1 (x) F_2 (criterion not verified by this method)");
  if (!c.condition3) failed.push_back("point-count condition fails");
  for (const auto& f : failed) c.reason += (c.reason.empty() ? "" : "; ") + f;
  if (failed.empty()) c.verdict = Verdict::excluded;
  return c;
}

nlohmann::json ExclusionCertificate::to_json() const {
  nlohmann::json j;
  j["format"] = "modtors-certificate-v1";
  j["d"] = d;
  j["p"] = p;
  j["model"] = model;
  j["h_generators"] = h_generators;
  j["variant"] = variant;
  j["verdict"] = to_string(verdict);
  j["reason"] = reason;
  j["t1"] = {{"recipe", t1_recipe}, {"coordinates", t1_coordinates}};
  j["t2"] = {{"q", t2_q}, {"formula", t2_formula}};
  j["pair_found"] = pair_found;
  j["pairs_tried"] = pairs_tried;
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& e : kamienny.evidence)
    ev.push_back({{"operators", e.label}, {"vectors", e.vectors}, {"length", e.length}, {"rank", e.rank}, {"required", e.required}, {"ell", e.ell}});
  j["independence"] = {{"passed", kamienny.passed}, {"checks", kamienny.checks}, {"failure", kamienny.failure}, {"evidence", ev},
                       {"note", kSoundnessNote}};
  nlohmann::json pc = nlohmann::json::array();
  for (const auto& r : pointcount)
    pc.push_back({{"degree", r.degree}, {"no_noncuspidal_points", r.no_noncuspidal_points}, {"cusps_rational", r.cusps_rational}});
  j["pointcount"] = {{"ell", 2}, {"per_degree", pc}, {"holds", condition3}};
  j["lattice"] = {{"basis_hash", std::to_string(basis_hash)}, {"hecke_bound", hecke_bound}, {"genus", genus}, {"dim_ae", dim_ae}, {"dim_ann", dim_ann}};
  return j;
}

}  // namespace modtors::criterion
