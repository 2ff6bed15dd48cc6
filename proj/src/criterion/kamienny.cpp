#include "modtors/criterion/kamienny.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "modtors/modsym/modsymH.hpp"

namespace modtors::criterion {

namespace {

constexpr std::size_t kExhaustiveKernelDim = 24;
constexpr std::uint64_t kSubsetBudget = 5'000'000;

void check_degree(const LevelData& level, std::size_t d) {
  if (d == 0) throw std::invalid_argument("Kamienny check: d must be positive");
  if (2 * d >= level.p) throw std::invalid_argument("Kamienny check: requires 2d < p");
}

// Flattened mod-2 images of T_i <k> t, memoized.
class Images {
 public:
  Images(const LevelData& level, const gf2::BitMatrix& t) : level_(level), t_(t) {}

  const gf2::BitVector& get(std::uint64_t k, std::size_t i) {
    auto key = std::make_pair(k, i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    gf2::BitMatrix m = gf2::BitMatrix::from_int(level_.T(i));
    if (k != 1) m = m * gf2::BitMatrix::from_int(level_.diamond(k));
    return cache_.emplace(key, (m * t_).flatten()).first->second;
  }

  std::size_t length() const { return t_.rows() * t_.cols(); }

 private:
  const LevelData& level_;
  gf2::BitMatrix t_;
  std::map<std::pair<std::uint64_t, std::size_t>, gf2::BitVector> cache_;
};

RankEvidence rank_of(Images& img, const std::vector<std::pair<std::uint64_t, std::size_t>>& ops, std::string label) {
  std::vector<gf2::BitVector> rows;
  for (const auto& [k, i] : ops) rows.push_back(img.get(k, i));
  RankEvidence ev;
  ev.label = std::move(label);
  ev.vectors = rows.size();
  ev.length = img.length();
  ev.rank = gf2::BitMatrix::from_rows(rows, img.length()).rank();
  ev.required = rows.size();
  return ev;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++idx[i - 1];
  for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

std::uint64_t binomial_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  long double b = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    b = b * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (b > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::uint64_t>(b + 0.5L);
}

}  // namespace

KamiennyResult kamienny_check_x0(const LevelData& level, std::size_t d, const gf2::BitMatrix& t) {
  check_degree(level, d);
  Images img(level, t);
  std::vector<std::pair<std::uint64_t, std::size_t>> ops;
  for (std::size_t i = 1; i <= d; ++i) ops.emplace_back(1, i);
  KamiennyResult out;
  out.evidence.push_back(rank_of(img, ops, "T_1..T_" + std::to_string(d) + " t"));
  out.checks = 1;
  out.passed = out.evidence.back().rank == d;
  if (!out.passed) out.failure = "T_i t dependent mod 2 (rank " + std::to_string(out.evidence.back().rank) + " < " + std::to_string(d) + ")";
  return out;
}

KamiennyResult kamienny_check_h(const LevelData& level, std::size_t d, const gf2::BitMatrix& t) {
  check_degree(level, d);
  if (level.model == "X0") return kamienny_check_x0(level, d, t);
  modsymH::SubgroupH h(level.p, level.h_generators);
  Images img(level, t);
  KamiennyResult out;
  out.passed = true;
  for (const auto& sum : modsymH::enumerate_ordered_cusp_sums(h, d)) {
    std::vector<std::pair<std::uint64_t, std::size_t>> ops;
    std::string label;
    for (const auto& [cls, mult] : sum.terms) {
      // <k> moves the cusp of class k to oo
      const std::uint64_t k = h.class_reps()[cls];
      for (std::size_t i = 1; i <= mult; ++i) ops.emplace_back(k, i);
      label += (label.empty() ? "" : "+") + std::to_string(mult) + "*c" + std::to_string(k);
    }
    RankEvidence ev = rank_of(img, ops, label);
    ++out.checks;
    if (out.evidence.empty() || ev.rank < out.evidence[0].rank) out.evidence.assign(1, ev);
    if (ev.rank < d) {
      out.passed = false;
      out.failure = "dependent operators for cusp sum " + label;
      return out;
    }
  }
  return out;
}

std::vector<std::pair<std::uint64_t, std::size_t>> faster_index_set(const std::vector<std::uint64_t>& classes, std::size_t d,
                                                                    std::size_t r) {
  if (r < d / 2 || r > d) throw std::invalid_argument("faster_index_set: r out of range");
  std::vector<std::pair<std::uint64_t, std::size_t>> out;
  for (std::size_t i = d - r + 1; i <= r; ++i) out.emplace_back(1, i);
  for (std::size_t i = 1; i <= d - r; ++i)
    for (auto k : classes) out.emplace_back(k, i);
  return out;
}

std::optional<std::size_t> minimum_dependency_weight(const gf2::BitMatrix& rows, std::size_t bound) {
  std::vector<gf2::BitVector> kernel = rows.left_kernel();
  if (kernel.empty()) return bound + 1;
  if (kernel.size() <= kExhaustiveKernelDim) {
    // Gray-code walk over all nonzero combinations
    gf2::BitVector acc(rows.rows());
    std::size_t best = rows.rows() + 1;
    const std::uint64_t total = std::uint64_t{1} << kernel.size();
    for (std::uint64_t step = 1; step < total; ++step) {
      acc ^= kernel[static_cast<std::size_t>(std::countr_zero(step))];
      best = std::min(best, acc.weight());
    }
    return std::min(best, bound + 1);
  }
  const std::size_t n = rows.rows();
  std::uint64_t work = 0;
  for (std::size_t k = 1; k <= std::min(bound, n); ++k) {
    work += binomial_capped(n, k, kSubsetBudget);
    if (work > kSubsetBudget) return std::nullopt;
  }
  for (std::size_t k = 1; k <= std::min(bound, n); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t j = 0; j < k; ++j) idx[j] = j;
    do {
      std::vector<gf2::BitVector> sub;
      for (auto j : idx) sub.push_back(rows.row(j));
      if (gf2::BitMatrix::from_rows(sub, rows.cols()).rank() < k) return k;
    } while (next_subset(idx, n));
  }
  return bound + 1;
}

KamiennyResult kamienny_check_h_fast(const LevelData& level, std::size_t d, const gf2::BitMatrix& t) {
  check_degree(level, d);
  std::vector<std::uint64_t> classes = level.model == "X0" ? std::vector<std::uint64_t>{1} : level.diamond_classes;
  Images img(level, t);
  KamiennyResult out;
  out.passed = true;
  // every ordered sum with leading multiplicity n lies in D_max(n, d - n), so r >= ceil(d/2) suffices;
  // for odd d the extra set D_floor(d/2) contains D_ceil(d/2) and would only add spurious dependencies
  for (std::size_t r = (d + 1) / 2; r <= d; ++r) {
    auto ops = faster_index_set(classes, d, r);
    std::vector<gf2::BitVector> rows;
    for (const auto& [k, i] : ops) rows.push_back(img.get(k, i));
    gf2::BitMatrix m = gf2::BitMatrix::from_rows(rows, img.length());
    RankEvidence ev;
    ev.label = "D_" + std::to_string(r);
    ev.vectors = rows.size();
    ev.length = img.length();
    ev.rank = m.rank();
    ev.required = std::min(rows.size(), d);
    out.evidence.push_back(ev);
    ++out.checks;
    auto w = minimum_dependency_weight(m, d);
    if (!w) {
      out.passed = false;
      out.failure = "dependency search for D_" + std::to_string(r) + " exceeds the budget";
      return out;
    }
    if (*w <= d) {
      out.passed = false;
      out.failure = "D_" + std::to_string(r) + " has a dependency of weight " + std::to_string(*w);
      return out;
    }
  }
  return out;
}

}  // namespace modtors::criterion
