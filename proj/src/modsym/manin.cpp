#include "modtors/modsym/manin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "modtors/exact/bigint.hpp"

namespace modtors {

void sparse_axpy(SparseVec& acc, std::int64_t a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(acc.size() + x.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < x.size()) {
    if (j == x.size() || (i < acc.size() && acc[i].first < x[j].first)) {
      out.push_back(acc[i++]);
    } else if (i == acc.size() || x[j].first < acc[i].first) {
      out.emplace_back(x[j].first, a * x[j].second);
      ++j;
    } else {
      std::int64_t v = acc[i].second + a * x[j].second;
      if (v != 0) out.emplace_back(acc[i].first, v);
      ++i;
      ++j;
    }
  }
  acc = std::move(out);
}

Fraction Fraction::make(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::invalid_argument("Fraction: 0/0");
  if (b == 0) return infinity();
  std::int64_t g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (b < 0) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

std::string Fraction::to_string() const {
  if (is_infinity()) return "oo";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::pair<std::int64_t, std::int64_t>> convergents(const Fraction& x) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{0, 1}, {1, 0}};
  if (x.is_infinity()) return out;
  std::int64_t a = x.num, b = x.den;
  while (b != 0) {
    std::int64_t q = floor_div(a, b);
    std::int64_t r = a - q * b;
    auto [p1, q1] = out[out.size() - 1];
    auto [p2, q2] = out[out.size() - 2];
    out.emplace_back(q * p1 + p2, q * q1 + q2);
    a = b;
    b = r;
  }
  return out;
}

ManinQuotient::ManinQuotient(std::size_t n, const std::function<std::size_t(std::size_t)>& s,
                             const std::function<std::size_t(std::size_t)>& tau)
    : expr_(n), s_image_(n), tau_image_(n) {
  for (std::size_t i = 0; i < n; ++i) {
    s_image_[i] = s(i);
    tau_image_[i] = tau(i);
  }
  // Two-term relations: x = -xS; the smaller index of each pair is the variable.
  // sign[i] * var[i] is symbol i; var = n marks a killed symbol.
  std::vector<std::size_t> var(n, n);
  std::vector<std::int64_t> sign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = s_image_[i];
    if (j == i) continue;
    std::size_t r = std::min(i, j);
    var[i] = r;
    sign[i] = (i == r) ? 1 : -1;
  }
  // Three-term relations, solved with +-1 pivots.  solved[v] expresses variable v through the
  // variables that are still free; it is kept fully reduced.
  std::map<std::size_t, SparseVec> solved;
  auto reduce = [&](SparseVec rel) {
    SparseVec out;
    for (auto [v, c] : rel) {
      auto it = solved.find(v);
      if (it == solved.end())
        sparse_axpy(out, c, SparseVec{{static_cast<std::uint32_t>(v), 1}});
      else
        sparse_axpy(out, c, it->second);
    }
    return out;
  };
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t j = tau_image_[i], k = tau_image_[j];
    seen[i] = seen[j] = seen[k] = true;
    SparseVec rel;
    for (std::size_t x : (j == i ? std::vector<std::size_t>{i} : std::vector<std::size_t>{i, j, k}))
      if (var[x] != n) sparse_axpy(rel, sign[x], SparseVec{{static_cast<std::uint32_t>(var[x]), 1}});
    rel = reduce(rel);
    if (rel.empty()) continue;
    std::optional<std::size_t> pivot;
    for (auto it = rel.rbegin(); it != rel.rend(); ++it)
      if (it->second == 1 || it->second == -1) {
        pivot = it->first;
        break;
      }
    if (!pivot) throw std::runtime_error("ManinQuotient: relation without a unit pivot (torsion in the presentation)");
    std::int64_t c = 0;
    SparseVec rest;
    for (auto [v, a] : rel) {
      if (v == *pivot)
        c = a;
      else
        rest.emplace_back(v, a);
    }
    // c * x_pivot + rest = 0 with c = +-1, so x_pivot = -c * rest.
    SparseVec sol;
    sparse_axpy(sol, -c, rest);
    for (auto& [v, e] : solved) {
      auto it = std::lower_bound(e.begin(), e.end(), std::make_pair(static_cast<std::uint32_t>(*pivot), std::int64_t{0}),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it == e.end() || it->first != *pivot) continue;
      std::int64_t f = it->second;
      e.erase(it);
      sparse_axpy(e, f, sol);
    }
    solved.emplace(*pivot, std::move(sol));
  }
  std::vector<std::size_t> index_of(n, n);
  for (std::size_t i = 0; i < n; ++i)
    if (var[i] == i && !solved.count(i)) {
      index_of[i] = free_.size();
      free_.push_back(i);
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (var[i] == n) continue;
    SparseVec e = reduce(SparseVec{{static_cast<std::uint32_t>(var[i]), sign[i]}});
    SparseVec out;
    for (auto [v, c] : e) out.emplace_back(static_cast<std::uint32_t>(index_of[v]), c);
    std::sort(out.begin(), out.end());
    expr_[i] = std::move(out);
  }
}

IntMatrix ManinQuotient::relation_matrix() const {
  const std::size_t n = expr_.size();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector r(n, Int(0));
    r[i] += 1;
    r[s_image_[i]] += 1;
    rows.push_back(r);
    IntVector t(n, Int(0));
    t[i] += 1;
    t[tau_image_[i]] += 1;
    t[tau_image_[tau_image_[i]]] += 1;
    rows.push_back(t);
  }
  return IntMatrix::from_rows(rows, n);
}

std::uint64_t ManinQuotient::basis_hash() const {
  std::string s = std::to_string(expr_.size()) + ":";
  for (auto i : free_) s += std::to_string(i) + ",";
  s += "|";
  for (const auto& e : expr_) {
    for (auto [v, c] : e) s += std::to_string(v) + "*" + std::to_string(c) + " ";
    s += ";";
  }
  return fnv1a(s);
}

std::vector<Mat2> heilbronn_merel(std::uint64_t n) {
  std::vector<Mat2> out;
  const std::int64_t nn = static_cast<std::int64_t>(n);
  for (std::int64_t a = 1; a <= nn; ++a) {
    std::int64_t q = nn / a;
    if (q * a == nn) {
      std::int64_t d = q;
      for (std::int64_t b = 0; b < a; ++b) out.push_back({a, b, 0, d});
      for (std::int64_t c = 1; c < d; ++c) out.push_back({a, 0, c, d});
    }
    for (std::int64_t d = q + 1; d <= nn; ++d) {
      std::int64_t bc = a * d - nn;
      for (std::int64_t c = bc / a + 1; c < d; ++c)
        if (bc % c == 0) out.push_back({a, bc / c, c, d});
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& s, std::uint64_t h) {
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace modtors
