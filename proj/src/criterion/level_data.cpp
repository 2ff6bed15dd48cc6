#include "modtors/criterion/level_data.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "json.hpp"
#include "modtors/exact/linalg.hpp"
#include "modtors/exact/prime_field.hpp"
#include "modtors/modsym/manin.hpp"
#include "modtors/modsym/modsymH.hpp"

namespace modtors::criterion {

namespace {

constexpr const char* kFormat = "modtors-level-v1";
constexpr std::uint64_t kBigPrime = 2305843009213693951ULL;  // 2^61 - 1

nlohmann::json matrix_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(r);
  }
  return rows;
}

IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw std::runtime_error("bad matrix");
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw std::runtime_error("bad matrix row");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = Int(j[i][k].get<std::string>());
  }
  return m;
}

std::string body_checksum(const nlohmann::json& body) {
  return std::to_string(fnv1a(body.dump()));
}

}  // namespace

const IntMatrix& LevelData::T(std::uint64_t n) const {
  auto it = hecke.find(n);
  if (it == hecke.end()) throw std::out_of_range("LevelData::T: T_" + std::to_string(n) + " not collected");
  return it->second;
}

IntMatrix LevelData::diamond(std::uint64_t k) const {
  if (k % p == 0) throw std::invalid_argument("LevelData::diamond: k must be prime to p");
  if (model == "X0") return IntMatrix::identity(cuspidal_rank);
  // class representatives are the least positive elements of their +-H cosets
  modsymH::SubgroupH h(p, h_generators);
  auto it = diamonds.find(h.class_reps()[h.class_of(k)]);
  if (it == diamonds.end()) throw std::out_of_range("LevelData::diamond: missing class representative");
  return it->second;
}

LevelData collect_level_data(const HeckeSource& src, const std::vector<std::uint64_t>& h_generators, std::size_t min_bound) {
  LevelData out;
  out.model = src.model_name();
  out.p = src.level();
  out.h_generators = h_generators;
  std::sort(out.h_generators.begin(), out.h_generators.end());
  out.basis_hash = src.basis_hash();
  out.cuspidal_rank = src.cuspidal_rank();
  out.diamond_classes = src.diamond_classes();
  out.winding = src.cuspidal_winding();
  const std::size_t n2 = out.cuspidal_rank * out.cuspidal_rank;
  const std::size_t g = out.genus();
  ModEchelon ech(n2, kBigPrime);
  auto add = [&](const IntMatrix& m) { ech.add(flatten(m)); };
  if (out.model != "X0")
    for (auto k : out.diamond_classes) {
      out.diamonds.emplace(k, src.cuspidal_diamond(k));
      add(out.diamonds.at(k));
    }
  const std::size_t start = std::max<std::size_t>(min_bound, (out.p + 5) / 6 + 2);
  const std::size_t cap = std::max<std::size_t>(start, out.p * out.p / 6 + 40);
  std::size_t n = 0;
  while (true) {
    ++n;
    if (n > cap) throw std::runtime_error("collect_level_data: Hecke span did not reach dimension " + std::to_string(g));
    if (n % out.p == 0) continue;
    out.hecke.emplace(n, src.cuspidal_hecke(n));
    add(out.hecke.at(n));
    if (n >= start && ech.rank() == g) break;
    if (ech.rank() > g) throw std::logic_error("collect_level_data: Hecke span exceeds the genus");
  }
  out.bound = n;
  out.hecke_rank = ech.rank();
  return out;
}

std::string cache_file_name(const std::string& model, std::uint64_t p, const std::vector<std::uint64_t>& h_generators) {
  std::vector<std::uint64_t> h = h_generators;
  std::sort(h.begin(), h.end());
  std::string name = model + "_" + std::to_string(p);
  for (auto x : h) name += "_" + std::to_string(x);
  return name + ".json";
}

void save_level_data(const LevelData& d, const std::filesystem::path& file) {
  nlohmann::json body;
  body["model"] = d.model;
  body["p"] = d.p;
  body["h_generators"] = d.h_generators;
  body["basis_hash"] = std::to_string(d.basis_hash);
  body["cuspidal_rank"] = d.cuspidal_rank;
  body["bound"] = d.bound;
  body["hecke_rank"] = d.hecke_rank;
  body["diamond_classes"] = d.diamond_classes;
  nlohmann::json hk = nlohmann::json::object();
  for (const auto& [n, m] : d.hecke) hk[std::to_string(n)] = matrix_json(m);
  body["hecke"] = hk;
  nlohmann::json dm = nlohmann::json::object();
  for (const auto& [k, m] : d.diamonds) dm[std::to_string(k)] = matrix_json(m);
  body["diamonds"] = dm;
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : d.winding) w.push_back(x.get_str());
  body["winding"] = w;
  nlohmann::json doc;
  doc["format"] = kFormat;
  doc["body"] = body;
  doc["checksum"] = body_checksum(body);
  std::filesystem::create_directories(file.parent_path().empty() ? std::filesystem::path(".") : file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("save_level_data: cannot write " + tmp.string());
    os << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, file);
}

std::optional<LevelData> load_level_data(const std::filesystem::path& file, const std::string& model, std::uint64_t p,
                                         const std::vector<std::uint64_t>& h_generators, std::uint64_t basis_hash) {
  std::ifstream is(file);
  if (!is) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(is);
    if (doc.at("format") != kFormat) return std::nullopt;
    const auto& body = doc.at("body");
    if (doc.at("checksum").get<std::string>() != body_checksum(body)) return std::nullopt;
    std::vector<std::uint64_t> h = h_generators;
    std::sort(h.begin(), h.end());
    LevelData d;
    d.model = body.at("model").get<std::string>();
    d.p = body.at("p").get<std::uint64_t>();
    d.h_generators = body.at("h_generators").get<std::vector<std::uint64_t>>();
    d.basis_hash = std::stoull(body.at("basis_hash").get<std::string>());
    if (d.model != model || d.p != p || d.h_generators != h || d.basis_hash != basis_hash) return std::nullopt;
    d.cuspidal_rank = body.at("cuspidal_rank").get<std::size_t>();
    d.bound = body.at("bound").get<std::size_t>();
    d.hecke_rank = body.at("hecke_rank").get<std::size_t>();
    d.diamond_classes = body.at("diamond_classes").get<std::vector<std::uint64_t>>();
    for (const auto& [k, v] : body.at("hecke").items()) d.hecke.emplace(std::stoull(k), matrix_from_json(v, d.cuspidal_rank));
    for (const auto& [k, v] : body.at("diamonds").items()) d.diamonds.emplace(std::stoull(k), matrix_from_json(v, d.cuspidal_rank));
    for (const auto& x : body.at("winding")) d.winding.emplace_back(x.get<std::string>());
    for (auto& x : d.winding) x.canonicalize();
    if (d.winding.size() != d.cuspidal_rank) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace modtors::criterion
