#include "hodgecone/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "hodgecone/qpoly.hpp"

namespace hodgecone {

HodgeDiamond projective_space(int n) {
  if (n < 1) throw InputError("projective space needs n >= 1");
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(2 * p, p, p, 1);
  return d;
}

HodgeDiamond curve(int genus) {
  if (genus < 0) throw InputError("curve needs genus >= 0");
  HodgeDiamond d(1);
  d.set(0, 0, 0, 1);
  d.set(2, 1, 1, 1);
  if (genus > 0) {
    d.set(1, 1, 0, genus);
    d.set(1, 0, 1, genus);
  }
  return d;
}

HodgeDiamond quadric(int n) {
  if (n < 1) throw InputError("quadric needs n >= 1");
  HodgeDiamond d(n);
  for (int p = 0; p <= n; ++p) d.set(2 * p, p, p, 1);
  if (n % 2 == 0) d.set(n, n / 2, n / 2, 1);
  return d;
}

HodgeDiamond grassmannian(int k, int n) {
  if (k <= 0 || k >= n) throw InputError("grassmannian needs 0 < k < n");
  auto counts = q_binomial(n, k);
  int dim = k * (n - k);
  HodgeDiamond d(dim);
  for (const auto& [p, c] : counts.terms()) d.set(2 * p, p, p, c);
  return d;
}

namespace {

std::vector<CatalogEntry> make_builtins() {
  std::vector<CatalogEntry> out;
  auto add = [&out](const std::string& name, HodgeDiamond dia,
                    const std::string& prov) {
    validate_diamond(dia);
    out.push_back({name, std::move(dia), prov});
  };
  add("p1", projective_space(1), "projective_space(1)");
  add("p2", projective_space(2), "projective_space(2)");
  add("p3", projective_space(3), "projective_space(3)");
  add("p4", projective_space(4), "projective_space(4)");
  add("quadric2", quadric(2), "quadric(2)");
  add("quadric3", quadric(3), "quadric(3)");
  add("quadric4", quadric(4), "quadric(4)");
  add("elliptic", curve(1), "curve(1)");
  add("genus2", curve(2), "curve(2)");
  add("genus3", curve(3), "curve(3)");
  add("p1xp1", kunneth_product(projective_space(1), projective_space(1)),
      "kunneth(p1,p1)");
  add("p1xelliptic", kunneth_product(projective_space(1), curve(1)),
      "kunneth(p1,elliptic)");
  add("p3xp1", kunneth_product(projective_space(3), projective_space(1)),
      "kunneth(p3,p1)");
  add("gr24", grassmannian(2, 4), "grassmannian(2,4)");
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = make_builtins();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : builtin_catalog())
    if (e.name == name) return e;
  throw InputError("unknown catalog entry: " + name);
}

CatalogEntry parse_diamond_json(const std::string& text,
                                const std::string& origin) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(origin + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("dim") || !j.contains("hodge"))
    throw InputError(origin + ": expected object with \"dim\" and \"hodge\"");
  if (!j["dim"].is_number_integer())
    throw InputError(origin + ": \"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 0) throw InputError(origin + ": negative \"dim\"");

  // Collect entries, then complete by duality; explicit duplicates of the
  // same slot must agree.
  std::map<std::tuple<int, int, int>, long long> given;
  if (!j["hodge"].is_array())
    throw InputError(origin + ": \"hodge\" must be an array");
  for (const auto& row : j["hodge"]) {
    if (!row.is_array() || row.size() != 4 || !row[0].is_number_integer() ||
        !row[1].is_number_integer() || !row[2].is_number_integer() ||
        !row[3].is_number_integer())
      throw InputError(origin + ": each hodge row must be [k, p, q, dim]");
    int k = row[0].get<int>(), p = row[1].get<int>(), q = row[2].get<int>();
    long long v = row[3].get<long long>();
    if (k < 0 || k > 2 * dim)
      throw InputError(origin + ": degree " + std::to_string(k) +
                       " out of range");
    if (v < 0) throw InputError(origin + ": negative dimension entry");
    auto [it, fresh] = given.insert({{k, p, q}, v});
    if (!fresh && it->second != v)
      throw InputError(origin + ": conflicting entries for H^" +
                       std::to_string(k));
  }
  for (const auto& [key, v] : given) {
    auto [k, p, q] = key;
    std::tuple<int, int, int> dual{2 * dim - k, dim - p, dim - q};
    auto it = given.find(dual);
    if (it != given.end() && it->second != v)
      throw InputError(origin + ": Poincare duality conflict at H^" +
                       std::to_string(k));
  }

  HodgeDiamond d(dim);
  std::map<std::tuple<int, int, int>, long long> filled = given;
  for (const auto& [key, v] : given) {
    auto [k, p, q] = key;
    filled[{2 * dim - k, dim - p, dim - q}] = v;
  }
  for (const auto& [key, v] : filled) {
    auto [k, p, q] = key;
    d.set(k, p, q, v);
  }
  validate_diamond(d);

  CatalogEntry out{"file", std::move(d), origin};
  if (j.contains("rhm")) {
    if (!j["rhm"].is_boolean())
      throw InputError(origin + ": \"rhm\" must be a boolean");
    out.rhm = j["rhm"].get<bool>();
  }
  if (j.contains("hrh_bound")) {
    const auto& hb = j["hrh_bound"];
    if (hb.is_string()) {
      out.hrh_bound = ExtendedLevel::parse(hb.get<std::string>());
    } else if (hb.is_number_integer()) {
      int v = hb.get<int>();
      if (v < 0) throw InputError(origin + ": \"hrh_bound\" must be >= 0");
      out.hrh_bound = ExtendedLevel::finite(v);
    } else {
      throw InputError(origin + ": \"hrh_bound\" must be an integer or \"inf\"");
    }
  } else if (!out.rhm) {
    out.hrh_bound = ExtendedLevel::finite(0);
  }
  if (out.rhm && !(out.hrh_bound == ExtendedLevel::inf()))
    throw InputError(origin + ": rhm entries must have hrh_bound \"inf\"");
  return out;
}

CatalogEntry load_diamond(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_diamond_json(buf.str(), path);
}

std::string diamond_to_json(const CatalogEntry& entry) {
  nlohmann::ordered_json j;
  j["dim"] = entry.diamond.dim();
  auto rows = nlohmann::ordered_json::array();
  for (int k = 0; k <= 2 * entry.diamond.dim(); ++k)
    for (const auto& [pq, v] : entry.diamond.level(k).table())
      rows.push_back({k, pq.p, pq.q, v});
  j["hodge"] = rows;
  j["rhm"] = entry.rhm;
  if (entry.hrh_bound.is_inf())
    j["hrh_bound"] = "inf";
  else
    j["hrh_bound"] = entry.hrh_bound.value();
  return j.dump(2);
}

void save_diamond(const CatalogEntry& entry, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << diamond_to_json(entry) << "\n";
}

}  // namespace hodgecone
