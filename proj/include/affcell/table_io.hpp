#pragma once

#include <affcell/based_algebra.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace affcell {

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const nlohmann::json& doc_field(const nlohmann::json& doc,
                                       const char* key,
                                       const char* expected_type) {
  auto it = doc.find(key);
  if (it == doc.end())
    throw LoadError(std::string("schema violation: missing field '") + key + "'");
  const char* t = expected_type;
  bool ok = (std::string(t) == "array" && it->is_array()) ||
            (std::string(t) == "object" && it->is_object());
  if (!ok)
    throw LoadError(std::string("schema violation: field '") + key +
                    "' must be a " + expected_type);
  return *it;
}

inline std::string doc_string(const nlohmann::json& node, const char* where) {
  if (!node.is_string())
    throw LoadError(std::string("schema violation: expected a string in ") + where);
  return node.get<std::string>();
}

}  // namespace detail

// Table document: single object with fields basis, units, sector, involution,
// products; absent products mean zero. Coefficients use the textual Laurent
// form. Hard structural failures and violated unit/sector invariants raise
// LoadError; algebra-level properties (involution identity, associativity)
// are reported by the analysis checks instead.
inline BasedAlgebra ba_from_json(const nlohmann::json& doc) {
  if (!doc.is_object())
    throw LoadError("schema violation: document is not an object");
  static const std::set<std::string> known = {"basis", "units", "sector",
                                              "involution", "products"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key()))
      throw LoadError("schema violation: unknown field '" + it.key() + "'");

  BasedAlgebra alg;
  std::map<std::string, int> index;

  const auto& basis = detail::doc_field(doc, "basis", "array");
  for (const auto& node : basis) {
    std::string label = detail::doc_string(node, "'basis'");
    if (label.empty())
      throw LoadError("schema violation: empty basis label");
    if (!index.emplace(label, alg.rank()).second)
      throw LoadError("schema violation: duplicate basis label '" + label + "'");
    alg.basis.push_back(label);
  }
  if (alg.basis.empty())
    throw LoadError("schema violation: empty basis");

  auto lookup = [&](const std::string& label, const char* where) {
    auto it = index.find(label);
    if (it == index.end())
      throw LoadError(std::string("schema violation: unknown basis label '") +
                      label + "' in " + where);
    return it->second;
  };

  const auto& units = detail::doc_field(doc, "units", "array");
  std::set<int> unit_set;
  for (const auto& node : units) {
    int u = lookup(detail::doc_string(node, "'units'"), "'units'");
    if (!unit_set.insert(u).second)
      throw LoadError("schema violation: duplicate unit '" + alg.basis[u] + "'");
  }
  if (unit_set.empty())
    throw LoadError("schema violation: empty unit set");
  alg.units.assign(unit_set.begin(), unit_set.end());

  const auto& sector = detail::doc_field(doc, "sector", "object");
  alg.sector.assign(alg.rank(), {-1, -1});
  for (auto it = sector.begin(); it != sector.end(); ++it) {
    int b = lookup(it.key(), "'sector'");
    if (!it.value().is_array() || it.value().size() != 2)
      throw LoadError("sector inconsistency: sector of '" + it.key() +
                      "' must be a pair of unit labels");
    int lu = lookup(detail::doc_string(it.value()[0], "'sector'"), "'sector'");
    int ru = lookup(detail::doc_string(it.value()[1], "'sector'"), "'sector'");
    if (!unit_set.count(lu) || !unit_set.count(ru))
      throw LoadError("sector inconsistency: sector of '" + it.key() +
                      "' refers to a non-unit label");
    alg.sector[b] = {lu, ru};
  }
  for (int b = 0; b < alg.rank(); ++b)
    if (alg.sector[b].first < 0)
      throw LoadError("sector inconsistency: no sector assigned to '" +
                      alg.basis[b] + "'");

  const auto& involution = detail::doc_field(doc, "involution", "object");
  alg.involution.assign(alg.rank(), -1);
  for (auto it = involution.begin(); it != involution.end(); ++it) {
    int b = lookup(it.key(), "'involution'");
    alg.involution[b] =
        lookup(detail::doc_string(it.value(), "'involution'"), "'involution'");
  }
  for (int b = 0; b < alg.rank(); ++b) {
    if (alg.involution[b] < 0)
      throw LoadError("schema violation: involution undefined on '" +
                      alg.basis[b] + "'");
    if (alg.involution[alg.involution[b]] != b)
      throw LoadError("schema violation: involution is not an involution at '" +
                      alg.basis[b] + "'");
  }
  for (int u : alg.units)
    if (!unit_set.count(alg.involution[u]))
      throw LoadError("unit-axiom failure: involution moves unit '" +
                      alg.basis[u] + "' outside the unit set");

  const auto& products = detail::doc_field(doc, "products", "array");
  for (const auto& rec : products) {
    if (!rec.is_object() || rec.size() != 3 || !rec.contains("left") ||
        !rec.contains("right") || !rec.contains("result"))
      throw LoadError(
          "schema violation: product record must have fields left, right, result");
    int x = lookup(detail::doc_string(rec["left"], "'products'"), "'products'");
    int y = lookup(detail::doc_string(rec["right"], "'products'"), "'products'");
    if (alg.products.count({x, y}))
      throw LoadError("schema violation: duplicate product record for (" +
                      alg.basis[x] + ", " + alg.basis[y] + ")");
    if (!rec["result"].is_array())
      throw LoadError("schema violation: product result must be a list");
    Element elem;
    for (const auto& term : rec["result"]) {
      if (!term.is_object() || term.size() != 2 || !term.contains("basis") ||
          !term.contains("coeff"))
        throw LoadError(
            "schema violation: result term must have fields basis, coeff");
      int z = lookup(detail::doc_string(term["basis"], "'products'"),
                     "'products'");
      if (elem.count(z))
        throw LoadError("schema violation: duplicate result term for (" +
                        alg.basis[x] + ", " + alg.basis[y] + ", " +
                        alg.basis[z] + ")");
      LaurentPoly c;
      try {
        c = LaurentPoly::parse(detail::doc_string(term["coeff"], "'products'"));
      } catch (const FormatError& e) {
        throw LoadError("schema violation: bad coefficient at (" +
                        alg.basis[x] + ", " + alg.basis[y] + ", " +
                        alg.basis[z] + "): " + e.what());
      }
      if (!c.is_zero()) elem.emplace(z, std::move(c));
    }
    if (!elem.empty()) alg.products.emplace(std::pair{x, y}, std::move(elem));
  }

  if (Verdict v = ba_check_generalized_unit(alg); !v)
    throw LoadError("unit-axiom failure: " + v.witness);
  if (Verdict v = ba_check_sector_closure(alg); !v)
    throw LoadError("sector inconsistency: " + v.witness);
  return alg;
}

inline nlohmann::ordered_json ba_to_json(const BasedAlgebra& alg) {
  nlohmann::ordered_json doc;
  doc["basis"] = alg.basis;
  nlohmann::ordered_json units = nlohmann::ordered_json::array();
  for (int u : alg.units) units.push_back(alg.basis[u]);
  doc["units"] = std::move(units);
  nlohmann::ordered_json sector = nlohmann::ordered_json::object();
  for (int b = 0; b < alg.rank(); ++b)
    sector[alg.basis[b]] = {alg.basis[alg.sector[b].first],
                            alg.basis[alg.sector[b].second]};
  doc["sector"] = std::move(sector);
  nlohmann::ordered_json involution = nlohmann::ordered_json::object();
  for (int b = 0; b < alg.rank(); ++b)
    involution[alg.basis[b]] = alg.basis[alg.involution[b]];
  doc["involution"] = std::move(involution);
  nlohmann::ordered_json products = nlohmann::ordered_json::array();
  for (const auto& [xy, elem] : alg.products) {
    if (elem.empty()) continue;
    nlohmann::ordered_json rec;
    rec["left"] = alg.basis[xy.first];
    rec["right"] = alg.basis[xy.second];
    nlohmann::ordered_json result = nlohmann::ordered_json::array();
    for (const auto& [z, c] : elem)
      result.push_back({{"basis", alg.basis[z]}, {"coeff", c.to_string()}});
    rec["result"] = std::move(result);
    products.push_back(std::move(rec));
  }
  doc["products"] = std::move(products);
  return doc;
}

inline BasedAlgebra ba_load_stream(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("schema violation: not a valid document: ") +
                    e.what());
  }
  return ba_from_json(doc);
}

inline BasedAlgebra ba_load_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("schema violation: not a valid document: ") +
                    e.what());
  }
  return ba_from_json(doc);
}

inline BasedAlgebra ba_load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open table document: " + path);
  return ba_load_stream(in);
}

inline void ba_save_stream(const BasedAlgebra& alg, std::ostream& out) {
  out << ba_to_json(alg).dump(2) << "\n";
}

inline void ba_save_file(const BasedAlgebra& alg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw LoadError("cannot write table document: " + path);
  ba_save_stream(alg, out);
}

}  // namespace affcell
