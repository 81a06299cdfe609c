#pragma once

#include <string>

// hand-written table documents used across the test binaries

inline std::string fixture_s2_hecke() {
  return R"({
  "basis": ["c_e", "cs"],
  "units": ["c_e"],
  "sector": {"c_e": ["c_e", "c_e"], "cs": ["c_e", "c_e"]},
  "involution": {"c_e": "c_e", "cs": "cs"},
  "products": [
    {"left": "c_e", "right": "c_e", "result": [{"basis": "c_e", "coeff": "1"}]},
    {"left": "c_e", "right": "cs", "result": [{"basis": "cs", "coeff": "1"}]},
    {"left": "cs", "right": "c_e", "result": [{"basis": "cs", "coeff": "1"}]},
    {"left": "cs", "right": "cs",
     "result": [{"basis": "cs", "coeff": "1*v^1 + 1*v^-1"}]}
  ]
})";
}

inline std::string fixture_z2_group() {
  return R"({
  "basis": ["e", "g"],
  "units": ["e"],
  "sector": {"e": ["e", "e"], "g": ["e", "e"]},
  "involution": {"e": "e", "g": "g"},
  "products": [
    {"left": "e", "right": "e", "result": [{"basis": "e", "coeff": "1"}]},
    {"left": "e", "right": "g", "result": [{"basis": "g", "coeff": "1"}]},
    {"left": "g", "right": "e", "result": [{"basis": "g", "coeff": "1"}]},
    {"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]}
  ]
})";
}

// 2x2 matrix units over Z with the transpose involution; two units, so the
// sector machinery is exercised beyond the single-unit case
inline std::string fixture_matrix_units(const std::string& involution = R"({
    "E11": "E11", "E12": "E21", "E21": "E12", "E22": "E22"})") {
  return R"({
  "basis": ["E11", "E12", "E21", "E22"],
  "units": ["E11", "E22"],
  "sector": {"E11": ["E11", "E11"], "E12": ["E11", "E22"],
             "E21": ["E22", "E11"], "E22": ["E22", "E22"]},
  "involution": )" +
         involution + R"(,
  "products": [
    {"left": "E11", "right": "E11", "result": [{"basis": "E11", "coeff": "1"}]},
    {"left": "E11", "right": "E12", "result": [{"basis": "E12", "coeff": "1"}]},
    {"left": "E12", "right": "E21", "result": [{"basis": "E11", "coeff": "1"}]},
    {"left": "E12", "right": "E22", "result": [{"basis": "E12", "coeff": "1"}]},
    {"left": "E21", "right": "E11", "result": [{"basis": "E21", "coeff": "1"}]},
    {"left": "E21", "right": "E12", "result": [{"basis": "E22", "coeff": "1"}]},
    {"left": "E22", "right": "E21", "result": [{"basis": "E21", "coeff": "1"}]},
    {"left": "E22", "right": "E22", "result": [{"basis": "E22", "coeff": "1"}]}
  ]
})";
}

// loads cleanly, but associativity breaks at (a, a, a): (aa)a = ba = 0 while
// a(aa) = ab = a
inline std::string fixture_nonassociative() {
  return R"({
  "basis": ["e", "a", "b"],
  "units": ["e"],
  "sector": {"e": ["e", "e"], "a": ["e", "e"], "b": ["e", "e"]},
  "involution": {"e": "e", "a": "a", "b": "b"},
  "products": [
    {"left": "e", "right": "e", "result": [{"basis": "e", "coeff": "1"}]},
    {"left": "e", "right": "a", "result": [{"basis": "a", "coeff": "1"}]},
    {"left": "e", "right": "b", "result": [{"basis": "b", "coeff": "1"}]},
    {"left": "a", "right": "e", "result": [{"basis": "a", "coeff": "1"}]},
    {"left": "b", "right": "e", "result": [{"basis": "b", "coeff": "1"}]},
    {"left": "a", "right": "a", "result": [{"basis": "b", "coeff": "1"}]},
    {"left": "a", "right": "b", "result": [{"basis": "a", "coeff": "1"}]}
  ]
})";
}

inline std::string fixture_unit_axiom_failure() {
  return R"({
  "basis": ["e", "g"],
  "units": ["e"],
  "sector": {"e": ["e", "e"], "g": ["e", "e"]},
  "involution": {"e": "e", "g": "g"},
  "products": [
    {"left": "e", "right": "g", "result": [{"basis": "g", "coeff": "1"}]},
    {"left": "g", "right": "e", "result": [{"basis": "g", "coeff": "1"}]},
    {"left": "g", "right": "g", "result": [{"basis": "e", "coeff": "1"}]}
  ]
})";
}

inline std::string fixture_sector_violation() {
  return R"({
  "basis": ["E11", "E12", "E21", "E22"],
  "units": ["E11", "E22"],
  "sector": {"E11": ["E11", "E11"], "E12": ["E11", "E22"],
             "E21": ["E22", "E11"], "E22": ["E22", "E22"]},
  "involution": {"E11": "E11", "E12": "E21", "E21": "E12", "E22": "E22"},
  "products": [
    {"left": "E11", "right": "E11", "result": [{"basis": "E11", "coeff": "1"}]},
    {"left": "E11", "right": "E12", "result": [{"basis": "E12", "coeff": "1"}]},
    {"left": "E12", "right": "E21", "result": [{"basis": "E11", "coeff": "1"}]},
    {"left": "E12", "right": "E22", "result": [{"basis": "E12", "coeff": "1"}]},
    {"left": "E21", "right": "E11", "result": [{"basis": "E21", "coeff": "1"}]},
    {"left": "E21", "right": "E12", "result": [{"basis": "E22", "coeff": "1"}]},
    {"left": "E22", "right": "E21", "result": [{"basis": "E21", "coeff": "1"}]},
    {"left": "E22", "right": "E22", "result": [{"basis": "E22", "coeff": "1"}]},
    {"left": "E12", "right": "E12", "result": [{"basis": "E21", "coeff": "1"}]}
  ]
})";
}
