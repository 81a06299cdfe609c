#pragma once

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

// n-periodic nonnegative integer matrix: a_{i+n, j+n} = a_{i,j}, finitely
// many nonzero entries per period; stored on the window i in [1, n]
struct PeriodicMatrix {
  int n = 0;
  std::map<std::pair<int, long>, long> entries;

  bool operator==(const PeriodicMatrix&) const = default;
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

// shift (i, j) by multiples of n until i lands in [1, n]
inline std::pair<int, long> pm_normal(int n, long i, long j) {
  long t = floor_div(i - 1, n);
  return {static_cast<int>(i - t * n), j - t * n};
}

}  // namespace detail

inline void pm_set(PeriodicMatrix& A, long i, long j, long value) {
  if (A.n <= 0) throw std::invalid_argument("period must be positive");
  if (value < 0) throw std::invalid_argument("entries must be nonnegative");
  auto key = detail::pm_normal(A.n, i, j);
  if (value == 0)
    A.entries.erase(key);
  else
    A.entries[key] = value;
}

inline long pm_at(const PeriodicMatrix& A, long i, long j) {
  auto it = A.entries.find(detail::pm_normal(A.n, i, j));
  return it == A.entries.end() ? 0 : it->second;
}

inline long pm_total(const PeriodicMatrix& A) {
  long r = 0;
  for (const auto& [ij, a] : A.entries) {
    (void)ij;
    r += a;
  }
  return r;
}

// d_A = sum over i >= k, j < l, 1 <= i <= n of a_{i,j} a_{k,l}; for a stored
// pair of entries the translates (k0 + tn, l0 + tn) contribute exactly for
// t in the interval ((j - l0)/n, (i - k0)/n], a finite count by floor division
inline long d_stat(const PeriodicMatrix& A) {
  long total = 0;
  for (const auto& [ij, a] : A.entries) {
    const auto& [i, j] = ij;
    for (const auto& [kl, b] : A.entries) {
      const auto& [k0, l0] = kl;
      long hi = detail::floor_div(i - k0, A.n);
      long lo = detail::floor_div(j - l0, A.n);
      if (hi > lo) total += a * b * (hi - lo);
    }
  }
  return total;
}

// r(A)_i and c(A)_j over one period window [1, n]
inline std::pair<std::vector<long>, std::vector<long>> row_col_sums(
    const PeriodicMatrix& A) {
  std::vector<long> rows(A.n, 0), cols(A.n, 0);
  for (const auto& [ij, a] : A.entries) {
    const auto& [i, j] = ij;
    rows[i - 1] += a;
    long jw = j - detail::floor_div(j - 1, A.n) * A.n;
    cols[jw - 1] += a;
  }
  return {rows, cols};
}

inline PeriodicMatrix pm_transpose(const PeriodicMatrix& A) {
  PeriodicMatrix T;
  T.n = A.n;
  for (const auto& [ij, a] : A.entries) pm_set(T, ij.second, ij.first, a);
  return T;
}

inline nlohmann::ordered_json pm_to_json(const PeriodicMatrix& A) {
  nlohmann::ordered_json doc;
  doc["n"] = A.n;
  auto& list = doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& [ij, a] : A.entries)
    list.push_back({ij.first, ij.second, a});
  return doc;
}

inline PeriodicMatrix pm_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries") ||
      !doc["n"].is_number_integer() || !doc["entries"].is_array())
    throw std::invalid_argument("periodic matrix wants {n, entries}");
  PeriodicMatrix A;
  A.n = doc["n"].get<int>();
  if (A.n <= 0) throw std::invalid_argument("period must be positive");
  for (const auto& e : doc["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number_integer())
      throw std::invalid_argument("entry wants (i, j, value)");
    long i = e[0].get<long>(), j = e[1].get<long>(), a = e[2].get<long>();
    if (pm_at(A, i, j) != 0)
      throw std::invalid_argument("duplicate entry at (" + std::to_string(i) +
                                  ", " + std::to_string(j) + ")");
    pm_set(A, i, j, a);
  }
  return A;
}

}  // namespace affcell
