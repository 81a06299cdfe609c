#pragma once

#include <affcell/laurent.hpp>

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affcell {

// k-combination of basis elements, keyed by basis index. Zero coefficients
// are never stored.
using Element = std::map<int, LaurentPoly>;

struct Verdict {
  bool pass = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }
};

// Finite algebra over Z[v,v^-1] presented by a structure-constant table on a
// fixed basis, with a generalized unit (orthogonal idempotents indexed by
// `units`, every basis element living in a unique sector 1_a * A * 1_b) and a
// basis-permuting involution.
struct BasedAlgebra {
  std::vector<std::string> basis;
  std::vector<int> units;                      // indices into basis, sorted
  std::vector<std::pair<int, int>> sector;     // per basis element: (1_a, 1_b)
  std::vector<int> involution;                 // basis permutation
  std::map<std::pair<int, int>, Element> products;  // absent pair = zero

  int rank() const { return static_cast<int>(basis.size()); }

  const Element& product(int x, int y) const {
    static const Element zero;
    auto it = products.find({x, y});
    return it == products.end() ? zero : it->second;
  }

  bool is_unit(int b) const {
    for (int u : units)
      if (u == b) return true;
    return false;
  }

  int index_of(std::string_view label) const {
    for (int i = 0; i < rank(); ++i)
      if (basis[i] == label) return i;
    throw std::out_of_range("unknown basis label: " + std::string(label));
  }

  bool operator==(const BasedAlgebra&) const = default;
};

inline void elt_add_term(Element& e, int b, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

inline void elt_add(Element& e, const Element& o,
                    const LaurentPoly& scale = LaurentPoly(1)) {
  if (scale.is_zero()) return;
  for (const auto& [b, c] : o) elt_add_term(e, b, c * scale);
}

inline Element elt_basis(int b) { return Element{{b, LaurentPoly(1)}}; }

inline Element ba_multiply(const BasedAlgebra& alg, const Element& x,
                           const Element& y) {
  Element r;
  for (const auto& [bx, cx] : x)
    for (const auto& [by, cy] : y) elt_add(r, alg.product(bx, by), cx * cy);
  return r;
}

inline Element ba_involve(const BasedAlgebra& alg, const Element& x) {
  Element r;
  for (const auto& [b, c] : x) elt_add_term(r, alg.involution[b], c);
  return r;
}

inline Element ba_unit_element(const BasedAlgebra& alg) {
  Element r;
  for (int u : alg.units) elt_add_term(r, u, LaurentPoly(1));
  return r;
}

namespace detail {
inline std::string triple_str(const BasedAlgebra& a, int x, int y, int z) {
  return "(" + a.basis[x] + ", " + a.basis[y] + ", " + a.basis[z] + ")";
}
}  // namespace detail

// Unit orthogonality (1_a 1_b = delta 1_a), sector decomposition
// (1_a b = b exactly for a = sector(b).first, 0 for other units; same on the
// right), and the two-sided identity sum(1_a).
inline Verdict ba_check_generalized_unit(const BasedAlgebra& alg) {
  for (int u : alg.units)
    if (u < 0 || u >= alg.rank())
      return Verdict::fail("unit index out of range");
  for (int u : alg.units)
    if (alg.sector[u] != std::pair{u, u})
      return Verdict::fail("unit " + alg.basis[u] + " has sector outside the diagonal");
  for (int u : alg.units)
    for (int w : alg.units) {
      Element expected;
      if (u == w) expected = elt_basis(u);
      if (alg.product(u, w) != expected)
        return Verdict::fail("unit axiom fails at (" + alg.basis[u] + ", " +
                             alg.basis[w] + ")");
    }
  for (int b = 0; b < alg.rank(); ++b) {
    auto [lu, ru] = alg.sector[b];
    if (!alg.is_unit(lu) || !alg.is_unit(ru))
      return Verdict::fail("basis element " + alg.basis[b] +
                           " has a non-unit sector assignment");
    for (int u : alg.units) {
      Element expected_left = u == lu ? elt_basis(b) : Element{};
      if (alg.product(u, b) != expected_left)
        return Verdict::fail("sector decomposition fails at (" + alg.basis[u] +
                             ", " + alg.basis[b] + ")");
      Element expected_right = u == ru ? elt_basis(b) : Element{};
      if (alg.product(b, u) != expected_right)
        return Verdict::fail("sector decomposition fails at (" + alg.basis[b] +
                             ", " + alg.basis[u] + ")");
    }
    Element one = ba_unit_element(alg);
    Element eb = elt_basis(b);
    if (ba_multiply(alg, one, eb) != eb || ba_multiply(alg, eb, one) != eb)
      return Verdict::fail("sum of units is not an identity on " + alg.basis[b]);
  }
  return Verdict::ok();
}

// Support of b*b' must lie in the sector 1_{a(b)} A 1_{b(b')}, and vanish
// unless the inner units match.
inline Verdict ba_check_sector_closure(const BasedAlgebra& alg) {
  for (const auto& [xy, elem] : alg.products) {
    auto [x, y] = xy;
    for (const auto& [z, c] : elem) {
      (void)c;
      if (alg.sector[x].second != alg.sector[y].first)
        return Verdict::fail("nonzero product across mismatched sectors at " +
                             detail::triple_str(alg, x, y, z));
      if (alg.sector[z] !=
          std::pair{alg.sector[x].first, alg.sector[y].second})
        return Verdict::fail("product support leaves the sector at " +
                             detail::triple_str(alg, x, y, z));
    }
  }
  return Verdict::ok();
}

// involution as anti-automorphism: c_{x,y}^z = c_{i(y),i(x)}^{i(z)}
inline Verdict ba_check_involution(const BasedAlgebra& alg) {
  const int n = alg.rank();
  if (static_cast<int>(alg.involution.size()) != n)
    return Verdict::fail("involution is not defined on the whole basis");
  std::vector<int> seen(n, 0);
  for (int b = 0; b < n; ++b) {
    int i = alg.involution[b];
    if (i < 0 || i >= n) return Verdict::fail("involution image out of range");
    ++seen[i];
    if (alg.involution[i] != b)
      return Verdict::fail("involution is not an involution at " + alg.basis[b]);
  }
  for (int b = 0; b < n; ++b)
    if (seen[b] != 1) return Verdict::fail("involution is not a permutation");
  for (int u : alg.units)
    if (!alg.is_unit(alg.involution[u]))
      return Verdict::fail("involution moves unit " + alg.basis[u] +
                           " outside the unit set");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Element& direct = alg.product(x, y);
      const Element& swapped =
          alg.product(alg.involution[y], alg.involution[x]);
      if (direct.size() != swapped.size())
        return Verdict::fail("anti-automorphism identity fails at (" +
                             alg.basis[x] + ", " + alg.basis[y] + ")");
      for (const auto& [z, c] : direct) {
        auto it = swapped.find(alg.involution[z]);
        if (it == swapped.end() || it->second != c)
          return Verdict::fail("anti-automorphism identity fails at " +
                               detail::triple_str(alg, x, y, z));
      }
    }
  return Verdict::ok();
}

inline bool ba_assoc_triple(const BasedAlgebra& alg, int x, int y, int z) {
  Element lhs, rhs;
  for (const auto& [w, c] : alg.product(x, y)) elt_add(lhs, alg.product(w, z), c);
  for (const auto& [w, c] : alg.product(y, z)) elt_add(rhs, alg.product(x, w), c);
  return lhs == rhs;
}

// exhaustive up to max_exhaustive_rank, 10,000 seeded random triples beyond
inline Verdict ba_check_associativity(const BasedAlgebra& alg,
                                      int max_exhaustive_rank = 30,
                                      unsigned long seed = 0) {
  const int n = alg.rank();
  if (n <= max_exhaustive_rank) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!ba_assoc_triple(alg, x, y, z))
            return Verdict::fail("associativity fails at " +
                                 detail::triple_str(alg, x, y, z));
    return Verdict::ok();
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int iter = 0; iter < 10000; ++iter) {
    int x = pick(rng), y = pick(rng), z = pick(rng);
    if (!ba_assoc_triple(alg, x, y, z))
      return Verdict::fail("associativity fails at " +
                           detail::triple_str(alg, x, y, z));
  }
  return Verdict::ok();
}

}  // namespace affcell
