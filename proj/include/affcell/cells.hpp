#pragma once

#include <affcell/based_algebra.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcell {

enum class CellSide { TwoSided, Left, Right };

// Cells of a based algebra with respect to the preorder generated by
// b'' <= b' whenever b'' appears in x*b' or b'*x (two-sided; one factor for
// the one-sided versions). `cells` lists the classes in a chain order
// compatible with the preorder: lower cells first, so the union of the first
// j cells spans a two-sided ideal. `leq[i][j]` is the induced partial order
// on cells in that numbering.
struct CellDecomposition {
  std::vector<std::vector<int>> cells;  // members sorted by basis index
  std::vector<int> cell_of;             // basis index -> position in `cells`
  std::vector<std::vector<bool>> leq;

  int count() const { return static_cast<int>(cells.size()); }
};

namespace detail {

// reach[b][b'] = b' appears in some product with b as the moved factor,
// closed transitively: b' lies in the ideal generated by b.
inline std::vector<std::vector<bool>> descent_reach(const BasedAlgebra& alg,
                                                    CellSide side) {
  const int n = alg.rank();
  std::vector<std::set<int>> out(n);
  for (const auto& [xy, elem] : alg.products) {
    auto [x, y] = xy;
    for (const auto& [z, c] : elem) {
      (void)c;
      if (side != CellSide::Right) out[y].insert(z);  // left multiplication
      if (side != CellSide::Left) out[x].insert(z);   // right multiplication
    }
  }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (int src = 0; src < n; ++src) {
    std::vector<int> stack{src};
    reach[src][src] = true;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int z : out[b])
        if (!reach[src][z]) {
          reach[src][z] = true;
          stack.push_back(z);
        }
    }
  }
  return reach;
}

}  // namespace detail

// preorder[b][b'] = b lies below b' (b is in the ideal generated by b')
inline std::vector<std::vector<bool>> cell_preorder(const BasedAlgebra& alg,
                                                    CellSide side) {
  const int n = alg.rank();
  auto reach = detail::descent_reach(alg, side);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int b = 0; b < n; ++b)
    for (int b2 = 0; b2 < n; ++b2) leq[b][b2] = reach[b2][b];
  return leq;
}

inline CellDecomposition cell_decomposition(const BasedAlgebra& alg,
                                            CellSide side) {
  const int n = alg.rank();
  auto leq = cell_preorder(alg, side);

  std::vector<int> klass(n, -1);
  std::vector<std::vector<int>> raw;
  for (int b = 0; b < n; ++b) {
    if (klass[b] >= 0) continue;
    int id = static_cast<int>(raw.size());
    raw.push_back({});
    for (int b2 = b; b2 < n; ++b2)
      if (klass[b2] < 0 && leq[b][b2] && leq[b2][b]) {
        klass[b2] = id;
        raw[id].push_back(b2);
      }
  }
  const int f = static_cast<int>(raw.size());

  std::vector<std::vector<bool>> cell_leq(f, std::vector<bool>(f, false));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) cell_leq[i][j] = leq[raw[i][0]][raw[j][0]];

  // chain order: a cell is placed once every cell strictly below it is
  // placed; ties broken by (size, least member label)
  std::vector<int> order;
  std::vector<bool> placed(f, false);
  for (int step = 0; step < f; ++step) {
    int best = -1;
    for (int i = 0; i < f; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (int j = 0; j < f; ++j)
        if (j != i && !placed[j] && cell_leq[j][i]) ready = false;
      if (!ready) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      auto key = [&](int c) {
        const std::string* least = &alg.basis[raw[c][0]];
        for (int b : raw[c])
          if (alg.basis[b] < *least) least = &alg.basis[b];
        return std::pair<size_t, const std::string*>{raw[c].size(), least};
      };
      auto [sb, lb] = key(best);
      auto [si, li] = key(i);
      if (si < sb || (si == sb && *li < *lb)) best = i;
    }
    placed[best] = true;
    order.push_back(best);
  }

  CellDecomposition dec;
  dec.cells.resize(f);
  dec.cell_of.assign(n, -1);
  dec.leq.assign(f, std::vector<bool>(f, false));
  for (int pos = 0; pos < f; ++pos) {
    dec.cells[pos] = raw[order[pos]];
    for (int b : dec.cells[pos]) dec.cell_of[b] = pos;
  }
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) dec.leq[i][j] = cell_leq[order[i]][order[j]];
  return dec;
}

inline CellDecomposition two_sided_cells(const BasedAlgebra& alg) {
  return cell_decomposition(alg, CellSide::TwoSided);
}

inline CellDecomposition left_cells(const BasedAlgebra& alg) {
  return cell_decomposition(alg, CellSide::Left);
}

inline CellDecomposition right_cells(const BasedAlgebra& alg) {
  return cell_decomposition(alg, CellSide::Right);
}

// basis of the ideal spanned by the lowest j cells of the chain, 1-based
inline std::vector<int> cell_ideal_basis(const CellDecomposition& dec, int j) {
  if (j < 1 || j > dec.count())
    throw std::out_of_range("cell ideal index out of range: " +
                            std::to_string(j));
  std::vector<int> out;
  for (int i = 0; i < j; ++i)
    out.insert(out.end(), dec.cells[i].begin(), dec.cells[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

// the involution must permute the cells and preserve the cell order; a
// failure here marks a defective input table
inline Verdict check_cell_involution_map(const BasedAlgebra& alg,
                                         const CellDecomposition& dec) {
  const int f = dec.count();
  std::vector<int> image(f, -1);
  for (int i = 0; i < f; ++i) {
    std::set<int> mapped;
    for (int b : dec.cells[i]) mapped.insert(dec.cell_of[alg.involution[b]]);
    if (mapped.size() != 1 ||
        dec.cells[*mapped.begin()].size() != dec.cells[i].size())
      return Verdict::fail("involution does not map cell " +
                           std::to_string(i + 1) + " onto a single cell");
    image[i] = *mapped.begin();
  }
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j)
      if (dec.leq[i][j] != dec.leq[image[i]][image[j]])
        return Verdict::fail("involution does not preserve the cell order at (" +
                             std::to_string(i + 1) + ", " +
                             std::to_string(j + 1) + ")");
  return Verdict::ok();
}

}  // namespace affcell
