#pragma once

#include <affcell/asymptotic.hpp>
#include <affcell/based_algebra.hpp>
#include <affcell/cells.hpp>

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

template <typename R>
using Matrix = std::vector<std::vector<R>>;

template <typename R>
inline Matrix<R> zero_matrix(int n) {
  return Matrix<R>(n, std::vector<R>(n));
}

// n x n matrices over a commutative base ring with involution sigma, with
// the product twisted through the form matrix: x . y = x Psi y
template <typename R>
struct GenMatrixAlgebra {
  int n = 0;
  Matrix<R> psi;
  std::function<R(const R&)> sigma = [](const R& x) { return x; };
  std::string base_desc = "k";
};

template <typename R>
inline Matrix<R> mat_mult(const Matrix<R>& a, const Matrix<R>& b) {
  int n = static_cast<int>(a.size());
  if (b.size() != a.size())
    throw std::invalid_argument("matrix shape mismatch");
  Matrix<R> r = zero_matrix<R>(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n ||
        static_cast<int>(b[i].size()) != n)
      throw std::invalid_argument("matrix shape mismatch");
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == R{}) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

template <typename R>
inline Matrix<R> gm_multiply(const Matrix<R>& x, const Matrix<R>& y,
                             const GenMatrixAlgebra<R>& g) {
  return mat_mult(mat_mult(x, g.psi), y);
}

// kappa: E_{jl}(b) -> E_{lj}(sigma(b))
template <typename R>
inline Matrix<R> gm_involution(const Matrix<R>& x,
                               const GenMatrixAlgebra<R>& g) {
  int n = static_cast<int>(x.size());
  Matrix<R> r = zero_matrix<R>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[j][i] = g.sigma(x[i][j]);
  return r;
}

// sigma(Psi_{jl}) = Psi_{lj}; exactly the condition for kappa to be an
// anti-automorphism of (M_n(B), Psi)
template <typename R>
inline Verdict gm_check_sigma_rho(const GenMatrixAlgebra<R>& g) {
  for (int j = 0; j < g.n; ++j)
    for (int l = 0; l < g.n; ++l)
      if (g.sigma(g.psi[j][l]) != g.psi[l][j])
        return Verdict::fail("form matrix not sigma-symmetric at (" +
                             std::to_string(j + 1) + ", " +
                             std::to_string(l + 1) + ")");
  return Verdict::ok();
}

// bijection cell <-> {1..n} x {1..n} (trivial irreducible component): rows
// follow right-cell membership and columns left-cell membership, each side
// indexed by the distinguished idempotent it contains
struct CellLabeling {
  int n = 0;
  std::map<int, std::pair<int, int>> position;  // basis -> (row, col)
  std::map<std::pair<int, int>, int> member;    // inverse map
};

inline CellLabeling cell_labeling_from_sides(const BasedAlgebra& alg,
                                             const AsymptoticAlgebra& asy,
                                             const CellDecomposition& left,
                                             const CellDecomposition& right) {
  if (asy.distinguished.empty())
    throw std::runtime_error("no distinguished set to index the labeling");
  CellLabeling lab;
  lab.n = static_cast<int>(asy.distinguished.size());
  std::map<int, int> row_of_rcell, col_of_lcell;
  for (int i = 0; i < lab.n; ++i) {
    int d = asy.distinguished[i];
    if (!row_of_rcell.emplace(right.cell_of[d], i).second ||
        !col_of_lcell.emplace(left.cell_of[d], i).second)
      throw std::runtime_error(
          "one-sided cell contains two distinguished idempotents near " +
          alg.basis[d]);
  }
  for (int b : asy.cell) {
    auto r = row_of_rcell.find(right.cell_of[b]);
    auto c = col_of_lcell.find(left.cell_of[b]);
    if (r == row_of_rcell.end() || c == col_of_lcell.end())
      throw std::runtime_error(
          "one-sided cell without a distinguished idempotent at " +
          alg.basis[b]);
    std::pair<int, int> pos{r->second, c->second};
    lab.position[b] = pos;
    if (!lab.member.emplace(pos, b).second)
      throw std::runtime_error("labeling collision at " + alg.basis[b]);
  }
  return lab;
}

inline Matrix<LaurentPoly> element_matrix(const CellLabeling& lab,
                                          const Element& x) {
  Matrix<LaurentPoly> m = zero_matrix<LaurentPoly>(lab.n);
  for (const auto& [b, c] : x) {
    auto [j, l] = lab.position.at(b);
    m[j][l] = c;
  }
  return m;
}

inline Element matrix_element(const CellLabeling& lab,
                              const Matrix<LaurentPoly>& m) {
  Element x;
  for (int j = 0; j < lab.n; ++j)
    for (int l = 0; l < lab.n; ++l)
      if (!m[j][l].is_zero()) elt_add_term(x, lab.member.at({j, l}), m[j][l]);
  return x;
}

inline GenMatrixAlgebra<LaurentPoly> psi_matrix_algebra(
    const AsymptoticAlgebra& asy, const BasedAlgebra& alg,
    const CellLabeling& lab) {
  GenMatrixAlgebra<LaurentPoly> g;
  g.n = lab.n;
  g.psi = element_matrix(lab, compute_psi(asy, alg));
  g.base_desc = "k";
  return g;
}

// the cell's multiplication table against the twisted matrix product, plus
// the involution clause label(i(b)) = swapped label(b)
inline Verdict verify_cell_realization(const BasedAlgebra& alg,
                                       const std::vector<int>& cell,
                                       const CellLabeling& lab,
                                       const GenMatrixAlgebra<LaurentPoly>& g) {
  if (g.n != lab.n)
    return Verdict::fail("matrix algebra size does not match the labeling");
  if (static_cast<int>(cell.size()) != lab.n * lab.n ||
      lab.position.size() != cell.size() || lab.member.size() != cell.size())
    return Verdict::fail("labeling not bijective");
  std::set<int> members(cell.begin(), cell.end());
  for (int b : cell)
    if (!lab.position.count(b)) return Verdict::fail("labeling not bijective");

  for (int b : cell) {
    int ib = alg.involution[b];
    if (!members.count(ib))
      return Verdict::fail("involution leaves the cell at " + alg.basis[b]);
    auto [j, l] = lab.position.at(b);
    if (lab.position.at(ib) != std::pair{l, j})
      return Verdict::fail("involution does not transpose the label of " +
                           alg.basis[b]);
  }

  for (int b : cell)
    for (int b2 : cell) {
      Matrix<LaurentPoly> side = gm_multiply(
          element_matrix(lab, elt_basis(b)),
          element_matrix(lab, elt_basis(b2)), g);
      Element within;
      for (const auto& [z, c] : alg.product(b, b2))
        if (members.count(z)) elt_add_term(within, z, c);
      if (element_matrix(lab, within) != side)
        return Verdict::fail("product mismatch at (" + alg.basis[b] + ", " +
                             alg.basis[b2] + ")");
    }
  return Verdict::ok();
}

struct ChainReport {
  std::vector<Verdict> ideal;               // prefix spans a two-sided ideal
  std::vector<Verdict> involution_stable;   // i fixes each layer setwise
  std::vector<Verdict> quotient;            // layer products fall no higher
  Verdict covers;

  bool pass() const {
    if (!covers.pass) return false;
    for (const auto& v : ideal)
      if (!v.pass) return false;
    for (const auto& v : involution_stable)
      if (!v.pass) return false;
    for (const auto& v : quotient)
      if (!v.pass) return false;
    return true;
  }
};

inline ChainReport assemble_cell_chain(const BasedAlgebra& alg,
                                       const CellDecomposition& dec) {
  ChainReport report;
  std::vector<char> seen(alg.rank(), 0);
  for (const auto& cell : dec.cells)
    for (int b : cell) ++seen[b];
  report.covers = Verdict::ok();
  for (int b = 0; b < alg.rank(); ++b)
    if (seen[b] != 1) {
      report.covers = Verdict::fail("cells do not partition the basis at " +
                                    alg.basis[b]);
      break;
    }

  for (int j = 1; j <= dec.count(); ++j) {
    std::set<int> ideal;
    for (int i = 0; i < j; ++i)
      ideal.insert(dec.cells[i].begin(), dec.cells[i].end());

    Verdict closed = Verdict::ok();
    for (const auto& [xy, elem] : alg.products) {
      auto [x, y] = xy;
      if (!ideal.count(x) && !ideal.count(y)) continue;
      for (const auto& [z, c] : elem) {
        (void)c;
        if (!ideal.count(z)) {
          closed = Verdict::fail("layer " + std::to_string(j) +
                                 " support escapes at " +
                                 detail::triple_str(alg, x, y, z));
          break;
        }
      }
      if (!closed.pass) break;
    }
    report.ideal.push_back(closed);

    Verdict stable = Verdict::ok();
    std::set<int> layer(dec.cells[j - 1].begin(), dec.cells[j - 1].end());
    for (int b : layer)
      if (!layer.count(alg.involution[b])) {
        stable = Verdict::fail("involution moves " + alg.basis[b] +
                               " out of its cell");
        break;
      }
    report.involution_stable.push_back(stable);

    Verdict quot = Verdict::ok();
    for (int b : layer) {
      for (int b2 : layer)
        for (const auto& [z, c] : alg.product(b, b2)) {
          (void)c;
          if (!ideal.count(z)) {
            quot = Verdict::fail(
                "quotient constants ill-defined: support climbs at " +
                detail::triple_str(alg, b, b2, z));
            break;
          }
        }
      if (!quot.pass) break;
    }
    report.quotient.push_back(quot);
  }
  return report;
}

struct CellIdealReport {
  Verdict ideal_closed;
  Verdict involution_stable;
  Verdict sigma_rho;
  Verdict realization;
  Verdict involution_matrix;  // kappa(E(b)) corresponds to E(i(b))

  bool pass() const {
    return ideal_closed.pass && involution_stable.pass && sigma_rho.pass &&
           realization.pass && involution_matrix.pass;
  }
};

// affine cell ideal shape for the j-th layer (1-based): the prefix is
// an involution-stable ideal and the layer is the generalized matrix algebra
// with the elementwise involution correspondence
inline CellIdealReport verify_affine_cell_ideal(
    const BasedAlgebra& alg, const CellDecomposition& dec, int j,
    const CellLabeling& lab, const GenMatrixAlgebra<LaurentPoly>& g) {
  if (j < 1 || j > dec.count())
    throw std::out_of_range("cell layer out of range: " + std::to_string(j));
  CellIdealReport report;
  ChainReport chain = assemble_cell_chain(alg, dec);
  report.ideal_closed = chain.ideal[j - 1];
  report.involution_stable = chain.involution_stable[j - 1];
  report.sigma_rho = gm_check_sigma_rho(g);
  report.realization = verify_cell_realization(alg, dec.cells[j - 1], lab, g);
  report.involution_matrix = Verdict::ok();
  for (int b : dec.cells[j - 1]) {
    int ib = alg.involution[b];
    if (!lab.position.count(b) || !lab.position.count(ib)) {
      report.involution_matrix =
          Verdict::fail("labeling missing around " + alg.basis[b]);
      break;
    }
    Matrix<LaurentPoly> lhs = gm_involution(element_matrix(lab, elt_basis(b)), g);
    Matrix<LaurentPoly> rhs = element_matrix(lab, elt_basis(ib));
    if (lhs != rhs) {
      report.involution_matrix = Verdict::fail(
          "matrix involution does not match the table involution at " +
          alg.basis[b]);
      break;
    }
  }
  return report;
}

}  // namespace affcell
