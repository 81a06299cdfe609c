#pragma once

#include <affcell/asymptotic.hpp>
#include <affcell/based_algebra.hpp>
#include <affcell/cells.hpp>
#include <affcell/genmatrix.hpp>

#include <json.hpp>

#include <exception>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

struct AnalyzeOptions {
  unsigned long seed = 0;
  int max_exhaustive_rank = 30;
};

struct ReportCheck {
  std::string name;
  Verdict verdict;
};

// One two-sided cell = one layer of the chain (chain order, 1-based).
struct CellReport {
  int layer = 0;
  std::vector<std::string> members;
  std::vector<int> a_values;  // distinct a-values on the cell, sorted
  std::vector<std::string> distinguished;
  size_t gamma_nonzero = 0;
  std::vector<std::string> gamma_excerpt;
  int matrix_rank = 0;  // 0 until the labeling succeeds
  std::vector<std::vector<std::string>> psi;
  std::vector<ReportCheck> checks;
};

struct AnalysisReport {
  int basis_size = 0;
  std::vector<std::string> units;
  std::vector<ReportCheck> algebra_checks;
  int cell_count = 0;
  std::vector<CellReport> cells;
  std::vector<ReportCheck> chain_checks;
  bool pass = false;
};

namespace detail {

// the P3 quadruple loops of check_P3 restricted to one cell
inline Verdict p3_one_cell(const BasedAlgebra& alg,
                           const AsymptoticAlgebra& asy,
                           int max_exhaustive_rank, unsigned long seed) {
  const int n = alg.rank();
  if (n <= max_exhaustive_rank) {
    for (int b2 : asy.cell)
      for (int bp : asy.cell) {
        for (int b3 : asy.cell)
          for (int b1 = 0; b1 < n; ++b1)
            if (!p3_quadruple(alg, asy, b1, b2, b3, bp, true))
              return Verdict::fail("first identity fails at " +
                                   quadruple_str(alg, b1, b2, b3, bp));
        for (int b1 : asy.cell)
          for (int b3 = 0; b3 < n; ++b3)
            if (!p3_quadruple(alg, asy, b1, b2, b3, bp, false))
              return Verdict::fail("second identity fails at " +
                                   quadruple_str(alg, b1, b2, b3, bp));
      }
    return Verdict::ok();
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<size_t> pick_cell(0, asy.cell.size() - 1);
  for (int iter = 0; iter < 2000; ++iter) {
    int b2 = asy.cell[pick_cell(rng)];
    int bp = asy.cell[pick_cell(rng)];
    int b1 = pick(rng), b3 = pick(rng);
    if (!p3_quadruple(alg, asy, b1, b2, b3, bp, true))
      return Verdict::fail("first identity fails at " +
                           quadruple_str(alg, b1, b2, b3, bp));
    if (!p3_quadruple(alg, asy, b1, b2, b3, bp, false))
      return Verdict::fail("second identity fails at " +
                           quadruple_str(alg, b1, b2, b3, bp));
  }
  return Verdict::ok();
}

template <typename F>
Verdict guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return Verdict::fail(e.what());
  }
}

}  // namespace detail

// Full pipeline on one loaded table: table axioms, cell decomposition,
// per-cell asymptotic ring and its axioms, per-cell matrix realization,
// per-layer ideal reports, global chain report. Every stage records a
// verdict; a stage whose preconditions failed records the failure and the
// dependent stages are skipped. Output depends only on the table and the
// options, never on the environment.
inline AnalysisReport analyze_algebra(const BasedAlgebra& alg,
                                      const AnalyzeOptions& opt = {}) {
  AnalysisReport rep;
  rep.basis_size = alg.rank();
  for (int u : alg.units) rep.units.push_back(alg.basis[u]);

  auto record = [](std::vector<ReportCheck>& into, const char* name,
                   Verdict v) {
    into.push_back({name, std::move(v)});
  };

  record(rep.algebra_checks, "generalized_unit",
         ba_check_generalized_unit(alg));
  record(rep.algebra_checks, "sector_closure", ba_check_sector_closure(alg));
  record(rep.algebra_checks, "involution", ba_check_involution(alg));
  record(rep.algebra_checks, "associativity",
         ba_check_associativity(alg, opt.max_exhaustive_rank, opt.seed));

  CellDecomposition dec = two_sided_cells(alg);
  CellDecomposition left = left_cells(alg);
  CellDecomposition right = right_cells(alg);
  rep.cell_count = dec.count();
  record(rep.algebra_checks, "cell_involution_map",
         check_cell_involution_map(alg, dec));
  record(rep.algebra_checks, "P1a", check_P1a(dec));

  for (int ci = 0; ci < dec.count(); ++ci) {
    const std::vector<int>& cell = dec.cells[ci];
    CellReport cr;
    cr.layer = ci + 1;
    for (int b : cell) cr.members.push_back(alg.basis[b]);

    AFunctionTable af = a_function(alg, cell);
    for (int b : cell) cr.a_values.push_back(af.at(b));
    std::sort(cr.a_values.begin(), cr.a_values.end());
    cr.a_values.erase(std::unique(cr.a_values.begin(), cr.a_values.end()),
                      cr.a_values.end());
    record(cr.checks, "P1b", check_P1b(af));
    record(cr.checks, "P1c", check_P1c(alg, af));

    AsymptoticAlgebra asy = gamma_table(alg, cell, af);
    cr.gamma_nonzero = asy.gamma.size();
    size_t shown = 0;
    for (const auto& [key, g] : asy.gamma) {
      if (shown++ == 12) {
        cr.gamma_excerpt.push_back("...");
        break;
      }
      cr.gamma_excerpt.push_back(
          "gamma(" + alg.basis[key[0]] + ", " + alg.basis[key[1]] + "; " +
          alg.basis[key[2]] + ") = " + g.get_str());
    }
    record(cr.checks, "gamma_associativity",
           check_gamma_associativity(alg, asy));

    DistinguishedSearch found = distinguished_set(asy);
    record(cr.checks, "P2", found.p2);
    for (int d : asy.distinguished) cr.distinguished.push_back(alg.basis[d]);
    record(cr.checks, "P2a", check_P2a(alg, asy));
    record(cr.checks, "P3", detail::p3_one_cell(alg, asy,
                                                opt.max_exhaustive_rank,
                                                opt.seed));
    record(cr.checks, "sandwich_identity",
           detail::guarded([&] { return check_lemma_32(alg, asy); }));

    CellLabeling lab;
    Verdict labeled = detail::guarded([&] {
      lab = cell_labeling_from_sides(alg, asy, left, right);
      return Verdict::ok();
    });
    record(cr.checks, "P4_labeling", labeled);
    if (labeled.pass) {
      cr.matrix_rank = lab.n;
      GenMatrixAlgebra<LaurentPoly> g = psi_matrix_algebra(asy, alg, lab);
      for (int i = 0; i < g.n; ++i) {
        std::vector<std::string> row;
        for (int j = 0; j < g.n; ++j) row.push_back(g.psi[i][j].to_string());
        cr.psi.push_back(std::move(row));
      }
      CellIdealReport ideal = verify_affine_cell_ideal(alg, dec, ci + 1, lab, g);
      record(cr.checks, "layer_ideal_closed", ideal.ideal_closed);
      record(cr.checks, "layer_involution_stable", ideal.involution_stable);
      record(cr.checks, "sigma_rho", ideal.sigma_rho);
      record(cr.checks, "P4_realization", ideal.realization);
      record(cr.checks, "P4_involution", ideal.involution_matrix);
    }
    rep.cells.push_back(std::move(cr));
  }

  ChainReport chain = assemble_cell_chain(alg, dec);
  for (int j = 0; j < dec.count(); ++j) {
    std::string tag = "_layer_" + std::to_string(j + 1);
    record(rep.chain_checks, ("ideal" + tag).c_str(), chain.ideal[j]);
    record(rep.chain_checks, ("involution" + tag).c_str(),
           chain.involution_stable[j]);
    record(rep.chain_checks, ("quotient" + tag).c_str(), chain.quotient[j]);
  }
  record(rep.chain_checks, "covers", chain.covers);

  auto all_pass = [](const std::vector<ReportCheck>& checks) {
    for (const auto& c : checks)
      if (!c.verdict.pass) return false;
    return true;
  };
  rep.pass = all_pass(rep.algebra_checks) && all_pass(rep.chain_checks);
  for (const auto& c : rep.cells)
    rep.pass = rep.pass && all_pass(c.checks);
  return rep;
}

namespace detail {

inline nlohmann::ordered_json checks_json(
    const std::vector<ReportCheck>& checks) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json rec;
    rec["name"] = c.name;
    rec["pass"] = c.verdict.pass;
    if (!c.verdict.pass) rec["witness"] = c.verdict.witness;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace detail

inline nlohmann::ordered_json report_to_json(const AnalysisReport& rep) {
  nlohmann::ordered_json doc;
  doc["basis_size"] = rep.basis_size;
  doc["units"] = rep.units;
  doc["algebra_checks"] = detail::checks_json(rep.algebra_checks);
  doc["cell_count"] = rep.cell_count;
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const auto& c : rep.cells) {
    nlohmann::ordered_json rec;
    rec["layer"] = c.layer;
    rec["members"] = c.members;
    rec["a_values"] = c.a_values;
    rec["distinguished"] = c.distinguished;
    rec["gamma_nonzero"] = c.gamma_nonzero;
    rec["gamma_excerpt"] = c.gamma_excerpt;
    rec["matrix_rank"] = c.matrix_rank;
    rec["psi"] = c.psi;
    rec["checks"] = detail::checks_json(c.checks);
    cells.push_back(std::move(rec));
  }
  doc["cells"] = std::move(cells);
  doc["chain_checks"] = detail::checks_json(rep.chain_checks);
  doc["pass"] = rep.pass;
  return doc;
}

namespace detail {

inline void checks_text(std::string& out, const std::string& indent,
                        const std::vector<ReportCheck>& checks) {
  for (const auto& c : checks) {
    out += indent;
    out += c.verdict.pass ? "[pass] " : "[FAIL] ";
    out += c.name;
    if (!c.verdict.pass) out += ": " + c.verdict.witness;
    out += "\n";
  }
}

inline std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

}  // namespace detail

inline std::string report_to_text(const AnalysisReport& rep) {
  std::string out;
  out += "based algebra: " + std::to_string(rep.basis_size) +
         " basis elements, " + std::to_string(rep.units.size()) +
         (rep.units.size() == 1 ? " unit (" : " units (") +
         detail::join(rep.units) + ")\n";
  out += "algebra checks:\n";
  detail::checks_text(out, "  ", rep.algebra_checks);
  out += "cells: " + std::to_string(rep.cell_count) + "\n";
  for (const auto& c : rep.cells) {
    out += "cell " + std::to_string(c.layer) + " (size " +
           std::to_string(c.members.size()) + "):\n";
    out += "  members: " + detail::join(c.members) + "\n";
    std::string avals;
    for (int a : c.a_values) {
      if (!avals.empty()) avals += ", ";
      avals += std::to_string(a);
    }
    out += c.a_values.size() == 1 ? "  a-value: " + avals + "\n"
                                  : "  a-values: {" + avals + "}\n";
    out += "  distinguished: " + detail::join(c.distinguished) + "\n";
    out += "  gamma entries: " + std::to_string(c.gamma_nonzero) + "\n";
    for (const auto& line : c.gamma_excerpt) out += "    " + line + "\n";
    if (c.matrix_rank > 0) {
      out += "  matrix rank: " + std::to_string(c.matrix_rank) + "\n";
      out += "  psi:\n";
      for (const auto& row : c.psi) out += "    [ " + detail::join(row) + " ]\n";
    }
    detail::checks_text(out, "  ", c.checks);
  }
  out += "chain checks:\n";
  detail::checks_text(out, "  ", rep.chain_checks);
  out += rep.pass ? "overall: PASS\n" : "overall: FAIL\n";
  return out;
}

}  // namespace affcell
