#pragma once

#include <affcell/hecke.hpp>
#include <affcell/periodic.hpp>
#include <affcell/qschur.hpp>
#include <affcell/report.hpp>
#include <affcell/repring.hpp>
#include <affcell/segments.hpp>
#include <affcell/table_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcell {
namespace detail {

inline std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (true) {
    size_t comma = text.find(',', pos);
    out.push_back(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) return out;
    pos = comma + 1;
  }
}

// "" is the empty partition; otherwise comma separated nonnegative integers
inline std::vector<long> parse_parts(const std::string& text,
                                     const char* what) {
  std::vector<long> out;
  if (text.empty()) return out;
  for (const std::string& tok : split_commas(text)) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string(what) +
                                  " is not a comma separated list of "
                                  "nonnegative integers: " +
                                  text);
    out.push_back(std::stol(tok));
  }
  return out;
}

inline std::vector<std::string> parse_alphabet(const std::string& text) {
  std::vector<std::string> out = split_commas(text);
  std::set<std::string> seen;
  for (const std::string& tok : out) {
    if (tok.empty())
      throw std::invalid_argument("empty center label in alphabet: " + text);
    if (!seen.insert(tok).second)
      throw std::invalid_argument("duplicate center label in alphabet: " +
                                  text);
  }
  return out;
}

inline std::string ms_to_string(const Multisegment& ms) {
  if (ms.empty()) return "[]";
  std::string out;
  for (const Segment& s : ms) {
    if (!out.empty()) out += " + ";
    out += "[" + s.center + ";" + std::to_string(s.length) + "]";
  }
  return out;
}

}  // namespace detail

// Exit codes: 0 all checks pass, 1 a check failed (report still written),
// 2 usage error or malformed input.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"check and construct affine cellular structure on based "
               "algebras given by structure constant tables"};
  app.name("affcell");
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a structure constant table");
  gen->require_subcommand(1);
  int hecke_rank = 0;
  std::string hecke_out;
  auto* gen_hecke = gen->add_subcommand(
      "hecke", "Kazhdan-Lusztig basis of the Hecke algebra of S_{m+1}");
  gen_hecke->add_option("--rank", hecke_rank, "Coxeter rank m")->required();
  gen_hecke->add_option("--out", hecke_out, "output path")->required();
  int qs_n = 0, qs_r = 0;
  std::string qs_out;
  auto* gen_qs = gen->add_subcommand(
      "qschur", "tensor space basis of the q-Schur algebra S_q(n, r)");
  gen_qs->add_option("--n", qs_n, "number of rows")->required();
  gen_qs->add_option("--r", qs_r, "tensor degree")->required();
  gen_qs->add_option("--out", qs_out, "output path")->required();

  auto* analyze = app.add_subcommand(
      "analyze", "run the full cell analysis pipeline on a table");
  std::string table_path, analyze_out, format = "text";
  unsigned long seed = 0;
  int max_exhaustive_rank = 30;
  analyze->add_option("table", table_path, "table document path")->required();
  analyze->add_option("--out", analyze_out,
                      "write the report to this path instead of stdout");
  analyze->add_option("--format", format, "report rendering")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_option("--seed", seed, "seed for sampled checks");
  analyze->add_option("--max-exhaustive-rank", max_exhaustive_rank,
                      "largest basis size checked exhaustively");

  auto* lr = app.add_subcommand(
      "lr", "Littlewood-Richardson coefficient of nu in lambda tensor mu");
  std::string lambda_s, mu_s, nu_s;
  lr->add_option("--lambda", lambda_s, "partition, comma separated")
      ->required();
  lr->add_option("--mu", mu_s, "partition, comma separated")->required();
  lr->add_option("--nu", nu_s, "partition, comma separated")->required();

  auto* dstat = app.add_subcommand(
      "dstat", "d statistic of an n-periodic integer matrix");
  std::string matrix_path;
  dstat->add_option("matrix", matrix_path, "periodic matrix document path")
      ->required();

  auto* segments = app.add_subcommand(
      "segments",
      "enumerate multisegments of total length r with at most n segments");
  int seg_r = 0, seg_n = 0;
  std::string alphabet;
  segments->add_option("--r", seg_r, "total length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  segments->add_option("--n", seg_n, "maximal number of segments")
      ->required()
      ->check(CLI::NonNegativeNumber);
  segments->add_option("--alphabet", alphabet, "center labels, comma separated")
      ->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("affcell");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_hecke->parsed()) {
      ba_save_file(gen_hecke_kl(hecke_rank), hecke_out);
      return 0;
    }
    if (gen_qs->parsed()) {
      ba_save_file(gen_qschur(qs_n, qs_r), qs_out);
      return 0;
    }
    if (analyze->parsed()) {
      BasedAlgebra alg = ba_load_file(table_path);
      AnalysisReport rep =
          analyze_algebra(alg, {seed, max_exhaustive_rank});
      std::string rendered = format == "structured"
                                 ? report_to_json(rep).dump(2) + "\n"
                                 : report_to_text(rep);
      if (!analyze_out.empty()) {
        std::ofstream file(analyze_out);
        if (!file)
          throw std::runtime_error("cannot write report: " + analyze_out);
        file << rendered;
      } else {
        out << rendered;
      }
      return rep.pass ? 0 : 1;
    }
    if (lr->parsed()) {
      out << lr_coefficient(detail::parse_parts(lambda_s, "--lambda"),
                            detail::parse_parts(mu_s, "--mu"),
                            detail::parse_parts(nu_s, "--nu"))
          << "\n";
      return 0;
    }
    if (dstat->parsed()) {
      std::ifstream file(matrix_path);
      if (!file)
        throw std::runtime_error("cannot open matrix document: " +
                                 matrix_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(file);
      } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("matrix document is not valid: " +
                                 std::string(e.what()));
      }
      out << d_stat(pm_from_json(doc)) << "\n";
      return 0;
    }
    if (segments->parsed()) {
      std::vector<Multisegment> all = enumerate_segments(
          seg_r, seg_n, detail::parse_alphabet(alphabet));
      for (const Multisegment& ms : all)
        out << detail::ms_to_string(ms) << "\n";
      out << "count: " << all.size() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace affcell
