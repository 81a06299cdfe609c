#pragma once

#include <affcell/based_algebra.hpp>

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcell {

// n x n nonnegative integer matrix with entry sum r, flattened row-major;
// indexes the endomorphism basis of the q-Schur algebra
using QSchurMatrix = std::vector<int>;

inline std::string qschur_label(const QSchurMatrix& A, int n) {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    if (i) s += ';';
    for (int j = 0; j < n; ++j) {
      if (j) s += ',';
      s += std::to_string(A[i * n + j]);
    }
  }
  return s + "]";
}

namespace detail {

inline std::vector<int> qs_rows(const QSchurMatrix& A, int n) {
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += A[i * n + j];
  return r;
}

inline std::vector<int> qs_cols(const QSchurMatrix& A, int n) {
  std::vector<int> c(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[j] += A[i * n + j];
  return c;
}

inline QSchurMatrix qs_transpose(const QSchurMatrix& A, int n) {
  QSchurMatrix T(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) T[j * n + i] = A[i * n + j];
  return T;
}

// tensor space over words in {0..n-1}^r with the right Hecke action at
// q = v^2: ascending pairs swap, equal pairs scale by q, descending pairs
// pick up q and q - 1
struct QTensor {
  int n, r, count;
  LaurentPoly q, qm1;
  std::vector<std::vector<int>> words;

  using Vec = std::vector<LaurentPoly>;

  QTensor(int n_, int r_) : n(n_), r(r_) {
    q = LaurentPoly::v(2);
    qm1 = q + LaurentPoly(-1);
    count = 1;
    for (int t = 0; t < r; ++t) count *= n;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> w(r);
      int x = idx;
      for (int t = r - 1; t >= 0; --t) {
        w[t] = x % n;
        x /= n;
      }
      words.push_back(std::move(w));
    }
  }

  int index(const std::vector<int>& w) const {
    int idx = 0;
    for (int t = 0; t < r; ++t) idx = idx * n + w[t];
    return idx;
  }

  std::vector<int> content(int idx) const {
    std::vector<int> c(n, 0);
    for (int a : words[idx]) ++c[a];
    return c;
  }

  int sorted_word(const std::vector<int>& nu) const {
    std::vector<int> w;
    for (int l = 0; l < n; ++l) w.insert(w.end(), nu[l], l);
    return index(w);
  }

  // pair matrix of (word, sorted word of nu): positions grouped into the
  // contiguous nu-blocks of the sorted source word
  QSchurMatrix pair_matrix(int idx, const std::vector<int>& nu) const {
    QSchurMatrix A(n * n, 0);
    int t = 0;
    for (int l = 0; l < n; ++l)
      for (int c = 0; c < nu[l]; ++c, ++t) ++A[words[idx][t] * n + l];
    return A;
  }

  // the unique word of a pair class whose letters ascend within each block
  int class_word(const QSchurMatrix& A) const {
    std::vector<int> w;
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) w.insert(w.end(), A[k * n + l], k);
    return index(w);
  }

  Vec apply_gen(const Vec& x, int j) const {
    Vec out(count);
    for (int idx = 0; idx < count; ++idx) {
      if (x[idx].is_zero()) continue;
      std::vector<int> w = words[idx];
      int a = w[j], b = w[j + 1];
      if (a == b) {
        out[idx] += q * x[idx];
        continue;
      }
      std::swap(w[j], w[j + 1]);
      int sw = index(w);
      if (a < b) {
        out[sw] += x[idx];
      } else {
        out[sw] += q * x[idx];
        out[idx] += qm1 * x[idx];
      }
    }
    return out;
  }

  // full endomorphism columns from the value on the sorted generator word:
  // any other word of the content is generator * T_w for the unique short
  // permutation that never swaps equal letters, peeled off one descent at
  // a time
  std::vector<Vec> columns(const std::vector<int>& nu, const Vec& base) const {
    std::vector<std::optional<Vec>> memo(count);
    int vnu = sorted_word(nu);
    memo[vnu] = base;
    std::vector<Vec> cols(count, Vec(count));
    auto image = [&](auto&& self, int idx) -> const Vec& {
      if (!memo[idx]) {
        const std::vector<int>& w = words[idx];
        int j = 0;
        while (w[j] <= w[j + 1]) ++j;
        std::vector<int> pred = w;
        std::swap(pred[j], pred[j + 1]);
        memo[idx] = apply_gen(self(self, index(pred)), j);
      }
      return *memo[idx];
    };
    for (int idx = 0; idx < count; ++idx)
      if (content(idx) == nu) cols[idx] = image(image, idx);
    return cols;
  }
};

inline void qs_enumerate(int slots, int remaining, QSchurMatrix& cur,
                         std::vector<QSchurMatrix>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.push_back(e);
    qs_enumerate(slots - 1, remaining - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// finite q-Schur algebra via the tensor-space model: basis of endomorphisms
// phi^A indexed by n x n matrices with entry sum r, structure constants read
// off orbit-representative components of composite images
inline BasedAlgebra gen_qschur(int n, int r) {
  if (n != 2 || (r != 2 && r != 3))
    throw std::out_of_range("unsupported q-Schur size (" + std::to_string(n) +
                            ", " + std::to_string(r) + ")");
  detail::QTensor T(n, r);

  std::vector<QSchurMatrix> mats;
  QSchurMatrix cur;
  detail::qs_enumerate(n * n, r, cur, mats);  // emitted in flattened lex order

  BasedAlgebra alg;
  std::map<QSchurMatrix, int> index;
  for (const auto& A : mats) {
    index[A] = alg.rank();
    alg.basis.push_back(qschur_label(A, n));
  }

  std::map<std::vector<int>, int> diag;  // composition -> unit basis index
  for (int b = 0; b < alg.rank(); ++b) {
    const auto& A = mats[b];
    bool is_diag = true;
    for (int i = 0; i < n && is_diag; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && A[i * n + j]) {
          is_diag = false;
          break;
        }
    if (is_diag) {
      alg.units.push_back(b);
      diag[detail::qs_rows(A, n)] = b;
    }
  }
  for (int b = 0; b < alg.rank(); ++b) {
    alg.sector.emplace_back(diag.at(detail::qs_rows(mats[b], n)),
                            diag.at(detail::qs_cols(mats[b], n)));
    alg.involution.push_back(index.at(detail::qs_transpose(mats[b], n)));
  }

  // phi^A on the sorted source word: the sum of the words in its pair class,
  // each with coefficient 1; all other coefficients follow by equivariance
  std::vector<std::vector<int>> rows(alg.rank()), cols(alg.rank());
  std::vector<detail::QTensor::Vec> generator_value(alg.rank());
  std::vector<std::vector<detail::QTensor::Vec>> columns(alg.rank());
  for (int b = 0; b < alg.rank(); ++b) {
    rows[b] = detail::qs_rows(mats[b], n);
    cols[b] = detail::qs_cols(mats[b], n);
    detail::QTensor::Vec base(T.count);
    for (int idx = 0; idx < T.count; ++idx)
      if (T.content(idx) == rows[b] && T.pair_matrix(idx, cols[b]) == mats[b])
        base[idx] = LaurentPoly(1);
    generator_value[b] = base;
    columns[b] = T.columns(cols[b], base);
  }

  for (int a = 0; a < alg.rank(); ++a)
    for (int b = 0; b < alg.rank(); ++b) {
      if (cols[a] != rows[b]) continue;
      const auto& nu = cols[b];
      detail::QTensor::Vec x(T.count);
      const auto& y = generator_value[b];
      for (int w = 0; w < T.count; ++w) {
        if (y[w].is_zero()) continue;
        for (int u = 0; u < T.count; ++u) x[u] += y[w] * columns[a][w][u];
      }
      // read one coefficient per pair class and insist the class is constant
      Element prod;
      for (int u = 0; u < T.count; ++u) {
        if (T.content(u) != rows[a]) {
          if (!x[u].is_zero())
            throw std::logic_error("composite image leaves the target content");
          continue;
        }
        QSchurMatrix C = T.pair_matrix(u, nu);
        int rep = T.class_word(C);
        if (x[u] != x[rep])
          throw std::logic_error("pair class is not constant in a composite");
        if (u == rep && !x[u].is_zero()) elt_add_term(prod, index.at(C), x[u]);
      }
      if (!prod.empty()) alg.products[{a, b}] = std::move(prod);
    }
  return alg;
}

struct YoungIdempotent {
  std::vector<int> w_lambda;  // one-line form, longest element of S_lambda
  int basis = -1;
  Verdict idempotent;
};

// lambda a composition of r into n parts; w_lambda reverses each block, and
// the double-coset datum (lambda, w_lambda, lambda) indexes the diagonal
// basis element phi_lambda, whose idempotence is verified by multiplication
inline YoungIdempotent young_longest_idempotent(const std::vector<int>& lambda,
                                                const BasedAlgebra& alg) {
  YoungIdempotent out;
  for (int part : lambda)
    if (part < 0) throw std::invalid_argument("composition parts must be >= 0");
  for (int offset = 0; int part : lambda) {
    for (int t = 0; t < part; ++t)
      out.w_lambda.push_back(offset + part - 1 - t);
    offset += part;
  }
  int n = static_cast<int>(lambda.size());
  QSchurMatrix D(n * n, 0);
  for (int i = 0; i < n; ++i) D[i * n + i] = lambda[i];
  out.basis = alg.index_of(qschur_label(D, n));
  Element e = elt_basis(out.basis);
  out.idempotent = ba_multiply(alg, e, e) == e
                       ? Verdict::ok()
                       : Verdict::fail("phi is not idempotent at " +
                                       alg.basis[out.basis]);
  return out;
}

}  // namespace affcell
