#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace affcell {

// dominant weight of one GL_k factor: weakly decreasing integers, length k
using GLWeight = std::vector<long>;
// one weight per factor of the group shape (k_1, ..., k_m)
using IrrLabel = std::vector<GLWeight>;
using GroupShape = std::vector<int>;

// finitely supported Z-combination of irreducible labels; no zero entries
using RepRingElement = std::map<IrrLabel, long>;

namespace detail {

inline bool weakly_decreasing(const std::vector<long>& w) {
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] < w[i]) return false;
  return true;
}

// validates and strips trailing zeros so (2,1,0) and (2,1) agree
inline std::vector<long> partition_normal(const std::vector<long>& p,
                                          const char* what) {
  if (!weakly_decreasing(p) || (!p.empty() && p.back() < 0))
    throw std::invalid_argument(std::string(what) + " is not a partition");
  std::vector<long> q(p);
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

inline long weight_sum(const std::vector<long>& p) {
  return std::accumulate(p.begin(), p.end(), 0L);
}

// counts Littlewood-Richardson fillings of nu/la with content mu: rows weakly
// increase, columns strictly increase, and the reverse reading word (right to
// left along each row, rows top to bottom) stays a lattice word; cells are
// visited exactly in that reading order so the lattice condition is local
struct LRFill {
  const std::vector<long>& la;
  const std::vector<long>& nu;
  const std::vector<long>& mu;
  std::vector<std::vector<long>> grid;
  std::vector<long> used;
  long count = 0;

  LRFill(const std::vector<long>& l, const std::vector<long>& n,
         const std::vector<long>& m)
      : la(l), nu(n), mu(m), used(m.size(), 0) {
    for (long len : nu) grid.emplace_back(len, 0);
  }

  long inner(size_t row) const {
    return row < la.size() ? la[row] : 0;
  }

  void run(size_t row, long col) {
    while (row < nu.size() && col < inner(row)) {
      ++row;
      col = row < nu.size() ? nu[row] - 1 : 0;
    }
    if (row == nu.size()) {
      ++count;
      return;
    }
    for (long t = 1; t <= static_cast<long>(mu.size()); ++t) {
      if (used[t - 1] >= mu[t - 1]) continue;
      if (t > 1 && used[t - 2] <= used[t - 1]) continue;
      if (col + 1 < nu[row] && t > grid[row][col + 1]) continue;
      if (row > 0 && col >= inner(row - 1) && t <= grid[row - 1][col]) continue;
      grid[row][col] = t;
      ++used[t - 1];
      run(row, col - 1);
      --used[t - 1];
      grid[row][col] = 0;
    }
  }
};

inline void partitions_rec(long n, long max_part, int max_len,
                           std::vector<long>& cur,
                           std::vector<std::vector<long>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (long p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

inline std::vector<std::vector<long>> partitions_bounded(long n, long max_part,
                                                         int max_len) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  if (n >= 0) detail::partitions_rec(n, max_part, max_len, cur, out);
  return out;
}

// size mismatch and non-containment give 0 by convention
inline long lr_coefficient(const std::vector<long>& lambda,
                           const std::vector<long>& mu,
                           const std::vector<long>& nu) {
  auto la = detail::partition_normal(lambda, "lambda");
  auto mid = detail::partition_normal(mu, "mu");
  auto top = detail::partition_normal(nu, "nu");
  if (detail::weight_sum(top) !=
      detail::weight_sum(la) + detail::weight_sum(mid))
    return 0;
  if (la.size() > top.size()) return 0;
  for (size_t i = 0; i < la.size(); ++i)
    if (la[i] > top[i]) return 0;
  detail::LRFill fill(la, top, mid);
  fill.run(0, top.empty() ? 0 : top[0] - 1);
  return fill.count;
}

// Weyl dimension formula for GL_k, exact over the integers
inline mpz_class weyl_dimension(const GLWeight& w) {
  if (!detail::weakly_decreasing(w))
    throw std::invalid_argument("weight is not dominant");
  int k = static_cast<int>(w.size());
  mpz_class num = 1, den = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      num *= w[i] - w[j] + j - i;
      den *= j - i;
    }
  return num / den;
}

// tensor product of two GL_k irreducibles; negative entries are normalized by
// a determinant twist, decomposed with LR coefficients truncated to at most k
// rows, then shifted back
inline std::map<GLWeight, long> gl_tensor(const GLWeight& a, const GLWeight& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("weights live in different GL factors");
  if (!detail::weakly_decreasing(a) || !detail::weakly_decreasing(b))
    throw std::invalid_argument("weight is not dominant");
  int k = static_cast<int>(a.size());
  std::map<GLWeight, long> out;
  if (k == 0) {
    out[{}] = 1;
    return out;
  }
  long m = std::max({0L, -a.back(), -b.back()});
  std::vector<long> ap(a), bp(b);
  for (long& e : ap) e += m;
  for (long& e : bp) e += m;
  long total = detail::weight_sum(ap) + detail::weight_sum(bp);
  for (const auto& nu : partitions_bounded(total, ap[0] + bp[0], k)) {
    long c = lr_coefficient(ap, bp, nu);
    if (!c) continue;
    GLWeight w(nu);
    w.resize(k, 0);
    for (long& e : w) e -= 2 * m;
    out[w] += c;
  }
  return out;
}

namespace detail {

inline void require_shape(const IrrLabel& s, const GroupShape& shape) {
  if (s.size() != shape.size())
    throw std::invalid_argument("label does not match the group shape");
  for (size_t i = 0; i < shape.size(); ++i) {
    if (static_cast<int>(s[i].size()) != shape[i])
      throw std::invalid_argument("label does not match the group shape");
    if (!weakly_decreasing(s[i]))
      throw std::invalid_argument("weight is not dominant");
  }
}

}  // namespace detail

inline IrrLabel trivial_label(const GroupShape& shape) {
  IrrLabel s;
  for (int k : shape) s.emplace_back(k, 0);
  return s;
}

inline void rr_add_term(RepRingElement& x, const IrrLabel& s, long c) {
  if (c == 0) return;
  auto it = x.try_emplace(s, 0).first;
  it->second += c;
  if (it->second == 0) x.erase(it);
}

inline RepRingElement rr_add(const RepRingElement& x, const RepRingElement& y) {
  RepRingElement out(x);
  for (const auto& [s, c] : y) rr_add_term(out, s, c);
  return out;
}

inline RepRingElement rr_one(const GroupShape& shape) {
  return {{trivial_label(shape), 1}};
}

inline RepRingElement tensor_decompose(const IrrLabel& s, const IrrLabel& s2,
                                       const GroupShape& shape) {
  detail::require_shape(s, shape);
  detail::require_shape(s2, shape);
  std::vector<std::pair<IrrLabel, long>> acc{{IrrLabel{}, 1}};
  for (size_t i = 0; i < shape.size(); ++i) {
    auto factor = gl_tensor(s[i], s2[i]);
    std::vector<std::pair<IrrLabel, long>> next;
    for (const auto& [prefix, c] : acc)
      for (const auto& [w, mult] : factor) {
        IrrLabel lab(prefix);
        lab.push_back(w);
        next.emplace_back(std::move(lab), c * mult);
      }
    acc = std::move(next);
  }
  RepRingElement out;
  for (const auto& [lab, c] : acc) rr_add_term(out, lab, c);
  return out;
}

inline RepRingElement rr_multiply(const RepRingElement& x,
                                  const RepRingElement& y,
                                  const GroupShape& shape) {
  RepRingElement out;
  for (const auto& [s, c] : x)
    for (const auto& [s2, c2] : y)
      for (const auto& [s3, m] : tensor_decompose(s, s2, shape))
        rr_add_term(out, s3, c * c2 * m);
  return out;
}

// per factor, reverse and negate: the dual representation
inline IrrLabel dual_weight(const IrrLabel& s) {
  IrrLabel out;
  for (const auto& w : s) {
    GLWeight d(w.rbegin(), w.rend());
    for (long& e : d) e = -e;
    out.push_back(std::move(d));
  }
  return out;
}

inline RepRingElement rr_dual(const RepRingElement& x) {
  RepRingElement out;
  for (const auto& [s, c] : x) rr_add_term(out, dual_weight(s), c);
  return out;
}

// free abelian group on T_c = {1..n_c} x {1..n_c} x Irr G_c
using JKey = std::tuple<int, int, IrrLabel>;
using JRingElement = std::map<JKey, long>;

inline void j_add_term(JRingElement& x, const JKey& key, long c) {
  if (c == 0) return;
  auto it = x.try_emplace(key, 0).first;
  it->second += c;
  if (it->second == 0) x.erase(it);
}

namespace detail {

inline void require_j_support(const JRingElement& x, const GroupShape& shape,
                              int n) {
  for (const auto& [key, c] : x) {
    (void)c;
    const auto& [d, d2, s] = key;
    if (d < 1 || d > n || d2 < 1 || d2 > n)
      throw std::invalid_argument("index outside 1..n in a J-ring label");
    require_shape(s, shape);
  }
}

}  // namespace detail

// (d1, d1', s)(d2, d2', s') = [d1' = d2] sum_s'' c_{s,s'}^{s''} (d1, d2', s'')
inline JRingElement j_multiply(const JRingElement& x, const JRingElement& y,
                               const GroupShape& shape, int n) {
  detail::require_j_support(x, shape, n);
  detail::require_j_support(y, shape, n);
  JRingElement out;
  for (const auto& [kx, c] : x) {
    const auto& [d1, d1p, s] = kx;
    for (const auto& [ky, c2] : y) {
      const auto& [d2, d2p, s2] = ky;
      if (d1p != d2) continue;
      for (const auto& [s3, m] : tensor_decompose(s, s2, shape))
        j_add_term(out, {d1, d2p, s3}, c * c2 * m);
    }
  }
  return out;
}

inline JRingElement j_unit(const GroupShape& shape, int n) {
  JRingElement out;
  for (int d = 1; d <= n; ++d) j_add_term(out, {d, d, trivial_label(shape)}, 1);
  return out;
}

using RepMatrix = std::vector<std::vector<RepRingElement>>;

// (d, d', s) -> E_{d,d'}(s)
inline RepMatrix j_matrix_iso(const JRingElement& x, int n) {
  RepMatrix m(n, std::vector<RepRingElement>(n));
  for (const auto& [key, c] : x) {
    const auto& [d, d2, s] = key;
    if (d < 1 || d > n || d2 < 1 || d2 > n)
      throw std::invalid_argument("index outside 1..n in a J-ring label");
    rr_add_term(m[d - 1][d2 - 1], s, c);
  }
  return m;
}

inline RepMatrix rr_mat_identity(int n, const GroupShape& shape) {
  RepMatrix m(n, std::vector<RepRingElement>(n));
  for (int i = 0; i < n; ++i) m[i][i] = rr_one(shape);
  return m;
}

inline RepMatrix rr_mat_mult(const RepMatrix& a, const RepMatrix& b,
                             const GroupShape& shape) {
  int n = static_cast<int>(a.size());
  if (b.size() != a.size())
    throw std::invalid_argument("matrix shape mismatch");
  RepMatrix r(n, std::vector<RepRingElement>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].empty()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].empty()) continue;
        r[i][j] = rr_add(r[i][j], rr_multiply(a[i][k], b[k][j], shape));
      }
    }
  return r;
}

}  // namespace affcell
