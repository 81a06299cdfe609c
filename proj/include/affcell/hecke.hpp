#pragma once

#include <affcell/based_algebra.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace affcell {

// S_n on {0..n-1} in one-line notation, elements sorted by (length, one-line)
// so the identity sits at index 0 and index order refines length order.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int n) : n_(n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 0);
    do {
      lines_.push_back(line);
    } while (std::next_permutation(line.begin(), line.end()));
    std::stable_sort(lines_.begin(), lines_.end(),
                     [](const std::vector<int>& a, const std::vector<int>& b) {
                       int la = inversions(a), lb = inversions(b);
                       return la != lb ? la < lb : a < b;
                     });
    for (int w = 0; w < size(); ++w) {
      index_[lines_[w]] = w;
      length_.push_back(inversions(lines_[w]));
    }
    inverse_.resize(size());
    left_gen_.assign(gens(), std::vector<int>(size()));
    right_gen_.assign(gens(), std::vector<int>(size()));
    for (int w = 0; w < size(); ++w) {
      std::vector<int> inv(n);
      for (int i = 0; i < n; ++i) inv[lines_[w][i]] = i;
      inverse_[w] = index_.at(inv);
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> right = lines_[w];
        std::swap(right[i], right[i + 1]);  // w * s_i
        right_gen_[i][w] = index_.at(right);
        std::vector<int> left = lines_[w];  // s_i * w swaps the values i, i+1
        for (int p = 0; p < n; ++p) {
          if (left[p] == i)
            left[p] = i + 1;
          else if (left[p] == i + 1)
            left[p] = i;
        }
        left_gen_[i][w] = index_.at(left);
      }
    }
  }

  int size() const { return static_cast<int>(lines_.size()); }
  int degree() const { return n_; }
  int gens() const { return n_ - 1; }
  int identity() const { return 0; }
  int length(int w) const { return length_[w]; }
  int inverse(int w) const { return inverse_[w]; }
  int left_gen(int i, int w) const { return left_gen_[i][w]; }
  int right_gen(int w, int i) const { return right_gen_[i][w]; }
  const std::vector<int>& one_line(int w) const { return lines_[w]; }

  int generator(int i) const {
    std::vector<int> line(n_);
    std::iota(line.begin(), line.end(), 0);
    std::swap(line[i], line[i + 1]);
    return index_.at(line);
  }

  int mult(int a, int b) const {
    std::vector<int> line(n_);
    for (int i = 0; i < n_; ++i) line[i] = lines_[a][lines_[b][i]];
    return index_.at(line);
  }

  // lex-least reduced word: the possible first letters of reduced words are
  // exactly the left descents, so the greedy choice is optimal at each step
  std::vector<int> reduced_word(int w) const {
    std::vector<int> word;
    while (w != identity()) {
      for (int i = 0; i < gens(); ++i)
        if (length(left_gen_[i][w]) < length(w)) {
          word.push_back(i);
          w = left_gen_[i][w];
          break;
        }
    }
    return word;
  }

  // x <= w iff every rank-matrix entry of x dominates the one of w
  bool bruhat_leq(int x, int w) const {
    const auto& a = lines_[x];
    const auto& b = lines_[w];
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        int ra = 0, rb = 0;
        for (int k = 0; k <= i; ++k) {
          ra += a[k] <= j;
          rb += b[k] <= j;
        }
        if (ra < rb) return false;
      }
    return true;
  }

 private:
  static int inversions(const std::vector<int>& line) {
    int c = 0;
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j) c += line[i] > line[j];
    return c;
  }

  int n_;
  std::vector<std::vector<int>> lines_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> length_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> left_gen_, right_gen_;
};

// Hecke algebra of S_{m+1} in the normalization H_s^2 = 1 + (v^-1 - v)H_s,
// with the canonical basis b_w = sum_x h_{x,w} H_x built by the classical
// recursion b_w = b_s b_u - sum mu(x,u) b_x for w = su, su > u.
struct HeckeKLData {
  SymmetricGroup group;
  std::vector<Element> kl;                       // H-basis coordinates of b_w
  std::vector<std::map<int, mpz_class>> mu;      // mu[w][x] = mu(x, w)
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> products;    // b_x b_y in the b-basis
};

namespace detail {

inline int min_left_descent(const SymmetricGroup& g, int w) {
  for (int i = 0; i < g.gens(); ++i)
    if (g.length(g.left_gen(i, w)) < g.length(w)) return i;
  throw std::logic_error("no descent for a non-identity element");
}

inline std::string kl_label(const SymmetricGroup& g, int w) {
  static const char letters[] = "stuz";
  if (w == g.identity()) return "c_e";
  std::vector<int> word = g.reduced_word(w);
  std::string body;
  for (int i : word) body += letters[i];
  return word.size() == 1 ? "c" + body : "c_" + body;
}

}  // namespace detail

inline HeckeKLData build_hecke_kl(int m) {
  if (m < 1 || m > 4)
    throw std::out_of_range("rank out of supported range: " + std::to_string(m));
  HeckeKLData data{SymmetricGroup(m + 1), {}, {}, {}, {}};
  const SymmetricGroup& g = data.group;
  const int N = g.size();

  data.kl.resize(N);
  data.mu.resize(N);
  data.kl[0] = elt_basis(g.identity());
  for (int w = 1; w < N; ++w) {
    int s = detail::min_left_descent(g, w);
    int u = g.left_gen(s, w);
    Element bw;
    for (const auto& [x, h] : data.kl[u]) {
      int sx = g.left_gen(s, x);
      elt_add_term(bw, sx, h);
      elt_add_term(bw, x,
                   h * LaurentPoly::v(g.length(sx) > g.length(x) ? 1 : -1));
    }
    for (const auto& [x, mval] : data.mu[u])
      if (g.length(g.left_gen(s, x)) < g.length(x))
        elt_add(bw, data.kl[x], LaurentPoly(-mval));

    auto top = bw.find(w);
    if (top == bw.end() || top->second != LaurentPoly(1))
      throw std::logic_error("canonical basis element is not unitriangular");
    for (const auto& [x, h] : bw) {
      if (x == w) continue;
      auto lo = h.min_degree();
      if (!lo || *lo < 1)
        throw std::logic_error("canonical basis coefficient not in vZ[v]");
      if (!g.bruhat_leq(x, w))
        throw std::logic_error("canonical basis support outside the order ideal");
      mpz_class mval = h.coeff_at(1);
      if (mval != 0) data.mu[w][x] = mval;
    }
    data.kl[w] = std::move(bw);
  }

  for (int w = 0; w < N; ++w) data.labels.push_back(detail::kl_label(g, w));

  // b_s b_y in b-basis coordinates: the recursion read forwards
  std::vector<std::vector<Element>> srow(g.gens(), std::vector<Element>(N));
  for (int i = 0; i < g.gens(); ++i)
    for (int y = 0; y < N; ++y) {
      int sy = g.left_gen(i, y);
      if (g.length(sy) > g.length(y)) {
        Element e = elt_basis(sy);
        for (const auto& [x, mval] : data.mu[y])
          if (g.length(g.left_gen(i, x)) < g.length(x))
            elt_add_term(e, x, LaurentPoly(mval));
        srow[i][y] = std::move(e);
      } else {
        srow[i][y] = Element{{y, LaurentPoly::parse("1*v^1 + 1*v^-1")}};
      }
    }

  data.products.assign(N, std::vector<Element>(N));
  for (int y = 0; y < N; ++y) data.products[0][y] = elt_basis(y);
  for (int w = 1; w < N; ++w) {
    int s = detail::min_left_descent(g, w);
    int u = g.left_gen(s, w);
    for (int y = 0; y < N; ++y) {
      Element t;
      for (const auto& [z, c] : data.products[u][y]) elt_add(t, srow[s][z], c);
      for (const auto& [x, mval] : data.mu[u])
        if (g.length(g.left_gen(s, x)) < g.length(x))
          elt_add(t, data.products[x][y], LaurentPoly(-mval));
      data.products[w][y] = std::move(t);
    }
  }
  return data;
}

inline BasedAlgebra gen_hecke_kl(int m) {
  HeckeKLData data = build_hecke_kl(m);
  const SymmetricGroup& g = data.group;
  BasedAlgebra alg;
  alg.basis = data.labels;
  alg.units = {g.identity()};
  alg.sector.assign(g.size(), {g.identity(), g.identity()});
  for (int w = 0; w < g.size(); ++w) alg.involution.push_back(g.inverse(w));
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (!data.products[x][y].empty())
        alg.products.emplace(std::pair{x, y}, std::move(data.products[x][y]));
  return alg;
}

}  // namespace affcell
