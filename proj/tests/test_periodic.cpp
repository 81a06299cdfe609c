#include <affcell/periodic.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <tuple>

using namespace affcell;

namespace {

// brute force over explicitly translated entries: (i, j) from the standard
// window, (k, l) from translates within the given number of periods
long oracle_d_stat(const PeriodicMatrix& A, int window) {
  std::vector<std::tuple<long, long, long>> all;
  for (const auto& [ij, a] : A.entries)
    for (int t = -window; t <= window; ++t)
      all.emplace_back(ij.first + static_cast<long>(t) * A.n,
                       ij.second + static_cast<long>(t) * A.n, a);
  long total = 0;
  for (const auto& [i, j, a] : all) {
    if (i < 1 || i > A.n) continue;
    for (const auto& [k, l, b] : all)
      if (i >= k && j < l) total += a * b;
  }
  return total;
}

// grow the window until one more period changes nothing
long oracle_stable(const PeriodicMatrix& A) {
  long prev = oracle_d_stat(A, 1);
  for (int w = 2; w <= 16; ++w) {
    long cur = oracle_d_stat(A, w);
    if (cur == prev) return cur;
    prev = cur;
  }
  return prev;
}

PeriodicMatrix rand_pm(int n, int r, std::mt19937& rng) {
  PeriodicMatrix A;
  A.n = n;
  std::uniform_int_distribution<int> row(1, n), off(-3, 3);
  for (int u = 0; u < r; ++u) {
    int i = row(rng);
    long j = i + off(rng);
    pm_set(A, i, j, pm_at(A, i, j) + 1);
  }
  return A;
}

}  // namespace

TEST_CASE("periodic storage normalizes the row window") {
  PeriodicMatrix A;
  A.n = 2;
  pm_set(A, 3, 5, 2);
  CHECK(A.entries == decltype(A.entries){{{1, 3}, 2}});
  CHECK(pm_at(A, 3, 5) == 2);
  CHECK(pm_at(A, 1, 3) == 2);
  CHECK(pm_at(A, -1, 1) == 2);
  CHECK(pm_at(A, 1, 5) == 0);
  pm_set(A, 1, 3, 0);
  CHECK(A.entries.empty());
  CHECK_THROWS_AS(pm_set(A, 1, 1, -1), std::invalid_argument);
}

TEST_CASE("d_stat vanishes on diagonal matrices") {
  for (int n : {1, 2, 3}) {
    PeriodicMatrix A;
    A.n = n;
    for (int i = 1; i <= n; ++i) pm_set(A, i, i, i);
    CHECK(d_stat(A) == 0);
    CHECK(oracle_stable(A) == 0);
  }
}

TEST_CASE("d_stat single off-diagonal entry") {
  PeriodicMatrix A;
  A.n = 2;
  pm_set(A, 1, 2, 1);
  CHECK(d_stat(A) == oracle_stable(A));
  PeriodicMatrix B;
  B.n = 2;
  pm_set(B, 2, 1, 1);
  CHECK(d_stat(B) == oracle_stable(B));
}

TEST_CASE("d_stat equals the truncation oracle on random matrices") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 2;
    PeriodicMatrix A = rand_pm(n, 1 + trial % 4, rng);
    long windowed = oracle_stable(A);
    CHECK(d_stat(A) == windowed);
    // stability: one more period changes nothing
    CHECK(oracle_d_stat(A, 10) == oracle_d_stat(A, 11));
  }
}

TEST_CASE("row and column sums") {
  PeriodicMatrix A;
  A.n = 2;
  pm_set(A, 1, 1, 2);
  pm_set(A, 2, 2, 1);
  auto [r, c] = row_col_sums(A);
  CHECK(r == std::vector<long>{2, 1});
  CHECK(c == std::vector<long>{2, 1});

  PeriodicMatrix B;
  B.n = 2;
  pm_set(B, 1, 2, 1);
  auto [rb, cb] = row_col_sums(B);
  CHECK(rb == std::vector<long>{1, 0});
  CHECK(cb == std::vector<long>{0, 1});
  CHECK(pm_total(B) == 1);
}

TEST_CASE("transpose swaps row and column sums") {
  std::mt19937 rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    PeriodicMatrix A = rand_pm(2 + trial % 2, 3, rng);
    PeriodicMatrix T = pm_transpose(A);
    auto [r, c] = row_col_sums(A);
    auto [rt, ct] = row_col_sums(T);
    CHECK(rt == c);
    CHECK(ct == r);
    CHECK(pm_transpose(T) == A);
    CHECK(pm_total(T) == pm_total(A));
  }
}

TEST_CASE("periodic matrix json round trip") {
  std::mt19937 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    PeriodicMatrix A = rand_pm(3, 4, rng);
    CHECK(pm_from_json(pm_to_json(A)) == A);
  }
  CHECK_THROWS_AS(pm_from_json(nlohmann::json::parse(R"({"n": 0, "entries": []})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(pm_from_json(nlohmann::json::parse(R"({"n": 2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      pm_from_json(nlohmann::json::parse(R"({"n": 2, "entries": [[1, 2]]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(
      pm_from_json(nlohmann::json::parse(
          R"({"n": 2, "entries": [[1, 2, 1], [3, 4, 1]]})")),
      std::invalid_argument);
}
