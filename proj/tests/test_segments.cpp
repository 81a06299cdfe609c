#include <affcell/segments.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace affcell;

namespace {

// independent generator: pick a multiplicity for every (center, length) pair
// and keep the totals that hit r, then filter by segment count
void multiplicity_rec(size_t idx, int remaining,
                      const std::vector<Segment>& pool, Multisegment& cur,
                      std::vector<Multisegment>& out) {
  if (idx == pool.size()) {
    if (remaining == 0) out.push_back(ms_normal(cur));
    return;
  }
  for (int copies = 0; copies * pool[idx].length <= remaining; ++copies) {
    for (int c = 0; c < copies; ++c) cur.push_back(pool[idx]);
    multiplicity_rec(idx + 1, remaining - copies * pool[idx].length, pool, cur,
                     out);
    for (int c = 0; c < copies; ++c) cur.pop_back();
  }
}

std::set<Multisegment> oracle_segments(int r, int n,
                                       const std::vector<std::string>& ab) {
  std::vector<Segment> pool;
  for (const auto& a : ab)
    for (int k = 1; k <= r; ++k) pool.push_back({a, k});
  std::vector<Multisegment> all;
  Multisegment cur;
  multiplicity_rec(0, r, pool, cur, all);
  std::set<Multisegment> keep;
  for (auto& ms : all)
    if (static_cast<int>(ms.size()) <= n) keep.insert(ms);
  return keep;
}

}  // namespace

TEST_CASE("segment points") {
  CHECK(segment_points({"a", 3}) ==
        std::vector<std::pair<std::string, int>>{{"a", -2}, {"a", 0}, {"a", 2}});
  CHECK(segment_points({"b", 1}) ==
        std::vector<std::pair<std::string, int>>{{"b", 0}});
  // distinct offsets never collide: the formal z is not a root of unity
  auto p4 = segment_points({"a", 4});
  std::set<std::pair<std::string, int>> uniq(p4.begin(), p4.end());
  CHECK(uniq.size() == 4);
}

TEST_CASE("multiset normalization") {
  Multisegment ms = ms_normal({{"b", 1}, {"a", 3}, {"a", 1}});
  CHECK(ms == Multisegment{{"a", 1}, {"a", 3}, {"b", 1}});
  CHECK(ms_size(ms) == 5);
  CHECK_THROWS_AS(ms_normal({{"a", 0}}), std::invalid_argument);
}

TEST_CASE("partition of a multisegment") {
  CHECK(wp_partition({{"a", 1}, {"b", 3}, {"a", 2}}) ==
        std::vector<long>{3, 2, 1});
  CHECK(wp_partition({{"a", 5}}) == std::vector<long>{5});
  CHECK(wp_partition({{"a", 1}, {"a", 1}, {"a", 1}}) ==
        std::vector<long>{1, 1, 1});
  CHECK(wp_partition({}).empty());
}

TEST_CASE("segment enumeration counts") {
  CHECK(enumerate_segments(1, 1, {"a", "b", "c"}).size() == 3);
  CHECK(enumerate_segments(2, 2, {"a"}).size() == 2);
  CHECK(enumerate_segments(2, 1, {"a"}).size() == 1);
  CHECK(enumerate_segments(3, 2, {"a"}).size() == 2);
  CHECK(enumerate_segments(2, 2, {"a", "b"}).size() == 5);
  CHECK(enumerate_segments(0, 0, {"a"}).size() == 1);  // the empty multisegment
}

TEST_CASE("enumeration matches the brute-force filter") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 1; n <= 4; ++n)
      for (auto ab : {std::vector<std::string>{"a"},
                      std::vector<std::string>{"a", "b"}}) {
        auto fast = enumerate_segments(r, n, ab);
        std::set<Multisegment> got(fast.begin(), fast.end());
        CHECK(got.size() == fast.size());  // no duplicates emitted
        CHECK(got == oracle_segments(r, n, ab));
      }
}

TEST_CASE("partition fibers are disjoint and cover") {
  int r = 4, n = 3;
  std::vector<std::string> ab{"a", "b"};
  auto all = enumerate_segments(r, n, ab);
  std::map<std::vector<long>, std::set<Multisegment>> fibers;
  for (const auto& ms : all) {
    CHECK(ms_size(ms) == r);
    CHECK(static_cast<int>(wp_partition(ms).size()) <= n);
    fibers[wp_partition(ms)].insert(ms);
  }
  size_t total = 0;
  for (const auto& [la, fiber] : fibers) {
    CHECK_FALSE(fiber.empty());
    long sum = 0;
    for (long e : la) sum += e;
    CHECK(sum == r);
    total += fiber.size();
  }
  CHECK(total == all.size());
  // every partition of r with at most n parts shows up as a fiber
  CHECK(fibers.size() == 4);  // (4), (3,1), (2,2), (2,1,1)
}

TEST_CASE("multisegment json form") {
  auto doc = ms_to_json({{"a", 2}, {"b", 1}});
  CHECK(doc.dump() == R"([["a",2],["b",1]])");
}
