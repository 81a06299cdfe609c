#pragma once

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

// a segment with center a and length k stands for (az^{-k+1}, az^{-k+3},
// ..., az^{k-1}); centers are opaque labels and z-powers formal offsets, so
// two points coincide only when both the label and the offset match
struct Segment {
  std::string center;
  int length = 1;

  auto operator<=>(const Segment&) const = default;
};

// kept sorted so multiset equality is structural
using Multisegment = std::vector<Segment>;

inline std::vector<std::pair<std::string, int>> segment_points(
    const Segment& s) {
  std::vector<std::pair<std::string, int>> pts;
  for (int e = -s.length + 1; e <= s.length - 1; e += 2)
    pts.emplace_back(s.center, e);
  return pts;
}

inline Multisegment ms_normal(Multisegment ms) {
  for (const auto& s : ms)
    if (s.length < 1) throw std::invalid_argument("segment length must be >= 1");
  std::sort(ms.begin(), ms.end());
  return ms;
}

inline int ms_size(const Multisegment& ms) {
  int total = 0;
  for (const auto& s : ms) total += s.length;
  return total;
}

// lengths sorted weakly decreasing
inline std::vector<long> wp_partition(const Multisegment& ms) {
  std::vector<long> p;
  for (const auto& s : ms) p.push_back(s.length);
  std::sort(p.rbegin(), p.rend());
  return p;
}

namespace detail {

inline void segments_rec(int remaining, int slots, size_t from,
                         const std::vector<Segment>& pool, Multisegment& cur,
                         std::vector<Multisegment>& out) {
  if (remaining == 0) {
    out.push_back(ms_normal(cur));
    return;
  }
  if (slots == 0) return;
  for (size_t i = from; i < pool.size(); ++i) {
    if (pool[i].length > remaining) continue;
    cur.push_back(pool[i]);
    segments_rec(remaining - pool[i].length, slots - 1, i, pool, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

// all multisegments of total length r with at most n segments (so the
// associated partition has at most n parts), centers from the alphabet
inline std::vector<Multisegment> enumerate_segments(
    int r, int n, const std::vector<std::string>& alphabet) {
  if (r < 0 || n < 0) throw std::invalid_argument("negative bound");
  std::vector<Segment> pool;
  for (const auto& a : alphabet)
    for (int k = 1; k <= r; ++k) pool.push_back({a, k});
  std::vector<Multisegment> out;
  Multisegment cur;
  detail::segments_rec(r, n, 0, pool, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline nlohmann::ordered_json ms_to_json(const Multisegment& ms) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& s : ms) doc.push_back({s.center, s.length});
  return doc;
}

}  // namespace affcell
