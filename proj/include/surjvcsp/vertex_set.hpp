#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "surjvcsp/errors.hpp"

namespace surjvcsp {

/// Subset of vertices 1..n as a bitmask; vertex i is bit 2^(i-1).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertex_bit(int i) { return VertexSet{1} << (i - 1); }

inline constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet x) { return std::popcount(x); }

inline bool contains(VertexSet x, int i) { return (x >> (i - 1)) & 1U; }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

/// Canonical order: by size, then by numeric mask.
inline bool canonical_less(VertexSet a, VertexSet b) {
  const int pa = set_size(a), pb = set_size(b);
  return pa != pb ? pa < pb : a < b;
}

inline void canonical_sort(std::vector<VertexSet>& xs) {
  std::sort(xs.begin(), xs.end(), canonical_less);
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

/// 1-based members in increasing order.
inline std::vector<int> members_of(VertexSet x) {
  std::vector<int> out;
  for (; x != 0; x &= x - 1) out.push_back(std::countr_zero(x) + 1);
  return out;
}

inline VertexSet set_of(std::initializer_list<int> vs) {
  VertexSet x = 0;
  for (int v : vs) x |= vertex_bit(v);
  return x;
}

inline std::string set_string(VertexSet x) {
  std::string s = "{";
  bool first = true;
  for (int v : members_of(x)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

inline void check_vertex_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw ResourceError("vertex count " + std::to_string(n) + " exceeds 64");
}

}  // namespace surjvcsp
