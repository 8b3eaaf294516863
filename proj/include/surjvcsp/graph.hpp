#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "surjvcsp/errors.hpp"
#include "surjvcsp/value.hpp"
#include "surjvcsp/vertex_set.hpp"

namespace surjvcsp {

struct Edge {
  int u = 0;
  int v = 0;
  Value weight;
};

/// Undirected graph with finite positive edge weights.
///
/// Built from raw edges: parallel edges are merged, zero-weight edges are
/// dropped, and infinite-weight edges are contracted. Merged vertices are
/// numbered by their smallest original vertex; merge_map() translates.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<Edge>& raw) {
    check_vertex_count(n);
    original_n_ = n;
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : raw) {
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n)
        throw ArgumentError("Graph: edge endpoint out of range");
      if (e.u == e.v) throw ArgumentError("Graph: self-loop");
      if (e.weight < Value(0)) throw ArgumentError("Graph: negative edge weight");
      if (e.weight.is_infinite()) {
        const int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    map_.assign(n + 1, 0);
    std::vector<int> id(n + 1, 0);
    n_ = 0;
    for (int v = 1; v <= n; ++v) {
      const int root = find(v);
      if (id[root] == 0) id[root] = ++n_;
      map_[v] = id[root];
    }
    w_.assign(static_cast<std::size_t>(n_) * n_, Value(0));
    for (const auto& e : raw) {
      if (e.weight.is_infinite() || e.weight.is_zero()) continue;
      const int a = map_[e.u], b = map_[e.v];
      if (a == b) continue;
      at(a, b) += e.weight;
      at(b, a) = at(a, b);
    }
    build_edge_list();
  }

  /// Vertex count after contraction.
  int n() const { return n_; }
  int original_n() const { return original_n_; }
  /// Merged vertex of original vertex v.
  int merged(int v) const { return map_.at(v); }
  const std::vector<int>& merge_map() const { return map_; }
  bool contracted() const { return n_ != original_n_; }

  const Value& weight(int u, int v) const { return w_[index(u, v)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Merged set -> union of original vertices.
  VertexSet expand(VertexSet merged_set) const {
    VertexSet out = 0;
    for (int v = 1; v <= original_n_; ++v)
      if (contains(merged_set, map_[v])) out |= vertex_bit(v);
    return out;
  }

  /// Original set -> merged set; nullopt unless X is a union of merge classes.
  std::optional<VertexSet> compress(VertexSet original_set) const {
    VertexSet in = 0, out = 0;
    for (int v = 1; v <= original_n_; ++v)
      (contains(original_set, v) ? in : out) |= vertex_bit(map_[v]);
    if (in & out) return std::nullopt;
    return in;
  }

  /// Total weight from v into S.
  Value weight_to(int v, VertexSet s) const {
    Value total(0);
    for (int u : members_of(s))
      if (u != v) total += weight(v, u);
    return total;
  }

  /// Subgraph induced by S, vertices renumbered in increasing order.
  Graph induced(VertexSet s) const {
    const auto vs = members_of(s);
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!weight(vs[i], vs[j]).is_zero())
          es.push_back({static_cast<int>(i + 1), static_cast<int>(j + 1), weight(vs[i], vs[j])});
    return Graph(static_cast<int>(vs.size()), es);
  }

  /// Connected components, ordered by smallest vertex.
  std::vector<VertexSet> components() const {
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int s = 1; s <= n_; ++s) {
      if (contains(seen, s)) continue;
      VertexSet comp = vertex_bit(s), frontier = comp;
      while (frontier) {
        VertexSet next = 0;
        for (int u : members_of(frontier))
          for (int v = 1; v <= n_; ++v)
            if (!contains(comp, v) && !weight(u, v).is_zero()) next |= vertex_bit(v);
        comp |= next;
        frontier = next;
      }
      seen |= comp;
      out.push_back(comp);
    }
    return out;
  }

  bool connected() const { return n_ <= 1 || components().size() == 1; }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
  }
  Value& at(int u, int v) { return w_[index(u, v)]; }

  void build_edge_list() {
    edges_.clear();
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (!weight(u, v).is_zero()) edges_.push_back({u, v, weight(u, v)});
  }

  int n_ = 0;
  int original_n_ = 0;
  std::vector<int> map_;
  std::vector<Value> w_;
  std::vector<Edge> edges_;
};

}  // namespace surjvcsp
