#pragma once

#include <string>
#include <utility>
#include <vector>

#include "potentia/seq.hpp"

namespace potentia {

/// Simple undirected graph on vertices 0..n-1. Vertex i is understood to
/// carry the (i+1)-th term of the sequence it realizes, so degree checks
/// against a DegreeSequence compare vertex i with d_{i+1}.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {}

  int n() const { return n_; }

  bool has_edge(int u, int v) const { return u != v && adj_[idx(u, v)]; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int degree(int v) const;
  RawSequence degrees() const;                 // by vertex index
  DegreeSequence degree_sequence() const;      // sorted nonincreasing

  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::vector<int> neighbors(int v) const;

  /// BFS distance, -1 when unreachable.
  int distance(int u, int v) const;

  bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<unsigned char> adj_;
};

LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Small builders used for patterns and tests.
LabeledGraph complete_graph(int k);
LabeledGraph empty_graph(int k);
LabeledGraph cycle_graph(int k);
LabeledGraph path_graph(int k);
LabeledGraph complete_bipartite(int a, int b);   // parts {0..a-1}, {a..a+b-1}
LabeledGraph complete_split_graph(int r, int s);  // K_r joined with empty K_s
LabeledGraph paw_graph();                         // triangle plus a pendant
LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b);

}  // namespace potentia
