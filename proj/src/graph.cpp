#include "potentia/graph.hpp"

#include <deque>
#include <stdexcept>

namespace potentia {

void LabeledGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
}

void LabeledGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adj_[idx(u, v)]) throw std::invalid_argument("edge already present");
  adj_[idx(u, v)] = adj_[idx(v, u)] = 1;
}

void LabeledGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !adj_[idx(u, v)]) throw std::invalid_argument("edge not present");
  adj_[idx(u, v)] = adj_[idx(v, u)] = 0;
}

int LabeledGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adj_[idx(v, u)];
  return d;
}

RawSequence LabeledGraph::degrees() const {
  RawSequence d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

DegreeSequence LabeledGraph::degree_sequence() const {
  return DegreeSequence::sorted(degrees());
}

int LabeledGraph::edge_count() const {
  int m = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) m += adj_[idx(u, v)];
  return m;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[idx(u, v)]) e.emplace_back(u, v);
  return e;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[idx(v, u)]) out.push_back(u);
  return out;
}

int LabeledGraph::distance(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(n_, -1);
  dist[u] = 0;
  std::deque<int> q{u};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int y = 0; y < n_; ++y) {
      if (adj_[idx(x, y)] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == v) return dist[y];
        q.push_back(y);
      }
    }
  }
  return -1;
}

LabeledGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

LabeledGraph complete_graph(int k) {
  LabeledGraph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph empty_graph(int k) { return LabeledGraph(k); }

LabeledGraph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  LabeledGraph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

LabeledGraph path_graph(int k) {
  LabeledGraph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

LabeledGraph complete_bipartite(int a, int b) {
  LabeledGraph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

LabeledGraph complete_split_graph(int r, int s) {
  LabeledGraph g(r + s);
  for (int u = 0; u < r; ++u) {
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
    for (int v = r; v < r + s; ++v) g.add_edge(u, v);
  }
  return g;
}

LabeledGraph paw_graph() {
  return graph_from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
}

LabeledGraph disjoint_union(const LabeledGraph& a, const LabeledGraph& b) {
  LabeledGraph g(a.n() + b.n());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

}  // namespace potentia
