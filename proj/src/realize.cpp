#include "potentia/realize.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace potentia {

KwResidual kleitman_wang_layoff(const DegreeSequence& seq, int i) {
  const int n = seq.n();
  if (i < 1 || i > n) throw std::invalid_argument("kleitman_wang_layoff: index out of range");
  const RawSequence& d = seq.terms();
  const int di = d[i - 1];
  KwResidual r;
  r.unsorted.reserve(n - 1);
  if (di < i) {
    // reduce the d_i largest terms, skipping position i itself (it comes later)
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      r.unsorted.push_back(j <= di ? d[j - 1] - 1 : d[j - 1]);
    }
  } else {
    // reduce positions 1..i-1 and i+1..d_i+1
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      r.unsorted.push_back(j <= di + 1 ? d[j - 1] - 1 : d[j - 1]);
    }
  }
  r.sorted = r.unsorted;
  std::sort(r.sorted.begin(), r.sorted.end(), std::greater<int>());
  return r;
}

LabeledGraph realize(const DegreeSequence& seq) {
  if (!is_graphic(seq)) throw std::invalid_argument("realize: sequence is not graphic");
  const int n = seq.n();
  LabeledGraph g(n);
  std::vector<int> remaining = seq.terms();
  std::vector<char> active(n, 1);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;

  int active_count = n;
  while (active_count > 0) {
    // lay off the minimum remaining degree, highest index among ties
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (active[v] && (u < 0 || remaining[v] < remaining[u] ||
                        (remaining[v] == remaining[u] && v > u)))
        u = v;
    active[u] = 0;
    --active_count;
    int need = remaining[u];
    remaining[u] = 0;
    if (need == 0) continue;
    // neighbors: highest remaining degree first, lowest index on ties
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
      if (active[v]) cand.push_back(v);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return remaining[a] > remaining[b]; });
    if (need > static_cast<int>(cand.size()))
      throw std::logic_error("realize: residual demand exceeds active vertices");
    for (int t = 0; t < need; ++t) {
      g.add_edge(u, cand[t]);
      --remaining[cand[t]];
    }
  }
  return g;
}

LabeledGraph two_switch(const LabeledGraph& g, int x1, int y1, int x2, int y2) {
  auto name = [](int v) { return "v" + std::to_string(v + 1); };
  std::vector<int> vs{x1, y1, x2, y2};
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw std::invalid_argument("two_switch: vertices are not distinct");
  if (!g.has_edge(x1, y1))
    throw std::invalid_argument("two_switch: " + name(x1) + name(y1) + " is not an edge");
  if (!g.has_edge(x2, y2))
    throw std::invalid_argument("two_switch: " + name(x2) + name(y2) + " is not an edge");
  if (g.has_edge(x1, x2))
    throw std::invalid_argument("two_switch: " + name(x1) + name(x2) + " is already an edge");
  if (g.has_edge(y1, y2))
    throw std::invalid_argument("two_switch: " + name(y1) + name(y2) + " is already an edge");
  LabeledGraph out = g;
  out.remove_edge(x1, y1);
  out.remove_edge(x2, y2);
  out.add_edge(x1, x2);
  out.add_edge(y1, y2);
  return out;
}

bool EmbeddingWitness::check() const {
  if (static_cast<int>(vertex_map.size()) != pattern.n()) return false;
  std::set<int> seen;
  for (int v : vertex_map) {
    if (v < 0 || v >= host.n()) return false;
    if (!seen.insert(v).second) return false;
  }
  for (auto [a, b] : pattern.edges())
    if (!host.has_edge(vertex_map[a], vertex_map[b])) return false;
  return true;
}

bool EmbeddingWitness::check_realizes(const DegreeSequence& seq) const {
  if (host.n() != seq.n()) return false;
  for (int v = 0; v < host.n(); ++v)
    if (host.degree(v) != seq.term(v + 1)) return false;
  return check();
}

namespace {

// distance >= 3, with unreachable counting as far
bool far_enough(const LabeledGraph& g, int u, int v) {
  int d = g.distance(u, v);
  return d < 0 || d >= 3;
}

}  // namespace

EmbeddingWitness embed_on_prescribed(const DegreeSequence& seq,
                                     const LabeledGraph& pattern,
                                     const std::vector<int>& indices) {
  const int k = pattern.n();
  const int n = seq.n();
  if (static_cast<int>(indices.size()) != k)
    throw std::invalid_argument("embed_on_prescribed: need one index per pattern vertex");
  std::set<int> distinct(indices.begin(), indices.end());
  if (static_cast<int>(distinct.size()) != k || *distinct.begin() < 1 || *distinct.rbegin() > n)
    throw std::invalid_argument("embed_on_prescribed: indices must be distinct positions in 1..n");

  // pattern vertices in nonincreasing degree order; h_j pairs with indices[j]
  std::vector<int> porder(k);
  for (int i = 0; i < k; ++i) porder[i] = i;
  std::stable_sort(porder.begin(), porder.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  for (int j = 0; j < k; ++j) {
    int need = pattern.degree(porder[j]);
    if (seq.term(indices[j]) < need)
      throw std::invalid_argument(
          "embed_on_prescribed: degree hypothesis fails at position " +
          std::to_string(indices[j]) + " (needs " + std::to_string(need) + ")");
  }
  const long long M = std::max(1, seq.max_term());
  if (seq.positive_count() < 2 * M * M + k)
    throw std::invalid_argument("embed_on_prescribed: fewer than 2M^2+k positive terms (M=" +
                                std::to_string(M) + ")");

  EmbeddingWitness w;
  w.pattern = pattern;
  w.vertex_map.assign(k, -1);
  for (int j = 0; j < k; ++j) w.vertex_map[porder[j]] = indices[j] - 1;
  LabeledGraph g = realize(seq);

  std::vector<char> in_s(n, 0);
  for (int idx : indices) in_s[idx - 1] = 1;
  // host_edge(a,b) of the placed copy H_S
  auto hs_edge = [&](int a, int b) {
    for (auto [p, q] : pattern.edges()) {
      int u = w.vertex_map[p], v = w.vertex_map[q];
      if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
  };

  const int max_rounds = pattern.edge_count();
  for (int round = 0; round <= max_rounds; ++round) {
    // first missing placed edge, in pattern edge order
    int mi = -1, mj = -1;
    for (auto [p, q] : pattern.edges()) {
      int u = w.vertex_map[p], v = w.vertex_map[q];
      if (!g.has_edge(u, v)) {
        mi = u;
        mj = v;
        break;
      }
    }
    if (mi < 0) {
      w.host = g;
      return w;
    }
    if (round == max_rounds)
      throw std::logic_error("embed_on_prescribed: exchange loop failed to terminate");

    auto pick_spare = [&](int v) {
      for (int a = 0; a < n; ++a)
        if (g.has_edge(v, a) && !hs_edge(v, a)) return a;
      throw std::logic_error("embed_on_prescribed: no spare neighbor at v" + std::to_string(v + 1));
    };
    int ai = pick_spare(mi);
    int aj = pick_spare(mj);
    int wv = -1;
    for (int c = 0; c < n; ++c) {
      if (in_s[c] || g.degree(c) == 0) continue;
      if (far_enough(g, c, ai) && far_enough(g, c, aj)) {
        wv = c;
        break;
      }
    }
    if (wv < 0) throw std::logic_error("embed_on_prescribed: no distant positive-degree vertex");
    int x = g.neighbors(wv).front();

    g.remove_edge(mi, ai);
    g.remove_edge(mj, aj);
    g.remove_edge(wv, x);
    g.add_edge(mi, mj);
    g.add_edge(ai, wv);
    g.add_edge(aj, x);
  }
  throw std::logic_error("embed_on_prescribed: unreachable");
}

namespace {

long long split_objective(const LabeledGraph& g, int r, int k) {
  long long obj = 0;
  for (int u = 0; u < r; ++u) {
    for (int v = u + 1; v < r; ++v) obj += g.has_edge(u, v);
    for (int v = r; v < k; ++v) obj += g.has_edge(u, v);
  }
  return obj;
}

}  // namespace

SplitObjectiveResult max_split_objective_realization(const DegreeSequence& seq,
                                                     int r, int k,
                                                     int exhaustive_cap,
                                                     const OracleOptions& opts) {
  if (!(1 <= r && r < k && k <= seq.n()))
    throw std::invalid_argument("max_split_objective_realization: need 1 <= r < k <= n");
  if (!is_graphic(seq))
    throw std::invalid_argument("max_split_objective_realization: sequence is not graphic");

  SplitObjectiveResult best;
  if (seq.n() <= exhaustive_cap) {
    OracleOptions o = opts;
    o.cap = std::max(o.cap, seq.n());
    bool first = true;
    enumerate_realizations(seq, [&](const LabeledGraph& g) {
      long long obj = split_objective(g, r, k);
      if (first || obj > best.objective) {
        best.graph = g;
        best.objective = obj;
        first = false;
      }
      return true;
    }, o);
    best.heuristic = false;
    return best;
  }

  // steepest-ascent 2-switching from the canonical realization
  LabeledGraph g = realize(seq);
  long long cur = split_objective(g, r, k);
  for (;;) {
    auto edges = g.edges();
    long long gain_best = 0;
    int bx1 = -1, by1 = -1, bx2 = -1, by2 = -1;
    for (size_t e1 = 0; e1 < edges.size(); ++e1) {
      for (size_t e2 = e1 + 1; e2 < edges.size(); ++e2) {
        auto [a, b] = edges[e1];
        auto [c, d] = edges[e2];
        if (a == c || a == d || b == c || b == d) continue;
        // two ways to cross the pair
        const int cand[2][4] = {{a, b, c, d}, {a, b, d, c}};
        for (const auto& q : cand) {
          if (g.has_edge(q[0], q[2]) || g.has_edge(q[1], q[3])) continue;
          LabeledGraph h = two_switch(g, q[0], q[1], q[2], q[3]);
          long long gain = split_objective(h, r, k) - cur;
          if (gain > gain_best) {
            gain_best = gain;
            bx1 = q[0];
            by1 = q[1];
            bx2 = q[2];
            by2 = q[3];
          }
        }
      }
    }
    if (gain_best <= 0) break;
    g = two_switch(g, bx1, by1, bx2, by2);
    cur += gain_best;
  }
  best.graph = g;
  best.objective = cur;
  best.heuristic = true;
  return best;
}

LabeledGraph complete_set_to_clique(const LabeledGraph& g,
                                    const std::vector<int>& targets,
                                    std::vector<int> forbidden,
                                    int degree_cap) {
  if (forbidden.empty()) forbidden = targets;
  std::vector<char> banned(g.n(), 0);
  for (int v : forbidden) banned[v] = 1;
  for (int v : targets)
    if (!banned[v])
      throw std::invalid_argument("complete_set_to_clique: forbidden must contain the target set");

  LabeledGraph out = g;
  for (size_t i = 0; i < targets.size(); ++i) {
    for (size_t j = i + 1; j < targets.size(); ++j) {
      int vi = targets[i], vj = targets[j];
      if (out.has_edge(vi, vj)) continue;
      bool done = false;
      for (int x = 0; x < out.n() && !done; ++x) {
        if (banned[x] || !out.has_edge(vi, x)) continue;
        for (int y = 0; y < out.n() && !done; ++y) {
          if (banned[y] || y == x || !out.has_edge(vj, y)) continue;
          if (out.has_edge(x, y) || out.has_edge(vi, vj)) continue;
          if (x == vj || y == vi) continue;
          // exchange vi-x, vj-y  ->  vi-vj, x-y
          out = two_switch(out, vi, x, vj, y);
          done = true;
        }
      }
      if (!done)
        throw std::runtime_error(
            "complete_set_to_clique: no valid exchange for v" + std::to_string(vi + 1) +
            ", v" + std::to_string(vj + 1) +
            " (hypothesis violation; degree cap context " + std::to_string(degree_cap) + ")");
    }
  }
  return out;
}

}  // namespace potentia
