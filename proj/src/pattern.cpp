#include "potentia/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace potentia {

namespace {

// Lexicographic enumeration of size-subsets of {0..k-1}; fn returns true to
// keep going.
void for_each_subset(int k, int size, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == size) return fn(pick);
    if (k - from < size - static_cast<int>(pick.size())) return true;
    for (int v = from; v < k; ++v) {
      pick.push_back(v);
      if (!rec(v + 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  rec(0);
}

int induced_max_degree(const LabeledGraph& h, const std::vector<int>& s) {
  int best = 0;
  for (size_t a = 0; a < s.size(); ++a) {
    int d = 0;
    for (size_t b = 0; b < s.size(); ++b)
      if (a != b && h.has_edge(s[a], s[b])) ++d;
    best = std::max(best, d);
  }
  return best;
}

bool independent(const LabeledGraph& h, const std::vector<int>& s) {
  for (size_t a = 0; a < s.size(); ++a)
    for (size_t b = a + 1; b < s.size(); ++b)
      if (h.has_edge(s[a], s[b])) return false;
  return true;
}

}  // namespace

PatternGraph::PatternGraph(LabeledGraph h) : h_(std::move(h)) {
  const int k = h_.n();
  if (h_.edge_count() == 0)
    throw std::invalid_argument("pattern: H needs at least one nontrivial component");
  if (k > kAlphaCap)
    throw std::invalid_argument("pattern: order exceeds the independence-number cap");
  if (k > kNablaCap)
    throw std::invalid_argument("pattern: order exceeds the nabla profile cap");
  degseq_ = sorted_desc(h_.degrees());

  // independence number by subset scan, small k
  std::vector<unsigned> adj_mask(k, 0);
  for (auto [u, v] : h_.edges()) {
    adj_mask[u] |= 1u << v;
    adj_mask[v] |= 1u << u;
  }
  for (unsigned s = 0; s < (1u << k); ++s) {
    bool ok = true;
    for (int v = 0; v < k && ok; ++v)
      if ((s >> v & 1) && (adj_mask[v] & s)) ok = false;
    if (ok) alpha_ = std::max(alpha_, __builtin_popcount(s));
  }

  nabla_.assign(k - alpha_, 0);
  subsets_.assign(k - alpha_, {});
  for (int i = alpha_ + 1; i <= k; ++i) {
    int best = k;
    std::vector<int> arg;
    for_each_subset(k, i, [&](const std::vector<int>& s) {
      int d = induced_max_degree(h_, s);
      if (d < best) {
        best = d;
        arg = s;
      }
      return true;
    });
    nabla_[i - alpha_ - 1] = best;
    subsets_[i - alpha_ - 1] = arg;
  }

  int best_val = 0;
  i_star_ = 0;
  for (int i = alpha_ + 1; i <= k; ++i) {
    int val = 2 * i - nabla(i);
    if (i_star_ == 0 || val < best_val) {
      best_val = val;
      i_star_ = i;
    }
  }
  ell_star_ = i_star_ - nabla(i_star_);
  f_ = 6LL * k * k + 1LL * ell_star_ * ell_star_ * k + nabla(i_star_);

  if (nabla(k) != degseq_.front())
    throw std::logic_error("pattern: nabla_k must equal the maximum degree");
  if (ell_star_ > alpha_)
    throw std::logic_error("pattern: ell* exceeded alpha");
  for (int i = alpha_ + 1; i <= k; ++i)
    if (degseq_[k - i] > k - i + nabla(i))
      throw std::logic_error("pattern: h_{k-i+1} <= k-i+nabla_i failed");
}

int PatternGraph::nabla(int i) const {
  if (i < alpha_ + 1 || i > k())
    throw std::invalid_argument("nabla: index outside [alpha+1, k]");
  return nabla_[i - alpha_ - 1];
}

const std::vector<int>& PatternGraph::nabla_subset(int i) const {
  if (i < alpha_ + 1 || i > k())
    throw std::invalid_argument("nabla_subset: index outside [alpha+1, k]");
  return subsets_[i - alpha_ - 1];
}

std::vector<int> PatternGraph::independent_set(int size) const {
  std::vector<int> found;
  if (size == 0) return found;
  for_each_subset(k(), size, [&](const std::vector<int>& s) {
    if (independent(h_, s)) {
      found = s;
      return false;
    }
    return true;
  });
  if (found.empty()) throw std::invalid_argument("independent_set: no set of that size");
  return found;
}

PiTilde pi_tilde_full(const PatternGraph& h, int n, int i) {
  const int k = h.k();
  const int nab = h.nabla(i);  // validates the domain
  const int head = k - i;
  const int tail = n - k + i;
  const int value = k - i + nab - 1;
  if (tail < 0 || head > n)
    throw std::invalid_argument("pi_tilde: n too small for the term counts");
  if (head > 0 && value > n - 1)
    throw std::invalid_argument("pi_tilde: n too small, tail value exceeds n-1");
  PiTilde out;
  out.formula.assign(head, n - 1);
  out.formula.insert(out.formula.end(), tail, value);
  RawSequence fixed = out.formula;
  if (tail % 2 == 1 && (nab - 1) % 2 == 1) {
    out.parity_fix = true;
    fixed.back() -= 1;
  }
  out.fixed = DegreeSequence(std::move(fixed));
  if (!is_graphic(out.fixed))
    throw std::logic_error("pi_tilde: the extremal sequence failed the graphicality test");
  return out;
}

DegreeSequence pi_tilde(const PatternGraph& h, int n, int i) {
  return pi_tilde_full(h, n, i).fixed;
}

long long sigma(const DegreeSequence& seq) { return seq.sum(); }
long long sigma(const RawSequence& seq) { return seq_sum(seq); }

DegreeSufficiency degree_sufficient(const DegreeSequence& seq, const PatternGraph& h) {
  DegreeSufficiency out;
  const int k = h.k();
  int first_fail = 0;
  for (int i = 1; i <= k; ++i) {
    if (seq.term_or_zero(i) < h.degseq()[i - 1]) {
      first_fail = i;
      break;
    }
  }
  if (first_fail == 0) {
    out.sufficient = true;
    return out;
  }
  out.j = k - first_fail + 1;
  return out;
}

bool li_yin_condition_a(const DegreeSequence& seq, int k) {
  if (seq.n() < k) return false;
  if (seq.term(k) < k - 1) return false;
  for (int i = 1; i <= k - 2; ++i)
    if (seq.term(i) < 2 * (k - 1) - i) return false;
  return true;
}

bool li_yin_condition_b(const DegreeSequence& seq, int k) {
  if (seq.n() < 2 * k) return false;
  return seq.term(k) >= k - 1 && seq.term(2 * k) >= k - 2;
}

bool li_yin_potentially_kk(const DegreeSequence& seq, int k) {
  return li_yin_condition_a(seq, k) || li_yin_condition_b(seq, k);
}

WantSequence want_sequence(const DegreeSequence& seq, int r, int k, const LabeledGraph& g,
                           bool heuristic_flag) {
  const int n = seq.n();
  if (!(1 <= r && r < k && k <= n))
    throw std::invalid_argument("want_sequence: need 1 <= r < k <= n");
  for (int i = 1; i <= k; ++i) {
    int need = i <= r ? k - 1 : r;
    if (seq.term(i) < need)
      throw std::invalid_argument("want_sequence: not degree sufficient for the split graph at position " +
                                  std::to_string(i));
  }
  if (g.n() != n) throw std::invalid_argument("want_sequence: realization has the wrong order");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != seq.term(v + 1))
      throw std::invalid_argument("want_sequence: g does not realize seq");

  WantSequence w;
  w.r = r;
  w.k = k;
  w.heuristic = heuristic_flag;
  w.values.assign(n - r, 0);
  // degrees within G_r = G[v_{r+1}..v_n]
  for (int v = r; v < n; ++v) {
    int d = 0;
    for (int u = r; u < n; ++u)
      if (g.has_edge(v, u)) ++d;
    w.values[v - r] = d;
  }
  w.w_sets.assign(r, {});
  w.keep_sets.assign(r, {});
  for (int i = 0; i < r; ++i) {
    int in_s = 0;
    for (int u = 0; u < k; ++u)
      if (u != i && g.has_edge(i, u)) ++in_s;
    int need = (k - 1) - in_s;
    std::vector<int> outer;  // N(v_i) among v_{k+1}..v_n
    for (int u = k; u < n; ++u)
      if (g.has_edge(i, u)) outer.push_back(u);
    if (static_cast<int>(outer.size()) < need)
      throw std::logic_error("want_sequence: missing the distinct outside neighbors");
    w.w_sets[i].assign(outer.begin(), outer.begin() + need);
    w.keep_sets[i].assign(outer.begin() + need, outer.end());
    for (int y : w.w_sets[i]) w.values[y - r] += 1;
  }
  for (int j = r; j < k; ++j) {
    int to_clique = 0;
    for (int u = 0; u < r; ++u)
      if (g.has_edge(j, u)) ++to_clique;
    w.values[j - r] -= r - to_clique;
  }
  return w;
}

LabeledGraph assemble_split_realization(const DegreeSequence& seq, const WantSequence& w) {
  const int n = seq.n();
  const int r = w.r, k = w.k;
  for (int v : w.values)
    if (v < 0) throw std::invalid_argument("assemble: want sequence has a negative entry");
  // realize the want sequence on v_{r+1}..v_n
  std::vector<int> order(n - r);
  std::iota(order.begin(), order.end(), r);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return w.values[a - r] > w.values[b - r]; });
  RawSequence sorted;
  sorted.reserve(order.size());
  for (int v : order) sorted.push_back(w.values[v - r]);
  DegreeSequence want_sorted{std::move(sorted)};
  if (!is_graphic(want_sorted))
    throw std::invalid_argument("assemble: want sequence is not graphic");
  LabeledGraph rw = realize(want_sorted);

  LabeledGraph g(n);
  for (auto [a, b] : rw.edges()) g.add_edge(order[a], order[b]);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    for (int y : w.keep_sets[i]) g.add_edge(i, y);
  }
  return g;
}

std::string route_name(PotentialRoute r) {
  switch (r) {
    case PotentialRoute::LiYinA: return "li_yin_a";
    case PotentialRoute::LiYinB: return "li_yin_b";
    case PotentialRoute::WantSplit: return "want_split";
    case PotentialRoute::PrescribedEmbed: return "prescribed_embed";
    case PotentialRoute::BicliqueClique: return "biclique_clique";
    case PotentialRoute::Oracle: return "oracle";
    case PotentialRoute::None: return "none";
  }
  return "none";
}

namespace {

// Maps H into a complete split graph sitting on host vertices: clique side
// hosts[0..r-1], independent side hosts[r..k-1]. Needs an independent set of
// size k-r in H.
std::vector<int> map_into_split(const PatternGraph& h, int r, const std::vector<int>& hosts) {
  const int k = h.k();
  std::vector<int> ind = h.independent_set(k - r);
  std::vector<char> in_ind(k, 0);
  for (int v : ind) in_ind[v] = 1;
  std::vector<int> map(k, -1);
  int c = 0, s = static_cast<int>(r);
  for (int v = 0; v < k; ++v) {
    if (in_ind[v])
      map[v] = hosts[s++];
    else
      map[v] = hosts[c++];
  }
  return map;
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

// Split-graph construction via the want sequence; empty on any failure.
std::optional<LabeledGraph> try_split_host(const DegreeSequence& seq, int r, int k,
                                           const PotentialOptions& opts, bool* heuristic) {
  try {
    SplitObjectiveResult m =
        max_split_objective_realization(seq, r, k, opts.exhaustive_cap, opts.oracle);
    WantSequence w = want_sequence(seq, r, k, m.graph, m.heuristic);
    if (heuristic) *heuristic = m.heuristic;
    LabeledGraph host = assemble_split_realization(seq, w);
    for (int v = 0; v < host.n(); ++v)
      if (host.degree(v) != seq.term(v + 1)) return std::nullopt;
    return host;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

PotentialVerdict is_potentially_h(const DegreeSequence& seq, const PatternGraph& h,
                                  const PotentialOptions& opts) {
  if (!is_graphic(seq))
    throw std::invalid_argument("is_potentially_h: sequence is not graphic");
  PotentialVerdict out;
  const int k = h.k();
  const int n = seq.n();

  if (k > n) {
    out.status = PotentialStatus::NotPotentially;
    out.route = PotentialRoute::Oracle;
    out.note = "pattern has more vertices than the sequence";
    return out;
  }

  auto finish = [&](PotentialRoute route, EmbeddingWitness w, const std::string& note) -> bool {
    if (!w.check_realizes(seq)) return false;
    out.status = PotentialStatus::Potentially;
    out.route = route;
    out.witness = std::move(w);
    if (!note.empty()) out.note += note;
    return true;
  };

  // Li-Yin: potentially K_k-graphic implies potentially H-graphic; a witness
  // still has to be constructed.
  const bool ly_a = li_yin_condition_a(seq, k);
  const bool ly_b = li_yin_condition_b(seq, k);
  if (ly_a || ly_b) {
    PotentialRoute route = ly_a ? PotentialRoute::LiYinA : PotentialRoute::LiYinB;
    if (k >= 2) {
      bool heur = false;
      if (auto host = try_split_host(seq, k - 1, k, opts, &heur)) {
        EmbeddingWitness w;
        w.host = *host;
        w.pattern = h.graph();
        w.vertex_map = iota_vec(0, k);  // any k clique vertices carry H
        if (finish(route, std::move(w), heur ? "heuristic maximizer; " : ""))
          return out;
      }
    }
    if (n <= opts.oracle.cap) {
      if (auto host = find_realization_containing(seq, complete_graph(k), opts.oracle)) {
        auto kk_map = find_subgraph_map(*host, complete_graph(k));
        EmbeddingWitness w;
        w.host = *host;
        w.pattern = h.graph();
        w.vertex_map = *kk_map;
        if (finish(route, std::move(w), "")) return out;
      }
    }
    out.note += "li_yin positive without a constructed witness; ";
  }

  // want-split for K_{k-alpha} v K~_alpha, which contains H
  {
    int r = k - h.alpha();
    if (r >= 1 && r < k) {
      bool heur = false;
      if (auto host = try_split_host(seq, r, k, opts, &heur)) {
        EmbeddingWitness w;
        w.host = *host;
        w.pattern = h.graph();
        w.vertex_map = map_into_split(h, r, iota_vec(0, k));
        if (finish(PotentialRoute::WantSplit, std::move(w), heur ? "heuristic maximizer; " : ""))
          return out;
      }
    }
  }

  // Case 4a: hub clique of the t large-degree vertices, then an embedded
  // nabla-achieving induced subgraph F_{k-t} on the next k-t positions.
  {
    int t = 0;
    while (t < k && t < n && seq.term(t + 1) >= k - 1) ++t;
    if (t >= 1 && t < k - h.alpha()) {
      try {
        SplitObjectiveResult m =
            max_split_objective_realization(seq, t, k, opts.exhaustive_cap, opts.oracle);
        WantSequence w = want_sequence(seq, t, k, m.graph, m.heuristic);
        LabeledGraph split_host = assemble_split_realization(seq, w);
        // degrees after deleting the hubs
        RawSequence prime(n - t, 0);
        for (int v = t; v < n; ++v) {
          int d = 0;
          for (int u = t; u < n; ++u)
            if (split_host.has_edge(v, u)) ++d;
          prime[v - t] = d;
        }
        std::vector<int> order = iota_vec(t, n - t);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return prime[a - t] > prime[b - t]; });
        RawSequence prime_sorted;
        for (int v : order) prime_sorted.push_back(prime[v - t]);
        const std::vector<int>& fset = h.nabla_subset(k - t);
        LabeledGraph f_pattern(static_cast<int>(fset.size()));
        for (size_t a = 0; a < fset.size(); ++a)
          for (size_t b = a + 1; b < fset.size(); ++b)
            if (h.graph().has_edge(fset[a], fset[b]))
              f_pattern.add_edge(static_cast<int>(a), static_cast<int>(b));
        // prescribed positions of the split's independent side v_{t+1}..v_k
        std::vector<int> positions;
        for (int v = t; v < k; ++v) {
          int pos = static_cast<int>(std::find(order.begin(), order.end(), v) - order.begin());
          positions.push_back(pos + 1);
        }
        EmbeddingWitness inner = embed_on_prescribed(
            DegreeSequence{RawSequence(prime_sorted)}, f_pattern, positions);
        // lift back: inner host vertex j is original vertex order[j]
        LabeledGraph lifted(n);
        for (auto [a, b] : inner.host.edges()) lifted.add_edge(order[a], order[b]);
        for (int i = 0; i < t; ++i)
          for (int u : split_host.neighbors(i))
            if (u > i) lifted.add_edge(i, u);
        // map H: F's vertices via the inner embedding, the rest onto the hubs
        // (embed_on_prescribed pairs pattern vertices with positions by degree
        // rank, so recover F-vertex -> original vertex through inner.vertex_map)
        std::vector<int> hmap(k, -1);
        for (size_t a = 0; a < fset.size(); ++a)
          hmap[fset[a]] = order[inner.vertex_map[a]];
        int hub = 0;
        for (int v = 0; v < k; ++v)
          if (hmap[v] < 0) hmap[v] = hub++;
        EmbeddingWitness w2;
        w2.host = lifted;
        w2.pattern = h.graph();
        w2.vertex_map = hmap;
        if (finish(PotentialRoute::PrescribedEmbed, std::move(w2), "")) return out;
      } catch (const std::exception&) {
        // fall through
      }
    }
  }

  // Case 4b: biclique via the Laying-off Algorithm, then clique completion.
  {
    int ell = h.ell_star();
    if (ell >= 1 && ell < k) {
      try {
        LayoffResult lay = run_layoff(seq, k, ell);
        std::vector<int> big = iota_vec(0, k - ell);
        std::vector<int> biclique = big;
        for (int t = 0; t < ell; ++t)
          biclique.push_back(lay.witness.vertex_map[k - ell + t]);
        LabeledGraph host =
            complete_set_to_clique(lay.witness.host, big, biclique, seq.term(k));
        std::vector<int> hosts = biclique;  // clique side first, then the r side
        EmbeddingWitness w;
        w.host = host;
        w.pattern = h.graph();
        w.vertex_map = map_into_split(h, k - ell, hosts);
        if (finish(PotentialRoute::BicliqueClique, std::move(w), "")) return out;
      } catch (const std::exception&) {
        // fall through
      }
    }
  }

  if (n <= opts.oracle.cap) {
    if (auto host = find_realization_containing(seq, h.graph(), opts.oracle)) {
      auto map = find_subgraph_map(*host, h.graph());
      EmbeddingWitness w;
      w.host = *host;
      w.pattern = h.graph();
      w.vertex_map = *map;
      if (finish(PotentialRoute::Oracle, std::move(w), "")) return out;
      out.status = PotentialStatus::Unknown;
      out.note += "oracle witness failed validation; ";
      return out;
    }
    out.status = PotentialStatus::NotPotentially;
    out.route = PotentialRoute::Oracle;
    return out;
  }

  out.status = PotentialStatus::Unknown;
  out.route = PotentialRoute::None;
  out.note += "constructive routes exhausted, n exceeds the oracle cap";
  return out;
}

}  // namespace potentia
