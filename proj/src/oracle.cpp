#include "potentia/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace potentia {

namespace {

// Candidates for the next neighborhood choice: active later vertices, highest
// remaining demand first, index breaking ties.
std::vector<int> order_candidates(const std::vector<int>& demand, int u) {
  std::vector<int> cand;
  for (int v = u + 1; v < static_cast<int>(demand.size()); ++v)
    if (demand[v] > 0) cand.push_back(v);
  std::stable_sort(cand.begin(), cand.end(),
                   [&](int a, int b) { return demand[a] > demand[b]; });
  return cand;
}

bool residual_feasible(const std::vector<int>& demand, int from) {
  RawSequence rest(demand.begin() + from, demand.end());
  std::sort(rest.begin(), rest.end(), std::greater<int>());
  return is_graphic(DegreeSequence(std::move(rest)));
}

struct Enumerator {
  std::vector<int> demand;
  LabeledGraph g;
  const std::function<bool(const LabeledGraph&)>* visit;
  bool stopped = false;

  // Assigns vertex u's remaining edges and recurses. Returns false when the
  // visitor asked to stop.
  bool run(int u) {
    const int n = static_cast<int>(demand.size());
    while (u < n && demand[u] == 0) ++u;
    if (u == n) return (*visit)(g);
    std::vector<int> cand = order_candidates(demand, u);
    if (demand[u] > static_cast<int>(cand.size())) return true;
    std::vector<int> pick;
    return choose(u, cand, 0, pick);
  }

  bool choose(int u, const std::vector<int>& cand, size_t from, std::vector<int>& pick) {
    const int need = demand[u] - static_cast<int>(pick.size());
    if (need == 0) {
      for (int v : pick) {
        g.add_edge(u, v);
        --demand[v];
      }
      int saved = demand[u];
      demand[u] = 0;
      bool cont = !residual_feasible(demand, u + 1) || run(u + 1);
      demand[u] = saved;
      for (int v : pick) {
        g.remove_edge(u, v);
        ++demand[v];
      }
      return cont;
    }
    if (cand.size() - from < static_cast<size_t>(need)) return true;
    // take cand[from]
    pick.push_back(cand[from]);
    if (!choose(u, cand, from + 1, pick)) return false;
    pick.pop_back();
    // skip cand[from]
    return choose(u, cand, from + 1, pick);
  }
};

// First-level branches: the possible neighborhoods of the first positive-
// demand vertex, in canonical order. Used to partition work across threads.
struct FirstLevel {
  int u = -1;                            // vertex whose neighborhood is branched on
  std::vector<std::vector<int>> choices; // neighbor sets in canonical order
};

FirstLevel first_level_choices(const std::vector<int>& demand) {
  FirstLevel fl;
  const int n = static_cast<int>(demand.size());
  int u = 0;
  while (u < n && demand[u] == 0) ++u;
  if (u == n) return fl;
  fl.u = u;
  std::vector<int> cand = order_candidates(demand, u);
  if (demand[u] > static_cast<int>(cand.size())) return fl;
  std::vector<int> pick;
  std::function<void(size_t)> rec = [&](size_t from) {
    const int need = demand[u] - static_cast<int>(pick.size());
    if (need == 0) {
      fl.choices.push_back(pick);
      return;
    }
    if (cand.size() - from < static_cast<size_t>(need)) return;
    pick.push_back(cand[from]);
    rec(from + 1);
    pick.pop_back();
    rec(from + 1);
  };
  rec(0);
  return fl;
}

void check_cap(const DegreeSequence& seq, const OracleOptions& opts) {
  if (seq.n() > opts.cap)
    throw std::invalid_argument("oracle: sequence length " + std::to_string(seq.n()) +
                                " exceeds cap " + std::to_string(opts.cap));
}

}  // namespace

void enumerate_realizations(const DegreeSequence& seq,
                            const std::function<bool(const LabeledGraph&)>& visit,
                            const OracleOptions& opts) {
  check_cap(seq, opts);
  if (!is_graphic(seq))
    throw std::invalid_argument("oracle: sequence is not graphic");
  Enumerator e;
  e.demand = seq.terms();
  e.g = LabeledGraph(seq.n());
  e.visit = &visit;
  e.run(0);
}

namespace {

// Runs fn(first_choice_rank) over the first-level branches with opts.jobs
// workers. fn returns true to keep that worker going. Used where per-branch
// results are merged deterministically by the caller.
void parallel_over_first_level(const DegreeSequence& seq, const OracleOptions& opts,
                               const std::function<void(size_t, const std::vector<int>&, int)>& run_branch) {
  FirstLevel fl = first_level_choices(seq.terms());
  if (fl.u < 0 || fl.choices.empty()) return;
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t r = 0; r < fl.choices.size(); ++r) run_branch(r, fl.choices[r], fl.u);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        size_t r = next.fetch_add(1);
        if (r >= fl.choices.size()) return;
        run_branch(r, fl.choices[r], fl.u);
      }
    });
  }
  for (auto& th : pool) th.join();
}

LabeledGraph apply_first_choice(const DegreeSequence& seq, int u,
                                const std::vector<int>& choice, std::vector<int>& demand) {
  demand = seq.terms();
  LabeledGraph g(seq.n());
  for (int v : choice) {
    g.add_edge(u, v);
    --demand[v];
  }
  demand[u] = 0;
  return g;
}

}  // namespace

long long count_realizations(const DegreeSequence& seq, const OracleOptions& opts) {
  check_cap(seq, opts);
  if (!is_graphic(seq))
    throw std::invalid_argument("oracle: sequence is not graphic");
  if (seq.n() == 0 || seq.sum() == 0) return 1;  // the empty graph
  if (std::max(1, opts.jobs) == 1) {
    long long count = 0;
    enumerate_realizations(seq, [&](const LabeledGraph&) {
      ++count;
      return true;
    }, opts);
    return count;
  }
  FirstLevel probe = first_level_choices(seq.terms());
  std::vector<long long> per_branch(probe.choices.size(), 0);
  parallel_over_first_level(seq, opts, [&](size_t rank, const std::vector<int>& choice, int u) {
    std::vector<int> demand;
    Enumerator e;
    e.g = apply_first_choice(seq, u, choice, demand);
    e.demand = std::move(demand);
    long long local = 0;
    std::function<bool(const LabeledGraph&)> counter = [&](const LabeledGraph&) {
      ++local;
      return true;
    };
    e.visit = &counter;
    if (residual_feasible(e.demand, u + 1)) e.run(u + 1);
    per_branch[rank] = local;
  });
  long long total = 0;
  for (long long c : per_branch) total += c;
  return total;
}

namespace {

struct SubgraphSearch {
  const LabeledGraph* host;
  const LabeledGraph* pattern;
  std::vector<int> order;   // pattern vertices, highest degree first
  std::vector<int> map;     // pattern vertex -> host vertex or -1
  std::vector<char> used;   // host vertex assigned

  bool extend(size_t at) {
    if (at == order.size()) return true;
    int p = order[at];
    int pdeg = pattern->degree(p);
    for (int h = 0; h < host->n(); ++h) {
      if (used[h] || host->degree(h) < pdeg) continue;
      bool ok = true;
      for (size_t j = 0; j < at && ok; ++j) {
        int q = order[j];
        if (pattern->has_edge(p, q) && !host->has_edge(h, map[q])) ok = false;
      }
      if (!ok) continue;
      map[p] = h;
      used[h] = 1;
      if (extend(at + 1)) return true;
      used[h] = 0;
      map[p] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_subgraph_map(const LabeledGraph& host,
                                                  const LabeledGraph& pattern) {
  if (pattern.n() > host.n()) return std::nullopt;
  // quick reject: sorted host degrees must dominate sorted pattern degrees
  RawSequence hd = sorted_desc(host.degrees());
  RawSequence pd = sorted_desc(pattern.degrees());
  for (size_t i = 0; i < pd.size(); ++i)
    if (hd[i] < pd[i]) return std::nullopt;

  SubgraphSearch s;
  s.host = &host;
  s.pattern = &pattern;
  s.order.resize(pattern.n());
  for (int i = 0; i < pattern.n(); ++i) s.order[i] = i;
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
  s.map.assign(pattern.n(), -1);
  s.used.assign(host.n(), 0);
  if (s.extend(0)) return s.map;
  return std::nullopt;
}

bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern) {
  return find_subgraph_map(host, pattern).has_value();
}

std::optional<LabeledGraph> find_realization_containing(const DegreeSequence& seq,
                                                        const LabeledGraph& pattern,
                                                        const OracleOptions& opts) {
  check_cap(seq, opts);
  if (!is_graphic(seq))
    throw std::invalid_argument("oracle: sequence is not graphic");
  if (pattern.n() > seq.n()) return std::nullopt;
  if (std::max(1, opts.jobs) == 1) {
    std::optional<LabeledGraph> hit;
    enumerate_realizations(seq, [&](const LabeledGraph& g) {
      if (contains_subgraph(g, pattern)) {
        hit = g;
        return false;
      }
      return true;
    }, opts);
    return hit;
  }
  // Parallel search over first-level branches. Each worker reports its first
  // hit within a branch; the hit from the lowest-ranked branch wins so the
  // result matches the sequential canonical order.
  FirstLevel probe = first_level_choices(seq.terms());
  std::vector<std::optional<LabeledGraph>> hits(probe.choices.size());
  std::atomic<size_t> best{SIZE_MAX};
  parallel_over_first_level(seq, opts, [&](size_t rank, const std::vector<int>& choice, int u) {
    if (rank > best.load()) return;  // a lower-ranked branch already hit
    std::vector<int> demand;
    Enumerator e;
    e.g = apply_first_choice(seq, u, choice, demand);
    e.demand = std::move(demand);
    std::optional<LabeledGraph> local;
    std::function<bool(const LabeledGraph&)> fn = [&](const LabeledGraph& g) {
      if (contains_subgraph(g, pattern)) {
        local = g;
        return false;
      }
      return true;
    };
    e.visit = &fn;
    if (residual_feasible(e.demand, u + 1)) e.run(u + 1);
    if (local) {
      hits[rank] = std::move(local);
      size_t cur = best.load();
      while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
      }
    }
  });
  for (auto& h : hits)
    if (h) return h;
  // n == 0 or zero-demand edge case: single empty realization
  if (probe.u < 0) {
    LabeledGraph g(seq.n());
    if (contains_subgraph(g, pattern)) return g;
  }
  return std::nullopt;
}

bool oracle_potentially(const DegreeSequence& seq, const LabeledGraph& pattern,
                        const OracleOptions& opts) {
  return find_realization_containing(seq, pattern, opts).has_value();
}

void enumerate_graphic_sequences(int n, int min_term,
                                 const std::function<bool(const DegreeSequence&)>& visit) {
  RawSequence cur(n);
  bool stopped = false;
  std::function<void(int, int, long long)> rec = [&](int pos, int max_allowed, long long sum) {
    if (stopped) return;
    if (pos == n) {
      if (sum % 2 != 0) return;
      DegreeSequence seq{RawSequence(cur)};
      if (is_graphic(seq) && !visit(seq)) stopped = true;
      return;
    }
    for (int v = max_allowed; v >= min_term; --v) {
      cur[pos] = v;
      rec(pos + 1, v, sum + v);
      if (stopped) return;
    }
  };
  if (n == 0) {
    visit(DegreeSequence{});
    return;
  }
  rec(0, n - 1, 0);
}

SigmaResult exact_sigma(const LabeledGraph& pattern, int n, int min_term,
                        const OracleOptions& opts) {
  if (n > opts.sigma_cap)
    throw std::invalid_argument("exact_sigma: n exceeds cap " + std::to_string(opts.sigma_cap));
  OracleOptions inner = opts;
  inner.cap = std::max(inner.cap, n);
  SigmaResult r;
  long long best = -1;
  enumerate_graphic_sequences(n, min_term, [&](const DegreeSequence& seq) {
    ++r.sequences_checked;
    if (!oracle_potentially(seq, pattern, inner)) {
      if (seq.sum() > best) {
        best = seq.sum();
        r.extremal = seq;
        r.any_failure = true;
      }
    }
    return true;
  });
  r.sigma = r.any_failure ? best + 2 : 2;
  return r;
}

}  // namespace potentia
