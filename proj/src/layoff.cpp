#include "potentia/layoff.hpp"

#include <algorithm>
#include <set>

namespace potentia {

LayoffEngine::LayoffEngine(const DegreeSequence& seq, int k, int r, bool strict)
    : seq_(seq), k_(k), r_(r), strict_(strict) {
  if (r < 1 || r >= k) throw std::invalid_argument("layoff: need 1 <= r < k");
  if (seq.n() < k) throw std::invalid_argument("layoff: sequence shorter than k");
  dhat_ = seq.terms();
  active_.assign(seq.n(), 1);
  prev_order_ = order_now();
  trace_.n = seq.n();
  trace_.k = k;
  trace_.r = r;
}

std::vector<int> LayoffEngine::order_now() const {
  std::vector<int> order;
  for (int v = 0; v < seq_.n(); ++v)
    if (active_[v]) order.push_back(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return dhat_[a] > dhat_[b]; });
  return order;
}

namespace {

bool order_consistent(const std::vector<int>& order) {
  return std::is_sorted(order.begin(), order.end());
}

}  // namespace

void LayoffEngine::complain(const std::string& claim, const std::string& detail) {
  std::string msg = claim + " violated at step " + std::to_string(p_) + ": " + detail;
  if (strict_) throw ClaimViolation(msg);
  trace_.violations.push_back(msg);
}

RawSequence LayoffEngine::active_sorted() const {
  RawSequence s;
  for (int v = 0; v < seq_.n(); ++v)
    if (active_[v]) s.push_back(dhat_[v]);
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

ProperFormPartition LayoffEngine::proper_form(const std::vector<int>& order) const {
  ProperFormPartition pf;
  const int m = static_cast<int>(order.size());
  // positions taking part in any out-of-order pair
  int min_e = m, max_e = -1, min_l = m, max_l = -1;
  for (int q1 = 0; q1 < m; ++q1) {
    for (int q2 = q1 + 1; q2 < m; ++q2) {
      if (order[q1] > order[q2]) {
        min_e = std::min(min_e, q1);
        max_e = std::max(max_e, q1);
        min_l = std::min(min_l, q2);
        max_l = std::max(max_l, q2);
      }
    }
  }
  if (max_e < 0) {
    pf.tau1 = order;
    return pf;
  }
  // all early elements must share one value a, all late elements the value a-1
  int a = dhat_[order[min_e]];
  int b = dhat_[order[min_l]];
  bool const_e = dhat_[order[max_e]] == a;
  bool const_l = dhat_[order[max_l]] == b;
  if (!const_e || !const_l || a != b + 1) {
    pf.proper = false;
    pf.tau1 = order;
    return pf;
  }
  // tau2 runs from the first displaced position to the end of the a-class,
  // tau3 from the start of the b-class to the last displaced position.
  int ea = max_e;
  while (ea + 1 < m && dhat_[order[ea + 1]] == a) ++ea;
  int sb = ea + 1;
  if (sb >= m || dhat_[order[sb]] != b || min_l <= ea) {
    pf.proper = false;
    pf.tau1 = order;
    return pf;
  }
  pf.tau1.assign(order.begin(), order.begin() + min_e);
  pf.tau2.assign(order.begin() + min_e, order.begin() + ea + 1);
  pf.tau3.assign(order.begin() + sb, order.begin() + max_l + 1);
  pf.tau4.assign(order.begin() + max_l + 1, order.end());
  // every out-of-order pair must lie in tau2 x tau3
  for (int q1 = 0; q1 < m; ++q1)
    for (int q2 = q1 + 1; q2 < m; ++q2)
      if (order[q1] > order[q2] && !(q1 >= min_e && q1 <= ea && q2 >= sb && q2 <= max_l)) {
        pf.proper = false;
        return pf;
      }
  return pf;
}

bool LayoffEngine::eligible_nonempty() const {
  for (int v = 0; v < seq_.n(); ++v)
    if (active_[v] && dhat_[v] >= k_ - r_ && dhat_[v] <= k_ - 1) return true;
  return false;
}

void LayoffEngine::check_claim1() {
  for (int i = 0; i < seq_.n(); ++i) {
    if (!active_[i]) continue;
    for (int j = i + 1; j < seq_.n(); ++j) {
      if (!active_[j]) continue;
      if (dhat_[j] > dhat_[i] + 1)
        complain("Claim 1", "d-hat(v" + std::to_string(j + 1) + ")=" + std::to_string(dhat_[j]) +
                                " exceeds d-hat(v" + std::to_string(i + 1) + ")+1=" +
                                std::to_string(dhat_[i] + 1));
    }
  }
}

void LayoffEngine::step() {
  const RawSequence pi_before = active_sorted();
  const std::vector<int> t_prev = prev_order_;
  const bool prev_consistent = order_consistent(t_prev);

  // eligible set S_{p-1}
  std::vector<int> s_set;
  for (int v : t_prev)
    if (dhat_[v] >= k_ - r_ && dhat_[v] <= k_ - 1) s_set.push_back(v);
  if (s_set.empty()) throw std::runtime_error("layoff: eligible set exhausted");

  if (static_cast<int>(s_set.size()) < 2 * r_)
    complain("Claim 3", "|S| = " + std::to_string(s_set.size()) + " < 2r");
  for (int j = 0; j < k_ - r_; ++j) {
    if (!active_[j] || dhat_[j] < k_)
      complain("Claim 2", "d-hat(v" + std::to_string(j + 1) + ") fell below k");
  }

  // minimum d-hat in S, ties to the highest index
  int ap = s_set.front();
  for (int v : s_set)
    if (dhat_[v] < dhat_[ap] || (dhat_[v] == dhat_[ap] && v > ap)) ap = v;
  const int ell = dhat_[ap];

  std::vector<int> that = t_prev;
  that.erase(std::find(that.begin(), that.end(), ap));
  if (ell > static_cast<int>(that.size()))
    throw std::runtime_error("layoff: residual shorter than the laid-off degree");

  // the three-case neighborhood rule
  std::vector<int> np;
  bool tie_at_ell = ell < static_cast<int>(that.size()) &&
                    dhat_[that[ell - 1]] == dhat_[that[ell]];
  if (prev_consistent || !tie_at_ell) {
    np.assign(that.begin(), that.begin() + ell);
  } else {
    int threshold = dhat_[that[ell - 1]];
    for (int v : that)
      if (dhat_[v] > threshold) np.push_back(v);
    int fill = ell - static_cast<int>(np.size());
    std::vector<int> tied;
    for (int v : that)
      if (dhat_[v] == threshold) tied.push_back(v);
    std::sort(tied.begin(), tied.end(), std::greater<int>());
    for (int t = 0; t < fill; ++t) np.push_back(tied[t]);
  }

  // claims about N_p before applying it
  int s_cap_n = 0;
  int s_min = dhat_[ap];
  for (int v : s_set) s_min = std::min(s_min, dhat_[v]);
  std::set<int> np_set(np.begin(), np.end());
  for (int v : s_set)
    if (np_set.count(v)) ++s_cap_n;
  bool good = true;
  for (int j = 0; j < k_ - r_; ++j)
    if (!np_set.count(j)) good = false;

  if (s_cap_n > r_ - 1)
    complain("Claim 3", "|S cap N_p| = " + std::to_string(s_cap_n) + " > r-1");
  if (s_cap_n > 0 && !good) complain("Claim 2", "S cap N_p nonempty but N_p not good");
  for (int v : np)
    if (dhat_[v] < s_min)
      complain("Claim 3", "N_p contains v" + std::to_string(v + 1) + " below min d-hat of S");
  if ((prev_consistent || prev_inconsistency_ >= k_) && !good)
    complain("Claim 5", prev_consistent ? "consistent T_{p-1} but N_p not good"
                                        : "inconsistency >= k but N_p not good");

  // apply
  for (int v : np) --dhat_[v];
  active_[ap] = 0;
  ++p_;

  LayoffStep st;
  st.p = p_;
  st.laid_off = ap;
  st.ell = ell;
  st.neighborhood = np;
  std::sort(st.neighborhood.begin(), st.neighborhood.end());
  st.good = good;
  st.pi_sorted = active_sorted();
  st.claim4_event = last_ell_ >= 0 && ell < last_ell_;
  if (st.claim4_event && claim4_deadline_ < 0) claim4_deadline_ = p_ + r_;

  // Kleitman-Wang cross-check: the residual multiset must match laying off the
  // term of pi_{p-1} at the position a_p held in T_{p-1}.
  {
    int pos = static_cast<int>(std::find(t_prev.begin(), t_prev.end(), ap) - t_prev.begin()) + 1;
    bool nonneg = std::all_of(pi_before.begin(), pi_before.end(), [](int x) { return x >= 0; });
    if (nonneg) {
      KwResidual kw = kleitman_wang_layoff(DegreeSequence{RawSequence(pi_before)}, pos);
      if (kw.sorted != st.pi_sorted)
        complain("Kleitman-Wang cross-check",
                 "residual multiset differs from the laying-off formula");
    }
  }

  check_claim1();

  std::vector<int> t_now = order_now();
  st.partition = proper_form(t_now);
  if (!st.partition.proper) complain("Claim 5", "T_p is not of proper form");
  int inc_now = st.partition.inconsistency();
  if (st.partition.proper && inc_now > 0 &&
      static_cast<int>(st.partition.tau1.size() + st.partition.tau3.size()) > ell)
    complain("Claim 5", "|tau1 cup tau3| exceeds ell");
  if (prev_inconsistency_ > 0) {
    bool unchanged_order = t_now == that;
    if (!(inc_now == 0 || (good && unchanged_order) || inc_now < prev_inconsistency_))
      complain("Claim 5", "inconsistency did not resolve, drop, or freeze on a good step");
  }

  if (good) ++trace_.good_count;
  if (claim4_deadline_ >= 0 && trace_.good_count < r_ && p_ >= claim4_deadline_)
    complain("Claim 4", "no r-th good neighborhood within r steps of an ell drop");

  trace_.steps.push_back(std::move(st));
  prev_order_ = std::move(t_now);
  prev_inconsistency_ = inc_now;
  last_ell_ = ell;
}

LabeledGraph LayoffEngine::assemble() const {
  const int n = seq_.n();
  LabeledGraph g(n);
  // realize the final residual on the surviving vertices
  std::vector<int> order = order_now();
  RawSequence residual;
  residual.reserve(order.size());
  for (int v : order) residual.push_back(dhat_[v]);
  LabeledGraph rg = realize(DegreeSequence{RawSequence(residual)});
  for (auto [a, b] : rg.edges()) g.add_edge(order[a], order[b]);
  // re-attach in reverse order of laying off
  for (auto it = trace_.steps.rbegin(); it != trace_.steps.rend(); ++it)
    for (int w : it->neighborhood) g.add_edge(it->laid_off, w);
  return g;
}

EmbeddingWitness LayoffEngine::witness(const LabeledGraph& host) const {
  EmbeddingWitness w;
  w.host = host;
  w.pattern = complete_bipartite(k_ - r_, r_);
  w.vertex_map.resize(k_);
  for (int j = 0; j < k_ - r_; ++j) w.vertex_map[j] = j;
  int t = 0;
  for (const LayoffStep& st : trace_.steps) {
    if (st.good && t < r_) w.vertex_map[k_ - r_ + t++] = st.laid_off;
  }
  if (t < r_) throw std::logic_error("layoff witness: fewer than r good steps");
  return w;
}

void check_layoff_hypotheses(const DegreeSequence& seq, int k, int r) {
  if (!(1 <= r && r < k)) throw std::invalid_argument("layoff hypotheses: need 1 <= r < k");
  if (seq.n() < k) throw std::invalid_argument("layoff hypotheses: n < k");
  if (!is_graphic(seq)) throw std::invalid_argument("layoff hypotheses: sequence is not graphic");
  long long gap = seq.term(k - r) - seq.term(k);
  if (gap < 1LL * r * (k + 2))
    throw std::invalid_argument("layoff hypotheses: d_{k-r} - d_k = " + std::to_string(gap) +
                                " < r(k+2) = " + std::to_string(1LL * r * (k + 2)));
  int candidates = 0;
  for (int i = k + 1; i <= seq.n(); ++i) {
    int d = seq.term(i);
    if (d >= k - r && d <= k - 1) ++candidates;
  }
  if (candidates < r * (k + r + 1))
    throw std::invalid_argument("layoff hypotheses: only " + std::to_string(candidates) +
                                " candidate terms in [k-r, k-1] after position k, need r(k+r+1) = " +
                                std::to_string(r * (k + r + 1)));
}

LayoffResult run_layoff(const DegreeSequence& seq, int k, int r) {
  check_layoff_hypotheses(seq, k, r);
  LayoffEngine engine(seq, k, r, /*strict=*/true);
  const int bound = (r - 1) * k + 1;
  while (!engine.reached_goal()) {
    if (engine.steps_done() >= bound)
      throw ClaimViolation("layoff: " + std::to_string(bound) +
                           " iterations elapsed without r good neighborhoods");
    engine.step();
  }
  LayoffResult res;
  res.trace = engine.trace();
  LabeledGraph host = engine.assemble();
  res.witness = engine.witness(host);
  if (!res.witness.check_realizes(seq))
    throw std::logic_error("layoff: assembled graph fails witness validation");
  return res;
}

LayoffTrace trace_layoff(const DegreeSequence& seq, int k, int r, int max_steps) {
  LayoffEngine engine(seq, k, r, /*strict=*/false);
  for (int s = 0; s < max_steps && engine.eligible_nonempty(); ++s) engine.step();
  return engine.trace();
}

}  // namespace potentia
