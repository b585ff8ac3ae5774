#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "potentia/realize.hpp"
#include "potentia/seq.hpp"

namespace potentia {

/// A Claim 1-5 assertion failed during a strict run. Either the input
/// violates the lemma's hypotheses or the implementation is wrong.
struct ClaimViolation : std::logic_error {
  explicit ClaimViolation(const std::string& what) : std::logic_error(what) {}
};

/// Partition of the vertex order T_p into four blocks: d-hat is constant on
/// tau2 and on tau3, and every out-of-natural-order pair is a (tau2, tau3)
/// pair. tau2 = tau3 = empty means the order is consistent.
struct ProperFormPartition {
  std::vector<int> tau1, tau2, tau3, tau4;  // vertex ids in T_p order
  bool proper = true;                       // false only in trace mode
  int inconsistency() const { return static_cast<int>(tau2.size() + tau3.size()); }
};

struct LayoffStep {
  int p = 0;               // 1-based step number
  int laid_off = -1;       // vertex id, 0-based
  int ell = 0;             // remaining degree of the laid-off vertex
  std::vector<int> neighborhood;  // N_p, ascending vertex ids
  bool good = false;       // {v_1..v_{k-r}} inside N_p
  RawSequence pi_sorted;   // residual sequence pi_p
  ProperFormPartition partition;  // of T_p
  bool claim4_event = false;      // ell dropped below the previous step's ell
};

struct LayoffTrace {
  int n = 0, k = 0, r = 0;
  std::vector<LayoffStep> steps;
  int good_count = 0;
  std::vector<std::string> violations;  // populated instead of throwing in trace mode
};

struct LayoffResult {
  LayoffTrace trace;
  EmbeddingWitness witness;  // K_{k-r,r} on v_1..v_{k-r} plus the good vertices
};

/// One run of the Laying-off Algorithm. Strict mode enforces every Claim 1-5
/// assertion (throwing ClaimViolation) and the Kleitman-Wang residual
/// cross-check; trace mode records violations and keeps going, which is what
/// the worked-example regression and the CLI --trace path use.
class LayoffEngine {
 public:
  LayoffEngine(const DegreeSequence& seq, int k, int r, bool strict);

  bool eligible_nonempty() const;
  bool reached_goal() const { return trace_.good_count >= r_; }
  int steps_done() const { return p_; }

  void step();

  const LayoffTrace& trace() const { return trace_; }

  /// Realization of the input: the final residual realized canonically, then
  /// laid-off vertices re-attached to their neighborhoods in reverse order.
  LabeledGraph assemble() const;

  /// K_{k-r,r} witness drawn from the first r good steps.
  EmbeddingWitness witness(const LabeledGraph& host) const;

 private:
  std::vector<int> order_now() const;  // active vertices by (d-hat desc, id asc)
  ProperFormPartition proper_form(const std::vector<int>& order) const;
  void complain(const std::string& claim, const std::string& detail);
  void check_claim1();
  RawSequence active_sorted() const;

  DegreeSequence seq_;
  int k_ = 0, r_ = 0;
  bool strict_ = true;
  int p_ = 0;
  std::vector<int> dhat_;
  std::vector<char> active_;
  std::vector<int> prev_order_;       // T_{p-1}
  int prev_inconsistency_ = 0;
  int last_ell_ = -1;
  int claim4_deadline_ = -1;          // step by which r goods must arrive
  LayoffTrace trace_;
};

/// Lemma hypotheses: r < k, the sequence is graphic, d_{k-r} - d_k >= r(k+2),
/// and at least r(k+r+1) terms after position k lie in [k-r, k-1]. Throws
/// std::invalid_argument naming the violated inequality.
void check_layoff_hypotheses(const DegreeSequence& seq, int k, int r);

/// Full strict run: hypotheses, iteration until r good neighborhoods (at most
/// (r-1)k + 1 steps, exceeding that is reported as a ClaimViolation), assembly
/// and witness validation.
LayoffResult run_layoff(const DegreeSequence& seq, int k, int r);

/// Fixed number of steps with claims recorded, not enforced; no hypothesis
/// gate. Stops early when the eligible set empties.
LayoffTrace trace_layoff(const DegreeSequence& seq, int k, int r, int max_steps);

}  // namespace potentia
