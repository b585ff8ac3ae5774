#pragma once

#include <optional>
#include <vector>

#include "potentia/graph.hpp"
#include "potentia/oracle.hpp"
#include "potentia/seq.hpp"

namespace potentia {

struct KwResidual {
  RawSequence unsorted;  // the two-case formula applied in place, term i removed
  RawSequence sorted;    // the residual sequence, nonincreasing
};

/// Lays off the i-th term (1-based) per the Kleitman-Wang rule: when d_i < i
/// the d_i largest other terms are reduced, otherwise the d_i terms ranked
/// 1..i-1 and i+1..d_i+1 are. Graphicality of input and residual agree.
KwResidual kleitman_wang_layoff(const DegreeSequence& seq, int i);

/// Deterministic realization: repeatedly lays off the last (minimum, highest
/// index among ties) term, assigning its neighborhood to the highest-degree
/// lowest-index active vertices. Vertex i ends with degree d_{i+1}.
LabeledGraph realize(const DegreeSequence& seq);

/// Exchange x1y1, x2y2 (edges) for x1x2, y1y2 (non-edges). Degrees are
/// preserved. Throws naming the failing pair when a precondition is violated.
LabeledGraph two_switch(const LabeledGraph& g, int x1, int y1, int x2, int y2);

/// A copy of `pattern` found inside `host` via `vertex_map` (pattern vertex ->
/// host vertex; containment as subgraph, not induced).
struct EmbeddingWitness {
  LabeledGraph host;
  LabeledGraph pattern;
  std::vector<int> vertex_map;

  bool check() const;
  bool check_realizes(const DegreeSequence& seq) const;  // also degree(v_i) = d_{i+1}
};

/// Realization of seq carrying the pattern on the vertices at the given
/// 1-based sequence positions (position j hosts the pattern vertex with the
/// j-th largest pattern degree). Requires d_{indices[j]} >= h_j and at least
/// 2*M^2 + k positive terms, M the maximum term. Built by three-edge
/// exchanges, each adding one missing pattern edge.
EmbeddingWitness embed_on_prescribed(const DegreeSequence& seq,
                                     const LabeledGraph& pattern,
                                     const std::vector<int>& indices);

struct SplitObjectiveResult {
  LabeledGraph graph;
  long long objective = 0;  // edges within v_1..v_r plus edges to v_{r+1}..v_k
  bool heuristic = false;   // true when found by 2-switch ascent, not exhaustion
};

/// Realization maximizing (edges among the first r vertices) + (edges joining
/// them to the next k-r). Exact by oracle enumeration for n <= exhaustive_cap,
/// otherwise steepest-ascent 2-switching from realize(seq), flagged heuristic.
SplitObjectiveResult max_split_objective_realization(const DegreeSequence& seq,
                                                     int r, int k,
                                                     int exhaustive_cap = 8,
                                                     const OracleOptions& opts = {});

/// Degree-preserving exchanges until `targets` induces a complete graph.
/// Exchange partners are drawn outside `forbidden` (which must contain
/// `targets`; pass empty to default to it). degree_cap is the d_k bound from
/// the hypotheses under which a valid exchange always exists; it is reported
/// in the failure diagnostic.
LabeledGraph complete_set_to_clique(const LabeledGraph& g,
                                    const std::vector<int>& targets,
                                    std::vector<int> forbidden = {},
                                    int degree_cap = -1);

}  // namespace potentia
