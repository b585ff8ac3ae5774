#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "potentia/graph.hpp"
#include "potentia/seq.hpp"

namespace potentia {

struct OracleOptions {
  int cap = 10;       // maximum sequence length for realization enumeration
  int sigma_cap = 8;  // maximum n for exact_sigma
  int jobs = 1;       // worker threads; output is identical for any value
};

/// Visits every labeled simple graph realizing seq exactly once, in a fixed
/// canonical order (vertex 0's neighborhood first, candidates ordered by
/// remaining demand then index, combinations lexicographic). The visitor
/// returns false to stop. Branches infeasible by Erdos-Gallai on the residual
/// demands are pruned. Throws when seq is longer than opts.cap.
void enumerate_realizations(const DegreeSequence& seq,
                            const std::function<bool(const LabeledGraph&)>& visit,
                            const OracleOptions& opts = {});

long long count_realizations(const DegreeSequence& seq, const OracleOptions& opts = {});

/// Injective map carrying every pattern edge to a host edge (subgraph, not
/// induced). The map is pattern-vertex -> host-vertex.
std::optional<std::vector<int>> find_subgraph_map(const LabeledGraph& host,
                                                  const LabeledGraph& pattern);
bool contains_subgraph(const LabeledGraph& host, const LabeledGraph& pattern);

/// First realization (in canonical order) containing the pattern, if any.
std::optional<LabeledGraph> find_realization_containing(const DegreeSequence& seq,
                                                        const LabeledGraph& pattern,
                                                        const OracleOptions& opts = {});

/// Exact potential test: some realization of seq contains the pattern.
bool oracle_potentially(const DegreeSequence& seq, const LabeledGraph& pattern,
                        const OracleOptions& opts = {});

/// Enumerates nonincreasing graphic sequences of length n with all terms in
/// [min_term, n-1]; visitor returns false to stop.
void enumerate_graphic_sequences(int n, int min_term,
                                 const std::function<bool(const DegreeSequence&)>& visit);

struct SigmaResult {
  long long sigma = 2;
  bool any_failure = false;            // some sequence is not potentially H-graphic
  DegreeSequence extremal;             // a maximum-sum failing sequence, when any
  long long sequences_checked = 0;
};

/// The minimum even integer such that every n-term graphic sequence (terms at
/// least min_term) with sum at least that value is potentially H-graphic,
/// computed by exhaustive enumeration. When no sequence fails, returns 2, the
/// least even value at which the statement is nonvacuous.
SigmaResult exact_sigma(const LabeledGraph& pattern, int n, int min_term = 1,
                        const OracleOptions& opts = {});

}  // namespace potentia
