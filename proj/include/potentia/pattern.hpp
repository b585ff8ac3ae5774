#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "potentia/layoff.hpp"
#include "potentia/oracle.hpp"
#include "potentia/realize.hpp"
#include "potentia/seq.hpp"

namespace potentia {

/// A fixed target graph H together with the analytics driving the extremal
/// sequences: independence number, the nabla profile
/// nabla_i = min{ max degree of H[S] : |S| = i } on i in [alpha+1, k], the
/// index i* minimizing 2i - nabla_i, ell* = i* - nabla_{i*}, and
/// f = 6k^2 + ell*^2 k + nabla_{i*}.
class PatternGraph {
 public:
  static constexpr int kAlphaCap = 16;
  static constexpr int kNablaCap = 12;

  explicit PatternGraph(LabeledGraph h);

  const LabeledGraph& graph() const { return h_; }
  int k() const { return h_.n(); }
  const RawSequence& degseq() const { return degseq_; }  // h_1 >= ... >= h_k
  int alpha() const { return alpha_; }
  int nabla(int i) const;
  const std::vector<int>& nabla_profile() const { return nabla_; }  // index 0 = alpha+1
  /// Lexicographically least i-subset of the vertices achieving nabla_i.
  const std::vector<int>& nabla_subset(int i) const;
  int i_star() const { return i_star_; }
  int ell_star() const { return ell_star_; }
  long long f() const { return f_; }

  /// Lexicographically least independent set of the requested size.
  std::vector<int> independent_set(int size) const;

 private:
  LabeledGraph h_;
  RawSequence degseq_;
  int alpha_ = 0;
  std::vector<int> nabla_;                  // nabla_{alpha+1} .. nabla_k
  std::vector<std::vector<int>> subsets_;   // witnesses for each nabla value
  int i_star_ = 0;
  int ell_star_ = 0;
  long long f_ = 0;
};

struct PiTilde {
  DegreeSequence fixed;    // definition sequence, parity fix applied
  RawSequence formula;     // ((n-1)^{k-i}, (k-i+nabla_i-1)^{n-k+i}) before the fix
  bool parity_fix = false;
};

/// The extremal sequence pi~_i(H, n): (n-1) repeated k-i times, then
/// k-i+nabla_i-1 repeated n-k+i times, last term reduced by one when n-k+i
/// and nabla_i - 1 are both odd. Throws when i is outside [alpha+1, k] or n
/// is too small for the sequence to be nonincreasing. The fixed sequence is
/// verified graphic.
PiTilde pi_tilde_full(const PatternGraph& h, int n, int i);
DegreeSequence pi_tilde(const PatternGraph& h, int n, int i);

long long sigma(const DegreeSequence& seq);
long long sigma(const RawSequence& seq);

struct DegreeSufficiency {
  bool sufficient = false;
  int j = 0;  // when insufficient: largest j with d_{k-j+1} < h_{k-j+1}
};

/// Termwise d_i >= h_i for i <= k, terms past the end of seq counting as 0.
DegreeSufficiency degree_sufficient(const DegreeSequence& seq, const PatternGraph& h);

/// Li-Yin sufficient conditions for potential K_k-graphicity:
/// (a) d_k >= k-1 and d_i >= 2(k-1)-i for i <= k-2;
/// (b) d_k >= k-1 and d_{2k} >= k-2 (requires n >= 2k).
bool li_yin_condition_a(const DegreeSequence& seq, int k);
bool li_yin_condition_b(const DegreeSequence& seq, int k);
bool li_yin_potentially_kk(const DegreeSequence& seq, int k);

/// Want sequence of seq for K_r joined with k-r independent vertices, built
/// from an objective-maximizing realization g: degrees inside
/// G_r = G[v_{r+1}..v_n], plus one for each appearance in the multiset W,
/// minus the missing clique adjacencies for positions r+1..k.
struct WantSequence {
  int r = 0, k = 0;
  RawSequence values;                       // indexed by vertex v_{r+1}..v_n
  std::vector<std::vector<int>> w_sets;     // W_i per clique vertex (0-based ids)
  std::vector<std::vector<int>> keep_sets;  // external neighbors kept at assembly
  bool heuristic = false;                   // g came from the hill-climbing mode

  DegreeSequence sorted() const { return DegreeSequence::sorted(values); }
};

WantSequence want_sequence(const DegreeSequence& seq, int r, int k, const LabeledGraph& g,
                           bool heuristic_flag = false);

/// Union of the complete split graph on v_1..v_k, a realization of the want
/// sequence on v_{r+1}..v_n, and the kept attachments. Realizes seq and
/// contains K_r v K~_{k-r}; throws when the want sequence is not graphic.
LabeledGraph assemble_split_realization(const DegreeSequence& seq, const WantSequence& w);

enum class PotentialStatus { Potentially, NotPotentially, Unknown };
enum class PotentialRoute { LiYinA, LiYinB, WantSplit, PrescribedEmbed, BicliqueClique, Oracle, None };

std::string route_name(PotentialRoute r);

struct PotentialVerdict {
  PotentialStatus status = PotentialStatus::Unknown;
  PotentialRoute route = PotentialRoute::None;
  std::optional<EmbeddingWitness> witness;  // always present for Potentially
  std::string note;
};

struct PotentialOptions {
  OracleOptions oracle;
  int exhaustive_cap = 8;  // for the objective-maximizing realization
};

/// Constructive routes in cost order (Li-Yin, want-split, prescribed embed,
/// biclique-then-clique), each returning a checked witness on success, then
/// the exhaustive oracle when n is within its cap. A failed route falls
/// through; NotPotentially is only ever oracle-certified.
PotentialVerdict is_potentially_h(const DegreeSequence& seq, const PatternGraph& h,
                                  const PotentialOptions& opts = {});

}  // namespace potentia
