#pragma once

#include <string>

#include "potentia/pattern.hpp"
#include "potentia/seq.hpp"

namespace potentia {

enum class Thm15Branch { Majorization, Closeness };

/// Self-contained certificate for the not-degree-sufficient theorem: either
/// the sequence is majorized by pi~_j(H, n), or (when j <= alpha) it is
/// ([k-alpha, k-j+1], 0)-close to pi~_{alpha+1}(H, n). Everything needed to
/// re-check is embedded.
struct Thm15Certificate {
  int k = 0, alpha = 0, j = 0;
  Thm15Branch branch = Thm15Branch::Majorization;
  DegreeSequence seq;
  RawSequence target;        // the sequence actually compared against
  bool parity_fix_excluded = false;  // majorization held only before the parity fix
  // closeness branch data; a2 may exceed n, in which case terms a1..n are
  // leveled to zero (the value of the virtual term a2)
  int a1 = 0, a2 = 0;
  ClosenessWitness close;
  bool valid = false;
};

/// Throws std::invalid_argument when seq is degree sufficient (theorem
/// inapplicable) and std::logic_error when the verification fails, which
/// would falsify the theorem.
Thm15Certificate thm15_certificate(const DegreeSequence& seq, const PatternGraph& h);

enum class Thm41Status { Vacuous, Certified, Conditional };

/// Certificate for the degree-sufficient theorem. Vacuous when the sequence
/// is potentially H-graphic (the embedding witness is the certificate);
/// Certified when the oracle rules a realization out and the closeness check
/// passes within both budgets; Conditional when no exact verdict was
/// reachable and the closeness numbers are reported as-is.
struct Thm41Certificate {
  Thm41Status status = Thm41Status::Conditional;
  PotentialVerdict verdict;
  int k = 0, i_star = 0, ell_star = 0, alpha = 0;
  long long b41 = 0;           // k^2 + k i* + 2 + f(H) * max(0, ell* - 2)
  long long b41_literal = 0;   // same with the unclamped (ell* - 2) factor
  long long b16 = 0;           // (6 alpha + 3) k^2 + alpha^3 k
  int a1 = 0, a2 = 0;
  DegreeSequence target;       // pi~_{i*}(H, n)
  ClosenessWitness close;
  bool within_b41 = false;
  bool within_b16 = false;
  bool valid = false;
};

/// Throws std::invalid_argument when seq is not degree sufficient, and
/// std::logic_error when an oracle-certified non-potential sequence exceeds a
/// bound (theorem falsification).
Thm41Certificate thm41_certificate(const DegreeSequence& seq, const PatternGraph& h,
                                   const PotentialOptions& opts = {});

}  // namespace potentia
