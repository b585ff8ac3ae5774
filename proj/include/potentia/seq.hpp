#pragma once

#include <string>
#include <vector>

namespace potentia {

/// Plain integer sequence. Entries may be negative and need not be sorted;
/// this is the result type of transforms (D_{k,m}, leveling, editing) that
/// can leave the graphic-sequence domain.
using RawSequence = std::vector<int>;

long long seq_sum(const RawSequence& s);
bool is_nonincreasing(const RawSequence& s);
RawSequence sorted_desc(RawSequence s);

std::string format_sequence(const RawSequence& s);   // "9 8 8 4"
std::string format_runlength(const RawSequence& s);  // "9 8^2 4"

/// Nonincreasing sequence of nonnegative integers, the universe every
/// operation below works over. Construction validates order and sign;
/// graphicality is a separate question (see is_graphic).
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(RawSequence terms);

  /// Sorts the input descending, then validates.
  static DegreeSequence sorted(RawSequence terms);

  const RawSequence& terms() const { return terms_; }
  int n() const { return static_cast<int>(terms_.size()); }
  bool empty() const { return terms_.empty(); }

  /// 1-based access matching the d_1 >= d_2 >= ... notation.
  int term(int i) const;
  /// 1-based access with virtual zeros past the end (d_i = 0 for i > n).
  int term_or_zero(int i) const { return i >= 1 && i <= n() ? terms_[i - 1] : 0; }

  long long sum() const { return sum_; }
  int positive_count() const { return positive_count_; }
  int max_term() const { return terms_.empty() ? 0 : terms_.front(); }
  int min_term() const { return terms_.empty() ? 0 : terms_.back(); }

  bool operator==(const DegreeSequence& o) const { return terms_ == o.terms_; }

 private:
  RawSequence terms_;
  long long sum_ = 0;
  int positive_count_ = 0;
};

/// Erdos-Gallai test: even sum and sum_{i<=p} d_i <= p(p-1) + sum_{i>p} min(d_i, p)
/// for every p. The default path prunes the index set per Tripathi-Vijay
/// (only p with d_p > d_{p+1}, and only p <= s where d_s >= s-1); the unpruned
/// variant checks every p and exists so the two can be compared.
bool is_graphic(const DegreeSequence& seq);
bool is_graphic_unpruned(const DegreeSequence& seq);

/// Zverovich-Zverovich length test: with maximum term r and minimum positive
/// term s (zeros stripped), a length of at least (r+s+1)^2/(4s) guarantees
/// graphicality when the sum is even. All-zero input is trivially graphic and
/// reported true without applying the bound.
bool zz_length_sufficient(const DegreeSequence& seq);

/// Termwise a[i] >= b[i]. Throws std::invalid_argument on length mismatch.
bool majorizes(const RawSequence& a, const RawSequence& b);
bool majorizes(const DegreeSequence& a, const DegreeSequence& b);

/// D_{k,m}: first k entries replaced by x_k - m, all remaining entries reduced
/// by m. k is 1-based. Entries may go negative; nothing is clamped.
RawSequence dkm_reduce(const DegreeSequence& seq, int k, int m);

/// Leveling step: terms a1..a2 (1-based, inclusive) replaced by d_{a2}.
/// Output stays nonincreasing. Throws on an out-of-range index.
RawSequence level_off(const DegreeSequence& seq, int a1, int a2);

struct EditResult {
  long long total = 0;
  std::vector<int> edits;  // per-index surplus max(0, leveled[i] - target[i])
};

/// Least total subtraction making target majorize the edited sequence.
EditResult min_edit_to(const RawSequence& leveled, const DegreeSequence& target);

/// Certificate for ([a1,a2], b)-closeness: the leveled sequence, the minimal
/// per-index edit vector against the target, and its total.
struct ClosenessWitness {
  int a1 = 1;
  int a2 = 1;
  RawSequence leveled;
  std::vector<int> edits;
  long long total_edit = 0;
  DegreeSequence target;

  bool check() const;  // re-validates the witness arithmetic
};

/// True iff seq, after leveling terms a1..a2 and subtracting at most b in
/// total, is majorized by target. The witness (with the minimal edit vector)
/// is returned for both verdicts.
std::pair<bool, ClosenessWitness> is_close(const DegreeSequence& seq,
                                           const DegreeSequence& target,
                                           int a1, int a2, long long b);

RawSequence parse_sequence(const std::string& text);  // "8^6 7^4 4^3" or "8 8 7"

}  // namespace potentia
