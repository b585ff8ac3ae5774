#include "potentia/seq.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace potentia {

long long seq_sum(const RawSequence& s) {
  return std::accumulate(s.begin(), s.end(), 0LL);
}

bool is_nonincreasing(const RawSequence& s) {
  return std::is_sorted(s.begin(), s.end(), std::greater<int>()) ||
         std::is_sorted(s.rbegin(), s.rend());
}

RawSequence sorted_desc(RawSequence s) {
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

std::string format_sequence(const RawSequence& s) {
  std::ostringstream out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out << ' ';
    out << s[i];
  }
  return out.str();
}

std::string format_runlength(const RawSequence& s) {
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (!first) out << ' ';
    first = false;
    out << s[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  return out.str();
}

DegreeSequence::DegreeSequence(RawSequence terms) : terms_(std::move(terms)) {
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 0)
      throw std::invalid_argument("degree sequence has a negative term");
    if (i > 0 && terms_[i] > terms_[i - 1])
      throw std::invalid_argument("degree sequence is not nonincreasing");
    sum_ += terms_[i];
    if (terms_[i] > 0) ++positive_count_;
  }
}

DegreeSequence DegreeSequence::sorted(RawSequence terms) {
  return DegreeSequence(sorted_desc(std::move(terms)));
}

int DegreeSequence::term(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("sequence index out of range");
  return terms_[i - 1];
}

namespace {

// Shared Erdos-Gallai core. `pruned` selects the Tripathi-Vijay index set.
bool erdos_gallai(const DegreeSequence& seq, bool pruned) {
  const RawSequence& d = seq.terms();
  const int n = seq.n();
  if (n == 0) return true;
  if (seq.sum() % 2 != 0) return false;

  // suffix[p] = sum of d_i for i > p (1-based p).
  std::vector<long long> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];

  // s = largest index with d_s >= s-1; inequalities hold automatically past it.
  int s = 0;
  for (int p = 1; p <= n; ++p)
    if (d[p - 1] >= p - 1) s = p;

  long long prefix = 0;
  // first index (1-based) with value < p, found by scan; d is nonincreasing so
  // min(d_i, p) = p before it and d_i after it.
  for (int p = 1; p <= n - 1; ++p) {
    prefix += d[p - 1];
    if (pruned) {
      if (p > s) break;
      bool strict_drop = d[p - 1] > d[p];
      if (!strict_drop && p != s) continue;
    }
    int lo = p + 1, hi = n + 1;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if (d[mid - 1] < p)
        hi = mid;
      else
        lo = mid + 1;
    }
    // lo = first index > p with d < p
    long long rhs = 1LL * p * (p - 1) + 1LL * p * (lo - 1 - p) + suffix[lo - 1];
    if (prefix > rhs) return false;
  }
  return true;
}

}  // namespace

bool is_graphic(const DegreeSequence& seq) { return erdos_gallai(seq, true); }

bool is_graphic_unpruned(const DegreeSequence& seq) {
  return erdos_gallai(seq, false);
}

bool zz_length_sufficient(const DegreeSequence& seq) {
  RawSequence stripped;
  for (int v : seq.terms())
    if (v > 0) stripped.push_back(v);
  if (stripped.empty()) return true;  // all-zero: trivially graphic
  long long r = stripped.front();
  long long s = stripped.back();
  long long bound = (r + s + 1) * (r + s + 1) / (4 * s);
  return static_cast<long long>(stripped.size()) >= bound;
}

bool majorizes(const RawSequence& a, const RawSequence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("majorizes: length mismatch");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  return majorizes(a.terms(), b.terms());
}

RawSequence dkm_reduce(const DegreeSequence& seq, int k, int m) {
  if (k < 1 || k > seq.n()) throw std::invalid_argument("dkm_reduce: k out of range");
  if (m < 0) throw std::invalid_argument("dkm_reduce: m must be nonnegative");
  RawSequence out(seq.terms());
  int xk = seq.term(k);
  for (int i = 0; i < k; ++i) out[i] = xk - m;
  for (size_t i = k; i < out.size(); ++i) out[i] -= m;
  return out;
}

RawSequence level_off(const DegreeSequence& seq, int a1, int a2) {
  if (a1 < 1 || a2 > seq.n() || a1 > a2)
    throw std::invalid_argument("level_off: index range out of bounds");
  RawSequence out(seq.terms());
  int v = seq.term(a2);
  for (int i = a1; i <= a2; ++i) out[i - 1] = v;
  return out;
}

EditResult min_edit_to(const RawSequence& leveled, const DegreeSequence& target) {
  if (leveled.size() != static_cast<size_t>(target.n()))
    throw std::invalid_argument("min_edit_to: length mismatch");
  EditResult r;
  r.edits.resize(leveled.size(), 0);
  for (size_t i = 0; i < leveled.size(); ++i) {
    int surplus = leveled[i] - target.terms()[i];
    if (surplus > 0) {
      r.edits[i] = surplus;
      r.total += surplus;
    }
  }
  return r;
}

bool ClosenessWitness::check() const {
  if (a1 > a2) return false;
  if (leveled.size() != edits.size()) return false;
  if (leveled.size() != static_cast<size_t>(target.n())) return false;
  long long t = 0;
  for (size_t i = 0; i < leveled.size(); ++i) {
    if (edits[i] < 0) return false;
    if (leveled[i] - edits[i] > target.terms()[i]) return false;
    t += edits[i];
  }
  return t == total_edit;
}

std::pair<bool, ClosenessWitness> is_close(const DegreeSequence& seq,
                                           const DegreeSequence& target,
                                           int a1, int a2, long long b) {
  if (seq.n() != target.n())
    throw std::invalid_argument("is_close: length mismatch");
  if (a1 > a2) throw std::invalid_argument("is_close: a1 > a2");
  if (b < 0) throw std::invalid_argument("is_close: b must be nonnegative");
  ClosenessWitness w;
  w.a1 = a1;
  w.a2 = a2;
  w.leveled = level_off(seq, a1, a2);
  EditResult e = min_edit_to(w.leveled, target);
  w.edits = std::move(e.edits);
  w.total_edit = e.total;
  w.target = target;
  return {w.total_edit <= b, w};
}

RawSequence parse_sequence(const std::string& text) {
  RawSequence out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    size_t caret = tok.find('^');
    size_t pos = 0;
    int value = 0, count = 1;
    try {
      value = std::stoi(tok.substr(0, caret), &pos);
      if (caret == std::string::npos) {
        if (pos != tok.size()) throw std::invalid_argument(tok);
      } else {
        size_t cpos = 0;
        count = std::stoi(tok.substr(caret + 1), &cpos);
        if (cpos != tok.size() - caret - 1) throw std::invalid_argument(tok);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed sequence token: '" + tok + "'");
    }
    if (count < 0) throw std::invalid_argument("negative multiplicity in '" + tok + "'");
    for (int i = 0; i < count; ++i) out.push_back(value);
  }
  return out;
}

}  // namespace potentia
