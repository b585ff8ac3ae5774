#include "potentia/witness.hpp"

#include <algorithm>
#include <stdexcept>

namespace potentia {

namespace {

// Closeness with the leveling range allowed to run past the end of the
// sequence: virtual terms are zero, so positions a1..n are leveled to zero
// whenever a2 > n.
ClosenessWitness closeness_extended(const DegreeSequence& seq, const DegreeSequence& target,
                                    int a1, int a2) {
  ClosenessWitness w;
  w.a1 = a1;
  w.a2 = a2;
  if (a2 <= seq.n()) {
    w.leveled = level_off(seq, a1, a2);
  } else {
    if (a1 < 1 || a1 > seq.n())
      throw std::invalid_argument("closeness: a1 out of range");
    w.leveled = seq.terms();
    for (int i = a1; i <= seq.n(); ++i) w.leveled[i - 1] = 0;
  }
  EditResult e = min_edit_to(w.leveled, target);
  w.edits = std::move(e.edits);
  w.total_edit = e.total;
  w.target = target;
  return w;
}

}  // namespace

Thm15Certificate thm15_certificate(const DegreeSequence& seq, const PatternGraph& h) {
  DegreeSufficiency ds = degree_sufficient(seq, h);
  if (ds.sufficient)
    throw std::invalid_argument("Theorem 1.5 inapplicable: sequence is degree sufficient");

  Thm15Certificate cert;
  cert.k = h.k();
  cert.alpha = h.alpha();
  cert.j = ds.j;
  cert.seq = seq;
  const int n = seq.n();
  const int k = h.k();

  if (ds.j >= h.alpha() + 1) {
    cert.branch = Thm15Branch::Majorization;
    // The comparison target is pi~_j(H, n). The proof bounds the terms by the
    // formula values; the last-term parity fix can undercut a tight sequence,
    // so fall back to the pre-fix sequence when needed and say so.
    RawSequence formula;
    {
      int head = std::min(k - ds.j, n);
      int value = k - ds.j + h.nabla(ds.j) - 1;
      formula.assign(head, n - 1);
      formula.insert(formula.end(), n - head, value);
    }
    RawSequence fixed;
    try {
      fixed = pi_tilde(h, n, ds.j).terms();
    } catch (const std::invalid_argument&) {
      // n too small for the definition sequence; the formula target stands
    }
    if (!fixed.empty() && majorizes(fixed, seq.terms())) {
      cert.target = fixed;
    } else if (majorizes(formula, seq.terms())) {
      cert.target = formula;
      cert.parity_fix_excluded = !fixed.empty();
    } else {
      throw std::logic_error("Theorem 1.5 falsified: majorization by pi~_j fails for " +
                             format_sequence(seq.terms()));
    }
    cert.valid = true;
    return cert;
  }

  cert.branch = Thm15Branch::Closeness;
  DegreeSequence target = pi_tilde(h, n, h.alpha() + 1);
  cert.target = target.terms();
  cert.a1 = k - h.alpha();
  cert.a2 = k - ds.j + 1;
  cert.close = closeness_extended(seq, target, cert.a1, cert.a2);
  if (cert.close.total_edit > 0)
    throw std::logic_error("Theorem 1.5 falsified: ([k-alpha, k-j+1], 0)-closeness fails for " +
                           format_sequence(seq.terms()));
  cert.valid = true;
  return cert;
}

Thm41Certificate thm41_certificate(const DegreeSequence& seq, const PatternGraph& h,
                                   const PotentialOptions& opts) {
  DegreeSufficiency ds = degree_sufficient(seq, h);
  if (!ds.sufficient)
    throw std::invalid_argument("Theorem 4.1 inapplicable: sequence is not degree sufficient");

  Thm41Certificate cert;
  const int k = h.k();
  cert.k = k;
  cert.i_star = h.i_star();
  cert.ell_star = h.ell_star();
  cert.alpha = h.alpha();
  long long f = h.f();
  cert.b41_literal = 1LL * k * k + 1LL * k * cert.i_star + 2 + f * (cert.ell_star - 2);
  cert.b41 = 1LL * k * k + 1LL * k * cert.i_star + 2 +
             f * std::max(0, cert.ell_star - 2);
  cert.b16 = (6LL * cert.alpha + 3) * k * k + 1LL * cert.alpha * cert.alpha * cert.alpha * k;

  cert.verdict = is_potentially_h(seq, h, opts);
  if (cert.verdict.status == PotentialStatus::Potentially) {
    cert.status = Thm41Status::Vacuous;
    cert.valid = true;
    return cert;
  }

  cert.a1 = k - cert.i_star + 1;
  cert.a2 = k;
  DegreeSequence target = pi_tilde(h, seq.n(), cert.i_star);
  cert.target = target;
  cert.close = closeness_extended(seq, target, cert.a1, cert.a2);
  cert.within_b41 = cert.close.total_edit <= cert.b41;
  cert.within_b16 = cert.close.total_edit <= cert.b16;

  if (cert.verdict.status == PotentialStatus::Unknown) {
    cert.status = Thm41Status::Conditional;
    cert.valid = false;
    return cert;
  }

  cert.status = Thm41Status::Certified;
  cert.valid = cert.within_b41 && cert.within_b16;
  if (!cert.valid)
    throw std::logic_error(
        "Theorem 4.1/1.6 falsified: edit " + std::to_string(cert.close.total_edit) +
        " exceeds a bound (b41=" + std::to_string(cert.b41) +
        ", b16=" + std::to_string(cert.b16) + ") for " + format_sequence(seq.terms()));
  return cert;
}

}  // namespace potentia
