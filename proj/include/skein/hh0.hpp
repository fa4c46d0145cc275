#pragma once

// The commutator quotient HH_0 = O / span([x,y]): the stated skein module of
// the marked annulus. Zero tests search the commutator span gradewise over
// the fraction field, but a Zero verdict is issued only with an integral
// witness that re-evaluates exactly to the input. Nonzero verdicts come from
// the q^{1/2} -> 1 specialization, where all commutators die. Everything
// else is Unknown; over Z[q^{±1/2}] that is honest output.

#include "skein/cutting.hpp"

namespace skein {

enum class HH0Verdict { Zero, Nonzero, Unknown };

inline const char* to_string(HH0Verdict v) {
  switch (v) {
    case HH0Verdict::Zero: return "zero";
    case HH0Verdict::Nonzero: return "nonzero";
    case HH0Verdict::Unknown: return "unknown";
  }
  return "?";
}

struct HH0Certificate {
  HH0Verdict verdict = HH0Verdict::Unknown;
  // Zero: input = sum over entries of coeff * [m1, m2], coefficients integral
  struct CommutatorTerm {
    HalfLaurent coeff;
    PBWMonomial m1, m2;
  };
  std::vector<CommutatorTerm> combination;
  // Nonzero: the commutative image at q^{1/2} = 1, a nonzero element of
  // Z[a,b,c,d]/(ad - bc - 1) in PBW coordinates
  std::map<PBWMonomial, Integer> commutative_image;
};

// all PBW monomials of degree <= d
std::vector<PBWMonomial> pbw_monomials_up_to(long d);

// commutative specialization q^{1/2} -> 1 in PBW coordinates
std::map<PBWMonomial, Integer> q1_image(const OqElement<HalfLaurent>& x);

// Span of all nf([m1, m2]) for PBW monomials with deg m1 + deg m2 <= d,
// echelonized over the fraction field with witness bookkeeping.
class CommutatorSpan {
 public:
  explicit CommutatorSpan(long degree_bound);

  long degree_bound() const { return d_; }

  // exact reduction; when the remainder vanishes the returned combination
  // expresses the input over the generators (fraction-field coefficients)
  struct Reduction {
    bool in_span = false;
    std::vector<std::pair<LaurentFrac, size_t>> combination;  // gen indices
  };
  Reduction reduce(const OqElement<HalfLaurent>& x) const;

  struct Generator {
    PBWMonomial m1, m2;
    OqElement<HalfLaurent> value;  // nf(m1 m2 - m2 m1)
  };
  const std::vector<Generator>& generators() const { return gens_; }

 private:
  long d_;
  std::vector<PBWMonomial> basis_;
  std::map<PBWMonomial, size_t> index_;
  std::vector<Generator> gens_;
  // echelon rows: sparse coefficient vectors with pivot column first,
  // plus their expressions over the generators
  struct Row {
    size_t pivot;
    std::vector<std::pair<size_t, LaurentFrac>> entries;
    std::vector<std::pair<LaurentFrac, size_t>> expr;
  };
  std::vector<Row> rows_;
};

// tau: O ->> HH_0 with a degree bound; certified verdict
HH0Certificate tau(const OqElement<HalfLaurent>& x, long degree_bound);

// The annulus core loop computed through the slit state sum, pushed through
// tau. Asserts the value equals 2 tau(1); a failure means an upstream
// convention bug.
struct CoreLoopResult {
  OqElement<HalfLaurent> bigon_value;  // pre-projection value, reported
  HH0Certificate certificate;
};
CoreLoopResult core_loop_value();
// n parallel copies of the core
OqElement<HalfLaurent> parallel_cores_value(int n);

}  // namespace skein
