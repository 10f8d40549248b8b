#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sl2rep/module.hpp"

namespace sl2rep {

// Every kernel has a serial reference implementation and an OpenMP variant;
// tests and the bench target compare them on identical inputs.
enum class Exec { Serial, Par };

// Enumerable subsets used by the averaging operator.  Section is the set of
// square roots {h(c) : c^2 = t} with one element per nonzero t at the level.
enum class AvgTag { U, UStar, T, Section, N, Full };

std::string avg_tag_name(AvgTag t);

struct SweepResult {
  u64 checked = 0;
  std::vector<std::string> failures;  // first few, ordered by argument index
  bool ok() const { return failures.empty(); }
};

// Sum of coefficient * x * v over the tagged subset at the module's level,
// with coefficient = twist(x)^-1 when a twist is given (T and Section only).
// The twist may live at any multiple of the module level; for Section it is
// evaluated at the square root itself through its integer exponent, so a
// reflection twist must be formed at the root's level (reducing an exponent
// at the base level first loses a quadratic-character factor).  The twist
// and the module's theta factor are fused into one root exponent, and the
// result must be expressible in the vector's conductor.
ModuleVec average_act(AvgTag tag, const ModuleVec& v, const Character* twist,
                      Exec ex);

// Trace of every group element on the module, in GroupElem::at order.
std::vector<CycNum> trace_vector(const ModuleSpec& spec, const CycCtx& cyc,
                                 Exec ex);

// (1/|G|) sum tr_a(g) * conj(tr_b(g)); conj is the automorphism zeta -> 1/zeta.
CycNum inner_from_traces(const std::vector<CycNum>& ta,
                         const std::vector<CycNum>& tb, const CycCtx& cyc);

// Multiplicity pairing of two modules at one level through exact character
// sums; an independent oracle for hom-space dimensions.
CycNum char_multiplicity(const ModuleSpec& a, const ModuleSpec& b,
                         const CycCtx& cyc, Exec ex);

// Sum of chi over the nonzero field elements at its level: zero unless
// chi is trivial, in which case it is q^level - 1.
CycNum torus_char_sum(const Character& chi, const CycCtx& cyc);

// Relation sweeps.  Zero failures is the pass condition; failure strings
// carry the offending arguments.
//
// Product oracle: normal-form products against 2x2 matrix products, plus
// round trips and inverses.  random_checks = 0 runs all |G|^2 pairs.
SweepResult sweep_mul_oracle(u64 q, unsigned n, u64 random_checks, u64 seed,
                             Exec ex);
// The Weyl rewrite s e(x) s = e(-1/x) s h(-x) e(-1/x) for all x != 0,
// checked in normal form and against the matrix oracle.
SweepResult sweep_rewrite(u64 q, unsigned n, Exec ex);
// h(c) e(u) h(c)^-1 = e(c^2 u) for all c != 0, u.
SweepResult sweep_torus_conj(u64 q, unsigned n, Exec ex);
// The four lambda-vector relations in IndNm, exhaustive over valid arguments.
SweepResult sweep_lambda(u64 q, unsigned n, Exec ex);
// s eta = -eta and s e(x) eta = (e(-1/x) - 1) eta for x != 0, in St.
SweepResult sweep_steinberg(u64 q, unsigned n, Exec ex);

// Smallest index in [0, count) satisfying pred, or ~0ull.
u64 find_first_index(u64 count, const std::function<bool(u64)>& pred, Exec ex);

}  // namespace sl2rep
