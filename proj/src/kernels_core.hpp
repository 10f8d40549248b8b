#pragma once

// Per-argument check logic shared by the serial and OpenMP kernel drivers.
// Everything here is pure given primed caches; the drivers own scheduling.

#include <sstream>

#include "sl2rep/kernels.hpp"

namespace sl2rep::detail {

// Touch every lazily built table a sweep will need, so worker threads only
// ever read them.
inline void prime_level(u64 q, unsigned n) {
  const FieldCtx& F = FieldCtx::get(q, n);
  (void)F;
}

inline void prime_module(const ModuleSpec& spec, const CycCtx& cyc) {
  (void)module_symbols(spec);
  (void)spec.field();
  if (cyc.N > 1) (void)cyc.zeta_pow(cyc.N - 1);
}

inline std::string mat_str(const Mat2& m) { return m.str(); }

// ---- mul oracle -----------------------------------------------------------

struct MulOracleTask {
  const FieldCtx* F;
  u64 order;
  u64 random_checks;  // 0: exhaustive over pairs
  u64 seed;

  u64 count() const { return random_checks ? random_checks : order * order; }

  bool check(u64 idx, std::string* err) const {
    u64 i, j;
    if (random_checks) {
      Rng r(seed ^ mix64(idx + 1));
      i = r.below(order);
      j = r.below(order);
    } else {
      i = idx / order;
      j = idx % order;
    }
    GroupElem a = GroupElem::at(*F, i), b = GroupElem::at(*F, j);
    GroupElem ab = a * b;
    Mat2 mm = a.to_matrix() * b.to_matrix();
    if (!(ab.to_matrix() == mm)) {
      *err = "product mismatch at (" + a.str() + ", " + b.str() + ")";
      return false;
    }
    if (GroupElem::from_matrix(mm) != ab) {
      *err = "from_matrix mismatch at (" + a.str() + ", " + b.str() + ")";
      return false;
    }
    if (ab * b.inverse() != a) {
      *err = "inverse mismatch at (" + a.str() + ", " + b.str() + ")";
      return false;
    }
    return true;
  }
};

// ---- Weyl rewrite ---------------------------------------------------------

struct RewriteTask {
  const FieldCtx* F;

  u64 count() const { return F->mord; }

  bool check(u64 idx, std::string* err) const {
    FieldElem x = F->from_dlog((i64)idx);
    GroupElem sd = GroupElem::sdot(*F);
    GroupElem lhs = sd * GroupElem::eps(x) * sd;
    GroupElem rhs = GroupElem::eps(-x.inv()) * sd * GroupElem::h(-x) *
                    GroupElem::eps(-x.inv());
    if (lhs != rhs) {
      *err = "rewrite mismatch at x = " + x.str();
      return false;
    }
    Mat2 mm = sd.to_matrix() * GroupElem::eps(x).to_matrix() * sd.to_matrix();
    if (!(lhs.to_matrix() == mm) || GroupElem::from_matrix(mm) != rhs) {
      *err = "rewrite oracle mismatch at x = " + x.str();
      return false;
    }
    return true;
  }
};

// ---- torus conjugation ----------------------------------------------------

struct TorusConjTask {
  const FieldCtx* F;

  u64 count() const { return F->mord * F->size; }

  bool check(u64 idx, std::string* err) const {
    FieldElem c = F->from_dlog((i64)(idx / F->size));
    FieldElem u = F->elem_at(idx % F->size);
    GroupElem hc = GroupElem::h(c);
    GroupElem lhs = hc * GroupElem::eps(u) * hc.inverse();
    GroupElem rhs = GroupElem::eps(c * c * u);
    if (lhs != rhs || !(lhs.to_matrix() == rhs.to_matrix())) {
      *err = "torus conjugation mismatch at c = " + c.str() + ", u = " + u.str();
      return false;
    }
    return true;
  }
};

// ---- lambda relations -----------------------------------------------------

// Index space: [0, M^2) torus dilation, [M^2, M^2+M) translation identity,
// [M^2+M, M^2+2M) Weyl flip, then the three-term expansion over (x, y).
struct LambdaTask {
  const ModuleSpec spec;
  const CycCtx* cyc;

  u64 count() const {
    u64 m = spec.field().mord;
    return m * m + 2 * m + m * m;
  }

  bool check(u64 idx, std::string* err) const {
    const FieldCtx& F = spec.field();
    u64 m = F.mord;
    GroupElem sd = GroupElem::sdot(F);
    if (idx < m * m) {
      FieldElem c = F.from_dlog((i64)(idx / m)), z = F.from_dlog((i64)(idx % m));
      ModuleVec lhs = act(GroupElem::h(c), lambda_vector(spec, z, *cyc));
      ModuleVec rhs = lambda_vector(spec, (c * c).inv() * z, *cyc);
      if (lhs != rhs) {
        *err = "dilation relation fails at c = " + c.str() + ", z = " + z.str();
        return false;
      }
      return true;
    }
    idx -= m * m;
    if (idx < m) {
      FieldElem z = F.from_dlog((i64)idx);
      ModuleVec lhs = act(GroupElem::eps(z), lambda_vector(spec, z.inv(), *cyc));
      ModuleVec rhs = lambda_vector(spec, -z.inv(), *cyc);
      rhs.scale_in_place(Rational(-1));
      if (lhs != rhs) {
        *err = "translation relation fails at z = " + z.str();
        return false;
      }
      return true;
    }
    idx -= m;
    if (idx < m) {
      FieldElem z = F.from_dlog((i64)idx);
      ModuleVec lhs = act(sd, lambda_vector(spec, z, *cyc));
      ModuleVec rhs = lambda_vector(spec, -z.inv(), *cyc);
      rhs.scale_in_place(Rational(-1));
      if (lhs != rhs) {
        *err = "Weyl relation fails at z = " + z.str();
        return false;
      }
      return true;
    }
    idx -= m;
    FieldElem x = F.from_dlog((i64)(idx / m)), y = F.from_dlog((i64)(idx % m));
    if ((x * y - F.one()).is_zero()) return true;  // excluded argument
    FieldElem w = x * y - F.one();
    ModuleVec lhs = act(sd * GroupElem::eps(x), lambda_vector(spec, y, *cyc));
    ModuleVec rhs = act(GroupElem::eps(-x.inv()), lambda_vector(spec, x * w, *cyc));
    rhs.add_in_place(lambda_vector(spec, x, *cyc));
    rhs.sub_in_place(lambda_vector(spec, y.inv() * w, *cyc));
    if (lhs != rhs) {
      *err = "three-term expansion fails at x = " + x.str() + ", y = " + y.str();
      return false;
    }
    return true;
  }
};

// ---- Steinberg relations ---------------------------------------------------

struct SteinbergTask {
  const ModuleSpec spec;
  const CycCtx* cyc;

  u64 count() const { return spec.field().mord + 1; }

  bool check(u64 idx, std::string* err) const {
    const FieldCtx& F = spec.field();
    GroupElem sd = GroupElem::sdot(F);
    ModuleVec eta = eta_vector(spec, *cyc);
    if (idx == 0) {
      ModuleVec lhs = act(sd, eta), rhs = eta;
      rhs.scale_in_place(Rational(-1));
      if (lhs != rhs) {
        *err = "Weyl sign relation fails";
        return false;
      }
      return true;
    }
    FieldElem x = F.from_dlog((i64)(idx - 1));
    ModuleVec lhs = act(sd * GroupElem::eps(x), eta);
    ModuleVec rhs = act(GroupElem::eps(-x.inv()), eta);
    rhs.sub_in_place(eta);
    if (lhs != rhs) {
      *err = "translate relation fails at x = " + x.str();
      return false;
    }
    return true;
  }
};

// ---- averaging ------------------------------------------------------------

inline bool avg_tag_is_torus(AvgTag t) {
  return t == AvgTag::T || t == AvgTag::Section;
}

inline u64 avg_tag_count(AvgTag tag, const FieldCtx& F) {
  switch (tag) {
    case AvgTag::U: return subgroup_order(Subgroup::U, F);
    case AvgTag::UStar: return subgroup_order(Subgroup::UStar, F);
    case AvgTag::T: return subgroup_order(Subgroup::T, F);
    case AvgTag::Section: return F.mord;
    case AvgTag::N: return subgroup_order(Subgroup::N, F);
    case AvgTag::Full: return GroupElem::order(F);
  }
  SL2_CHECK(false, "kernels: bad average tag");
  return 0;
}

// One summand of average_act.  For the honest-subgroup tags this is a plain
// (twisted) action; for Section the twist and theta exponents are fused at
// the square root's level.
inline void avg_accumulate(AvgTag tag, const ModuleVec& v, const Character* twist,
                           u64 idx, ModuleVec& acc) {
  const FieldCtx& F = v.spec().field();
  const CycCtx& cyc = v.cyc();
  if (tag == AvgTag::Section) {
    FieldElem t = F.from_dlog((i64)idx);
    FieldElem c = sqrt_canonical(t);
    u64 mc = c.ctx().mord;
    i64 kc = c.dlog();
    i64 a_theta = v.spec().theta_exp;
    i64 a_twist = twist ? twist->exponent() : 0;
    std::vector<ActTerm> ts;
    for (const auto& [s, coeff] : v.terms()) {
      act_section_sym(v.spec(), t, s, ts);
      for (const ActTerm& term : ts) {
        i64 e = (i64)(((__int128)(-a_twist + term.tpow * a_theta) * kc) %
                      (__int128)mc);
        CycNum w = cyc.from_root(reduce_root(mc, e));
        if (term.sign < 0) w = -w;
        acc.add_term(term.sym, coeff * w);
      }
    }
    return;
  }
  GroupElem g = GroupElem::identity(F);
  switch (tag) {
    case AvgTag::U: g = subgroup_at(Subgroup::U, F, idx); break;
    case AvgTag::UStar: g = subgroup_at(Subgroup::UStar, F, idx); break;
    case AvgTag::T: g = subgroup_at(Subgroup::T, F, idx); break;
    case AvgTag::N: g = subgroup_at(Subgroup::N, F, idx); break;
    case AvgTag::Full: g = GroupElem::at(F, idx); break;
    default: SL2_CHECK(false, "kernels: bad average tag");
  }
  ModuleVec w = act(g, v);
  if (twist) {
    // reached only for tag T, where the element is h(c) with c = g^idx
    Root r = twist->eval_root(F.from_dlog((i64)idx));
    w.scale_in_place(cyc.from_root(reduce_root(r.order, -(i64)r.exp)));
  }
  acc.add_in_place(w);
}

// ---- traces ---------------------------------------------------------------

inline CycNum trace_of(const ModuleSpec& spec, const CycCtx& cyc,
                       const GroupElem& g) {
  const std::vector<Sym>& syms = module_symbols(spec);
  CycNum tr = cyc.zero();
  std::vector<ActTerm> ts;
  for (const Sym& s : syms) {
    act_sym(spec, g, s, ts);
    for (const ActTerm& t : ts)
      if (t.sym == s) tr.add_in_place(act_term_coeff(spec, t, cyc));
  }
  return tr;
}

// ---- per-variant entry points ----------------------------------------------

// At most this many failure strings are kept per sweep.
inline constexpr u64 kMaxFailures = 20;

ModuleVec average_act_serial(AvgTag tag, const ModuleVec& v, const Character* twist);
ModuleVec average_act_par(AvgTag tag, const ModuleVec& v, const Character* twist);
std::vector<CycNum> trace_vector_serial(const ModuleSpec& spec, const CycCtx& cyc);
std::vector<CycNum> trace_vector_par(const ModuleSpec& spec, const CycCtx& cyc);
SweepResult sweep_serial(const MulOracleTask& t);
SweepResult sweep_serial(const RewriteTask& t);
SweepResult sweep_serial(const TorusConjTask& t);
SweepResult sweep_serial(const LambdaTask& t);
SweepResult sweep_serial(const SteinbergTask& t);
SweepResult sweep_par(const MulOracleTask& t);
SweepResult sweep_par(const RewriteTask& t);
SweepResult sweep_par(const TorusConjTask& t);
SweepResult sweep_par(const LambdaTask& t);
SweepResult sweep_par(const SteinbergTask& t);
u64 find_first_serial(u64 count, const std::function<bool(u64)>& pred);
u64 find_first_par(u64 count, const std::function<bool(u64)>& pred);

// Force the level-2n field table when any square root at this level needs
// it, so parallel workers never race the interning mutex during builds.
inline void prime_sqrt(const FieldCtx& F) {
  if (F.mord > 1) (void)sqrt_canonical(F.from_dlog(1));
}

}  // namespace sl2rep::detail
