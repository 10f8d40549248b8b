// Serial reference implementations of the averaging, trace, and sweep
// kernels, plus the Exec dispatchers.  The OpenMP variants live in
// kernels_omp.cpp and must agree with these bit for bit.

#include "kernels_core.hpp"

namespace sl2rep {
namespace detail {
namespace {

template <typename Task>
SweepResult run_serial(const Task& task) {
  SweepResult res;
  res.checked = task.count();
  std::string err;
  for (u64 i = 0; i < res.checked; ++i) {
    bool ok;
    try {
      ok = task.check(i, &err);
    } catch (const std::exception& e) {
      ok = false;
      err = e.what();
    }
    if (ok) continue;
    res.failures.push_back(std::move(err));
    err.clear();
    if (res.failures.size() >= kMaxFailures) break;
  }
  return res;
}

}  // namespace

ModuleVec average_act_serial(AvgTag tag, const ModuleVec& v, const Character* twist) {
  const FieldCtx& F = v.spec().field();
  ModuleVec acc(v.spec(), v.cyc());
  u64 n = avg_tag_count(tag, F);
  for (u64 i = 0; i < n; ++i) avg_accumulate(tag, v, twist, i, acc);
  return acc;
}

std::vector<CycNum> trace_vector_serial(const ModuleSpec& spec, const CycCtx& cyc) {
  const FieldCtx& F = spec.field();
  u64 n = GroupElem::order(F);
  std::vector<CycNum> out;
  out.reserve(n);
  for (u64 i = 0; i < n; ++i) out.push_back(trace_of(spec, cyc, GroupElem::at(F, i)));
  return out;
}

SweepResult sweep_serial(const MulOracleTask& t) { return run_serial(t); }
SweepResult sweep_serial(const RewriteTask& t) { return run_serial(t); }
SweepResult sweep_serial(const TorusConjTask& t) { return run_serial(t); }
SweepResult sweep_serial(const LambdaTask& t) { return run_serial(t); }
SweepResult sweep_serial(const SteinbergTask& t) { return run_serial(t); }

u64 find_first_serial(u64 count, const std::function<bool(u64)>& pred) {
  for (u64 i = 0; i < count; ++i)
    if (pred(i)) return i;
  return ~0ull;
}

}  // namespace detail

std::string avg_tag_name(AvgTag t) {
  switch (t) {
    case AvgTag::U: return "U";
    case AvgTag::UStar: return "Ustar";
    case AvgTag::T: return "T";
    case AvgTag::Section: return "section";
    case AvgTag::N: return "N";
    case AvgTag::Full: return "G";
  }
  SL2_CHECK(false, "kernels: bad average tag");
  return "";
}

ModuleVec average_act(AvgTag tag, const ModuleVec& v, const Character* twist,
                      Exec ex) {
  SL2_CHECK(!twist || detail::avg_tag_is_torus(tag),
            "average_act: twist only applies to a torus tag");
  if (twist)
    SL2_CHECK(twist->q() == v.spec().q && twist->level() % v.spec().level == 0,
              "average_act: twist level must be a multiple of the module level");
  return ex == Exec::Serial ? detail::average_act_serial(tag, v, twist)
                            : detail::average_act_par(tag, v, twist);
}

std::vector<CycNum> trace_vector(const ModuleSpec& spec, const CycCtx& cyc,
                                 Exec ex) {
  return ex == Exec::Serial ? detail::trace_vector_serial(spec, cyc)
                            : detail::trace_vector_par(spec, cyc);
}

CycNum inner_from_traces(const std::vector<CycNum>& ta,
                         const std::vector<CycNum>& tb, const CycCtx& cyc) {
  SL2_CHECK(ta.size() == tb.size() && !ta.empty(),
            "inner_from_traces: trace vectors must match a common group order");
  CycNum s = cyc.zero();
  for (u64 i = 0; i < ta.size(); ++i) s.add_in_place(ta[i] * tb[i].conj());
  s.scale_in_place(Rational(1, (i64)ta.size()));
  return s;
}

CycNum char_multiplicity(const ModuleSpec& a, const ModuleSpec& b,
                         const CycCtx& cyc, Exec ex) {
  SL2_CHECK(a.q == b.q && a.level == b.level,
            "char_multiplicity: modules must share a level");
  std::vector<CycNum> ta = trace_vector(a, cyc, ex);
  std::vector<CycNum> tb = trace_vector(b, cyc, ex);
  return inner_from_traces(ta, tb, cyc);
}

CycNum torus_char_sum(const Character& chi, const CycCtx& cyc) {
  const FieldCtx& F = FieldCtx::get(chi.q(), chi.level());
  CycNum s = cyc.zero();
  for (u64 k = 0; k < F.mord; ++k)
    s.add_in_place(cyc.from_root(chi.eval_root(F.from_dlog((i64)k))));
  return s;
}

SweepResult sweep_mul_oracle(u64 q, unsigned n, u64 random_checks, u64 seed,
                             Exec ex) {
  const FieldCtx& F = FieldCtx::get(q, n);
  detail::MulOracleTask t{&F, GroupElem::order(F), random_checks, seed};
  return ex == Exec::Serial ? detail::sweep_serial(t) : detail::sweep_par(t);
}

SweepResult sweep_rewrite(u64 q, unsigned n, Exec ex) {
  detail::RewriteTask t{&FieldCtx::get(q, n)};
  return ex == Exec::Serial ? detail::sweep_serial(t) : detail::sweep_par(t);
}

SweepResult sweep_torus_conj(u64 q, unsigned n, Exec ex) {
  detail::TorusConjTask t{&FieldCtx::get(q, n)};
  return ex == Exec::Serial ? detail::sweep_serial(t) : detail::sweep_par(t);
}

SweepResult sweep_lambda(u64 q, unsigned n, Exec ex) {
  ModuleSpec spec{Family::IndNm, q, n, 0};
  const CycCtx& cyc = CycCtx::get(spec.conductor());
  detail::LambdaTask t{spec, &cyc};
  return ex == Exec::Serial ? detail::sweep_serial(t) : detail::sweep_par(t);
}

SweepResult sweep_steinberg(u64 q, unsigned n, Exec ex) {
  ModuleSpec spec{Family::St, q, n, 0};
  const CycCtx& cyc = CycCtx::get(spec.conductor());
  detail::SteinbergTask t{spec, &cyc};
  return ex == Exec::Serial ? detail::sweep_serial(t) : detail::sweep_par(t);
}

u64 find_first_index(u64 count, const std::function<bool(u64)>& pred, Exec ex) {
  return ex == Exec::Serial ? detail::find_first_serial(count, pred)
                            : detail::find_first_par(count, pred);
}

}  // namespace sl2rep
