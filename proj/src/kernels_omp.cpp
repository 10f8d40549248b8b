// OpenMP variants of the kernels in kernels_serial.cpp.  Shared tables are
// primed before each parallel region; exact arithmetic makes the merged
// results independent of scheduling, so serial and Par agree exactly.

#include <algorithm>

#include "kernels_core.hpp"

namespace sl2rep::detail {
namespace {

template <typename Task>
SweepResult run_par(const Task& task) {
  SweepResult res;
  res.checked = task.count();
  std::vector<std::pair<u64, std::string>> fails;
#pragma omp parallel
  {
    std::vector<std::pair<u64, std::string>> local;
    std::string err;
#pragma omp for schedule(dynamic, 256) nowait
    for (i64 i = 0; i < (i64)res.checked; ++i) {
      bool ok;
      try {
        ok = task.check((u64)i, &err);
      } catch (const std::exception& e) {
        ok = false;
        err = e.what();
      }
      if (!ok) {
        local.emplace_back((u64)i, std::move(err));
        err.clear();
      }
    }
#pragma omp critical(sl2rep_sweep_merge)
    fails.insert(fails.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  std::sort(fails.begin(), fails.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, msg] : fails) {
    if (res.failures.size() >= kMaxFailures) break;
    res.failures.push_back(std::move(msg));
  }
  return res;
}

}  // namespace

ModuleVec average_act_par(AvgTag tag, const ModuleVec& v, const Character* twist) {
  const FieldCtx& F = v.spec().field();
  prime_module(v.spec(), v.cyc());
  if (tag == AvgTag::Section) prime_sqrt(F);
  u64 n = avg_tag_count(tag, F);
  ModuleVec total(v.spec(), v.cyc());
#pragma omp parallel
  {
    ModuleVec acc(v.spec(), v.cyc());
#pragma omp for schedule(dynamic, 16) nowait
    for (i64 i = 0; i < (i64)n; ++i) avg_accumulate(tag, v, twist, (u64)i, acc);
#pragma omp critical(sl2rep_avg_merge)
    total.add_in_place(acc);
  }
  return total;
}

std::vector<CycNum> trace_vector_par(const ModuleSpec& spec, const CycCtx& cyc) {
  const FieldCtx& F = spec.field();
  prime_module(spec, cyc);
  u64 n = GroupElem::order(F);
  std::vector<CycNum> out(n, cyc.zero());
#pragma omp parallel for schedule(dynamic, 64)
  for (i64 i = 0; i < (i64)n; ++i)
    out[(u64)i] = trace_of(spec, cyc, GroupElem::at(F, (u64)i));
  return out;
}

SweepResult sweep_par(const MulOracleTask& t) { return run_par(t); }
SweepResult sweep_par(const RewriteTask& t) { return run_par(t); }
SweepResult sweep_par(const TorusConjTask& t) { return run_par(t); }
SweepResult sweep_par(const LambdaTask& t) {
  prime_module(t.spec, *t.cyc);
  return run_par(t);
}
SweepResult sweep_par(const SteinbergTask& t) {
  prime_module(t.spec, *t.cyc);
  return run_par(t);
}

u64 find_first_par(u64 count, const std::function<bool(u64)>& pred) {
  const u64 block = 4096;
  for (u64 base = 0; base < count; base += block) {
    u64 end = std::min(count, base + block);
    u64 best = ~0ull;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
    for (i64 i = (i64)base; i < (i64)end; ++i)
      if (pred((u64)i)) best = std::min(best, (u64)i);
    if (best != ~0ull) return best;
  }
  return ~0ull;
}

}  // namespace sl2rep::detail
