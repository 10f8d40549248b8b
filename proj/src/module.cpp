#include "sl2rep/module.hpp"

#include <mutex>
#include <sstream>
#include <tuple>

namespace sl2rep {
namespace {

std::mutex g_sym_mu;
std::map<std::tuple<int, u64, unsigned>, std::vector<Sym>> g_sym_cache;

u64 field_key(const FieldElem& x) { return x.key(); }

FieldElem elem_of_key(const FieldCtx& F, u64 key) { return F.elem_at(key); }

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Triv: return "triv";
    case Family::St: return "st";
    case Family::IndB: return "ind_b";
    case Family::IndT: return "ind_t";
    case Family::IndNp: return "ind_n_plus";
    case Family::IndNm: return "ind_n_minus";
  }
  return "?";
}

ModuleSpec::ModuleSpec(Family f, u64 qq, unsigned n, i64 a) : fam(f), q(qq), level(n) {
  if (f == Family::IndB || f == Family::IndT)
    theta_exp = Character(qq, n, a).exponent();
  else
    theta_exp = 0;
}

u64 ModuleSpec::dim() const {
  u64 s = field().size;
  switch (fam) {
    case Family::Triv: return 1;
    case Family::St: return s;
    case Family::IndB: return s + 1;
    case Family::IndT: return s * (s + 1);
    case Family::IndNp:
    case Family::IndNm: return s * (s + 1) / 2;
  }
  return 0;
}

ModuleSpec ModuleSpec::raised(unsigned target) const {
  SL2_REQUIRE(target % level == 0, "module: raise target must be a multiple level");
  return ModuleSpec(fam, q, target, theta_exp);
}

bool ModuleSpec::operator<(const ModuleSpec& o) const {
  return std::tie(fam, q, level, theta_exp) < std::tie(o.fam, o.q, o.level, o.theta_exp);
}

std::string ModuleSpec::str() const {
  std::ostringstream os;
  os << family_name(fam) << "[q=" << q << ",n=" << level;
  if (fam == Family::IndB || fam == Family::IndT) os << ",a=" << theta_exp;
  os << "]";
  return os.str();
}

Sym sym_point(const FieldElem& x) { return Sym{0, field_key(x), 0}; }
Sym sym_pair(const FieldElem& y, const FieldElem& z) {
  return Sym{1, field_key(y), field_key(z)};
}
Sym sym_unit() { return Sym{0, 0, 0}; }

NormSym indn_normalize(Family fam, const FieldElem& y, const FieldElem& z) {
  int flip = (fam == Family::IndNm) ? -1 : 1;
  SL2_CHECK(fam == Family::IndNp || fam == Family::IndNm, "module: not a normalizer family");
  if (z.is_zero()) return NormSym{sym_point(y), flip};
  FieldElem y2 = y - z.inv();
  FieldElem z2 = -z;
  if (std::make_pair(field_key(z), field_key(y)) <=
      std::make_pair(field_key(z2), field_key(y2)))
    return NormSym{sym_pair(y, z), 1};
  return NormSym{sym_pair(y2, z2), flip};
}

const std::vector<Sym>& module_symbols(const ModuleSpec& spec) {
  std::lock_guard<std::mutex> lock(g_sym_mu);
  auto key = std::make_tuple((int)spec.fam, spec.q, spec.level);
  auto it = g_sym_cache.find(key);
  if (it != g_sym_cache.end()) return it->second;

  const FieldCtx& F = spec.field();
  std::vector<Sym> syms;
  switch (spec.fam) {
    case Family::Triv:
      syms.push_back(sym_unit());
      break;
    case Family::St:
      for (u64 i = 0; i < F.size; ++i) syms.push_back(Sym{0, i, 0});
      break;
    case Family::IndB:
      syms.push_back(sym_unit());
      for (u64 i = 0; i < F.size; ++i) syms.push_back(Sym{1, i, 0});
      break;
    case Family::IndT:
      for (u64 i = 0; i < F.size; ++i) syms.push_back(Sym{0, i, 0});
      for (u64 y = 0; y < F.size; ++y)
        for (u64 z = 0; z < F.size; ++z) syms.push_back(Sym{1, y, z});
      break;
    case Family::IndNp:
    case Family::IndNm:
      for (u64 i = 0; i < F.size; ++i) syms.push_back(Sym{0, i, 0});
      for (u64 y = 0; y < F.size; ++y)
        for (u64 z = 1; z < F.size; ++z) {
          NormSym n = indn_normalize(spec.fam, F.elem_at(y), F.elem_at(z));
          if (n.sym == (Sym{1, y, z})) syms.push_back(n.sym);
        }
      break;
  }
  SL2_CHECK(syms.size() == spec.dim(), "module: symbol count mismatch");
  auto [pos, inserted] = g_sym_cache.emplace(key, std::move(syms));
  return pos->second;
}

u64 sym_index(const ModuleSpec& spec, const Sym& s) {
  const std::vector<Sym>& syms = module_symbols(spec);
  auto it = std::lower_bound(syms.begin(), syms.end(), s);
  SL2_CHECK(it != syms.end() && *it == s, "module: symbol not in basis");
  return (u64)(it - syms.begin());
}

namespace {

// (x) basis symbols act through the coset representative eps(x)s for IndB,
// eps(y)s eps(z) for pairs, eps(x) for everything point-like.
GroupElem rep_of(const ModuleSpec& spec, const Sym& s) {
  const FieldCtx& F = spec.field();
  if (s.kind == 0) {
    if (spec.fam == Family::IndB) return GroupElem::identity(F);
    return GroupElem::eps(elem_of_key(F, s.a));
  }
  if (spec.fam == Family::IndB)
    return GroupElem::big(elem_of_key(F, s.a), F.one(), F.zero());
  return GroupElem::big(elem_of_key(F, s.a), F.one(), elem_of_key(F, s.b));
}

}  // namespace

void act_sym(const ModuleSpec& spec, const GroupElem& g, const Sym& s,
             std::vector<ActTerm>& out) {
  out.clear();
  const FieldCtx& F = spec.field();
  SL2_CHECK(&g.field() == &F, "module: group element at the wrong level");
  if (spec.fam == Family::Triv) {
    out.push_back(ActTerm{s, 1, 0, F.one()});
    return;
  }
  GroupElem P = g * rep_of(spec, s);
  switch (spec.fam) {
    case Family::St: {
      if (!P.is_big()) {
        out.push_back(ActTerm{sym_point(P.u()), 1, 0, F.one()});
        return;
      }
      FieldElem w = P.m() * P.m() * P.z();
      if (w.is_zero()) {
        out.push_back(ActTerm{sym_point(P.y()), -1, 0, F.one()});
        return;
      }
      out.push_back(ActTerm{sym_point(P.y() - w.inv()), 1, 0, F.one()});
      out.push_back(ActTerm{sym_point(P.y()), -1, 0, F.one()});
      return;
    }
    case Family::IndB: {
      if (!P.is_big())
        out.push_back(ActTerm{sym_unit(), 1, 1, P.c()});
      else
        out.push_back(ActTerm{Sym{1, field_key(P.y()), 0}, 1, 1, P.m()});
      return;
    }
    case Family::IndT: {
      if (!P.is_big())
        out.push_back(ActTerm{sym_point(P.u()), 1, 1, P.c()});
      else
        out.push_back(
            ActTerm{sym_pair(P.y(), P.m() * P.m() * P.z()), 1, 1, P.m()});
      return;
    }
    case Family::IndNp:
    case Family::IndNm: {
      if (!P.is_big()) {
        out.push_back(ActTerm{sym_point(P.u()), 1, 0, F.one()});
        return;
      }
      NormSym n = indn_normalize(spec.fam, P.y(), P.m() * P.m() * P.z());
      out.push_back(ActTerm{n.sym, n.sign, 0, F.one()});
      return;
    }
    case Family::Triv:
      return;
  }
}

void act_section_sym(const ModuleSpec& spec, const FieldElem& t, const Sym& s,
                     std::vector<ActTerm>& out) {
  out.clear();
  const FieldCtx& F = spec.field();
  SL2_CHECK(&t.ctx() == &F && !t.is_zero(), "module: bad section point");
  switch (spec.fam) {
    case Family::Triv:
      out.push_back(ActTerm{s, 1, 0, F.one()});
      return;
    case Family::St:
      out.push_back(ActTerm{sym_point(t * elem_of_key(F, s.a)), 1, 0, F.one()});
      return;
    case Family::IndB:
      if (s.kind == 0)
        out.push_back(ActTerm{sym_unit(), 1, 1, F.one()});
      else
        out.push_back(ActTerm{Sym{1, field_key(t * elem_of_key(F, s.a)), 0}, 1, -1, F.one()});
      return;
    case Family::IndT:
      if (s.kind == 0)
        out.push_back(ActTerm{sym_point(t * elem_of_key(F, s.a)), 1, 1, F.one()});
      else
        out.push_back(ActTerm{sym_pair(t * elem_of_key(F, s.a),
                                       t.inv() * elem_of_key(F, s.b)),
                              1, -1, F.one()});
      return;
    case Family::IndNp:
    case Family::IndNm: {
      if (s.kind == 0) {
        out.push_back(ActTerm{sym_point(t * elem_of_key(F, s.a)), 1, 0, F.one()});
        return;
      }
      NormSym n = indn_normalize(spec.fam, t * elem_of_key(F, s.a),
                                 t.inv() * elem_of_key(F, s.b));
      out.push_back(ActTerm{n.sym, n.sign, 0, F.one()});
      return;
    }
  }
}

void ModuleVec::add_term(const Sym& s, const CycNum& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(s);
  if (it == terms_.end()) {
    terms_.emplace(s, c);
    return;
  }
  it->second.add_in_place(c);
  if (it->second.is_zero()) terms_.erase(it);
}

void ModuleVec::add_in_place(const ModuleVec& o) {
  SL2_CHECK(spec_ == o.spec_ && cyc_ == o.cyc_, "module: mixed vectors");
  for (const auto& [s, c] : o.terms_) add_term(s, c);
}

void ModuleVec::sub_in_place(const ModuleVec& o) {
  SL2_CHECK(spec_ == o.spec_ && cyc_ == o.cyc_, "module: mixed vectors");
  for (const auto& [s, c] : o.terms_) add_term(s, -c);
}

void ModuleVec::scale_in_place(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [s, v] : terms_) v = v * c;
}

void ModuleVec::scale_in_place(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return;
  }
  for (auto& [s, v] : terms_) v.scale_in_place(r);
}

void ModuleVec::add_scaled_in_place(const ModuleVec& o, const CycNum& c) {
  SL2_CHECK(spec_ == o.spec_ && cyc_ == o.cyc_, "module: mixed vectors");
  if (c.is_zero()) return;
  for (const auto& [s, v] : o.terms_) add_term(s, v * c);
}

CycNum ModuleVec::coeff(const Sym& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? cyc_->zero() : it->second;
}

CycNum ModuleVec::coeff_sum() const {
  CycNum acc = cyc_->zero();
  for (const auto& [s, c] : terms_) acc.add_in_place(c);
  return acc;
}

bool ModuleVec::operator==(const ModuleVec& o) const {
  return spec_ == o.spec_ && cyc_ == o.cyc_ && terms_ == o.terms_;
}

std::string ModuleVec::str() const {
  if (terms_.empty()) return "0";
  const FieldCtx& F = spec_.field();
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*";
    if (s.kind == 0 && spec_.fam == Family::IndB)
      os << "[e]";
    else if (s.kind == 0)
      os << "(" << F.elem_at(s.a).str() << ")";
    else if (spec_.fam == Family::IndB)
      os << "(" << F.elem_at(s.a).str() << ")";
    else
      os << "(" << F.elem_at(s.a).str() << "," << F.elem_at(s.b).str() << ")";
    first = false;
  }
  return os.str();
}

CycNum act_term_coeff(const ModuleSpec& spec, const ActTerm& t, const CycCtx& cyc) {
  if (t.tpow == 0) return t.sign < 0 ? -cyc.one() : cyc.one();
  Root r = spec.theta().eval_root(t.targ);
  CycNum c = cyc.from_root(reduce_root(r.order, (i64)r.exp * t.tpow));
  return t.sign < 0 ? -c : c;
}

ModuleVec act(const GroupElem& g, const ModuleVec& v) {
  ModuleVec out(v.spec(), v.cyc());
  std::vector<ActTerm> ts;
  for (const auto& [s, c] : v.terms()) {
    act_sym(v.spec(), g, s, ts);
    for (const ActTerm& t : ts)
      out.add_term(t.sym, c * act_term_coeff(v.spec(), t, v.cyc()));
  }
  return out;
}

CycNum cyc_convert(const CycNum& v, const CycCtx& to) {
  if (&v.ctx() == &to) return v;
  if (v.is_rational()) return to.from_rational(v.rational_part());
  SL2_REQUIRE(to.N % v.ctx().N == 0, "cyclotomic: conductor does not extend");
  u64 f = to.N / v.ctx().N;
  CycNum out = to.zero();
  for (unsigned j = 0; j < v.ctx().deg; ++j)
    if (v.coords()[j] != 0)
      out.add_scaled_in_place(to.zeta_pow((u64)j * f), v.coords()[j]);
  return out;
}

ModuleVec raise_level(const ModuleVec& v, unsigned target, const CycCtx& cyc) {
  ModuleSpec spec2 = v.spec().raised(target);
  const FieldCtx& F = v.spec().field();
  const FieldCtx& E = spec2.field();
  ModuleVec out(spec2, cyc);
  for (const auto& [s, c] : v.terms()) {
    CycNum cc = cyc_convert(c, cyc);
    if (s.kind == 0 && v.spec().fam == Family::IndB) {
      out.add_term(sym_unit(), cc);
      continue;
    }
    FieldElem a = F.elem_at(s.a).embed(E);
    if (s.kind == 0) {
      out.add_term(sym_point(a), cc);
      continue;
    }
    if (v.spec().fam == Family::IndB) {
      out.add_term(Sym{1, field_key(a), 0}, cc);
      continue;
    }
    FieldElem b = F.elem_at(s.b).embed(E);
    if (v.spec().fam == Family::IndNp || v.spec().fam == Family::IndNm) {
      NormSym n = indn_normalize(v.spec().fam, a, b);
      if (n.sign < 0) cc = -cc;
      out.add_term(n.sym, cc);
      continue;
    }
    out.add_term(sym_pair(a, b), cc);
  }
  return out;
}

ModuleVec unit_vector(const ModuleSpec& spec, const CycCtx& cyc) {
  ModuleVec v(spec, cyc);
  v.add_term(sym_unit(), cyc.one());
  return v;
}

ModuleVec eta_vector(const ModuleSpec& spec, const CycCtx& cyc) {
  ModuleVec v(spec, cyc);
  if (spec.fam == Family::St) {
    v.add_term(Sym{0, 0, 0}, cyc.one());
    return v;
  }
  SL2_REQUIRE(spec.fam == Family::IndB && spec.theta().is_trivial(),
              "module: eta lives in the trivial-character induction");
  v.add_term(sym_unit(), cyc.one());
  v.add_term(Sym{1, 0, 0}, -cyc.one());
  return v;
}

ModuleVec eta_j_vector(const ModuleSpec& spec, bool j_has_s, const CycCtx& cyc) {
  SL2_REQUIRE(spec.fam == Family::IndB, "module: label generators live in IndB");
  if (!j_has_s) return unit_vector(spec, cyc);
  return eta_vector(spec, cyc);
}

ModuleVec lambda_vector(const ModuleSpec& spec, const FieldElem& z, const CycCtx& cyc) {
  SL2_REQUIRE(spec.fam == Family::IndNm, "module: lambda lives in the sign induction");
  SL2_REQUIRE(!z.is_zero(), "module: lambda needs a nonzero parameter");
  const FieldCtx& F = spec.field();
  ModuleVec v(spec, cyc);
  NormSym n = indn_normalize(spec.fam, F.zero(), z);
  v.add_term(n.sym, n.sign < 0 ? -cyc.one() : cyc.one());
  v.add_term(sym_point(F.zero()), cyc.one());
  v.add_term(sym_point(-z.inv()), -cyc.one());
  return v;
}

}  // namespace sl2rep
