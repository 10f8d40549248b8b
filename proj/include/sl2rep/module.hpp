#pragma once

#include <map>
#include <string>
#include <vector>

#include "sl2rep/character.hpp"
#include "sl2rep/group.hpp"

namespace sl2rep {

// The six module families realized with monomial bases:
//   Triv    one-dimensional trivial module
//   St      q^n-dimensional special module, basis (x) = eps(x) * eta
//   IndB    induction of theta from the standard Borel, basis {unit} u {(x)}
//   IndT    induction of theta from the split torus, basis {(u)} u {(y,z)}
//   IndNp   induction of the trivial character of the torus normalizer
//   IndNm   induction of the sign character of the torus normalizer
enum class Family { Triv, St, IndB, IndT, IndNp, IndNm };

std::string family_name(Family f);

struct ModuleSpec {
  Family fam = Family::Triv;
  u64 q = 0;
  unsigned level = 1;
  i64 theta_exp = 0;  // generator exponent of theta; meaningful for IndB/IndT

  ModuleSpec() = default;
  ModuleSpec(Family f, u64 qq, unsigned n, i64 a = 0);

  const FieldCtx& field() const { return FieldCtx::get(q, level); }
  Character theta() const { return Character(q, level, theta_exp); }
  u64 dim() const;
  // conductor that accommodates every action coefficient at this level
  u64 conductor() const { return field().mord == 0 ? 1 : field().mord; }
  ModuleSpec raised(unsigned target) const;

  bool operator==(const ModuleSpec& o) const = default;
  bool operator<(const ModuleSpec& o) const;
  std::string str() const;
};

// Basis symbol; field elements are referenced by their enumeration index
// (0 = zero, i >= 1 is g^(i-1)), so symbol order is enumeration order.
struct Sym {
  u32 kind = 0;  // 0: point symbol, 1: pair symbol
  u64 a = 0;
  u64 b = 0;

  auto operator<=>(const Sym& o) const = default;
};

Sym sym_point(const FieldElem& x);
Sym sym_pair(const FieldElem& y, const FieldElem& z);
Sym sym_unit();  // the identity-coset symbol of IndB

// Canonical symbol list of a module, in (kind, a, b) order; cached per family
// and level.
const std::vector<Sym>& module_symbols(const ModuleSpec& spec);
u64 sym_index(const ModuleSpec& spec, const Sym& s);

// Normalization of an induced-from-normalizer symbol: a pair with vanishing
// second entry folds to a point symbol through the Weyl representative, and a
// non-canonical pair flips to its partner (y, z) -> (y - 1/z, -z).  Both moves
// cost the sign character a factor -1.
struct NormSym {
  Sym sym;
  int sign;  // +1 or -1, already specialized to the family
};
NormSym indn_normalize(Family fam, const FieldElem& y, const FieldElem& z);

// One output term of a monomial action: coefficient sign * theta(targ)^tpow.
struct ActTerm {
  Sym sym;
  int sign;        // +1 or -1
  int tpow;        // -1, 0, +1
  FieldElem targ;  // nonzero when tpow != 0
};

// Image of a single basis symbol under g, as one or two monomial terms.
// g must live at the module's level.
void act_sym(const ModuleSpec& spec, const GroupElem& g, const Sym& s,
             std::vector<ActTerm>& out);

// Image of a basis symbol under the torus-section element over t: symbols
// rescale through t = c^2 at the module level; the theta power is taken at
// the section element c itself by the caller.
void act_section_sym(const ModuleSpec& spec, const FieldElem& t, const Sym& s,
                     std::vector<ActTerm>& out);

// Sparse module vector with exact cyclotomic coefficients.
class ModuleVec {
 public:
  ModuleVec() = default;
  ModuleVec(const ModuleSpec& spec, const CycCtx& cyc) : spec_(spec), cyc_(&cyc) {}

  const ModuleSpec& spec() const { return spec_; }
  const CycCtx& cyc() const { return *cyc_; }
  const std::map<Sym, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  u64 support_size() const { return terms_.size(); }

  void add_term(const Sym& s, const CycNum& c);
  void add_in_place(const ModuleVec& o);
  void sub_in_place(const ModuleVec& o);
  void scale_in_place(const CycNum& c);
  void scale_in_place(const Rational& r);
  void add_scaled_in_place(const ModuleVec& o, const CycNum& c);
  CycNum coeff(const Sym& s) const;      // zero when absent
  CycNum coeff_sum() const;              // sum over the support
  bool operator==(const ModuleVec& o) const;
  bool operator!=(const ModuleVec& o) const { return !(*this == o); }
  std::string str() const;

 private:
  ModuleSpec spec_;
  const CycCtx* cyc_ = nullptr;
  std::map<Sym, CycNum> terms_;
};

// Coefficient sign * theta(targ)^tpow of one action term, materialized in
// the given conductor.
CycNum act_term_coeff(const ModuleSpec& spec, const ActTerm& t, const CycCtx& cyc);

// Left action of a group element at the module's level.
ModuleVec act(const GroupElem& g, const ModuleVec& v);

// Convert a value between conductors (source divides target, or the value is
// expressible; fails loudly otherwise).
CycNum cyc_convert(const CycNum& v, const CycCtx& to);

// Raise a vector to a multiple level: symbols embed, the theta exponent is
// kept (canonical extension), coefficients convert to the given conductor.
ModuleVec raise_level(const ModuleVec& v, unsigned target, const CycCtx& cyc);

// Distinguished vectors.
ModuleVec unit_vector(const ModuleSpec& spec, const CycCtx& cyc);
// eta: the B-semiinvariant unit - (0) of IndB(trivial), or the (0) basis
// vector of St
ModuleVec eta_vector(const ModuleSpec& spec, const CycCtx& cyc);
// generator attached to a label subset: the unit for empty J, eta for J = {s}
ModuleVec eta_j_vector(const ModuleSpec& spec, bool j_has_s, const CycCtx& cyc);
// the three-term element of IndNm attached to a nonzero z
ModuleVec lambda_vector(const ModuleSpec& spec, const FieldElem& z, const CycCtx& cyc);

}  // namespace sl2rep
