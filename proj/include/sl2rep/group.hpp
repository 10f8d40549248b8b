#pragma once

#include <array>
#include <string>
#include <vector>

#include "sl2rep/field.hpp"

namespace sl2rep {

// 2x2 matrix over one field level; the independent oracle the symbolic
// product rules are checked against.
struct Mat2 {
  FieldElem a, b, c, d;

  static Mat2 identity(const FieldCtx& F);
  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;  // requires det 1
  FieldElem det() const;
  bool operator==(const Mat2& o) const;
  std::string str() const;
};

// Group element of SL2 over F_{q^level} in Bruhat normal form.
//
//   lower cell:  eps(u) h(c)            (upper triangular)
//   big cell:    eps(y) s h(m) eps(z)   with s = [[0,1],[-1,0]]
//
// Products and inverses are computed by rewriting in this normal form only;
// to_matrix/from_matrix exist for the oracle and for IO.
class GroupElem {
 public:
  static GroupElem identity(const FieldCtx& F);
  static GroupElem eps(const FieldElem& x);            // unipotent
  static GroupElem h(const FieldElem& c);              // torus, c nonzero
  static GroupElem sdot(const FieldCtx& F);            // the Weyl representative
  static GroupElem lower(const FieldElem& u, const FieldElem& c);
  static GroupElem big(const FieldElem& y, const FieldElem& m, const FieldElem& z);

  bool is_big() const { return big_; }
  const FieldCtx& field() const { return *F_; }
  // lower-cell parameters
  FieldElem u() const { return p1_; }
  FieldElem c() const { return p2_; }
  // big-cell parameters
  FieldElem y() const { return p1_; }
  FieldElem m() const { return p2_; }
  FieldElem z() const { return p3_; }

  GroupElem operator*(const GroupElem& o) const;
  GroupElem inverse() const;
  bool operator==(const GroupElem& o) const;
  bool operator!=(const GroupElem& o) const { return !(*this == o); }

  Mat2 to_matrix() const;
  static GroupElem from_matrix(const Mat2& m);

  // image under the canonical field embedding
  GroupElem embed(const FieldCtx& target) const;

  std::string str() const;

  // Canonical enumeration of the whole group: all lower cells first
  // (u outer, c inner), then big cells (y, then m, then z).
  static u64 order(const FieldCtx& F);
  static GroupElem at(const FieldCtx& F, u64 index);

 private:
  GroupElem(const FieldCtx* F, bool big, FieldElem a, FieldElem b, FieldElem c)
      : F_(F), big_(big), p1_(a), p2_(b), p3_(c) {}
  const FieldCtx* F_ = nullptr;
  bool big_ = false;
  FieldElem p1_, p2_, p3_;
};

enum class Subgroup { U, UStar, T, N, Full };

// Elements in a fixed documented order:
//   U: eps(u) along the field enumeration; UStar skips u = 0
//   T: h(g^0), h(g^1), ...
//   N: all of T, then sdot * h(c) in the same torus order
//   Full: the GroupElem::at order
std::vector<GroupElem> enumerate_subgroup(Subgroup s, const FieldCtx& F);
u64 subgroup_order(Subgroup s, const FieldCtx& F);
GroupElem subgroup_at(Subgroup s, const FieldCtx& F, u64 index);

// The split-torus section over the squaring map: for every nonzero t at the
// base level, the element h(c) with c = sqrt_canonical(t).  For odd q the
// root may generate the quadratic extension, so the pair keeps both.
struct TorusSection {
  FieldElem t;  // base level, nonzero
  FieldElem c;  // c*c = t embedded wherever c lives
};
std::vector<TorusSection> enumerate_torus_section(const FieldCtx& F);

}  // namespace sl2rep
