#pragma once

#include "sl2rep/cyclotomic.hpp"
#include "sl2rep/field.hpp"

namespace sl2rep {

// Multiplicative character of F_{q^level}^*, determined by its value on the
// fixed generator: g |-> zeta_{q^level-1}^a.  The exponent is stored reduced.
// Extension to a higher tower level keeps the same integer exponent, which is
// exactly restriction-compatibility along the canonical embeddings.
class Character {
 public:
  Character(u64 q, unsigned level, i64 a);

  static Character trivial(u64 q, unsigned level) { return Character(q, level, 0); }

  u64 q() const { return q_; }
  unsigned level() const { return level_; }
  i64 exponent() const { return a_; }
  u64 mord() const { return mord_; }

  bool is_trivial() const { return a_ == 0; }
  // conjugate by the nontrivial Weyl element: exponent negates
  Character weyl() const { return Character(q_, level_, -(i64)a_); }
  // true when the character equals its Weyl conjugate, i.e. the stabilizer
  // set contains the reflection
  bool weyl_fixed() const { return weyl().a_ == a_; }

  Character extend(unsigned d) const;    // level | d
  Character restrict(unsigned m) const;  // m | level
  Character inverse() const { return weyl(); }
  Character times(const Character& o) const;

  // value on a nonzero x whose level is a multiple or divisor of level()
  Root eval_root(const FieldElem& x) const;
  CycNum eval(const CycCtx& ctx, const FieldElem& x) const;

  bool operator==(const Character& o) const {
    return q_ == o.q_ && level_ == o.level_ && a_ == o.a_;
  }
  bool operator!=(const Character& o) const { return !(*this == o); }

  std::string str() const;

 private:
  u64 q_;
  unsigned level_;
  i64 a_;  // in [0, mord)
  u64 mord_;
};

// Highest-weight label: a character of the torus together with the subset of
// the rank-one simple reflection set fixing extra structure; J is either
// empty or the full singleton.
struct HwLabel {
  Character theta;
  bool j_has_s = false;

  bool operator==(const HwLabel& o) const {
    return theta == o.theta && j_has_s == o.j_has_s;
  }
};

// Partial order: labels compare only within the same character, and a larger
// reflection set means a smaller label.
inline bool hw_le(const HwLabel& a, const HwLabel& b) {
  return a.theta == b.theta && (!b.j_has_s || a.j_has_s);
}

}  // namespace sl2rep
