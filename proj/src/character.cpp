#include "sl2rep/character.hpp"

#include <sstream>

namespace sl2rep {

namespace {
u64 pow_u64(u64 b, unsigned e) {
  u64 r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}
}  // namespace

Character::Character(u64 q, unsigned level, i64 a) : q_(q), level_(level) {
  SL2_REQUIRE(level >= 1, "character: level must be positive");
  mord_ = pow_u64(q, level) - 1;
  a_ = a % (i64)mord_;
  if (a_ < 0) a_ += (i64)mord_;
}

Character Character::extend(unsigned d) const {
  SL2_REQUIRE(d % level_ == 0, "character: extension target not a multiple level");
  return Character(q_, d, a_);
}

Character Character::restrict(unsigned m) const {
  SL2_REQUIRE(level_ % m == 0, "character: restriction target not a divisor level");
  return Character(q_, m, a_);
}

Character Character::times(const Character& o) const {
  SL2_CHECK(q_ == o.q_ && level_ == o.level_, "character: mixed levels");
  return Character(q_, level_, a_ + o.a_);
}

Root Character::eval_root(const FieldElem& x) const {
  SL2_REQUIRE(!x.is_zero(), "character: evaluation at zero");
  unsigned xl = x.ctx().level;
  SL2_CHECK(x.ctx().q == q_, "character: mixed towers");
  if (xl % level_ == 0) {
    // canonical extension: same exponent at the element's level
    u64 m = x.ctx().mord;
    return reduce_root(m, (i64)(((__int128)a_ % (i64)m * x.dlog()) % (i64)m));
  }
  SL2_REQUIRE(level_ % xl == 0, "character: incomparable levels");
  const FieldCtx& up = FieldCtx::get(q_, level_);
  FieldElem y = x.embed(up);
  return reduce_root(mord_, (i64)(((__int128)a_ * y.dlog()) % (i64)mord_));
}

CycNum Character::eval(const CycCtx& ctx, const FieldElem& x) const {
  return ctx.from_root(eval_root(x));
}

std::string Character::str() const {
  std::ostringstream os;
  os << "chi[q=" << q_ << ",n=" << level_ << ",a=" << a_ << "]";
  return os.str();
}

}  // namespace sl2rep
