#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2rep/character.hpp"
#include "sl2rep/cyclotomic.hpp"

using namespace sl2rep;

TEST_CASE("cyclotomic polynomials match known tables") {
  auto coeffs = [](u64 n) {
    const CycCtx& c = CycCtx::get(n);
    std::vector<long> out;
    for (const BigInt& b : c.phi) out.push_back((long)b);
    return out;
  };
  CHECK(coeffs(1) == std::vector<long>{-1, 1});
  CHECK(coeffs(2) == std::vector<long>{1, 1});
  CHECK(coeffs(3) == std::vector<long>{1, 1, 1});
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(coeffs(15) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
  // phi(105) has a -2 coefficient; classic stress case
  const CycCtx& c105 = CycCtx::get(105);
  CHECK(c105.deg == 48);
  bool has_minus_two = false;
  for (const BigInt& b : c105.phi) has_minus_two |= (b == -2);
  CHECK(has_minus_two);
}

TEST_CASE("roots of unity obey the defining relations") {
  for (u64 N : {1ull, 2ull, 3ull, 8ull, 12ull, 15ull, 24ull, 80ull}) {
    const CycCtx& C = CycCtx::get(N);
    CycNum z = C.zeta_pow(1);
    // z^N = 1 and partial geometric sums vanish
    CycNum p = C.one();
    CycNum sum = C.zero();
    for (u64 k = 0; k < N; ++k) {
      CHECK(p == C.zeta_pow(k));
      sum.add_in_place(p);
      p = p * z;
    }
    CHECK(p == C.one());
    if (N > 1) CHECK(sum.is_zero());
    else CHECK(sum == C.one());
  }
}

TEST_CASE("field arithmetic: inverses and conjugation") {
  const CycCtx& C = CycCtx::get(24);
  Rng rng(7);
  for (int t = 0; t < 25; ++t) {
    CycNum x = C.zero();
    for (int j = 0; j < 4; ++j)
      x.add_in_place(C.zeta_pow(rng.below(24)).scaled(Rational((long)rng.below(9)) - 4));
    if (x.is_zero()) continue;
    CHECK(x * x.inv() == C.one());
    // conjugation is an automorphism and fixes rationals
    CycNum y = C.zeta_pow(rng.below(24));
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
  }
  CHECK(C.from_rational(Rational(5, 3)).conj() == C.from_rational(Rational(5, 3)));
  // z * conj(z) = 1 for a root of unity
  CycNum z = C.zeta_pow(7);
  CHECK(z * z.conj() == C.one());
}

TEST_CASE("root reduction is canonical") {
  CHECK(reduce_root(12, 0) == Root{1, 0});
  CHECK(reduce_root(12, 4) == Root{3, 1});
  CHECK(reduce_root(12, -4) == Root{3, 2});
  CHECK(reduce_root(12, 6) == Root{2, 1});
  CHECK(reduce_root(12, 25) == Root{12, 1});
  // materializing through different conductors agrees
  const CycCtx& C = CycCtx::get(24);
  CHECK(C.from_root(reduce_root(8, 2)) == C.zeta_pow(6));
}

TEST_CASE("character evaluation is multiplicative and extension-compatible") {
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  const CycCtx& C = CycCtx::get(8);
  Character th(3, 2, 3);
  for (u64 i = 1; i < F9.size; ++i)
    for (u64 j = 1; j < F9.size; ++j) {
      FieldElem a = F9.elem_at(i), b = F9.elem_at(j);
      CHECK(th.eval(C, a * b) == th.eval(C, a) * th.eval(C, b));
    }
  // weyl conjugate inverts values
  Character tw = th.weyl();
  for (u64 i = 1; i < F9.size; ++i) {
    FieldElem a = F9.elem_at(i);
    CHECK(th.eval(C, a) * tw.eval(C, a) == C.one());
  }
  // canonical extension restricts back to the original on the subfield
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  Character lo(3, 1, 1);
  Character hi = lo.extend(2);
  const CycCtx& C8 = CycCtx::get(8);
  for (u64 i = 1; i < F3.size; ++i) {
    FieldElem x = F3.elem_at(i);
    CHECK(lo.eval(C8, x) == hi.eval(C8, x.embed(F9)));
  }
  CHECK(hi.restrict(1) == lo);
}

TEST_CASE("weyl-fixed characters are exactly the trivial one per level") {
  int fixed = 0;
  for (i64 a = 0; a < 8; ++a) {
    Character th(3, 2, a);
    if (th.weyl_fixed()) ++fixed;
  }
  // exponents 0 and 4 satisfy -a = a mod 8
  CHECK(fixed == 2);
  CHECK(Character(3, 2, 0).weyl_fixed());
  CHECK(Character(3, 2, 4).weyl_fixed());
  CHECK(Character(3, 2, 0).is_trivial());
  CHECK(!Character(3, 2, 4).is_trivial());
}

TEST_CASE("hw label order") {
  Character tr = Character::trivial(3, 1);
  Character th(3, 1, 1);
  HwLabel top{tr, false}, bot{tr, true}, other{th, false};
  CHECK(hw_le(bot, top));
  CHECK(!hw_le(top, bot));
  CHECK(hw_le(top, top));
  CHECK(!hw_le(other, top));
  CHECK(!hw_le(top, other));
}
