#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "sl2rep/group.hpp"

using namespace sl2rep;

namespace {

void oracle_exhaustive(u64 q, unsigned n) {
  const FieldCtx& F = FieldCtx::get(q, n);
  u64 N = GroupElem::order(F);
  for (u64 i = 0; i < N; ++i) {
    GroupElem a = GroupElem::at(F, i);
    REQUIRE(a.to_matrix().det().is_one());
    REQUIRE(GroupElem::from_matrix(a.to_matrix()) == a);
    REQUIRE(a * a.inverse() == GroupElem::identity(F));
    REQUIRE(a.inverse() * a == GroupElem::identity(F));
  }
  for (u64 i = 0; i < N; ++i) {
    GroupElem a = GroupElem::at(F, i);
    Mat2 ma = a.to_matrix();
    for (u64 j = 0; j < N; ++j) {
      GroupElem b = GroupElem::at(F, j);
      REQUIRE((a * b).to_matrix() == ma * b.to_matrix());
    }
  }
}

}  // namespace

TEST_CASE("normal-form products match the matrix oracle exhaustively") {
  oracle_exhaustive(2, 1);
  oracle_exhaustive(3, 1);
  oracle_exhaustive(4, 1);
}

TEST_CASE("normal-form products match the matrix oracle, sampled") {
  for (auto [q, n] : {std::pair<u64, unsigned>{5, 1}, {8, 1}, {9, 1}, {3, 2}}) {
    const FieldCtx& F = FieldCtx::get(q, n);
    u64 N = GroupElem::order(F);
    Rng rng(q * 1000 + n);
    for (int t = 0; t < 3000; ++t) {
      GroupElem a = GroupElem::at(F, rng.below(N));
      GroupElem b = GroupElem::at(F, rng.below(N));
      REQUIRE((a * b).to_matrix() == a.to_matrix() * b.to_matrix());
    }
  }
}

TEST_CASE("the canonical rewrite example over the three-element field") {
  const FieldCtx& F = FieldCtx::get(3, 1);
  GroupElem s = GroupElem::sdot(F);
  GroupElem res = s * GroupElem::eps(F.one()) * s;
  FieldElem two = -F.one();
  CHECK(res == GroupElem::big(two, two, two));
}

TEST_CASE("generator relations") {
  for (auto [q, n] : {std::pair<u64, unsigned>{3, 1}, {4, 1}, {5, 1}, {9, 1}}) {
    const FieldCtx& F = FieldCtx::get(q, n);
    GroupElem s = GroupElem::sdot(F);
    // s^2 = h(-1), s^-1 = eps(0) s h(-1) eps(0)
    CHECK(s * s == GroupElem::h(-F.one()));
    CHECK(s.inverse() == GroupElem::big(F.zero(), -F.one(), F.zero()));
    // eps is additive, h multiplicative
    for (u64 i = 0; i < F.size; ++i)
      for (u64 j = 0; j < F.size; ++j) {
        FieldElem a = F.elem_at(i), b = F.elem_at(j);
        CHECK(GroupElem::eps(a) * GroupElem::eps(b) == GroupElem::eps(a + b));
        if (!a.is_zero() && !b.is_zero())
          CHECK(GroupElem::h(a) * GroupElem::h(b) == GroupElem::h(a * b));
      }
    // torus conjugation scales the unipotent parameter by c^2
    for (u64 k = 0; k < F.mord; ++k)
      for (u64 i = 0; i < F.size; ++i) {
        FieldElem c = F.from_dlog((i64)k), u = F.elem_at(i);
        CHECK(GroupElem::h(c) * GroupElem::eps(u) * GroupElem::h(c).inverse() ==
              GroupElem::eps(c * c * u));
      }
  }
}

TEST_CASE("enumeration is bijective and subgroups are closed") {
  const FieldCtx& F = FieldCtx::get(3, 1);
  u64 N = GroupElem::order(F);
  CHECK(N == 24);
  std::set<std::string> seen;
  for (u64 i = 0; i < N; ++i) seen.insert(GroupElem::at(F, i).str());
  CHECK(seen.size() == N);

  for (Subgroup s : {Subgroup::U, Subgroup::UStar, Subgroup::T, Subgroup::N}) {
    auto elems = enumerate_subgroup(s, F);
    CHECK(elems.size() == subgroup_order(s, F));
    if (s == Subgroup::UStar) continue;  // not a subgroup, just a subset
    for (const GroupElem& a : elems)
      for (const GroupElem& b : elems) {
        GroupElem ab = a * b;
        bool found = false;
        for (const GroupElem& c : elems) found |= (c == ab);
        CHECK(found);
      }
  }
  CHECK(subgroup_order(Subgroup::U, F) == 3);
  CHECK(subgroup_order(Subgroup::UStar, F) == 2);
  CHECK(subgroup_order(Subgroup::T, F) == 2);
  CHECK(subgroup_order(Subgroup::N, F) == 4);
}

TEST_CASE("torus section squares to the base point") {
  // odd characteristic: roots may live one level up
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  auto sec3 = enumerate_torus_section(F3);
  CHECK(sec3.size() == 2);
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  for (const auto& d : sec3) {
    const FieldCtx& L = d.c.ctx();
    CHECK((L.level == 1 || L.level == 2));
    CHECK(d.c * d.c == d.t.embed(L));
  }
  // at least one section point needs the extension
  bool lifted = false;
  for (const auto& d : sec3) lifted |= (&d.c.ctx() == &F9);
  CHECK(lifted);
  // characteristic 2: squaring is bijective, everything stays at the base
  const FieldCtx& F4 = FieldCtx::get(4, 1);
  for (const auto& d : enumerate_torus_section(F4)) {
    CHECK(&d.c.ctx() == &F4);
    CHECK(d.c * d.c == d.t);
  }
}

TEST_CASE("embedding group elements is a homomorphism") {
  const FieldCtx& F = FieldCtx::get(3, 1);
  const FieldCtx& E = FieldCtx::get(3, 2);
  u64 N = GroupElem::order(F);
  for (u64 i = 0; i < N; ++i)
    for (u64 j = 0; j < N; ++j) {
      GroupElem a = GroupElem::at(F, i), b = GroupElem::at(F, j);
      CHECK((a * b).embed(E) == a.embed(E) * b.embed(E));
    }
}
