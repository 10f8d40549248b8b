#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "sl2rep/field.hpp"

using namespace sl2rep;

namespace {

// Exhaustive field axiom check over every pair (and triple products where
// cheap).  Sizes are kept small; this is the ground truth the dlog tables
// must reproduce.
void check_axioms(u64 q, unsigned n) {
  const FieldCtx& F = FieldCtx::get(q, n);
  REQUIRE(F.size >= 2);
  std::vector<FieldElem> all;
  for (u64 i = 0; i < F.size; ++i) all.push_back(F.elem_at(i));

  for (const auto& a : all) {
    CHECK(a + F.zero() == a);
    CHECK(a * F.one() == a);
    CHECK(a + (-a) == F.zero());
    if (!a.is_zero()) {
      CHECK(a * a.inv() == F.one());
      CHECK(a.pow((i64)F.mord) == F.one());
    }
  }
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      // Frobenius is additive and multiplicative
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  // associativity spot check on a generator-derived triple set
  for (u64 i = 0; i < F.size; ++i)
    for (u64 j = 0; j < F.size; ++j) {
      FieldElem a = F.elem_at(i), b = F.elem_at(j), c = F.elem_at((i * 7 + j) % F.size);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
}

u64 mul_order(const FieldElem& x) {
  u64 r = 1;
  FieldElem t = x;
  while (!t.is_one()) {
    t = t * x;
    ++r;
    REQUIRE(r <= x.ctx().mord);
  }
  return r;
}

}  // namespace

TEST_CASE("axioms hold for every field up to 64 elements") {
  check_axioms(2, 1);
  check_axioms(3, 1);
  check_axioms(4, 1);
  check_axioms(5, 1);
  check_axioms(7, 1);
  check_axioms(8, 1);
  check_axioms(9, 1);
  check_axioms(2, 2);
  check_axioms(2, 4);
  check_axioms(3, 2);
  check_axioms(4, 2);
  check_axioms(2, 6);
}

TEST_CASE("generator is primitive") {
  for (auto [q, n] : {std::pair<u64, unsigned>{3, 2}, {9, 1}, {2, 4}, {5, 2}}) {
    const FieldCtx& F = FieldCtx::get(q, n);
    CHECK(mul_order(F.gen()) == F.mord);
  }
}

TEST_CASE("nine-element field: generator order and canonical facts") {
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  CHECK(F9.mord == 8);
  CHECK(mul_order(F9.gen()) == 8);
  // -1 = g^4
  CHECK((-F9.one()).dlog() == 4);
  // the embedded copy of F_3 is {0, 1, g^4}
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  FieldElem two = -F3.one();
  CHECK(two.embed(F9).dlog() == 4);
}

TEST_CASE("embedding is a field homomorphism, exhaustively") {
  auto check_embed = [](u64 q, unsigned m, unsigned n) {
    const FieldCtx& S = FieldCtx::get(q, m);
    const FieldCtx& T = FieldCtx::get(q, n);
    for (u64 i = 0; i < S.size; ++i)
      for (u64 j = 0; j < S.size; ++j) {
        FieldElem a = S.elem_at(i), b = S.elem_at(j);
        CHECK((a + b).embed(T) == a.embed(T) + b.embed(T));
        CHECK((a * b).embed(T) == a.embed(T) * b.embed(T));
      }
    CHECK(S.one().embed(T) == T.one());
  };
  check_embed(2, 1, 2);
  check_embed(2, 2, 4);
  check_embed(3, 1, 2);
  check_embed(3, 2, 4);
  check_embed(4, 1, 2);
  check_embed(5, 1, 2);
  check_embed(9, 1, 2);
}

TEST_CASE("embedding triangles commute") {
  auto triangle = [](u64 q, unsigned a, unsigned b, unsigned c) {
    const FieldCtx& A = FieldCtx::get(q, a);
    const FieldCtx& B = FieldCtx::get(q, b);
    const FieldCtx& C = FieldCtx::get(q, c);
    for (u64 i = 0; i < A.size; ++i) {
      FieldElem x = A.elem_at(i);
      CHECK(x.embed(B).embed(C) == x.embed(C));
    }
  };
  triangle(2, 1, 2, 4);
  triangle(2, 1, 3, 6);
  triangle(3, 1, 2, 4);
  triangle(2, 2, 4, 8);
}

TEST_CASE("sublevel membership matches brute force") {
  const FieldCtx& F16 = FieldCtx::get(2, 4);
  const FieldCtx& F4 = FieldCtx::get(2, 2);
  std::set<i64> image;
  for (u64 i = 0; i < F4.size; ++i) image.insert(F4.elem_at(i).embed(F16).dlog());
  for (u64 i = 0; i < F16.size; ++i) {
    FieldElem x = F16.elem_at(i);
    CHECK(x.lies_in_sublevel(2) == (image.count(x.dlog()) > 0));
  }
}

TEST_CASE("square roots are canonical and correct") {
  // char 2: unique root, same level
  const FieldCtx& F8 = FieldCtx::get(8, 1);
  for (u64 i = 0; i < F8.size; ++i) {
    FieldElem x = F8.elem_at(i);
    FieldElem r = sqrt_canonical(x);
    CHECK(&r.ctx() == &F8);
    CHECK(r * r == x);
  }
  // odd char: even dlog stays, odd dlog moves to the quadratic extension
  const FieldCtx& F3 = FieldCtx::get(3, 1);
  FieldElem one = F3.one();
  CHECK(sqrt_canonical(one) == one);
  FieldElem two = -one;  // dlog 1
  CHECK(!sqrt_stays(two));
  FieldElem r = sqrt_canonical(two);
  const FieldCtx& F9 = FieldCtx::get(3, 2);
  CHECK(&r.ctx() == &F9);
  CHECK(r.dlog() == 2);
  CHECK(r * r == two.embed(F9));
  // canonical root is the one with the smaller dlog
  for (u64 i = 0; i < F9.size; ++i) {
    FieldElem x = F9.elem_at(i);
    if (x.is_zero() || x.dlog() % 2 != 0) continue;
    FieldElem s = sqrt_canonical(x);
    CHECK(s * s == x);
    CHECK(s.dlog() <= (-s).dlog());
  }
  // raising then rooting agrees with rooting then embedding
  for (u64 i = 1; i < F3.size; ++i) {
    FieldElem x = F3.elem_at(i);
    FieldElem r1 = sqrt_canonical(x.embed(F9));
    FieldElem r2 = sqrt_canonical(x);
    FieldElem r2e = (&r2.ctx() == &F9) ? r2 : r2.embed(F9);
    CHECK(r1 == r2e);
  }
}

TEST_CASE("construction is deterministic") {
  const FieldCtx& a = FieldCtx::get(5, 2);
  const FieldCtx& b = FieldCtx::get(5, 2);
  CHECK(&a == &b);
  CHECK(a.table_text() == b.table_text());
}

TEST_CASE("fp basis spans and has the right size") {
  for (auto [q, n] : {std::pair<u64, unsigned>{4, 2}, {9, 1}, {8, 1}, {3, 2}}) {
    const FieldCtx& F = FieldCtx::get(q, n);
    CHECK(F.fp_basis.size() == F.e * F.level);
    // distinct dlogs
    std::set<i64> uniq(F.fp_basis.begin(), F.fp_basis.end());
    CHECK(uniq.size() == F.fp_basis.size());
    // p * span checks done at build time; verify the first entry is 1
    CHECK(F.fp_basis[0] == 0);
  }
}

TEST_CASE("cache round trip") {
  namespace fs = std::filesystem;
  std::string dir = (fs::temp_directory_path() / "sl2rep_zech_test").string();
  fs::remove_all(dir);
  FieldCtx::set_cache_dir(dir);
  const FieldCtx& F = FieldCtx::get(7, 2);  // fresh (q, n) not used elsewhere
  std::string path = dir + "/zech_q7_n2.txt";
  REQUIRE(fs::exists(path));
  std::ifstream in(path);
  u64 q;
  unsigned n;
  int ver;
  in >> q >> n >> ver;
  CHECK(q == 7);
  CHECK(n == 2);
  CHECK(ver == 1);
  std::vector<i64> entries;
  i64 v;
  while (in >> v) entries.push_back(v);
  CHECK(entries.size() == F.mord);
  for (u64 k = 0; k < F.mord; ++k) CHECK(entries[k] == F.zech[k]);
  FieldCtx::set_cache_dir("");
}

TEST_CASE("oversized tables are rejected with a clear error") {
  CHECK_THROWS_AS(FieldCtx::get(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::get(6, 1), std::invalid_argument);  // not a prime power
  CHECK_THROWS_AS(FieldCtx::get(3, 0), std::invalid_argument);
}
