#include "sl2rep/group.hpp"

#include <sstream>

namespace sl2rep {

Mat2 Mat2::identity(const FieldCtx& F) {
  return Mat2{F.one(), F.zero(), F.zero(), F.one()};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
              c * o.a + d * o.c, c * o.b + d * o.d};
}

FieldElem Mat2::det() const { return a * d - b * c; }

Mat2 Mat2::inverse() const {
  SL2_CHECK(det().is_one(), "matrix: inverse requires det 1");
  return Mat2{d, -b, -c, a};
}

bool Mat2::operator==(const Mat2& o) const {
  return a == o.a && b == o.b && c == o.c && d == o.d;
}

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

GroupElem GroupElem::identity(const FieldCtx& F) {
  return GroupElem(&F, false, F.zero(), F.one(), F.zero());
}

GroupElem GroupElem::eps(const FieldElem& x) {
  const FieldCtx& F = x.ctx();
  return GroupElem(&F, false, x, F.one(), F.zero());
}

GroupElem GroupElem::h(const FieldElem& c) {
  SL2_REQUIRE(!c.is_zero(), "group: torus parameter must be nonzero");
  const FieldCtx& F = c.ctx();
  return GroupElem(&F, false, F.zero(), c, F.zero());
}

GroupElem GroupElem::sdot(const FieldCtx& F) {
  return GroupElem(&F, true, F.zero(), F.one(), F.zero());
}

GroupElem GroupElem::lower(const FieldElem& u, const FieldElem& c) {
  SL2_REQUIRE(!c.is_zero(), "group: torus parameter must be nonzero");
  return GroupElem(&u.ctx(), false, u, c, u.ctx().zero());
}

GroupElem GroupElem::big(const FieldElem& y, const FieldElem& m, const FieldElem& z) {
  SL2_REQUIRE(!m.is_zero(), "group: torus parameter must be nonzero");
  return GroupElem(&y.ctx(), true, y, m, z);
}

// Normal-form product.  Every case is a consequence of the three rewriting
// moves h(c)eps(u) = eps(c^2 u)h(c), h(c)s = s h(c^-1), and, for w != 0,
// s eps(w) s = eps(-w^-1) s h(-w) eps(-w^-1).
GroupElem GroupElem::operator*(const GroupElem& o) const {
  SL2_CHECK(F_ == o.F_, "group: mixed levels");
  const FieldCtx& F = *F_;
  if (!big_ && !o.big_) {
    // eps(u1)h(c1) eps(u2)h(c2) = eps(u1 + c1^2 u2) h(c1 c2)
    return GroupElem(&F, false, p1_ + p2_ * p2_ * o.p1_, p2_ * o.p2_, F.zero());
  }
  if (!big_ && o.big_) {
    // eps(u)h(c) eps(y)s h(m)eps(z) = eps(u + c^2 y) s h(c^-1 m) eps(z)
    return GroupElem(&F, true, p1_ + p2_ * p2_ * o.p1_, p2_.inv() * o.p2_, o.p3_);
  }
  if (big_ && !o.big_) {
    // eps(y)s h(m)eps(z) eps(u)h(c) = eps(y) s h(mc) eps(c^-2 (z + u))
    FieldElem ci = o.p2_.inv();
    return GroupElem(&F, true, p1_, p2_ * o.p2_, ci * ci * (p3_ + o.p1_));
  }
  // both big: the middle eps(z1 + y2) collapses or regenerates a big cell
  FieldElem w = p3_ + o.p1_;
  if (w.is_zero()) {
    // eps(y1) s h(m1) s h(m2) eps(z2) = eps(y1) h(-m1^-1 m2) eps(z2)
    FieldElem d = -(p2_.inv() * o.p2_);
    return GroupElem(&F, false, p1_ + d * d * o.p3_, d, F.zero());
  }
  FieldElem v = p2_ * p2_ * w;       // m1^2 (z1 + y2)
  FieldElem e = p2_.inv() * o.p2_;   // m1^-1 m2
  FieldElem vi = v.inv();
  return GroupElem(&F, true, p1_ - vi, -(v * e), o.p3_ - e.inv() * e.inv() * vi);
}

GroupElem GroupElem::inverse() const {
  const FieldCtx& F = *F_;
  if (!big_) {
    FieldElem ci = p2_.inv();
    return GroupElem(&F, false, -(ci * ci * p1_), ci, F.zero());
  }
  return GroupElem(&F, true, -p3_, -p2_, -p1_);
}

bool GroupElem::operator==(const GroupElem& o) const {
  SL2_CHECK(F_ == o.F_, "group: mixed levels");
  return big_ == o.big_ && p1_ == o.p1_ && p2_ == o.p2_ && p3_ == o.p3_;
}

Mat2 GroupElem::to_matrix() const {
  const FieldCtx& F = *F_;
  if (!big_) {
    // [[c, u c^-1], [0, c^-1]]
    FieldElem ci = p2_.inv();
    return Mat2{p2_, p1_ * ci, F.zero(), ci};
  }
  // [[-ym, -ymz + m^-1], [-m, -mz]]
  FieldElem ym = p1_ * p2_;
  return Mat2{-ym, -(ym * p3_) + p2_.inv(), -p2_, -(p2_ * p3_)};
}

GroupElem GroupElem::from_matrix(const Mat2& mat) {
  SL2_REQUIRE(mat.det().is_one(), "group: matrix must have det 1");
  const FieldCtx& F = mat.a.ctx();
  if (mat.c.is_zero()) return GroupElem(&F, false, mat.a * mat.b, mat.a, F.zero());
  FieldElem ci = mat.c.inv();
  return GroupElem(&F, true, mat.a * ci, -mat.c, mat.d * ci);
}

GroupElem GroupElem::embed(const FieldCtx& target) const {
  return GroupElem(&target, big_, p1_.embed(target), p2_.embed(target),
                   p3_.embed(target));
}

std::string GroupElem::str() const {
  std::ostringstream os;
  if (!big_) {
    os << "eps(" << p1_.str() << ")h(" << p2_.str() << ")";
  } else {
    os << "eps(" << p1_.str() << ")s.h(" << p2_.str() << ")eps(" << p3_.str() << ")";
  }
  return os.str();
}

u64 GroupElem::order(const FieldCtx& F) { return F.size * (F.size * F.size - 1); }

GroupElem GroupElem::at(const FieldCtx& F, u64 index) {
  u64 lower_count = F.size * F.mord;
  if (index < lower_count) {
    u64 ui = index / F.mord;
    u64 ci = index % F.mord;
    return GroupElem(&F, false, F.elem_at(ui), F.from_dlog((i64)ci), F.zero());
  }
  index -= lower_count;
  SL2_CHECK(index < F.size * F.mord * F.size, "group: index out of range");
  u64 zi = index % F.size;
  index /= F.size;
  u64 mi = index % F.mord;
  u64 yi = index / F.mord;
  return GroupElem(&F, true, F.elem_at(yi), F.from_dlog((i64)mi), F.elem_at(zi));
}

u64 subgroup_order(Subgroup s, const FieldCtx& F) {
  switch (s) {
    case Subgroup::U: return F.size;
    case Subgroup::UStar: return F.mord;
    case Subgroup::T: return F.mord;
    case Subgroup::N: return 2 * F.mord;
    case Subgroup::Full: return GroupElem::order(F);
  }
  SL2_CHECK(false, "group: bad subgroup tag");
  return 0;
}

GroupElem subgroup_at(Subgroup s, const FieldCtx& F, u64 index) {
  switch (s) {
    case Subgroup::U:
      return GroupElem::eps(F.elem_at(index));
    case Subgroup::UStar:
      return GroupElem::eps(F.elem_at(index + 1));
    case Subgroup::T:
      return GroupElem::h(F.from_dlog((i64)index));
    case Subgroup::N:
      if (index < F.mord) return GroupElem::h(F.from_dlog((i64)index));
      return GroupElem::sdot(F) * GroupElem::h(F.from_dlog((i64)(index - F.mord)));
    case Subgroup::Full:
      return GroupElem::at(F, index);
  }
  SL2_CHECK(false, "group: bad subgroup tag");
  return GroupElem::identity(F);
}

std::vector<GroupElem> enumerate_subgroup(Subgroup s, const FieldCtx& F) {
  u64 n = subgroup_order(s, F);
  std::vector<GroupElem> out;
  out.reserve(n);
  for (u64 i = 0; i < n; ++i) out.push_back(subgroup_at(s, F, i));
  return out;
}

std::vector<TorusSection> enumerate_torus_section(const FieldCtx& F) {
  std::vector<TorusSection> out;
  out.reserve(F.mord);
  for (u64 k = 0; k < F.mord; ++k) {
    FieldElem t = F.from_dlog((i64)k);
    out.push_back(TorusSection{t, sqrt_canonical(t)});
  }
  return out;
}

}  // namespace sl2rep
