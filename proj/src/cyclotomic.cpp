#include "sl2rep/cyclotomic.hpp"

#include <atomic>
#include <memory>
#include <sstream>

namespace sl2rep {
namespace {

// Exact division of integer polynomials, divisor monic; remainder must vanish.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num,
                                   const std::vector<BigInt>& den) {
  int dn = (int)num.size() - 1;
  int dd = (int)den.size() - 1;
  SL2_CHECK(dd >= 0 && den[dd] == 1, "cyclotomic: divisor not monic");
  SL2_CHECK(dn >= dd, "cyclotomic: degree underflow");
  std::vector<BigInt> quot(dn - dd + 1);
  for (int i = dn - dd; i >= 0; --i) {
    BigInt c = num[i + dd];
    quot[i] = c;
    if (c != 0)
      for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
  }
  for (const BigInt& c : num) SL2_CHECK(c == 0, "cyclotomic: inexact division");
  return quot;
}

std::vector<BigInt> cyclo_poly(u64 n, std::map<u64, std::vector<BigInt>>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  std::vector<BigInt> f(n + 1);
  f[0] = -1;
  f[n] = 1;
  for (u64 d = 1; d < n; ++d)
    if (n % d == 0) f = poly_div_exact(std::move(f), cyclo_poly(d, memo));
  memo.emplace(n, f);
  return f;
}

std::mutex g_cyc_mu;
std::map<u64, std::unique_ptr<CycCtx>> g_cyc_registry;

// trimmed degree of a rational polynomial, -1 for zero
int rdeg(const std::vector<Rational>& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

}  // namespace

Root reduce_root(u64 order, i64 exp) {
  SL2_CHECK(order >= 1, "root: order must be positive");
  i64 m = exp % (i64)order;
  if (m < 0) m += (i64)order;
  if (m == 0) return Root{1, 0};
  u64 g = gcd_u64((u64)m, order);
  return Root{order / g, (u64)m / g};
}

const CycCtx& CycCtx::get(u64 N) {
  SL2_REQUIRE(N >= 1, "cyclotomic: conductor must be positive");
  std::lock_guard<std::mutex> lock(g_cyc_mu);
  auto it = g_cyc_registry.find(N);
  if (it != g_cyc_registry.end()) return *it->second;
  auto ctx = std::unique_ptr<CycCtx>(new CycCtx());
  ctx->N = N;
  std::map<u64, std::vector<BigInt>> memo;
  ctx->phi = cyclo_poly(N, memo);
  ctx->deg = (unsigned)(ctx->phi.size() - 1);
  ctx->phi_rat.reserve(ctx->phi.size());
  for (const BigInt& c : ctx->phi) ctx->phi_rat.emplace_back(c);
  ctx->pow_rows_.resize(N);
  ctx->pow_ready_.assign(N, 0);
  for (u64 j = 0; j < std::min<u64>(N, ctx->deg); ++j) {
    ctx->pow_rows_[j].assign(ctx->deg, Rational(0));
    ctx->pow_rows_[j][j] = 1;
    ctx->pow_ready_[j] = 1;
  }
  if (N <= 4096) ctx->build_row_chain(N - 1);
  const CycCtx& ref = *ctx;
  g_cyc_registry.emplace(N, std::move(ctx));
  return ref;
}

// Builds zeta^k rows sequentially: shift the previous row and fold the top
// coefficient through the monic cyclotomic relation.
void CycCtx::build_row_chain(u64 j) const {
  u64 k = deg - 1;
  while (k < j && pow_ready_[k + 1]) ++k;
  for (; k < j; ++k) {
    const std::vector<Rational>& prev = pow_rows_[k];
    std::vector<Rational> row(deg, Rational(0));
    Rational top = prev[deg - 1];
    for (unsigned i = deg - 1; i >= 1; --i) row[i] = prev[i - 1];
    if (top != 0)
      for (unsigned i = 0; i < deg; ++i) row[i] -= top * phi_rat[i];
    pow_rows_[k + 1] = std::move(row);
    std::atomic_ref<char>(pow_ready_[k + 1]).store(1, std::memory_order_release);
  }
}

const std::vector<Rational>& CycCtx::pow_row(u64 j) const {
  SL2_CHECK(j < N, "cyclotomic: power out of range");
  // double-checked: the ready flag is released after the row is written, so
  // a passing unlocked read may use the row without taking the mutex
  if (!std::atomic_ref<char>(pow_ready_[j]).load(std::memory_order_acquire)) {
    std::lock_guard<std::mutex> lock(pow_mu_);
    if (!std::atomic_ref<char>(pow_ready_[j]).load(std::memory_order_relaxed))
      build_row_chain(j);
  }
  return pow_rows_[j];
}

CycNum CycCtx::zero() const { return CycNum(this, std::vector<Rational>(deg, Rational(0))); }

CycNum CycCtx::one() const { return from_rational(Rational(1)); }

CycNum CycCtx::from_rational(const Rational& r) const {
  std::vector<Rational> c(deg, Rational(0));
  c[0] = r;
  return CycNum(this, std::move(c));
}

CycNum CycCtx::zeta_pow(u64 j) const { return CycNum(this, pow_row(j % N)); }

CycNum CycCtx::from_root(const Root& r) const {
  SL2_REQUIRE(N % r.order == 0, "cyclotomic: root order does not divide conductor");
  return zeta_pow(r.exp * (N / r.order));
}

bool CycNum::is_zero() const {
  for (const Rational& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycNum::rational_part() const {
  SL2_CHECK(is_rational(), "cyclotomic: value is not rational");
  return c_[0];
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r.add_in_place(o);
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r.sub_in_place(o);
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (Rational& x : r.c_) x = -x;
  return r;
}

void CycNum::add_in_place(const CycNum& o) {
  SL2_CHECK(ctx_ == o.ctx_, "cyclotomic: mixed conductors");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
}

void CycNum::sub_in_place(const CycNum& o) {
  SL2_CHECK(ctx_ == o.ctx_, "cyclotomic: mixed conductors");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
}

void CycNum::scale_in_place(const Rational& r) {
  for (Rational& x : c_) x *= r;
}

void CycNum::add_scaled_in_place(const CycNum& o, const Rational& r) {
  SL2_CHECK(ctx_ == o.ctx_, "cyclotomic: mixed conductors");
  if (r == 0) return;
  for (size_t i = 0; i < c_.size(); ++i)
    if (o.c_[i] != 0) c_[i] += r * o.c_[i];
}

CycNum CycNum::scaled(const Rational& r) const {
  CycNum out = *this;
  out.scale_in_place(r);
  return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
  SL2_CHECK(ctx_ == o.ctx_, "cyclotomic: mixed conductors");
  unsigned d = ctx_->deg;
  std::vector<Rational> t(2 * d, Rational(0));
  for (unsigned i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j)
      if (o.c_[j] != 0) t[i + j] += c_[i] * o.c_[j];
  }
  for (unsigned i = 2 * d - 1; i >= d; --i) {
    if (t[i] == 0) continue;
    Rational c = t[i];
    t[i] = 0;
    for (unsigned j = 0; j < d; ++j)
      if (ctx_->phi_rat[j] != 0) t[i - d + j] -= c * ctx_->phi_rat[j];
  }
  t.resize(d);
  return CycNum(ctx_, std::move(t));
}

CycNum CycNum::inv() const {
  SL2_REQUIRE(!is_zero(), "cyclotomic: inverse of zero");
  unsigned d = ctx_->deg;
  // extended euclid: the cyclotomic polynomial is irreducible over Q, so the
  // gcd with any nonzero residue is a constant
  std::vector<Rational> r0 = ctx_->phi_rat;
  std::vector<Rational> r1 = c_;
  std::vector<Rational> s0(1, Rational(0));
  std::vector<Rational> s1(1, Rational(1));
  while (rdeg(r1) > 0) {
    int d0 = rdeg(r0), d1 = rdeg(r1);
    std::vector<Rational> quot(std::max(d0 - d1 + 1, 1), Rational(0));
    std::vector<Rational> rem = r0;
    for (int i = d0 - d1; i >= 0; --i) {
      Rational c = rem[i + d1] / r1[d1];
      if (c == 0) continue;
      quot[i] = c;
      for (int j = 0; j <= d1; ++j) rem[i + j] -= c * r1[j];
    }
    std::vector<Rational> snew(std::max(s0.size(), s1.size() + quot.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= quot[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  SL2_CHECK(rdeg(r1) == 0, "cyclotomic: inverse failed");
  std::vector<Rational> out(d, Rational(0));
  for (size_t i = 0; i < s1.size() && i < (size_t)d; ++i) out[i] = s1[i] / r1[0];
  // s1 may formally exceed the basis degree only by cancelling terms
  for (size_t i = d; i < s1.size(); ++i)
    SL2_CHECK(s1[i] == 0, "cyclotomic: inverse degree overflow");
  return CycNum(ctx_, std::move(out));
}

CycNum CycNum::conj() const {
  CycNum out = ctx_->zero();
  for (unsigned j = 0; j < ctx_->deg; ++j) {
    if (c_[j] == 0) continue;
    u64 k = (ctx_->N - j) % ctx_->N;
    out.add_scaled_in_place(CycNum(ctx_, ctx_->pow_row(k)), c_[j]);
  }
  return out;
}

bool CycNum::operator==(const CycNum& o) const {
  SL2_CHECK(ctx_ == o.ctx_, "cyclotomic: mixed conductors");
  return c_ == o.c_;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned i = 0; i < ctx_->deg; ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycNum cyc_sum(const CycCtx& ctx, const std::vector<CycNum>& vals) {
  CycNum acc = ctx.zero();
  for (const CycNum& v : vals) acc.add_in_place(v);
  return acc;
}

}  // namespace sl2rep
