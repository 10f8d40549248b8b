#include "sl2rep/field.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace sl2rep {
namespace {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void split_prime_power(u64 q, u64& p, unsigned& e) {
  SL2_REQUIRE(q >= 2, "field: q must be at least 2");
  p = 0;
  for (u64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;  // q prime
  SL2_REQUIRE(is_prime_u64(p), "field: q is not a prime power");
  e = 0;
  u64 t = q;
  while (t > 1) {
    SL2_REQUIRE(t % p == 0, "field: q is not a prime power");
    t /= p;
    ++e;
  }
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p used only while building tables.  Fixed-length
// little-endian coefficient vectors of length d, reduced modulo the monic
// degree-d polynomial x^d + f_low.
struct PolyRing {
  u64 p = 0;
  unsigned d = 0;
  std::vector<u32> f_low;

  using Poly = std::vector<u32>;

  Poly zero() const { return Poly(d, 0); }
  Poly one() const {
    Poly r(d, 0);
    r[0] = 1;
    return r;
  }
  Poly x() const {
    Poly r(d, 0);
    if (d >= 2)
      r[1] = 1;
    else
      r[0] = f_low[0] ? (u32)(p - f_low[0]) : 0;  // x mod (x + c) = -c
    return r;
  }

  u64 code(const Poly& a) const {
    u64 c = 0;
    for (unsigned i = d; i-- > 0;) c = c * p + a[i];
    return c;
  }
  Poly from_code(u64 c) const {
    Poly r(d, 0);
    for (unsigned i = 0; i < d; ++i) {
      r[i] = (u32)(c % p);
      c /= p;
    }
    return r;
  }

  Poly add_one(Poly a) const {
    a[0] = (u32)((a[0] + 1) % p);
    return a;
  }

  bool is_zero(const Poly& a) const {
    for (u32 c : a)
      if (c) return false;
    return true;
  }

  Poly mulmod(const Poly& a, const Poly& b) const {
    std::vector<u64> t(2 * d, 0);
    for (unsigned i = 0; i < d; ++i) {
      if (!a[i]) continue;
      for (unsigned j = 0; j < d; ++j) t[i + j] += (u64)a[i] * b[j];
    }
    // fold x^(d+i) = -f_low * x^i, working top down
    for (unsigned i = 2 * d - 1; i >= d; --i) {
      u64 c = t[i] % p;
      if (!c) continue;
      u64 cneg = p - c;
      for (unsigned j = 0; j < d; ++j) t[i - d + j] += cneg * f_low[j];
      t[i] = 0;
    }
    Poly r(d, 0);
    for (unsigned i = 0; i < d; ++i) r[i] = (u32)(t[i] % p);
    return r;
  }

  Poly powmod(Poly a, u64 n) const {
    Poly r = one();
    while (n) {
      if (n & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      n >>= 1;
    }
    return r;
  }
};

// Variable-length polynomial remainder and gcd over F_p, for the
// irreducibility test only.
using VPoly = std::vector<u32>;

int vdeg(const VPoly& a) {
  for (int i = (int)a.size() - 1; i >= 0; --i)
    if (a[i]) return i;
  return -1;
}

VPoly vmod(VPoly a, const VPoly& b, u64 p) {
  int db = vdeg(b);
  SL2_CHECK(db >= 0, "vmod: division by zero polynomial");
  u64 binv = powmod_u64(b[db], p - 2, p);
  for (int da = vdeg(a); da >= db; da = vdeg(a)) {
    u64 c = (u64)a[da] * binv % p;
    if (c) {
      for (int j = 0; j <= db; ++j) {
        u64 v = (u64)a[da - db + j] + (p - c * b[j] % p);
        a[da - db + j] = (u32)(v % p);
      }
    }
    a[da] = 0;
  }
  return a;
}

VPoly vgcd(VPoly a, VPoly b, u64 p) {
  while (vdeg(b) >= 0) {
    VPoly r = vmod(a, b, p);
    a = b;
    b = r;
  }
  return a;
}

// Monic f = x^d + f_low irreducible over F_p?
bool irreducible(u64 p, unsigned d, const std::vector<u32>& f_low) {
  if (d == 1) return true;
  if (f_low[0] == 0) return false;  // divisible by x
  PolyRing ring{p, d, f_low};
  VPoly f(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) f[i] = f_low[i];
  f[d] = 1;
  std::vector<u64> rs = distinct_prime_factors(d);
  PolyRing::Poly t = ring.x();
  PolyRing::Poly xp = ring.x();
  for (unsigned k = 1; k <= d; ++k) {
    t = ring.powmod(t, p);  // now t = x^(p^k) mod f
    bool boundary = false;
    for (u64 r : rs) boundary |= (k == d / r);
    if (boundary) {
      VPoly h(d, 0);
      for (unsigned i = 0; i < d; ++i) {
        u64 v = (u64)t[i] + p - xp[i];
        h[i] = (u32)(v % p);
      }
      if (vdeg(vgcd(f, h, p)) != 0) return false;
    }
  }
  return t == xp;
}

std::string g_cache_dir;  // empty disables caching
std::mutex g_registry_mu;
std::map<std::pair<u64, unsigned>, std::unique_ptr<FieldCtx>> g_registry;

std::string cache_path(u64 q, unsigned level) {
  std::ostringstream os;
  os << g_cache_dir << "/zech_q" << q << "_n" << level << ".txt";
  return os.str();
}

// Shared post-construction steps: -1 position check, F_p-basis extraction,
// tower consistency against already built divisor levels.
bool finalize_tables(FieldCtx& c) {
  u64 M = c.mord;
  if (c.zech.size() != M) return false;
  for (i64 z : c.zech)
    if (z < kDlogZero || z >= (i64)M) return false;
  c.half = (c.p == 2) ? 0 : (i64)(M / 2);
  if (c.zech[(size_t)c.half] != kDlogZero) return false;
  for (u64 k = 0; k < M; ++k)
    if (c.zech[k] == kDlogZero && (i64)k != c.half) return false;

  // tower consistency: embedding by dlog scaling must match lower tables
  for (unsigned m = 1; m < c.level; ++m) {
    if (c.level % m) continue;
    auto it = g_registry.find({c.q, m});
    SL2_CHECK(it != g_registry.end(), "field: divisor level missing");
    const FieldCtx& s = *it->second;
    u64 d = M / s.mord;
    for (u64 k = 0; k < s.mord; ++k) {
      i64 z = s.zech[k];
      i64 want = (z == kDlogZero) ? kDlogZero : z * (i64)d;
      if (c.zech[k * d] != want) return false;
    }
  }

  // greedy F_p-basis using only the zech table
  unsigned dim = c.e * c.level;
  std::vector<char> in_span(c.size, 0);
  in_span[0] = 1;  // key 0 = zero
  std::vector<i64> span_elems{kDlogZero};
  span_elems.reserve(c.size);
  std::vector<i64> dlog_int(c.p, kDlogZero);  // dlog of the scalar j
  for (u64 j = 1; j < c.p; ++j)
    dlog_int[j] = (j == 1) ? 0 : c.add_dlog(dlog_int[j - 1], 0);
  c.fp_basis.clear();
  for (u64 cand = 0; cand < M && c.fp_basis.size() < dim; ++cand) {
    if (in_span[cand + 1]) continue;
    c.fp_basis.push_back((i64)cand);
    size_t snap = span_elems.size();
    for (u64 j = 1; j < c.p; ++j) {
      i64 mj = (i64)(((u64)cand + (u64)dlog_int[j]) % M);
      for (size_t si = 0; si < snap; ++si) {
        i64 t = c.add_dlog(span_elems[si], mj);
        u64 ky = (t == kDlogZero) ? 0 : (u64)t + 1;
        if (!in_span[ky]) {
          in_span[ky] = 1;
          span_elems.push_back(t);
        }
      }
    }
  }
  return c.fp_basis.size() == dim && span_elems.size() == c.size;
}

bool load_cached(FieldCtx& c) {
  if (g_cache_dir.empty()) return false;
  std::ifstream in(cache_path(c.q, c.level));
  if (!in) return false;
  u64 q = 0;
  unsigned level = 0;
  int version = 0;
  if (!(in >> q >> level >> version)) return false;
  if (q != c.q || level != c.level || version != 1) return false;
  c.zech.assign(c.mord, kDlogZero);
  for (u64 k = 0; k < c.mord; ++k)
    if (!(in >> c.zech[k])) return false;
  return finalize_tables(c);
}

void save_cache(const FieldCtx& c) {
  if (g_cache_dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(g_cache_dir, ec);
  std::ofstream out(cache_path(c.q, c.level), std::ios::trunc);
  if (!out) return;  // caching is best effort
  out << c.table_text();
}

void build_tables(FieldCtx& c) {
  unsigned d = c.e * c.level;
  u64 M = c.mord;

  // deterministic modulus: first monic irreducible of degree d in
  // coefficient-code order
  std::vector<u32> f_low;
  {
    u64 limit = 1;
    for (unsigned i = 0; i < d; ++i) limit *= c.p;
    bool found = false;
    for (u64 code = 0; code < limit; ++code) {
      PolyRing probe{c.p, d, {}};
      probe.f_low.assign(d, 0);
      u64 t = code;
      for (unsigned i = 0; i < d; ++i) {
        probe.f_low[i] = (u32)(t % c.p);
        t /= c.p;
      }
      if (irreducible(c.p, d, probe.f_low)) {
        f_low = probe.f_low;
        found = true;
        break;
      }
    }
    SL2_CHECK(found, "field: no irreducible modulus found");
  }
  PolyRing ring{c.p, d, f_low};

  // generator: smallest code that is primitive and embeds every proper
  // tower subfield additively
  std::vector<u64> mpf = distinct_prime_factors(M);
  std::vector<const FieldCtx*> subs;
  for (unsigned m = 1; m < c.level; ++m)
    if (c.level % m == 0) subs.push_back(g_registry.at({c.q, m}).get());

  PolyRing::Poly gen = ring.one();
  if (M > 1) {
    bool found = false;
    for (u64 code = 2; code < c.size; ++code) {
      PolyRing::Poly cand = ring.from_code(code);
      bool ok = true;
      for (u64 r : mpf)
        if (ring.code(ring.powmod(cand, M / r)) == 1) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (const FieldCtx* s : subs) {
        u64 dd = M / s->mord;
        PolyRing::Poly gd = ring.powmod(cand, dd);
        std::vector<PolyRing::Poly> pw(s->mord);
        pw[0] = ring.one();
        for (u64 k = 1; k < s->mord; ++k) pw[k] = ring.mulmod(pw[k - 1], gd);
        for (u64 k = 0; k < s->mord && ok; ++k) {
          PolyRing::Poly lhs = ring.add_one(pw[k]);
          i64 z = s->zech[k];
          if (z == kDlogZero)
            ok = ring.is_zero(lhs);
          else
            ok = (lhs == pw[(u64)z]);
        }
        if (!ok) break;
      }
      if (ok) {
        gen = cand;
        found = true;
        break;
      }
    }
    SL2_CHECK(found, "field: no tower-compatible generator found");
  }

  // exp table by codes, then log, then zech
  std::vector<u64> expcode(M);
  std::vector<i64> logt(c.size, kDlogZero);
  PolyRing::Poly cur = ring.one();
  for (u64 k = 0; k < M; ++k) {
    expcode[k] = ring.code(cur);
    SL2_CHECK(logt[expcode[k]] == kDlogZero, "field: generator order too small");
    logt[expcode[k]] = (i64)k;
    cur = ring.mulmod(cur, gen);
  }
  SL2_CHECK(ring.code(cur) == 1, "field: generator order mismatch");

  c.zech.assign(M, kDlogZero);
  for (u64 k = 0; k < M; ++k) {
    u64 code = expcode[k];
    u64 c0 = code % c.p;
    u64 bumped = code - c0 + (c0 + 1) % c.p;
    c.zech[k] = (bumped == 0) ? kDlogZero : logt[bumped];
  }
  SL2_CHECK(finalize_tables(c), "field: built tables failed validation");
}

}  // namespace

void FieldCtx::set_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lock(g_registry_mu);
  g_cache_dir = dir;
}

std::string FieldCtx::cache_dir() {
  std::lock_guard<std::mutex> lock(g_registry_mu);
  return g_cache_dir;
}

const FieldCtx& FieldCtx::get(u64 q, unsigned level) {
  SL2_REQUIRE(level >= 1, "field: level must be at least 1");
  std::lock_guard<std::mutex> lock(g_registry_mu);
  // build bottom-up so every divisor level exists before its multiples
  const FieldCtx* out = nullptr;
  for (unsigned m = 1; m <= level; ++m) {
    if (level % m) continue;
    auto key = std::make_pair(q, m);
    auto it = g_registry.find(key);
    if (it != g_registry.end()) {
      out = it->second.get();
      continue;
    }
    auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
    ctx->q = q;
    split_prime_power(q, ctx->p, ctx->e);
    ctx->level = m;
    u64 size = 1;
    for (unsigned i = 0; i < m; ++i) {
      SL2_REQUIRE(size <= kFieldTableLimit / q,
                  "field: q^n exceeds the table limit 2^20");
      size *= q;
    }
    ctx->size = size;
    ctx->mord = size - 1;
    // registry entry must exist before finalize_tables of higher levels runs,
    // and load/build below only consult strictly lower levels
    FieldCtx* raw = ctx.get();
    g_registry.emplace(key, std::move(ctx));
    if (!load_cached(*raw)) {
      build_tables(*raw);
      save_cache(*raw);
    }
    out = raw;
  }
  return *out;
}

i64 FieldCtx::add_dlog(i64 a, i64 b) const {
  if (a == kDlogZero) return b;
  if (b == kDlogZero) return a;
  u64 diff = (u64)(((b - a) % (i64)mord + (i64)mord) % (i64)mord);
  i64 z = zech[diff];
  if (z == kDlogZero) return kDlogZero;
  return (i64)(((u64)a + (u64)z) % mord);
}

i64 FieldCtx::neg_dlog(i64 a) const {
  if (a == kDlogZero) return a;
  return (i64)(((u64)a + (u64)half) % mord);
}

FieldElem FieldCtx::zero() const { return FieldElem(this, kDlogZero); }
FieldElem FieldCtx::one() const { return FieldElem(this, 0); }
FieldElem FieldCtx::gen() const {
  SL2_CHECK(mord >= 1, "field: no generator in F_2? impossible");
  return FieldElem(this, mord == 1 ? 0 : 1 % (i64)mord);
}

FieldElem FieldCtx::from_dlog(i64 k) const {
  if (k == kDlogZero) return zero();
  SL2_CHECK(k >= 0 && (u64)k < mord, "field: dlog out of range");
  return FieldElem(this, k);
}

FieldElem FieldCtx::elem_at(u64 index) const {
  SL2_CHECK(index < size, "field: enumeration index out of range");
  return index == 0 ? zero() : FieldElem(this, (i64)(index - 1));
}

std::string FieldCtx::table_text() const {
  std::ostringstream os;
  os << q << ' ' << level << " 1\n";
  for (u64 k = 0; k < mord; ++k) os << zech[k] << '\n';
  return os.str();
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  SL2_CHECK(ctx_ == o.ctx_, "field: mixed-level addition");
  return FieldElem(ctx_, ctx_->add_dlog(k_, o.k_));
}

FieldElem FieldElem::operator-() const {
  return FieldElem(ctx_, ctx_->neg_dlog(k_));
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  SL2_CHECK(ctx_ == o.ctx_, "field: mixed-level multiplication");
  if (k_ == kDlogZero || o.k_ == kDlogZero) return ctx_->zero();
  return FieldElem(ctx_, (i64)(((u64)k_ + (u64)o.k_) % ctx_->mord));
}

FieldElem FieldElem::inv() const {
  SL2_REQUIRE(k_ != kDlogZero, "field: inverse of zero");
  return FieldElem(ctx_, (i64)((ctx_->mord - (u64)k_) % ctx_->mord));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(i64 n) const {
  if (k_ == kDlogZero) {
    SL2_REQUIRE(n >= 0, "field: negative power of zero");
    return n == 0 ? ctx_->one() : ctx_->zero();
  }
  i64 m = (i64)ctx_->mord;
  i64 r = (i64)(((__int128)k_ * n) % m);
  if (r < 0) r += m;
  return FieldElem(ctx_, r);
}

FieldElem FieldElem::frobenius(unsigned i) const {
  if (k_ == kDlogZero) return *this;
  u64 f = powmod_u64(ctx_->q % ctx_->mord, i, ctx_->mord);
  return FieldElem(ctx_, (i64)((u64)k_ * f % ctx_->mord));
}

bool FieldElem::operator==(const FieldElem& o) const {
  SL2_CHECK(ctx_ == o.ctx_, "field: mixed-level comparison");
  return k_ == o.k_;
}

FieldElem FieldElem::embed(const FieldCtx& target) const {
  if (&target == ctx_) return *this;
  SL2_REQUIRE(target.q == ctx_->q && target.level % ctx_->level == 0,
              "field: no canonical embedding between these levels");
  if (k_ == kDlogZero) return target.zero();
  u64 d = target.mord / ctx_->mord;
  return FieldElem(&target, (i64)((u64)k_ * d));
}

bool FieldElem::lies_in_sublevel(unsigned m) const {
  SL2_REQUIRE(m >= 1 && ctx_->level % m == 0, "field: not a divisor level");
  if (k_ == kDlogZero) return true;
  u64 sub_mord = 1;
  for (unsigned i = 0; i < m; ++i) sub_mord *= ctx_->q;
  sub_mord -= 1;
  u64 d = ctx_->mord / sub_mord;
  return (u64)k_ % d == 0;
}

std::string FieldElem::str() const {
  if (k_ == kDlogZero) return "0";
  if (k_ == 0) return "1";
  if (k_ == 1) return "g";
  return "g^" + std::to_string(k_);
}

FieldElem sqrt_canonical(const FieldElem& x) {
  const FieldCtx& c = x.ctx();
  if (x.is_zero()) return x;
  if (c.p == 2) {
    // squaring is bijective; the root is x^(2^(d-1)) with 2^d = |F|
    unsigned d = c.e * c.level;
    u64 f = powmod_u64(2, d - 1, c.mord);
    return c.from_dlog((i64)((u64)x.dlog() * f % c.mord));
  }
  i64 k = x.dlog();
  if (k % 2 == 0) return c.from_dlog(k / 2);
  // odd dlog: the root generates the quadratic extension
  const FieldCtx& c2 = FieldCtx::get(c.q, 2 * c.level);
  u64 kk = (u64)k * (c.size + 1);  // dlog of the embedded element
  return c2.from_dlog((i64)(kk / 2));
}

bool sqrt_stays(const FieldElem& x) {
  return x.is_zero() || x.ctx().p == 2 || x.dlog() % 2 == 0;
}

}  // namespace sl2rep
