#pragma once

#include <string>
#include <vector>

#include "sl2rep/common.hpp"

namespace sl2rep {

// Largest table-backed field size; requests beyond this fail with a clear error.
inline constexpr u64 kFieldTableLimit = 1ull << 20;

// Sentinel discrete log standing for the zero element.
inline constexpr i64 kDlogZero = -1;

class FieldElem;

// Immutable context for the field with q^level elements, q a prime power.
//
// Elements are stored by discrete log with respect to a fixed generator g.
// Addition uses the table zech[k] = dlog(1 + g^k), with kDlogZero marking
// 1 + g^k = 0.  Generators are chosen deterministically: the candidate with
// the smallest polynomial code (coefficients of the representation read as a
// base-p integer) that is primitive and whose powers embed every proper
// subfield F_{q^m} of the tower additively, i.e. the dlog-scaling map
// g_m^k -> g_n^{k(q^n-1)/(q^m-1)} is a field homomorphism.  This makes
// embeddings between levels pure index arithmetic.
class FieldCtx {
 public:
  u64 q = 0;        // tower base, prime power
  u64 p = 0;        // characteristic
  unsigned e = 0;   // q = p^e
  unsigned level = 0;
  u64 size = 0;     // q^level
  u64 mord = 0;     // q^level - 1
  i64 half = 0;     // dlog of -1 (mord/2 for odd p, 0 in characteristic 2)
  std::vector<i64> zech;      // size mord
  std::vector<i64> fp_basis;  // dlogs of an F_p-basis, e*level entries

  // Interned per (q, level); builds and validates all divisor levels first.
  static const FieldCtx& get(u64 q, unsigned level);

  // Directory for Zech table caching; empty string disables caching.
  static void set_cache_dir(const std::string& dir);
  static std::string cache_dir();

  // dlog-level addition: returns dlog of g^a + g^b (kDlogZero allowed/returned).
  i64 add_dlog(i64 a, i64 b) const;
  i64 neg_dlog(i64 a) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem gen() const;           // the fixed generator g
  FieldElem from_dlog(i64 k) const;
  // Canonical enumeration: index 0 is zero, index i >= 1 is g^{i-1}.
  FieldElem elem_at(u64 index) const;

  std::string table_text() const;  // cache file payload

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx() = default;
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, i64 k) : ctx_(ctx), k_(k) {}

  const FieldCtx& ctx() const { return *ctx_; }
  i64 dlog() const { return k_; }
  bool is_zero() const { return k_ == kDlogZero; }
  bool is_one() const { return k_ == 0; }
  // Total order key: 0 for zero, dlog+1 otherwise.  Used for canonical
  // symbol ordering in module bases.
  u64 key() const { return k_ == kDlogZero ? 0 : (u64)k_ + 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem inv() const;
  FieldElem pow(i64 n) const;
  // x -> x^(q^i), the level-i power of the tower Frobenius.
  FieldElem frobenius(unsigned i = 1) const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  // Image under the canonical embedding into the level-target field.
  FieldElem embed(const FieldCtx& target) const;
  // True when the element lies in the image of F_{q^m}.
  bool lies_in_sublevel(unsigned m) const;

  std::string str() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  i64 k_ = kDlogZero;
};

// Canonical square root.  In characteristic 2 the root is unique and stays in
// the same field.  For odd characteristic the root with the smaller dlog is
// returned; when the dlog is odd the root lives in the quadratic extension
// (level 2n) and is returned there.
FieldElem sqrt_canonical(const FieldElem& x);

// True when sqrt_canonical(x) stays at x's own level.
bool sqrt_stays(const FieldElem& x);

}  // namespace sl2rep
