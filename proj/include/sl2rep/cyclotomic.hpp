#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "sl2rep/common.hpp"

namespace sl2rep {

// A root of unity in lowest terms: zeta_order^exp with gcd(exp, order) = 1
// (order 1 encodes the value 1).  Character evaluations stay in this form as
// long as possible so exponent arithmetic happens over the integers.
struct Root {
  u64 order = 1;
  u64 exp = 0;

  bool operator==(const Root& o) const = default;
};

// Canonical form of zeta_order^exp; exp may be any integer.
Root reduce_root(u64 order, i64 exp);

class CycNum;

// Exact arithmetic context for the cyclotomic field Q(zeta_N): elements are
// rational coordinate vectors in the power basis 1, zeta, ..., zeta^(deg-1)
// modulo the N-th cyclotomic polynomial.
class CycCtx {
 public:
  u64 N = 1;
  unsigned deg = 1;               // phi(N)
  std::vector<BigInt> phi;        // cyclotomic polynomial, low to high, monic
  std::vector<Rational> phi_rat;  // same coefficients as rationals

  static const CycCtx& get(u64 N);

  CycNum zero() const;
  CycNum one() const;
  CycNum from_rational(const Rational& r) const;
  // zeta_N^j
  CycNum zeta_pow(u64 j) const;
  // materialize a reduced root; its order must divide N
  CycNum from_root(const Root& r) const;

  CycCtx(const CycCtx&) = delete;
  CycCtx& operator=(const CycCtx&) = delete;

 private:
  CycCtx() = default;
  friend CycNum;
  // power-basis coordinates of zeta^j, built eagerly for small N and on
  // demand (under lock) for large N
  mutable std::vector<std::vector<Rational>> pow_rows_;
  mutable std::vector<char> pow_ready_;
  mutable std::mutex pow_mu_;
  const std::vector<Rational>& pow_row(u64 j) const;
  void build_row_chain(u64 j) const;
};

class CycNum {
 public:
  CycNum() = default;
  CycNum(const CycCtx* ctx, std::vector<Rational> c) : ctx_(ctx), c_(std::move(c)) {}

  const CycCtx& ctx() const { return *ctx_; }
  bool valid() const { return ctx_ != nullptr; }
  const std::vector<Rational>& coords() const { return c_; }
  std::vector<Rational>& coords() { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_part() const;  // requires is_rational()

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum scaled(const Rational& r) const;
  CycNum inv() const;  // extended euclid against the cyclotomic polynomial
  CycNum conj() const;  // the automorphism zeta -> zeta^(-1)

  void add_in_place(const CycNum& o);
  void sub_in_place(const CycNum& o);
  void scale_in_place(const Rational& r);
  // this += r * o, the fused update all elimination loops use
  void add_scaled_in_place(const CycNum& o, const Rational& r);

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const CycCtx* ctx_ = nullptr;
  std::vector<Rational> c_;
};

// Sum of a finite list of values, e.g. a character over a cyclic group.
CycNum cyc_sum(const CycCtx& ctx, const std::vector<CycNum>& vals);

}  // namespace sl2rep
