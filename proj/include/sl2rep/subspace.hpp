#pragma once

#include <algorithm>
#include <compare>
#include <iterator>
#include <map>
#include <vector>

#include "sl2rep/cyclotomic.hpp"

namespace sl2rep {

// Scale a sparse rational-coordinate vector to primitive integer form:
// multiply by the lcm of denominators, divide by the gcd of numerators.
template <typename Key>
void normalize_primitive(std::map<Key, CycNum>& v) {
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& [k, c] : v)
    for (const Rational& r : c.coords()) {
      if (r == 0) continue;
      den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(r));
      num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(r));
    }
  if (num_gcd == 0) return;  // zero vector
  if (num_gcd < 0) num_gcd = -num_gcd;
  Rational s(den_lcm, num_gcd);
  if (s == 1) return;
  for (auto& [k, c] : v) c.scale_in_place(s);
}

// Staircase basis of a subspace, rows kept in primitive integer form.
// Elimination is fraction free: v <- pivot(r) * v - v[k] * r.
template <typename Key>
class Echelon {
 public:
  explicit Echelon(const CycCtx& cyc) : cyc_(&cyc) {}

  const CycCtx& cyc() const { return *cyc_; }
  u64 dim() const { return rows_.size(); }

  std::map<Key, CycNum> reduce(std::map<Key, CycNum> v) const {
    prune(v);
    for (const auto& [piv, row] : rows_) {
      auto it = v.find(piv);
      if (it == v.end()) continue;
      CycNum vp = it->second;
      const CycNum& rp = row.at(piv);
      for (auto& [k, c] : v) c = c * rp;
      for (const auto& [k, c] : row) {
        auto jt = v.find(k);
        if (jt == v.end())
          v.emplace(k, -(vp * c));
        else
          jt->second.sub_in_place(vp * c);
      }
      prune(v);
      if (v.empty()) return v;
      normalize_primitive(v);
    }
    return v;
  }

  // true when v was independent and is now part of the basis
  bool insert(std::map<Key, CycNum> v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    insert_reduced(std::move(v));
    return true;
  }

  // insert a vector already reduced against the basis
  void insert_reduced(std::map<Key, CycNum> v) {
    normalize_primitive(v);
    Key piv = v.begin()->first;
    auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), piv,
        [](const auto& row, const Key& k) { return row.first < k; });
    SL2_CHECK(pos == rows_.end() || pos->first != piv, "echelon: duplicate pivot");
    rows_.insert(pos, {piv, std::move(v)});
  }

  bool contains(const std::map<Key, CycNum>& v) const { return reduce(v).empty(); }

  const std::vector<std::pair<Key, std::map<Key, CycNum>>>& rows() const {
    return rows_;
  }

 private:
  static void prune(std::map<Key, CycNum>& v) {
    for (auto it = v.begin(); it != v.end();)
      it = it->second.is_zero() ? v.erase(it) : std::next(it);
  }
  const CycCtx* cyc_;
  std::vector<std::pair<Key, std::map<Key, CycNum>>> rows_;
};

// Kernel of the linear map sending unit i to vectors[i]: coordinates are
// tracked through an augmented echelon; returned rows are coefficient
// vectors over the inputs, each in primitive integer form.
template <typename Key>
std::vector<std::map<u64, CycNum>> kernel_of(
    const CycCtx& cyc, const std::vector<std::map<Key, CycNum>>& vectors) {
  // actual coordinates tag 0, one bookkeeping coordinate per input tag 1;
  // actual keys sort first so pivots are always chosen among them
  struct AK {
    int tag;
    Key k;
    u64 i;
    auto operator<=>(const AK& o) const {
      if (tag != o.tag) return tag <=> o.tag;
      if (tag == 0) return k < o.k ? std::strong_ordering::less
                                   : (o.k < k ? std::strong_ordering::greater
                                              : std::strong_ordering::equal);
      return i <=> o.i;
    }
  };
  Echelon<AK> ech(cyc);
  std::vector<std::map<u64, CycNum>> out;
  for (u64 i = 0; i < vectors.size(); ++i) {
    std::map<AK, CycNum> v;
    for (const auto& [k, c] : vectors[i]) v.emplace(AK{0, k, 0}, c);
    v.emplace(AK{1, Key{}, i}, cyc.one());
    v = ech.reduce(std::move(v));
    bool actual_zero = v.empty() || v.begin()->first.tag == 1;
    if (actual_zero) {
      std::map<u64, CycNum> combo;
      for (const auto& [ak, c] : v) combo.emplace(ak.i, c);
      normalize_primitive(combo);
      out.push_back(std::move(combo));
    }
    if (!v.empty()) ech.insert_reduced(std::move(v));
  }
  return out;
}

}  // namespace sl2rep
