#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "noetherlab/errors.hpp"

namespace nlab {

class AbelianGroup;
using AbelianGroupPtr = std::shared_ptr<const AbelianGroup>;

/// Finite abelian group given by its invariant factor decomposition
/// d_1 | d_2 | ... | d_r (empty list = trivial group).  Elements are
/// residue tuples; the dual group is represented by the group itself
/// through the coordinatewise pairing, so characters ("weights") and
/// group elements share one element type.
class AbelianGroup : public std::enable_shared_from_this<AbelianGroup> {
public:
  static AbelianGroupPtr make(std::vector<long> invariant_factors) {
    return AbelianGroupPtr(new AbelianGroup(std::move(invariant_factors)));
  }

  const std::vector<long>& invariant_factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  long order() const { return order_; }
  long exponent() const { return exponent_; }
  bool is_trivial() const { return factors_.empty(); }

  /// Mixed-radix index of a coordinate tuple, in [0, order).  Index 0 is
  /// the identity; indices enumerate elements in lexicographic coordinate
  /// order.
  long index_of(const std::vector<long>& coords) const {
    if (static_cast<int>(coords.size()) != rank())
      throw input_error("element coordinate length does not match group rank");
    long idx = 0;
    for (int i = 0; i < rank(); ++i) {
      long c = coords[i] % factors_[i];
      if (c < 0) c += factors_[i];
      idx = idx * factors_[i] + c;
    }
    return idx;
  }

  std::vector<long> coords_of(long index) const {
    if (index < 0 || index >= order_) throw input_error("element index out of range");
    std::vector<long> c(rank());
    for (int i = rank() - 1; i >= 0; --i) {
      c[i] = index % factors_[i];
      index /= factors_[i];
    }
    return c;
  }

  long add(long a, long b) const {
    if (!add_table_.empty()) return add_table_[a * order_ + b];
    auto ca = coords_of(a), cb = coords_of(b);
    for (int i = 0; i < rank(); ++i) ca[i] = (ca[i] + cb[i]) % factors_[i];
    return index_of(ca);
  }

  long neg(long a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    auto c = coords_of(a);
    for (int i = 0; i < rank(); ++i) c[i] = (factors_[i] - c[i]) % factors_[i];
    return index_of(c);
  }

  long scalar_mul(long n, long a) const {
    auto c = coords_of(a);
    for (int i = 0; i < rank(); ++i) {
      long m = ((n % factors_[i]) + factors_[i]) % factors_[i];
      c[i] = (c[i] * m) % factors_[i];
    }
    return index_of(c);
  }

  /// Least n >= 1 with n*a = 0; divides the exponent.
  long element_order(long a) const {
    auto c = coords_of(a);
    long ord = 1;
    for (int i = 0; i < rank(); ++i) {
      long d = factors_[i] / std::gcd(c[i], factors_[i]);
      ord = std::lcm(ord, d);
    }
    return ord;
  }

  /// Multiplication-by-u automorphism, u a unit modulo the exponent.
  long unit_action(long u, long a) const {
    long e = exponent_ == 0 ? 1 : exponent_;
    long um = ((u % e) + e) % e;
    if (std::gcd(um == 0 ? e : um, e) != 1)
      throw input_error("unit_action: u is not a unit modulo the group exponent");
    return scalar_mul(um, a);
  }

  std::vector<long> units_mod_exponent() const {
    std::vector<long> us;
    long e = exponent_;
    for (long u = 1; u <= e; ++u)
      if (std::gcd(u, e) == 1) us.push_back(u % e == 0 ? e : u % e);
    if (us.empty()) us.push_back(1);
    return us;
  }

  std::string name() const {
    if (factors_.empty()) return "Z1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(factors_[i]);
    }
    return s;
  }

  bool same_as(const AbelianGroup& other) const { return factors_ == other.factors_; }

private:
  explicit AbelianGroup(std::vector<long> factors) : factors_(std::move(factors)) {
    order_ = 1;
    exponent_ = 1;
    for (size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i] < 2) throw input_error("invariant factor < 2");
      if (i > 0 && factors_[i] % factors_[i - 1] != 0)
        throw input_error("invariant factors do not form a divisibility chain");
      order_ *= factors_[i];
    }
    if (!factors_.empty()) exponent_ = factors_.back();
    if (order_ <= 1024) {  // flat tables keep the search inner loops cheap
      add_table_.resize(static_cast<size_t>(order_) * order_);
      neg_table_.resize(static_cast<size_t>(order_));
      for (long a = 0; a < order_; ++a) {
        auto ca = coords_of(a);
        for (long b = 0; b < order_; ++b) {
          auto cb = coords_of(b);
          for (int i = 0; i < rank(); ++i) cb[i] = (ca[i] + cb[i]) % factors_[i];
          add_table_[a * order_ + b] = static_cast<int32_t>(index_of(cb));
        }
        for (int i = 0; i < rank(); ++i) ca[i] = (factors_[i] - ca[i]) % factors_[i];
        neg_table_[a] = static_cast<int32_t>(index_of(ca));
      }
    }
  }

  std::vector<long> factors_;
  long order_;
  long exponent_;
  std::vector<int32_t> add_table_;
  std::vector<int32_t> neg_table_;
};

/// Element of an AbelianGroup, held as (parent, dense index).  Values are
/// immutable; arithmetic goes through the parent's modular tuple ops.
class GroupElement {
public:
  GroupElement() = default;
  GroupElement(AbelianGroupPtr parent, long index) : parent_(std::move(parent)), index_(index) {}
  GroupElement(AbelianGroupPtr parent, const std::vector<long>& coords)
      : parent_(parent), index_(parent->index_of(coords)) {}

  const AbelianGroupPtr& parent() const { return parent_; }
  long index() const { return index_; }
  std::vector<long> coords() const { return parent_->coords_of(index_); }
  bool is_zero() const { return index_ == 0; }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    check_same_parent(a, b);
    return {a.parent_, a.parent_->add(a.index_, b.index_)};
  }
  friend GroupElement operator-(const GroupElement& a) {
    return {a.parent_, a.parent_->neg(a.index_)};
  }
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) {
    return a + (-b);
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    check_same_parent(a, b);
    return a.index_ == b.index_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    check_same_parent(a, b);
    return a.index_ < b.index_;
  }

  long order() const { return parent_->element_order(index_); }

  GroupElement unit_image(long u) const { return {parent_, parent_->unit_action(u, index_)}; }

  std::string str() const {
    auto c = coords();
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
  }

private:
  static void check_same_parent(const GroupElement& a, const GroupElement& b) {
    if (!a.parent_ || !b.parent_ || !a.parent_->same_as(*b.parent_))
      throw input_error("group elements have mismatched parents");
  }

  AbelianGroupPtr parent_;
  long index_ = 0;
};

inline AbelianGroupPtr make_group(const std::vector<long>& invariant_factors) {
  return AbelianGroup::make(invariant_factors);
}

/// All |A| elements in lexicographic coordinate order, deterministic.
inline std::vector<GroupElement> enumerate_elements(const AbelianGroupPtr& A,
                                                    long cap = 1000000) {
  if (A->order() > cap) throw budget_error("enumerate_elements: group order exceeds cap");
  std::vector<GroupElement> out;
  out.reserve(static_cast<size_t>(A->order()));
  for (long i = 0; i < A->order(); ++i) out.emplace_back(A, i);
  return out;
}

/// Parse a group literal like "Z2xZ2xZ2" or "Z7".  Factors are sorted into
/// a divisibility chain via primary decomposition, so e.g. "Z6xZ2" and
/// "Z2xZ6" both mean the same group.
inline AbelianGroupPtr parse_group_literal(const std::string& text) {
  std::vector<long> parts;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'Z' && text[i] != 'z')
      throw input_error("bad group literal (expected 'Z<n>[xZ<n>...]'): " + text);
    ++i;
    size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) throw input_error("bad group literal (missing order): " + text);
    long n = std::stol(text.substr(i, j - i));
    if (n < 1) throw input_error("bad group literal (order < 1): " + text);
    if (n > 1) parts.push_back(n);
    i = j;
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X') throw input_error("bad group literal: " + text);
      ++i;
    }
  }
  // Primary decomposition, then rebuild the invariant factor chain.
  std::vector<std::pair<long, int>> primary;  // (prime power, prime)
  for (long n : parts) {
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      long q = 1;
      while (m % p == 0) { q *= p; m /= p; }
      primary.push_back({q, static_cast<int>(p)});
    }
    if (m > 1) primary.push_back({m, static_cast<int>(m)});
  }
  std::vector<long> chain;
  while (!primary.empty()) {
    // Take the largest power of each prime still present; they multiply to
    // the last invariant factor.
    std::sort(primary.begin(), primary.end());
    long d = 1;
    std::vector<std::pair<long, int>> rest;
    for (size_t k = 0; k < primary.size(); ++k) {
      bool largest_of_prime =
          (k + 1 == primary.size()) || (primary[k + 1].second != primary[k].second);
      if (largest_of_prime) d *= primary[k].first;
      else rest.push_back(primary[k]);
    }
    chain.push_back(d);
    primary.swap(rest);
  }
  std::sort(chain.begin(), chain.end());
  return make_group(chain);
}

}  // namespace nlab
