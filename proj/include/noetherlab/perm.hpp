#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "noetherlab/errors.hpp"

namespace nlab {

/// Permutation of {0..degree-1} by its image vector.
class Perm {
public:
  Perm() = default;
  explicit Perm(int degree) : p_(degree) { std::iota(p_.begin(), p_.end(), 0); }
  explicit Perm(std::vector<int> images) : p_(std::move(images)) {
    std::vector<bool> seen(p_.size(), false);
    for (int v : p_) {
      if (v < 0 || v >= static_cast<int>(p_.size()) || seen[v])
        throw input_error("Perm: image list is not a permutation");
      seen[v] = true;
    }
  }

  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
      for (size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw input_error("Perm: cycle entry out of range");
        img[from] = to;
      }
    }
    return Perm(img);
  }

  int degree() const { return static_cast<int>(p_.size()); }
  int operator()(int x) const { return p_[x]; }
  const std::vector<int>& images() const { return p_; }

  /// (a*b)(x) = a(b(x)).
  friend Perm operator*(const Perm& a, const Perm& b) {
    std::vector<int> r(a.p_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.p_[b.p_[i]];
    Perm out;
    out.p_ = std::move(r);
    return out;
  }

  Perm inverse() const {
    Perm out;
    out.p_.resize(p_.size());
    for (size_t i = 0; i < p_.size(); ++i) out.p_[p_[i]] = static_cast<int>(i);
    return out;
  }

  bool is_identity() const {
    for (size_t i = 0; i < p_.size(); ++i)
      if (p_[i] != static_cast<int>(i)) return false;
    return true;
  }

  long order() const {
    std::vector<bool> seen(p_.size(), false);
    long ord = 1;
    for (size_t i = 0; i < p_.size(); ++i) {
      if (seen[i]) continue;
      long len = 0;
      size_t j = i;
      do {
        seen[j] = true;
        j = static_cast<size_t>(p_[j]);
        ++len;
      } while (j != i);
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return a.p_ != b.p_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.p_ < b.p_; }

  std::string str() const {
    std::vector<bool> seen(p_.size(), false);
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < p_.size(); ++i) {
      if (seen[i] || p_[i] == static_cast<int>(i)) continue;
      os << "(";
      size_t j = i;
      bool first = true;
      do {
        seen[j] = true;
        if (!first) os << " ";
        first = false;
        os << j;
        j = static_cast<size_t>(p_[j]);
      } while (j != i);
      os << ")";
      any = true;
    }
    if (!any) os << "()";
    return os.str();
  }

private:
  std::vector<int> p_;
};

/// Finite permutation group given by generators, with lazily materialized
/// element list, multiplication table and structural caches.  The element
/// list is lexicographically sorted, so every derived object (subgroup
/// list, quotient, fingerprint) is deterministic.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators, long order_cap = 2000)
      : degree_(degree), gens_(std::move(generators)), cap_(order_cap) {
    for (const auto& g : gens_)
      if (g.degree() != degree_) throw input_error("PermGroup: generator degree mismatch");
    if (gens_.empty()) gens_.push_back(Perm(degree_));
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  long order_cap() const { return cap_; }

  const std::vector<Perm>& elements() const {
    materialize();
    return elems_;
  }

  long order() const { return static_cast<long>(elements().size()); }

  int index_of(const Perm& p) const {
    materialize();
    auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
    if (it == elems_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - elems_.begin());
  }

  bool contains_perm(const Perm& p) const { return index_of(p) >= 0; }

  int id_index() const {
    materialize();
    return id_idx_;
  }

  int mult(int a, int b) const {
    materialize();
    if (!mult_.empty()) return mult_[static_cast<size_t>(a) * elems_.size() + b];
    return index_of(elems_[a] * elems_[b]);
  }

  int inv(int a) const {
    materialize();
    return inv_[a];
  }

  long element_order(int a) const {
    materialize();
    return elems_[a].order();
  }

  /// order -> count over all elements.
  std::map<long, long> order_histogram() const {
    materialize();
    std::map<long, long> h;
    for (const auto& e : elems_) ++h[e.order()];
    return h;
  }

  long max_element_order() const {
    long m = 1;
    for (auto& [o, c] : order_histogram()) m = std::max(m, o);
    return m;
  }

  bool is_abelian() const {
    materialize();
    for (size_t i = 0; i < gens_.size(); ++i)
      for (size_t j = i + 1; j < gens_.size(); ++j)
        if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
    return true;
  }

  long center_order() const {
    materialize();
    long c = 0;
    for (const auto& e : elems_) {
      bool central = true;
      for (const auto& g : gens_)
        if (!(e * g == g * e)) {
          central = false;
          break;
        }
      if (central) ++c;
    }
    return c;
  }

  /// Orders of the derived series G >= G' >= G'' >= ... down to stability.
  std::vector<long> derived_series_orders() const {
    materialize();
    std::vector<long> out;
    std::vector<Perm> cur = elems_;
    while (true) {
      // commutators of the current subgroup
      std::set<Perm> comms;
      for (const auto& a : cur)
        for (const auto& b : cur)
          comms.insert(a.inverse() * b.inverse() * a * b);
      // close them
      std::set<Perm> sub(comms.begin(), comms.end());
      sub.insert(Perm(degree_));
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Perm> cs(sub.begin(), sub.end());
        for (const auto& a : cs)
          for (const auto& b : cs)
            if (sub.insert(a * b).second) grew = true;
      }
      out.push_back(static_cast<long>(sub.size()));
      if (sub.size() == cur.size() || sub.size() == 1) break;
      cur.assign(sub.begin(), sub.end());
    }
    return out;
  }

  std::string fingerprint() const {
    materialize();
    std::ostringstream os;
    os << order() << "|";
    for (auto& [o, c] : order_histogram()) os << o << ":" << c << ",";
    os << "|z" << center_order() << "|d";
    for (long d : derived_series_orders()) os << d << ",";
    return os.str();
  }

private:
  void materialize() const {
    if (!elems_.empty()) return;
    std::set<Perm> seen;
    std::vector<Perm> work;
    Perm id(degree_);
    seen.insert(id);
    work.push_back(id);
    while (!work.empty()) {
      Perm cur = work.back();
      work.pop_back();
      for (const auto& g : gens_) {
        Perm nxt = cur * g;
        if (seen.insert(nxt).second) {
          if (static_cast<long>(seen.size()) > cap_)
            throw budget_error("PermGroup: order cap exceeded");
          work.push_back(nxt);
        }
      }
    }
    elems_.assign(seen.begin(), seen.end());
    inv_.resize(elems_.size());
    for (size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i].is_identity()) id_idx_ = static_cast<int>(i);
      auto it = std::lower_bound(elems_.begin(), elems_.end(), elems_[i].inverse());
      inv_[i] = static_cast<int>(it - elems_.begin());
    }
    if (elems_.size() <= 1024) {
      mult_.resize(elems_.size() * elems_.size());
      for (size_t a = 0; a < elems_.size(); ++a)
        for (size_t b = 0; b < elems_.size(); ++b) {
          Perm prod = elems_[a] * elems_[b];
          auto it = std::lower_bound(elems_.begin(), elems_.end(), prod);
          mult_[a * elems_.size() + b] = static_cast<int>(it - elems_.begin());
        }
    }
  }

  int degree_ = 1;
  std::vector<Perm> gens_;
  long cap_ = 2000;
  mutable std::vector<Perm> elems_;
  mutable std::vector<int> inv_;
  mutable std::vector<int> mult_;
  mutable int id_idx_ = 0;
};

inline PermGroup group_from_generators(const std::vector<Perm>& gens, long order_cap = 2000) {
  if (gens.empty()) throw input_error("group_from_generators: no generators");
  return PermGroup(gens.front().degree(), gens, order_cap);
}

}  // namespace nlab
