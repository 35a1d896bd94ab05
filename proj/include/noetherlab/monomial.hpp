#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "noetherlab/abelian.hpp"
#include "noetherlab/errors.hpp"
#include "noetherlab/zerosum.hpp"

namespace nlab {

/// Monomial in a fixed variable set: exponent vector, compared
/// lexicographically.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exps) : e_(std::move(exps)) {}

  size_t nvars() const { return e_.size(); }
  long degree() const { return std::accumulate(e_.begin(), e_.end(), 0L); }
  std::uint16_t exp(size_t i) const { return e_[i]; }
  void set_exp(size_t i, std::uint16_t v) { e_[i] = v; }
  const std::vector<std::uint16_t>& exps() const { return e_; }
  bool is_one() const { return degree() == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / *this; requires divisibility.
  Monomial divide_into(const Monomial& o) const {
    Monomial r = o;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > o.e_[i]) throw input_error("Monomial: non-divisible quotient");
      r.e_[i] -= e_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

  std::string str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (!e_[i]) continue;
      if (any) os << "*";
      os << "x" << i;
      if (e_[i] > 1) os << "^" << static_cast<long>(e_[i]);
      any = true;
    }
    if (!any) os << "1";
    return os.str();
  }

private:
  std::vector<std::uint16_t> e_;
};

/// One variable of a monomial representation: its weight in the dual of A,
/// the variable it maps to under the quotient generator g, and the
/// root-of-unity factor zeta_M^scalar_exp picked up along the way.
struct RepVariable {
  long weight = 0;       // element index in the dual of A
  int g_image = 0;       // variable index
  long scalar_exp = 0;   // exponent of zeta_{scalar_modulus}
};

/// Monomial representation of the split metabelian group G = A x| Z_n:
/// A acts diagonally through the variable weights, the cyclic quotient
/// permutes the variables up to scalars and acts on the dual of A by a
/// fixed automorphism.
class MonomialRep {
public:
  MonomialRep(AbelianGroupPtr A, long n, std::vector<long> dual_action_map,
              std::vector<RepVariable> variables, long scalar_modulus = 1)
      : A_(std::move(A)),
        n_(n),
        dual_(std::move(dual_action_map)),
        vars_(std::move(variables)),
        scalar_mod_(scalar_modulus) {
    validate();
    build_orbits();
  }

  /// Convenience: dual action given by multiplication with a unit.
  static MonomialRep with_unit_action(AbelianGroupPtr A, long n, long unit,
                                      std::vector<RepVariable> variables,
                                      long scalar_modulus = 1) {
    std::vector<long> map(static_cast<size_t>(A->order()));
    for (long i = 0; i < A->order(); ++i) map[i] = A->unit_action(unit, i);
    return MonomialRep(std::move(A), n, std::move(map), std::move(variables), scalar_modulus);
  }

  const AbelianGroupPtr& group() const { return A_; }
  long quotient_order() const { return n_; }
  long scalar_modulus() const { return scalar_mod_; }
  size_t nvars() const { return vars_.size(); }
  const std::vector<RepVariable>& variables() const { return vars_; }
  long group_order() const { return A_->order() * n_; }

  long dual_apply(long w, long times = 1) const {
    times = ((times % n_) + n_) % n_;
    for (long t = 0; t < times; ++t) w = dual_[w];
    return w;
  }

  /// Orbits of the dual of A under the quotient action, ordered by least
  /// element (so the zero orbit comes first); every shape computation uses
  /// this fixed enumeration.
  const std::vector<std::vector<long>>& orbits() const { return orbits_; }
  int orbit_of(long w) const { return orbit_of_[w]; }

  /// Generator powers g^t spanning the minimal non-trivial subgroups of
  /// Z_n (t = n/r for each prime r | n); empty when n = 1.
  const std::vector<long>& minimal_subgroup_powers() const { return min_powers_; }

  /// Least order N such that all variable scalars lie in <zeta_N>; the
  /// coefficient field of invariant computations is Q(zeta_N).
  long scalar_field_modulus() const { return field_mod_; }

  long monomial_weight(const Monomial& m) const {
    long w = 0;
    for (size_t i = 0; i < vars_.size(); ++i)
      if (m.exp(i)) w = A_->add(w, A_->scalar_mul(m.exp(i), vars_[i].weight));
    return w;
  }

  bool is_a_invariant(const Monomial& m) const { return monomial_weight(m) == 0; }

  /// m^(g^times) as (monomial, scalar exponent over zeta_{scalar_modulus}).
  std::pair<Monomial, long> monomial_image(const Monomial& m, long times = 1) const {
    times = ((times % n_) + n_) % n_;
    Monomial cur = m;
    long sexp = 0;
    for (long t = 0; t < times; ++t) {
      Monomial nxt(vars_.size());
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (!cur.exp(i)) continue;
        nxt.set_exp(vars_[i].g_image, nxt.exp(vars_[i].g_image) + cur.exp(i));
        sexp += static_cast<long>(cur.exp(i)) * vars_[i].scalar_exp;
      }
      cur = std::move(nxt);
    }
    return {cur, ((sexp % scalar_mod_) + scalar_mod_) % scalar_mod_};
  }

  /// Lexicographically least monomial among {m^(g^j)}.
  Monomial orbit_canonical(const Monomial& m) const {
    Monomial best = m;
    Monomial cur = m;
    for (long j = 1; j < n_; ++j) {
      cur = monomial_image(cur, 1).first;
      if (cur < best) best = cur;
    }
    return best;
  }

  /// The weight sequence of m: variable weights with multiplicity.
  Sequence weight_sequence(const Monomial& m) const {
    Sequence s(A_);
    for (size_t i = 0; i < vars_.size(); ++i)
      if (m.exp(i)) s.push(vars_[i].weight, m.exp(i));
    return s;
  }

private:
  void validate() const {
    if (n_ < 1) throw input_error("MonomialRep: quotient order must be >= 1");
    if (scalar_mod_ < 1) throw input_error("MonomialRep: scalar modulus must be >= 1");
    if (static_cast<long>(dual_.size()) != A_->order())
      throw input_error("MonomialRep: dual action map has wrong size");
    // dual action: additive bijection of order dividing n
    std::vector<bool> hit(dual_.size(), false);
    for (long a = 0; a < A_->order(); ++a) {
      long fa = dual_[a];
      if (fa < 0 || fa >= A_->order() || hit[fa])
        throw input_error("MonomialRep: dual action is not a bijection");
      hit[fa] = true;
      for (long b = 0; b <= a; ++b)
        if (dual_[A_->add(a, b)] != A_->add(dual_[a], dual_[b]))
          throw input_error("MonomialRep: dual action is not additive");
    }
    {
      // order of the automorphism divides n
      std::vector<long> cur(dual_.size());
      for (size_t i = 0; i < dual_.size(); ++i) cur[i] = static_cast<long>(i);
      long ordmul = 0;
      for (long t = 1; t <= n_; ++t) {
        for (auto& x : cur) x = dual_[x];
        bool ident = true;
        for (size_t i = 0; i < cur.size(); ++i)
          if (cur[i] != static_cast<long>(i)) { ident = false; break; }
        if (ident) { ordmul = t; break; }
      }
      if (ordmul == 0 || n_ % ordmul != 0)
        throw input_error("MonomialRep: dual action order does not divide n");
    }
    for (size_t i = 0; i < vars_.size(); ++i) {
      const auto& v = vars_[i];
      if (v.weight < 0 || v.weight >= A_->order())
        throw input_error("MonomialRep: variable weight out of range");
      if (v.g_image < 0 || v.g_image >= static_cast<int>(vars_.size()))
        throw input_error("MonomialRep: variable image out of range");
      if (vars_[v.g_image].weight != dual_[v.weight])
        throw input_error("MonomialRep: image weight does not match the dual action");
    }
    // g-action is a permutation-with-scalars whose n-th power is trivial
    std::vector<bool> seen(vars_.size(), false);
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (seen[i]) continue;
      long cyc_len = 0;
      long sexp = 0;
      size_t j = i;
      do {
        if (seen[j]) throw input_error("MonomialRep: g-action is not a permutation");
        seen[j] = true;
        sexp += vars_[j].scalar_exp;
        j = static_cast<size_t>(vars_[j].g_image);
        ++cyc_len;
      } while (j != i);
      if (n_ % cyc_len != 0)
        throw input_error("MonomialRep: variable cycle length does not divide n");
      long total = (sexp % scalar_mod_) * (n_ / cyc_len) % scalar_mod_;
      if (((total % scalar_mod_) + scalar_mod_) % scalar_mod_ != 0)
        throw input_error("MonomialRep: g^n does not act trivially (scalar defect)");
    }
  }

  void build_orbits() {
    orbit_of_.assign(static_cast<size_t>(A_->order()), -1);
    for (long a = 0; a < A_->order(); ++a) {
      if (orbit_of_[a] >= 0) continue;
      std::vector<long> orb;
      long cur = a;
      do {
        orbit_of_[cur] = static_cast<int>(orbits_.size());
        orb.push_back(cur);
        cur = dual_[cur];
      } while (cur != a);
      std::sort(orb.begin(), orb.end());
      orbits_.push_back(std::move(orb));
    }
    min_powers_.clear();
    for (long r = 2; r <= n_; ++r) {
      if (n_ % r) continue;
      bool prime = true;
      for (long d = 2; d * d <= r; ++d)
        if (r % d == 0) { prime = false; break; }
      if (prime) min_powers_.push_back(n_ / r);
    }
    field_mod_ = 1;
    for (const auto& v : vars_) {
      long e = ((v.scalar_exp % scalar_mod_) + scalar_mod_) % scalar_mod_;
      long ord = e == 0 ? 1 : scalar_mod_ / std::gcd(scalar_mod_, e);
      field_mod_ = std::lcm(field_mod_, ord);
    }
  }

  AbelianGroupPtr A_;
  long n_;
  std::vector<long> dual_;
  std::vector<RepVariable> vars_;
  long scalar_mod_;
  std::vector<std::vector<long>> orbits_;
  std::vector<int> orbit_of_;
  std::vector<long> min_powers_;
  long field_mod_ = 1;
};

/// Shape of a weight sequence: one partition per quotient orbit, in the
/// rep's fixed orbit order.
using Shape = std::vector<std::vector<long>>;

/// A weight sequence together with its row decomposition
/// R_1 ⊇ R_2 ⊇ ... ⊇ R_h (rows are multiplicity-free, row i collects the
/// weights of multiplicity >= i) and the per-orbit partitions.
struct WeightSeq {
  Sequence seq;
  std::vector<std::vector<long>> rows;  // global rows, each sorted
  long height = 0;
  Shape shape;  // mu per orbit

  WeightSeq(const Sequence& s, const MonomialRep& rep) : seq(s) {
    height = s.height();
    rows.assign(static_cast<size_t>(height), {});
    for (auto& [e, m] : s.entries())
      for (long i = 0; i < m; ++i) rows[i].push_back(e);
    shape.assign(rep.orbits().size(), {});
    for (size_t oi = 0; oi < rep.orbits().size(); ++oi) {
      for (long level = 1; level <= height; ++level) {
        long cnt = 0;
        for (auto& [e, m] : s.entries())
          if (rep.orbit_of(e) == static_cast<int>(oi) && m >= level) ++cnt;
        if (cnt) shape[oi].push_back(cnt);
      }
    }
  }
};

inline WeightSeq weight_sequence(const Monomial& m, const MonomialRep& rep) {
  return WeightSeq(rep.weight_sequence(m), rep);
}

inline Shape shape(const Sequence& s, const MonomialRep& rep) {
  return WeightSeq(s, rep).shape;
}

/// The reverse-lexicographic shape order: a < b iff at the first orbit
/// where the partitions differ, the first differing part is LARGER in a.
inline bool shape_less(const Shape& a, const Shape& b) {
  if (a.size() != b.size()) throw input_error("shape_less: incompatible orbit enumerations");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    size_t j = 0;
    while (j < a[i].size() && j < b[i].size() && a[i][j] == b[i][j]) ++j;
    long av = j < a[i].size() ? a[i][j] : 0;
    long bv = j < b[i].size() ? b[i][j] : 0;
    return av > bv;
  }
  return false;  // equal shapes
}

inline bool shape_less(const WeightSeq& s, const WeightSeq& t) {
  return shape_less(s.shape, t.shape);
}

/// A brick: a multiplicity-free sequence equal to the orbit of some weight
/// under a minimal non-trivial subgroup of the quotient (the weight-0
/// orbit {0} counts, matching the A-invariant variables).
inline bool is_brick_sequence(const Sequence& s, const MonomialRep& rep) {
  if (s.empty()) return false;
  if (s.height() > 1) return false;
  std::vector<long> supp;
  for (auto& [e, m] : s.entries()) supp.push_back(e);
  if (supp.size() == 1 && supp[0] == 0) return true;  // an A-invariant variable
  for (long t : rep.minimal_subgroup_powers()) {
    long theta = supp.front();
    std::set<long> orb;
    long cur = theta;
    do {
      orb.insert(cur);
      cur = rep.dual_apply(cur, t);
    } while (cur != theta);
    if (std::vector<long>(orb.begin(), orb.end()) == supp) return true;
  }
  return false;
}

inline bool is_brick(const Monomial& m, const MonomialRep& rep) {
  return is_brick_sequence(rep.weight_sequence(m), rep);
}

/// Gaplessness: along every quotient orbit O, consecutive non-empty rows
/// restricted to O must strictly shrink or both equal the whole of O.
inline bool is_gapless(const WeightSeq& ws, const MonomialRep& rep) {
  for (size_t oi = 0; oi < rep.orbits().size(); ++oi) {
    const auto& O = rep.orbits()[oi];
    for (long i = 0; i + 1 < ws.height; ++i) {
      std::vector<long> cur, nxt;
      for (long e : ws.rows[i])
        if (rep.orbit_of(e) == static_cast<int>(oi)) cur.push_back(e);
      if (cur.empty()) continue;
      for (long e : ws.rows[i + 1])
        if (rep.orbit_of(e) == static_cast<int>(oi)) nxt.push_back(e);
      if (cur == nxt && cur != O) return false;
    }
  }
  return true;
}

inline bool is_gapless(const Sequence& s, const MonomialRep& rep) {
  return is_gapless(WeightSeq(s, rep), rep);
}

inline bool is_gapless(const Monomial& m, const MonomialRep& rep) {
  return is_gapless(rep.weight_sequence(m), rep);
}

/// All variable-index subsets default: the whole variable set.
inline std::vector<int> all_variables(const MonomialRep& rep) {
  std::vector<int> v(rep.nvars());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

namespace detail {

inline Monomial restrict_to(const Monomial& m, const std::vector<int>& vars) {
  Monomial r(m.nvars());
  for (int i : vars) r.set_exp(static_cast<size_t>(i), m.exp(static_cast<size_t>(i)));
  return r;
}

}  // namespace detail

/// A good factor of m = u*v: an A-invariant u with 0 < deg u < deg m such
/// that replacing u by any of its non-trivial quotient translates strictly
/// lowers the shape of the V-restricted part.  Returns the first such u in
/// exponent-lexicographic order, or nullopt.
inline std::optional<Monomial> good_factor(const Monomial& m, const MonomialRep& rep,
                                           const std::vector<int>& V_subset) {
  // V must be g-stable
  std::set<int> vs(V_subset.begin(), V_subset.end());
  for (int i : V_subset)
    if (!vs.count(rep.variables()[static_cast<size_t>(i)].g_image))
      throw input_error("good_factor: variable subset is not g-stable");

  Shape base = weight_sequence(detail::restrict_to(m, V_subset), rep).shape;
  long degm = m.degree();

  std::vector<size_t> support;
  for (size_t i = 0; i < m.nvars(); ++i)
    if (m.exp(i)) support.push_back(i);

  Monomial u(m.nvars());
  std::optional<Monomial> found;
  std::function<void(size_t)> dfs = [&](size_t si) {
    if (found) return;
    if (si == support.size()) {
      long degu = u.degree();
      if (degu == 0 || degu >= degm) return;
      if (!rep.is_a_invariant(u)) return;
      Monomial v = u.divide_into(m);
      for (long j = 1; j < rep.quotient_order(); ++j) {
        Monomial ub = rep.monomial_image(u, j).first;
        Shape cand = weight_sequence(detail::restrict_to(ub * v, V_subset), rep).shape;
        if (!shape_less(cand, base)) return;
      }
      found = u;
      return;
    }
    size_t var = support[si];
    for (std::uint16_t e = 0; e <= m.exp(var) && !found; ++e) {
      u.set_exp(var, e);
      dfs(si + 1);
    }
    u.set_exp(var, 0);
  };
  dfs(0);
  return found;
}

inline std::optional<Monomial> good_factor(const Monomial& m, const MonomialRep& rep) {
  return good_factor(m, rep, all_variables(rep));
}

inline bool is_terminal(const Monomial& m, const MonomialRep& rep,
                        const std::vector<int>& V_subset) {
  return !good_factor(m, rep, V_subset).has_value();
}

inline bool is_terminal(const Monomial& m, const MonomialRep& rep) {
  return is_terminal(m, rep, all_variables(rep));
}

}  // namespace nlab
