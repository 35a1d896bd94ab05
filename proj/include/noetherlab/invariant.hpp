#pragma once

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "noetherlab/cyclotomic.hpp"
#include "noetherlab/monomial.hpp"

namespace nlab {

/// Sparse polynomial with exact cyclotomic-rational coefficients.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial term(const Monomial& m, const Cyclo& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
  }
  static Polynomial monomial(const Monomial& m) { return term(m, Cyclo(1)); }

  const std::map<Monomial, Cyclo>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  void add_term(const Monomial& m, const Cyclo& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.t_) r.add_term(m, c);
    return r;
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r = a;
    for (auto& [m, c] : b.t_) r.add_term(m, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (auto& [ma, ca] : a.t_)
      for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  friend Polynomial operator*(const Cyclo& c, const Polynomial& a) {
    Polynomial r;
    for (auto& [m, x] : a.t_) r.add_term(m, c * x);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Degree if homogeneous; throws otherwise.
  long homogeneous_degree() const {
    if (t_.empty()) return 0;
    long d = t_.begin()->first.degree();
    for (auto& [m, c] : t_)
      if (m.degree() != d) throw input_error("Polynomial: not homogeneous");
    return d;
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : t_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
  }

private:
  std::map<Monomial, Cyclo> t_;
};

/// zeta_{scalar_modulus}^s expressed in the rep's coefficient field.
inline Cyclo rep_scalar(const MonomialRep& rep, long s) {
  long M = rep.scalar_modulus();
  s = ((s % M) + M) % M;
  if (s == 0) return Cyclo(1, rep.scalar_field_modulus());
  long g = std::gcd(s, M);
  long ord = M / g;
  long F = rep.scalar_field_modulus();
  if (F % ord != 0) throw internal_error("rep_scalar: scalar outside the coefficient field");
  return Cyclo::root(F, (s / g) % ord * (F / ord));
}

/// Right action of g^times on a polynomial.
inline Polynomial g_image(const Polynomial& f, const MonomialRep& rep, long times = 1) {
  Polynomial out;
  for (auto& [m, c] : f.terms()) {
    auto [mi, s] = rep.monomial_image(m, times);
    out.add_term(mi, c * rep_scalar(rep, s));
  }
  return out;
}

inline bool is_g_invariant(const Polynomial& f, const MonomialRep& rep) {
  return g_image(f, rep, 1) == f;
}

/// Relative transfer of an A-invariant monomial over the coset
/// representatives 1, g, ..., g^(n-1); the result is G-invariant (possibly
/// zero, when the scalars sum away).
inline Polynomial transfer(const Monomial& m, const MonomialRep& rep) {
  if (!rep.is_a_invariant(m)) throw input_error("transfer: monomial is not A-invariant");
  Polynomial out;
  Monomial cur = m;
  long sexp = 0;
  for (long j = 0; j < rep.quotient_order(); ++j) {
    if (j > 0) {
      auto im = rep.monomial_image(cur, 1);
      cur = im.first;
      sexp = (sexp + im.second) % rep.scalar_modulus();
    }
    out.add_term(cur, rep_scalar(rep, sexp));
  }
  return out;
}

struct BetaScanResult {
  long value = 0;  // max degree d <= cap with R_d not inside (R_+^{k+1})_d
  long witness_degree = 0;
  std::vector<long> generator_degrees;  // d with R_d not inside (R_+^2)_d
  long cap = 0;
  long k = 1;
  bool cap_theoretically_sufficient = false;
  std::vector<long> r_dims;  // dim R_d for d = 1..cap
};

/// Degree-wise workbench for one monomial representation: A-invariant
/// monomial bases, transfer spans of each R_d, and the graded pieces of
/// the powers of the maximal invariant ideal.
class InvariantEngine {
public:
  explicit InvariantEngine(MonomialRep rep, std::uint64_t monomial_budget = 20000000ULL)
      : rep_(std::move(rep)), budget_(monomial_budget) {}

  const MonomialRep& rep() const { return rep_; }

  /// All A-invariant monomials of degree d, lexicographically sorted.
  const std::vector<Monomial>& ainv_monomials(long d) {
    auto it = ainv_.find(d);
    if (it != ainv_.end()) return it->second;
    auto& out = ainv_[d];
    enumerate_ainv(d, out);
    std::sort(out.begin(), out.end());
    auto& cols = cols_[d];
    for (size_t i = 0; i < out.size(); ++i) cols.emplace(out[i], static_cast<std::uint32_t>(i));
    return out;
  }

  /// Sparse coordinates of a homogeneous polynomial supported on
  /// A-invariant monomials of its degree.
  SparseVec vectorize(const Polynomial& f) {
    SparseVec v;
    if (f.is_zero()) return v;
    long d = f.homogeneous_degree();
    ainv_monomials(d);
    const auto& cols = cols_.at(d);
    for (auto& [m, c] : f.terms()) {
      auto it = cols.find(m);
      if (it == cols.end())
        throw input_error("vectorize: polynomial is not supported on A-invariant monomials");
      v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return v;
  }

  /// Non-zero transfers of the orbit-canonical A-invariant monomials of
  /// degree d: a spanning set of R_d.
  const std::vector<Polynomial>& transfer_generators(long d) {
    auto it = rgens_.find(d);
    if (it != rgens_.end()) return it->second;
    auto& gens = rgens_[d];
    for (const auto& m : ainv_monomials(d)) {
      if (rep_.quotient_order() > 1 && !(m == rep_.orbit_canonical(m))) continue;
      Polynomial tau = transfer(m, rep_);
      if (!tau.is_zero()) gens.push_back(std::move(tau));
    }
    return gens;
  }

  /// Independent subset of the transfer generators (a basis of R_d).
  const std::vector<Polynomial>& r_basis(long d) {
    ensure_r(d);
    return rbasis_.at(d);
  }

  long r_dim(long d) {
    ensure_r(d);
    return static_cast<long>(rbasis_.at(d).size());
  }

  /// Span of the degree-d piece of (R_+)^j.
  const RowSpan& power_span(long j, long d) {
    if (j < 1) throw input_error("power_span: j must be >= 1");
    ensure_power(j, d);
    return pspan_.at({j, d});
  }

  bool r_contained_in_power(long d, long j) {
    ensure_r(d);
    if (rbasis_.at(d).empty()) return true;
    ensure_power(j, d);
    return static_cast<long>(pspan_.at({j, d}).rank()) == r_dim(d);
  }

  /// A G-invariant of degree d outside (R_+^j)_d, when one exists.
  std::optional<Polynomial> power_witness(long d, long j) {
    ensure_r(d);
    ensure_power(j, d);
    const auto& span = pspan_.at({j, d});
    for (const auto& f : rbasis_.at(d))
      if (!span.contains(vec_of(f))) return f;
    return std::nullopt;
  }

  /// Membership of a homogeneous G-invariant in (R_+)^{k+1}.
  bool in_power_ideal(const Polynomial& f, long k) {
    if (f.is_zero()) return true;
    long d = f.homogeneous_degree();
    SparseVec v = vectorize(f);  // errors out on non-A-invariant support
    if (!is_g_invariant(f, rep_)) throw input_error("in_power_ideal: input is not G-invariant");
    ensure_power(k + 1, d);
    return pspan_.at({k + 1, d}).contains(std::move(v));
  }

  /// Degree-by-degree scan for beta_k of this module.
  BetaScanResult beta_k_of_module(long k, long cap) {
    if (k < 1 || cap < 1) throw input_error("beta_k_of_module: k and cap must be >= 1");
    BetaScanResult res;
    res.cap = cap;
    res.k = k;
    for (long d = 1; d <= cap; ++d) {
      res.r_dims.push_back(r_dim(d));
      if (r_dim(d) == 0) continue;
      bool generator = !r_contained_in_power(d, 2);
      if (generator) res.generator_degrees.push_back(d);
      bool contained = (k == 1) ? !generator : r_contained_in_power(d, k + 1);
      if (!contained) {
        res.value = d;
        res.witness_degree = d;
      }
    }
    long order = rep_.group_order();
    long beta1 = 0;
    for (long d : res.generator_degrees) beta1 = std::max(beta1, d);
    res.cap_theoretically_sufficient =
        (cap >= k * order) || (cap >= order && cap >= k * beta1);
    return res;
  }

private:
  SparseVec vec_of(const Polynomial& f) { return vectorize(f); }

  void enumerate_ainv(long d, std::vector<Monomial>& out) {
    size_t v = rep_.nvars();
    long An = rep_.group()->order();
    // reach[i][r]: weights attainable by monomials of exact degree r on
    // variables i..v-1
    std::vector<std::vector<std::vector<bool>>> reach(
        v + 1, std::vector<std::vector<bool>>(d + 1, std::vector<bool>(An, false)));
    reach[v][0][0] = true;
    for (long i = static_cast<long>(v) - 1; i >= 0; --i) {
      long w = rep_.variables()[i].weight;
      for (long r = 0; r <= d; ++r) {
        long shift = 0;
        for (long e = 0; e <= r; ++e) {
          if (e) shift = rep_.group()->add(shift, w);
          const auto& src = reach[i + 1][r - e];
          auto& dst = reach[i][r];
          for (long x = 0; x < An; ++x)
            if (src[x]) dst[rep_.group()->add(x, shift)] = true;
        }
      }
    }
    Monomial m(v);
    std::function<void(size_t, long, long)> dfs = [&](size_t i, long rem, long wsum) {
      if (i == v) {
        if (rem == 0 && wsum == 0) {
          out.push_back(m);
          if (++enumerated_ > budget_)
            throw budget_error("invariant engine: monomial budget exceeded");
        }
        return;
      }
      long w = rep_.variables()[i].weight;
      long shift = 0;
      for (long e = 0; e <= rem; ++e) {
        if (e) shift = rep_.group()->add(shift, w);
        long need = rep_.group()->neg(rep_.group()->add(wsum, shift));
        if (reach[i + 1][rem - e][need]) {
          m.set_exp(i, static_cast<std::uint16_t>(e));
          dfs(i + 1, rem - e, rep_.group()->add(wsum, shift));
        }
      }
      m.set_exp(i, 0);
    };
    dfs(0, d, 0);
  }

  void ensure_r(long d) {
    if (rbasis_.count(d)) return;
    auto& basis = rbasis_[d];
    auto& span = rspan_.emplace(d, RowSpan()).first->second;
    for (const auto& tau : transfer_generators(d))
      if (span.insert(vec_of(tau))) basis.push_back(tau);
  }

  void ensure_power(long j, long d) {
    if (pspan_.count({j, d})) return;
    ensure_r(d);
    if (j == 1) {
      // reuse R_d's span content by re-inserting the basis
      RowSpan span;
      std::vector<Polynomial> basis = rbasis_.at(d);
      for (const auto& f : basis) span.insert(vec_of(f));
      pspan_.emplace(std::make_pair(j, d), std::move(span));
      pbasis_.emplace(std::make_pair(j, d), std::move(basis));
      return;
    }
    RowSpan span;
    std::vector<Polynomial> basis;
    long target = r_dim(d);
    bool full = false;
    // Some factor of a j-fold product has degree <= d/j; take it from R_e.
    for (long e = 1; e <= d / j && !full; ++e) {
      ensure_r(e);
      if (rbasis_.at(e).empty()) continue;
      if (j > 2) ensure_power(j - 1, d - e);
      else ensure_r(d - e);
      const auto& right = (j == 2) ? rbasis_.at(d - e) : pbasis_.at({j - 1, d - e});
      for (const auto& a : rbasis_.at(e)) {
        for (const auto& b : right) {
          Polynomial prod = a * b;
          if (prod.is_zero()) continue;
          if (span.insert(vec_of(prod))) {
            basis.push_back(prod);
            if (static_cast<long>(span.rank()) == target) {
              full = true;  // the power piece already fills R_d
              break;
            }
          }
        }
        if (full) break;
      }
    }
    pspan_.emplace(std::make_pair(j, d), std::move(span));
    pbasis_.emplace(std::make_pair(j, d), std::move(basis));
  }

  MonomialRep rep_;
  std::uint64_t budget_;
  std::uint64_t enumerated_ = 0;
  std::map<long, std::vector<Monomial>> ainv_;
  std::map<long, std::map<Monomial, std::uint32_t>> cols_;
  std::map<long, std::vector<Polynomial>> rgens_;
  std::map<long, std::vector<Polynomial>> rbasis_;
  std::map<long, RowSpan> rspan_;
  std::map<std::pair<long, long>, RowSpan> pspan_;
  std::map<std::pair<long, long>, std::vector<Polynomial>> pbasis_;
};

/// Spanning set of (F[V]^G)_d by transfers, deduplicated up to g-orbit.
inline std::vector<Polynomial> invariant_basis(const MonomialRep& rep, long d) {
  InvariantEngine eng(rep);
  return eng.transfer_generators(d);
}

inline BetaScanResult beta_k_of_module(const MonomialRep& rep, long k, long cap) {
  InvariantEngine eng(rep);
  return eng.beta_k_of_module(k, cap);
}

inline bool in_power_ideal(const Polynomial& f, const MonomialRep& rep, long k) {
  InvariantEngine eng(rep);
  return eng.in_power_ideal(f, k);
}

// ---------------------------------------------------------------------------
// Transfer-identity verifications
// ---------------------------------------------------------------------------

struct SampledCheckReport {
  std::string name;
  long samples = 0;
  long failures = 0;
  unsigned seed = 0;
  bool pass() const { return failures == 0; }
};

/// Checks on random samples that a product of [G:A] A-invariant monomials
/// lies in I_+ R_+ + R_+ at its degree (the index-power containment for
/// the maximal ideals of the two invariant rings).
inline SampledCheckReport verify_knopeta(InvariantEngine& eng, long samples, unsigned seed,
                                         long max_factor_degree = 4) {
  const auto& rep = eng.rep();
  SampledCheckReport rep_out{"knopeta", 0, 0, seed};
  long n = rep.quotient_order();
  if (n == 1) {
    // G = A: I = R and the containment is the trivial I_+^1 in I_+.
    rep_out.samples = samples;
    return rep_out;
  }

  std::vector<Monomial> pool;
  for (long d = 1; d <= max_factor_degree; ++d)
    for (const auto& m : eng.ainv_monomials(d)) pool.push_back(m);
  if (pool.empty()) throw input_error("verify_knopeta: no A-invariant monomials in range");

  std::mt19937 rng(seed);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);

  // span of (I_+ R_+ + R_+)_d, cached per degree
  std::map<long, RowSpan> spans;
  auto span_for = [&](long d) -> RowSpan& {
    auto it = spans.find(d);
    if (it != spans.end()) return it->second;
    RowSpan& span = spans[d];
    for (const auto& f : eng.r_basis(d)) span.insert(eng.vectorize(f));
    for (long e = 1; e < d; ++e) {
      if (eng.r_dim(d - e) == 0) continue;
      for (const auto& u : eng.ainv_monomials(e))
        for (const auto& r : eng.r_basis(d - e)) {
          Polynomial prod = Polynomial::monomial(u) * r;
          span.insert(eng.vectorize(prod));
        }
    }
    return span;
  };

  for (long i = 0; i < samples; ++i) {
    Monomial prod(rep.nvars());
    for (long t = 0; t < n; ++t) prod = prod * pool[pick(rng)];
    ++rep_out.samples;
    auto& span = span_for(prod.degree());
    if (!span.contains(eng.vectorize(Polynomial::monomial(prod)))) ++rep_out.failures;
  }
  return rep_out;
}

/// The six-term transfer identity for quotient order 3:
///   3(uvw - u v^g w^{g^2})
///     = uv t(w) + uw t(v) + u t(vw) - u t(v w^g) - u w^{g^2} t(v) - u v^g t(w).
inline bool verify_trukk(const MonomialRep& rep, const Monomial& u, const Monomial& v,
                         const Monomial& w) {
  if (rep.quotient_order() != 3) throw input_error("verify_trukk: quotient order must be 3");
  for (const Monomial* m : {&u, &v, &w})
    if (!rep.is_a_invariant(*m)) throw input_error("verify_trukk: factors must be A-invariant");

  auto P = [](const Monomial& m) { return Polynomial::monomial(m); };
  auto img = [&](const Monomial& m, long j) {
    auto [mi, s] = rep.monomial_image(m, j);
    return Polynomial::term(mi, rep_scalar(rep, s));
  };
  Polynomial pu = P(u), pv = P(v), pw = P(w);
  Polynomial vg = img(v, 1), wg2 = img(w, 2), wg1 = img(w, 1);

  Polynomial lhs = Cyclo(3) * (pu * pv * pw - pu * vg * wg2);
  Polynomial rhs = pu * pv * transfer(w, rep) + pu * pw * transfer(v, rep);
  {
    Monomial vw = v * w;
    rhs = rhs + pu * transfer(vw, rep);
    auto [vwg, s] = rep.monomial_image(w, 1);
    Monomial vwg_m = v * vwg;
    rhs = rhs - pu * (rep_scalar(rep, s) * transfer(vwg_m, rep));
  }
  rhs = rhs - pu * wg2 * transfer(v, rep) - pu * vg * transfer(w, rep);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Gapless degree claims (bounded-exhaustive)
// ---------------------------------------------------------------------------

struct GaplessClaimReport {
  std::string claim;
  long p = 0, q = 0, c = 0, e = 0;
  long degree_lo = 0, degree_hi = 0;
  long divisor_bound = 0;   // for the divisor claims
  long degree_bound = 0;    // for the brick claim
  long sequences_checked = 0;
  long gapless_count = 0;
  long violations = 0;
  std::vector<Sequence> counterexamples;
  bool pass() const { return violations == 0; }
};

namespace detail {

/// Walks all multisets of the given size over `elems`, presented as
/// multiplicity vectors.
inline void for_each_multiset(const std::vector<long>& elems, long size,
                              const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> mult(elems.size(), 0);
  std::function<void(size_t, long)> rec = [&](size_t i, long rem) {
    if (i + 1 == elems.size()) {
      mult[i] = rem;
      fn(mult);
      mult[i] = 0;
      return;
    }
    for (long take = 0; take <= rem; ++take) {
      mult[i] = take;
      rec(i + 1, rem - take);
    }
    mult[i] = 0;
  };
  if (!elems.empty()) rec(0, size);
}

/// Gaplessness straight from a multiplicity vector: within each orbit the
/// nested rows R_i = {w : mult_w >= i} must strictly shrink or stay the
/// whole orbit, for every level below the global height.
inline bool gapless_mults(const std::vector<long>& elems, const std::vector<long>& mult,
                          const MonomialRep& rep) {
  long h = 0;
  for (long m : mult) h = std::max(h, m);
  for (const auto& O : rep.orbits()) {
    if (O.size() == 1 && O[0] == 0) continue;  // zero orbit never blocks
    std::vector<long> omults;
    for (size_t i = 0; i < elems.size(); ++i)
      if (rep.orbit_of(elems[i]) == rep.orbit_of(O[0]) && mult[i] > 0)
        omults.push_back(mult[i]);
    if (omults.empty()) continue;
    for (long level = 1; level < h; ++level) {
      long cur = 0, nxt = 0;
      for (long m : omults) {
        if (m >= level) ++cur;
        if (m >= level + 1) ++nxt;
      }
      if (cur == 0) continue;
      if (cur == nxt && cur != static_cast<long>(O.size())) return false;
    }
  }
  return true;
}

/// Minimal length of a non-empty zero-sum sub-multiset, capped at `maxlen`.
inline bool has_zero_sum_of_length_at_most(const AbelianGroup& A, const std::vector<long>& elems,
                                           const std::vector<long>& mult, long maxlen) {
  const long INF = 1 << 29;
  std::vector<long> dist(static_cast<size_t>(A.order()), INF);
  for (size_t i = 0; i < elems.size(); ++i) {
    if (!mult[i]) continue;
    auto prev = dist;
    long base0 = 0;  // empty start
    long sum = 0;
    for (long j = 1; j <= mult[i]; ++j) {
      sum = A.add(sum, elems[i]);
      dist[sum] = std::min(dist[sum], base0 + j);
    }
    for (long from = 0; from < A.order(); ++from) {
      if (prev[from] >= INF) continue;
      long s2 = from;
      for (long j = 1; j <= mult[i]; ++j) {
        s2 = A.add(s2, elems[i]);
        dist[s2] = std::min(dist[s2], prev[from] + j);
      }
    }
  }
  return dist[0] <= maxlen;
}

}  // namespace detail

/// Brick claim on an isotypic module: every gapless monomial of degree >
/// binomial(|O|-s+1, 2) is divisible by a brick (s the index of a minimal
/// non-trivial quotient subgroup).  Verified exhaustively over weight
/// multisets up to `extra` degrees past the bound.
inline GaplessClaimReport verify_binom_claim(const MonomialRep& rep, long extra = 3) {
  GaplessClaimReport out;
  out.claim = "binom";
  // isotypic: all variable weights non-zero and in one orbit
  int oi = -1;
  for (const auto& v : rep.variables()) {
    if (v.weight == 0) throw input_error("verify_binom_claim: module is not isotypic");
    if (oi < 0) oi = rep.orbit_of(v.weight);
    else if (oi != rep.orbit_of(v.weight))
      throw input_error("verify_binom_claim: module is not isotypic");
  }
  if (oi < 0) throw input_error("verify_binom_claim: no variables");
  const auto& O = rep.orbits()[static_cast<size_t>(oi)];

  // A minimal subgroup <g^t> has index t; the row bound holds for each of
  // them simultaneously, so the largest index gives the sharpest claim.
  long s = 0;
  for (long t : rep.minimal_subgroup_powers()) s = std::max(s, t);
  if (s == 0) throw input_error("verify_binom_claim: trivial quotient");

  long bound = (static_cast<long>(O.size()) - s + 1) * (static_cast<long>(O.size()) - s) / 2;
  out.degree_bound = bound;
  out.degree_lo = bound + 1;
  out.degree_hi = bound + extra;

  auto A = rep.group();
  for (long d = out.degree_lo; d <= out.degree_hi; ++d) {
    detail::for_each_multiset(O, d, [&](const std::vector<long>& mult) {
      ++out.sequences_checked;
      if (!detail::gapless_mults(O, mult, rep)) return;
      ++out.gapless_count;
      // brick-free: no minimal-subgroup orbit inside the support
      bool brickfree = true;
      for (long t : rep.minimal_subgroup_powers()) {
        for (size_t i = 0; i < O.size() && brickfree; ++i) {
          if (!mult[i]) continue;
          bool whole = true;
          long cur = O[i];
          do {
            size_t pos = std::lower_bound(O.begin(), O.end(), cur) - O.begin();
            if (pos >= O.size() || O[pos] != cur || !mult[pos]) {
              whole = false;
              break;
            }
            cur = rep.dual_apply(cur, t);
          } while (cur != O[i]);
          if (whole) brickfree = false;
        }
        if (!brickfree) break;
      }
      if (brickfree) {
        ++out.violations;
        if (out.counterexamples.size() < 5) {
          Sequence seq(A);
          for (size_t i = 0; i < O.size(); ++i)
            if (mult[i]) seq.push(O[i], mult[i]);
          out.counterexamples.push_back(seq);
        }
      }
    });
  }
  return out;
}

/// Divisor claims for G = Z_p x| Z_q: every gapless weight multiset over
/// the non-zero dual weights of degree >= degree_lo has a zero-sum
/// sub-multiset of length <= divisor_bound.
///   - "nagy":  degree_lo = min(p, (p + q(q-2))/2), divisor bound q;
///   - "kicsi": degree_lo = p + C(e,2), divisor bound c - e, for
///     parameters with C(c,2) < p <= C(c+1,2) - C(e+1,2), c <= q.
inline GaplessClaimReport verify_gapless_divisor_claim(const MonomialRep& rep,
                                                       const std::string& claim, long c = 0,
                                                       long e = 0, long window = 2) {
  auto A = rep.group();
  if (A->rank() != 1) throw input_error("gapless divisor claim: A must be cyclic");
  long p = A->order();
  long q = rep.quotient_order();
  GaplessClaimReport out;
  out.claim = claim;
  out.p = p;
  out.q = q;

  if (claim == "nagy") {
    out.degree_lo = std::min(p, (p + q * (q - 2)) / 2);
    out.divisor_bound = q;
  } else if (claim == "kicsi") {
    if (c <= 0 || e <= 0) throw input_error("kicsi: parameters c and e required");
    if (!(c <= q && c * (c - 1) / 2 < p &&
          p <= (c + 1) * c / 2 - (e + 1) * e / 2))
      throw input_error("kicsi: parameters out of range");
    out.c = c;
    out.e = e;
    out.degree_lo = p + e * (e - 1) / 2;
    out.divisor_bound = c - e;
  } else {
    throw input_error("gapless divisor claim: unknown claim " + claim);
  }
  out.degree_hi = out.degree_lo + window;

  std::vector<long> elems;
  for (long w = 1; w < p; ++w) elems.push_back(w);

  for (long d = out.degree_lo; d <= out.degree_hi; ++d) {
    detail::for_each_multiset(elems, d, [&](const std::vector<long>& mult) {
      ++out.sequences_checked;
      if (!detail::gapless_mults(elems, mult, rep)) return;
      ++out.gapless_count;
      if (!detail::has_zero_sum_of_length_at_most(*A, elems, mult, out.divisor_bound)) {
        ++out.violations;
        if (out.counterexamples.size() < 5) {
          Sequence seq(A);
          for (size_t i = 0; i < elems.size(); ++i)
            if (mult[i]) seq.push(elems[i], mult[i]);
          out.counterexamples.push_back(seq);
        }
      }
    });
  }
  return out;
}

/// Dispatcher matching the named claims.
inline GaplessClaimReport verify_gapless_degree_claims(const MonomialRep& rep,
                                                       const std::string& claim, long c = 0,
                                                       long e = 0) {
  if (claim == "binom") return verify_binom_claim(rep);
  return verify_gapless_divisor_claim(rep, claim, c, e);
}

}  // namespace nlab
