#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "noetherlab/errors.hpp"

namespace nlab {

using Rational = mpq_class;

/// Phi_n as an integer-coefficient polynomial (index = power), computed by
/// dividing x^n - 1 by the cyclotomic polynomials of the proper divisors.
inline std::vector<long> cyclo_poly(long n) {
  if (n < 1) throw input_error("cyclo_poly: n must be >= 1");
  static std::map<long, std::vector<long>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::function<const std::vector<long>&(long)> get = [&](long m) -> const std::vector<long>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<long> num(static_cast<size_t>(m) + 1, 0);
    num[0] = -1;
    num[m] = 1;  // x^m - 1
    for (long d = 1; d < m; ++d) {
      if (m % d) continue;
      const auto& phi_d = get(d);
      // exact division num /= phi_d (both monic over Z)
      std::vector<long> q(num.size() - phi_d.size() + 1, 0);
      std::vector<long> rem = num;
      for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        long coef = rem[i + phi_d.size() - 1];
        q[i] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= coef * phi_d[j];
      }
      for (long r : rem)
        if (r != 0) throw internal_error("cyclo_poly: non-exact division");
      num = std::move(q);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

inline long euler_phi(long n) {
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    r -= r / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace detail {

/// Per-modulus reduction data: rows expressing x^k mod Phi_n for
/// k = phi(n) .. 2*phi(n)-2.
struct CycloContext {
  long n;
  long deg;                              // phi(n)
  std::vector<std::vector<long>> high;   // high[k-deg] = coefficients of x^k mod Phi_n

  explicit CycloContext(long mod) : n(mod) {
    auto phi = cyclo_poly(n);
    deg = static_cast<long>(phi.size()) - 1;
    std::vector<long> cur(static_cast<size_t>(deg), 0);
    // x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1})
    for (long i = 0; i < deg; ++i) cur[i] = -phi[i];
    high.push_back(cur);
    for (long k = deg + 1; k <= 2 * deg - 2; ++k) {
      std::vector<long> nxt(static_cast<size_t>(deg), 0);
      // multiply by x, then reduce the overflow term via high[0]
      long top = cur[deg - 1];
      for (long i = deg - 1; i >= 1; --i) nxt[i] = cur[i - 1];
      nxt[0] = 0;
      if (top != 0)
        for (long i = 0; i < deg; ++i) nxt[i] += top * high[0][i];
      high.push_back(nxt);
      cur = nxt;
    }
  }
};

inline std::shared_ptr<const CycloContext> cyclo_context(long n) {
  static std::map<long, std::shared_ptr<const CycloContext>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<CycloContext>(n);
  return slot;
}

}  // namespace detail

/// Exact element of Q(zeta_n): rational coefficients of a polynomial in
/// zeta_n of degree < phi(n).  For n in {1, 2} this degrades to a plain
/// rational, which is the fast path the engines rely on.
class Cyclo {
public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}

  explicit Cyclo(const Rational& r, long n = 1) : n_(n), c_(euler_phi(n), Rational(0)) {
    c_[0] = r;
    canon();
  }
  explicit Cyclo(long v, long n = 1) : Cyclo(Rational(v), n) {}

  /// zeta_n^k.
  static Cyclo root(long n, long k = 1) {
    Cyclo z;
    z.n_ = n;
    z.c_.assign(static_cast<size_t>(euler_phi(n)), Rational(0));
    k = ((k % n) + n) % n;
    long deg = static_cast<long>(z.c_.size());
    if (k < deg) {
      z.c_[k] = 1;
    } else {
      // compute x^k mod Phi by repeated multiply-by-x starting from x^(deg-1)
      auto ctx = detail::cyclo_context(n);
      std::vector<Rational> cur(static_cast<size_t>(deg), Rational(0));
      cur[deg - 1] = 1;
      for (long i = deg - 1; i < k; ++i) {
        std::vector<Rational> nxt(static_cast<size_t>(deg), Rational(0));
        Rational top = cur[deg - 1];
        for (long j = deg - 1; j >= 1; --j) nxt[j] = cur[j - 1];
        if (sgn(top) != 0)
          for (long j = 0; j < deg; ++j) nxt[j] += top * ctx->high[0][j];
        cur = std::move(nxt);
      }
      z.c_ = std::move(cur);
    }
    z.canon();
    return z;
  }

  long modulus() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) throw internal_error("Cyclo: not a rational value");
    return c_[0];
  }

  /// Rewrites the value in Q(zeta_m); requires n | m.
  Cyclo embedded(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw input_error("Cyclo: embedding requires modulus divisibility");
    Cyclo out(Rational(0), m);
    long step = m / n_;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      Cyclo term = root(m, step * static_cast<long>(i));
      for (size_t j = 0; j < term.c_.size(); ++j) out.c_[j] += c_[i] * term.c_[j];
    }
    out.canon();
    return out;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = reconcile(a, b);
    for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] += y.c_[i];
    x.canon();
    return x;
  }
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = reconcile(a, b);
    for (size_t i = 0; i < y.c_.size(); ++i) x.c_[i] -= y.c_[i];
    x.canon();
    return x;
  }
  friend Cyclo operator-(const Cyclo& a) {
    Cyclo x = a;
    for (auto& v : x.c_) v = -v;
    return x;
  }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = reconcile(a, b);
    long deg = static_cast<long>(x.c_.size());
    if (deg == 1) {
      x.c_[0] *= y.c_[0];
      return x;
    }
    std::vector<Rational> prod(static_cast<size_t>(2 * deg - 1), Rational(0));
    for (long i = 0; i < deg; ++i) {
      if (sgn(x.c_[i]) == 0) continue;
      for (long j = 0; j < deg; ++j) {
        if (sgn(y.c_[j]) == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    auto ctx = detail::cyclo_context(x.n_);
    Cyclo out(Rational(0), x.n_);
    for (long i = 0; i < deg; ++i) out.c_[i] = prod[i];
    for (long k = deg; k <= 2 * deg - 2; ++k) {
      if (sgn(prod[k]) == 0) continue;
      const auto& row = ctx->high[k - deg];
      for (long i = 0; i < deg; ++i)
        if (row[i] != 0) out.c_[i] += prod[k] * row[i];
    }
    out.canon();
    return out;
  }

  Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
  Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
  Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }

  /// Multiplicative inverse via the extended Euclidean algorithm against
  /// Phi_n (irreducible over Q, so every non-zero element is a unit).
  Cyclo inverse() const {
    if (is_zero()) throw input_error("Cyclo: inversion of zero");
    if (c_.size() == 1) {
      Cyclo out(Rational(0), n_);
      out.c_[0] = 1 / c_[0];
      return out;
    }
    using Poly = std::vector<Rational>;
    auto degree = [](const Poly& p) {
      for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (sgn(p[i]) != 0) return i;
      return -1L;
    };
    auto phiL = cyclo_poly(n_);
    Poly r0(phiL.begin(), phiL.end());
    Poly r1(c_.begin(), c_.end());
    Poly s0(1, Rational(0)), s1(1, Rational(1));  // coefficients of the input
    while (true) {
      long d1 = degree(r1);
      if (d1 < 0) throw internal_error("Cyclo: gcd with Phi_n degenerated");
      if (d1 == 0) break;
      long d0 = degree(r0);
      if (d0 < d1) {
        std::swap(r0, r1);
        std::swap(s0, s1);
        continue;
      }
      // r0 -= (lead ratio) x^(d0-d1) * r1, same for s
      Rational f = r0[d0] / r1[d1];
      long shift = d0 - d1;
      for (long i = 0; i <= d1; ++i) r0[i + shift] -= f * r1[i];
      if (static_cast<long>(s0.size()) < static_cast<long>(s1.size()) + shift)
        s0.resize(s1.size() + shift, Rational(0));
      for (size_t i = 0; i < s1.size(); ++i) s0[i + shift] -= f * s1[i];
    }
    // r1 is a non-zero constant c: inverse = s1 / c reduced mod Phi.
    Rational c = r1[0];
    Cyclo out(Rational(0), n_);
    Cyclo acc(Rational(0), n_);
    for (size_t i = 0; i < s1.size(); ++i) {
      if (sgn(s1[i]) == 0) continue;
      Cyclo term = root(n_, static_cast<long>(i));
      for (size_t j = 0; j < term.c_.size(); ++j) acc.c_[j] += s1[i] * term.c_[j];
    }
    for (size_t j = 0; j < acc.c_.size(); ++j) out.c_[j] = acc.c_[j] / c;
    out.canon();
    return out;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  std::string str() const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (sgn(c_[i]) == 0) continue;
      if (any) os << " + ";
      os << c_[i].get_str();
      if (i > 0) os << "*z" << n_ << "^" << i;
      any = true;
    }
    if (!any) os << "0";
    return os.str();
  }

private:
  void canon() {
    for (auto& v : c_) v.canonicalize();
  }

  /// Brings two values to a common modulus (their lcm).
  static std::pair<Cyclo, Cyclo> reconcile(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return {a, b};
    long m = std::lcm(a.n_, b.n_);
    return {a.embedded(m), b.embedded(m)};
  }

  long n_;
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Exact sparse linear algebra over Q(zeta_n)
// ---------------------------------------------------------------------------

/// Sparse vector: (column, coefficient) sorted by column, no zeros stored.
using SparseVec = std::vector<std::pair<std::uint32_t, Cyclo>>;

inline void sparse_normalize(SparseVec& v) {
  v.erase(std::remove_if(v.begin(), v.end(), [](auto& p) { return p.second.is_zero(); }),
          v.end());
}

/// r -= f * p  (merge by column).
inline SparseVec sparse_axpy(const SparseVec& r, const Cyclo& f, const SparseVec& p) {
  SparseVec out;
  out.reserve(r.size() + p.size());
  size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j >= p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i >= r.size() || p[j].first < r[i].first) {
      Cyclo c = -(f * p[j].second);
      if (!c.is_zero()) out.emplace_back(p[j].first, std::move(c));
      ++j;
    } else {
      Cyclo c = r[i].second - f * p[j].second;
      if (!c.is_zero()) out.emplace_back(r[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

/// Incremental exact row echelon form.  Rows are normalized to leading
/// coefficient 1 and fully usable as a membership oracle.  Optionally
/// tracks each reduction as a combination of the original inserted
/// vectors, which yields membership witnesses.
class RowSpan {
public:
  explicit RowSpan(bool track_witness = false) : track_(track_witness) {}

  size_t rank() const { return pivots_.size(); }

  /// Reduces v against the span; returns the residual (empty = member).
  /// When tracking, *combo receives the coefficients of the inserted
  /// generators that were subtracted.
  SparseVec reduce(SparseVec v, std::map<std::uint32_t, Cyclo>* combo = nullptr) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      Cyclo f = v.front().second;  // pivot rows have leading coefficient 1
      if (combo && track_) {
        for (auto& [gen, c] : combos_.at(it->first)) {
          auto& slot = (*combo)[gen];
          slot += f * c;
        }
      }
      v = sparse_axpy(v, f, it->second);
    }
    return v;
  }

  /// Returns true if v enlarged the span.
  bool insert(SparseVec v, std::uint32_t generator_id = 0) {
    std::map<std::uint32_t, Cyclo> combo;
    SparseVec red = reduce(std::move(v), track_ ? &combo : nullptr);
    if (red.empty()) return false;
    Cyclo lead = red.front().second;
    Cyclo inv = lead.inverse();
    for (auto& [col, c] : red) c *= inv;
    if (track_) {
      std::vector<std::pair<std::uint32_t, Cyclo>> own;
      own.emplace_back(generator_id, inv);
      for (auto& [gen, c] : combo) {
        Cyclo scaled = -(inv * c);
        if (!scaled.is_zero()) own.emplace_back(gen, scaled);
      }
      combos_[red.front().first] = std::move(own);
    }
    pivots_.emplace(red.front().first, std::move(red));
    return true;
  }

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }

private:
  bool track_;
  std::map<std::uint32_t, SparseVec> pivots_;
  // pivot col -> combination of generator ids giving that row
  std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, Cyclo>>> combos_;
};

struct MembershipResult {
  bool member = false;
  // witness: coefficients over the spanning list, indices into `spanning`
  std::vector<std::pair<size_t, Cyclo>> combination;
};

/// Is target in the span of `spanning`?  Exact elimination; on success the
/// witness satisfies target = sum_i c_i * spanning[i].
inline MembershipResult solve_membership(const SparseVec& target,
                                         const std::vector<SparseVec>& spanning) {
  RowSpan span(/*track_witness=*/true);
  for (size_t i = 0; i < spanning.size(); ++i)
    span.insert(spanning[i], static_cast<std::uint32_t>(i));
  std::map<std::uint32_t, Cyclo> combo;
  SparseVec residual = span.reduce(target, &combo);
  MembershipResult res;
  res.member = residual.empty();
  if (res.member)
    for (auto& [gen, c] : combo)
      if (!c.is_zero()) res.combination.emplace_back(gen, c);
  return res;
}

}  // namespace nlab
