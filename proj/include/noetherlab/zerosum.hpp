#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

#include "noetherlab/abelian.hpp"
#include "noetherlab/errors.hpp"

namespace nlab {

/// Node and wall-clock caps for the exhaustive searches.  Exceeding either
/// raises budget_error; there is no silent degradation.
struct SearchBudget {
  std::uint64_t node_cap = 100000000ULL;
  long wall_ms_cap = 600000;

  struct State {
    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  };

  void tick(State& st, const char* where) const {
    if (++st.nodes > node_cap) throw budget_error(std::string(where) + ": node cap exceeded");
    if ((st.nodes & 0xfff) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - st.start)
                    .count();
      if (ms > wall_ms_cap) throw budget_error(std::string(where) + ": wall clock cap exceeded");
    }
  }
};

/// Finite multiset over a group (the group doubles as its own dual, so
/// these are the weight/zero-sum sequences).  Entries are kept sorted by
/// element index, which fixes iteration order and equality.
class Sequence {
public:
  Sequence() = default;
  explicit Sequence(AbelianGroupPtr parent) : parent_(std::move(parent)) {}

  Sequence(AbelianGroupPtr parent, const std::vector<long>& element_indices)
      : parent_(std::move(parent)) {
    for (long e : element_indices) push(e, 1);
  }

  static Sequence from_elements(const std::vector<GroupElement>& elems) {
    if (elems.empty()) throw input_error("Sequence::from_elements: cannot infer parent");
    Sequence s(elems.front().parent());
    for (const auto& e : elems) s.push(e.index(), 1);
    return s;
  }

  const AbelianGroupPtr& parent() const { return parent_; }
  const std::vector<std::pair<long, long>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  long length() const {
    long n = 0;
    for (auto& [e, m] : entries_) n += m;
    return n;
  }

  /// Maximal multiplicity (0 for the empty sequence).
  long height() const {
    long h = 0;
    for (auto& [e, m] : entries_) h = std::max(h, m);
    return h;
  }

  long multiplicity(long elem) const {
    for (auto& [e, m] : entries_)
      if (e == elem) return m;
    return 0;
  }

  void push(long elem, long mult) {
    if (mult == 0) return;
    if (mult < 0) throw input_error("Sequence: negative multiplicity");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(elem, 0L),
                               [](auto& a, auto& b) { return a.first < b.first; });
    if (it != entries_.end() && it->first == elem) it->second += mult;
    else entries_.insert(it, {elem, mult});
  }

  void push(const GroupElement& e, long mult = 1) { push(e.index(), mult); }

  void pop(long elem, long mult = 1) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(elem, 0L),
                               [](auto& a, auto& b) { return a.first < b.first; });
    if (it == entries_.end() || it->first != elem || it->second < mult)
      throw input_error("Sequence::pop: not enough copies");
    it->second -= mult;
    if (it->second == 0) entries_.erase(it);
  }

  Sequence concat(const Sequence& other) const {
    Sequence s = *this;
    for (auto& [e, m] : other.entries_) s.push(e, m);
    return s;
  }

  /// Removes `other` as a sub-multiset; errors if it is not contained.
  Sequence remove(const Sequence& other) const {
    Sequence s = *this;
    for (auto& [e, m] : other.entries_) s.pop(e, m);
    return s;
  }

  bool contains(const Sequence& other) const {
    for (auto& [e, m] : other.entries_)
      if (multiplicity(e) < m) return false;
    return true;
  }

  /// Image under the multiplication-by-u automorphism; same length and
  /// height, possibly different support.
  Sequence unit_image(long u) const {
    Sequence s(parent_);
    for (auto& [e, m] : entries_) s.push(parent_->unit_action(u, e), m);
    return s;
  }

  long sigma_index() const {
    long s = 0;
    for (auto& [e, m] : entries_) s = parent_->add(s, parent_->scalar_mul(m, e));
    return s;
  }

  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const Sequence& a, const Sequence& b) { return !(a == b); }
  friend bool operator<(const Sequence& a, const Sequence& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.entries_ < b.entries_;
  }

  std::vector<long> flatten() const {
    std::vector<long> out;
    for (auto& [e, m] : entries_)
      for (long i = 0; i < m; ++i) out.push_back(e);
    return out;
  }

  std::string str() const {
    if (entries_.empty()) return "()";
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& [e, m] : entries_) {
      if (!first) os << " ";
      first = false;
      GroupElement g(parent_, e);
      if (parent_->rank() == 1) os << g.coords()[0];
      else os << g.str();
      if (m > 1) os << "^" << m;
    }
    os << ")";
    return os.str();
  }

  /// Stable key for memo tables.
  std::string key() const {
    std::string k;
    for (auto& [e, m] : entries_) {
      k += std::to_string(e);
      k += ':';
      k += std::to_string(m);
      k += ';';
    }
    return k;
  }

private:
  AbelianGroupPtr parent_;
  std::vector<std::pair<long, long>> entries_;  // (element index, multiplicity)
};

struct Factorization {
  std::vector<Sequence> parts;
};

inline GroupElement sigma(const Sequence& s) { return {s.parent(), s.sigma_index()}; }

namespace detail {

/// Subset-sum bitset over element indices of a small group.
class SumSet {
public:
  explicit SumSet(long order) : order_(order), bits_((order + 63) / 64, 0) {}

  bool test(long i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  void set(long i) { bits_[i >> 6] |= (1ULL << (i & 63)); }

  /// sums := sums ∪ (sums + a)
  void fold_in(const AbelianGroup& A, long a) {
    SumSet shifted(order_);
    for (long i = 0; i < order_; ++i)
      if (test(i)) shifted.set(A.add(i, a));
    for (size_t w = 0; w < bits_.size(); ++w) bits_[w] |= shifted.bits_[w];
  }

  long count() const {
    long c = 0;
    for (auto w : bits_) c += __builtin_popcountll(w);
    return c;
  }

  std::vector<long> to_indices() const {
    std::vector<long> out;
    for (long i = 0; i < order_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

private:
  long order_;
  std::vector<std::uint64_t> bits_;
};

/// Number of sub-multisets of s with the given sum, saturated at `sat`.
/// The empty subset and (when it applies) the full sequence both count.
inline long count_subsets_with_sum(const Sequence& s, long target, long sat = 4) {
  const auto& A = *s.parent();
  std::vector<long> cnt(static_cast<size_t>(A.order()), 0);
  cnt[0] = 1;
  std::vector<long> next(cnt.size(), 0);
  for (auto& [e, m] : s.entries()) {
    std::fill(next.begin(), next.end(), 0L);
    long shift = 0;
    for (long j = 0; j <= m; ++j) {
      for (long i = 0; i < A.order(); ++i) {
        if (!cnt[i]) continue;
        long t = A.add(i, shift);
        next[t] = std::min(sat, next[t] + cnt[i]);
      }
      shift = A.add(shift, e);
    }
    cnt.swap(next);
  }
  return cnt[target];
}

}  // namespace detail

/// Σ(S): the set of all subset sums, including 0 for the empty subset.
inline std::vector<GroupElement> subset_sums(const Sequence& s) {
  const auto& A = s.parent();
  detail::SumSet sums(A->order());
  sums.set(0);
  for (auto& [e, m] : s.entries())
    for (long i = 0; i < m; ++i) sums.fold_in(*A, e);
  std::vector<GroupElement> out;
  for (long i : sums.to_indices()) out.emplace_back(A, i);
  return out;
}

/// True iff s sums to zero and no proper non-empty sub-multiset does.
inline bool is_irreducible_zero_sum(const Sequence& s) {
  if (s.empty()) throw input_error("is_irreducible_zero_sum: empty sequence");
  if (s.sigma_index() != 0) return false;
  // Subsets summing to 0 always include the empty subset and (here) the
  // full sequence; any further one is a proper zero-sum.
  return detail::count_subsets_with_sum(s, 0) == 2;
}

/// Complete, duplicate-free list of irreducible zero-sum sequences of
/// length <= max_len, ordered by (length, entry list).
///
/// The search walks zero-sum-free prefixes in non-decreasing element order
/// and closes each with -sigma(prefix); a closure is irreducible exactly
/// when no proper subset of the prefix reaches sigma(prefix).
inline std::vector<Sequence> enumerate_irreducibles(const AbelianGroupPtr& A, long max_len,
                                                    const SearchBudget& budget = {}) {
  std::vector<Sequence> out;
  if (max_len < 1) return out;
  SearchBudget::State st;
  out.emplace_back(A, std::vector<long>{0});  // (0) is irreducible of length 1

  Sequence prefix(A);
  detail::SumSet sums(A->order());  // sums of non-empty subsets of prefix

  std::function<void(long, long, long)> dfs = [&](long last, long len, long sig) {
    budget.tick(st, "enumerate_irreducibles");
    if (len >= 1 && len + 1 <= max_len) {
      long close = A->neg(sig);
      if (close >= last && detail::count_subsets_with_sum(prefix, sig) == 1) {
        Sequence cand = prefix;
        cand.push(close, 1);
        out.push_back(cand);
      }
    }
    if (len + 2 > max_len) return;  // no room for another element plus the closure
    for (long a = std::max(last, 1L); a < A->order(); ++a) {
      if (sums.test(A->neg(a))) continue;  // would create a zero-sum subset
      detail::SumSet saved = sums;
      sums.fold_in(*A, a);
      sums.set(a);
      prefix.push(a, 1);
      dfs(a, len + 1, A->add(sig, a));
      prefix.pop(a);
      sums = saved;
    }
  };
  dfs(1, 0, 0);

  std::sort(out.begin(), out.end());
  return out;
}

struct DavenportResult {
  long value = 0;
  Sequence witness;  // an irreducible zero-sum sequence of maximal length
  std::uint64_t nodes = 0;
  double wall_ms = 0;
};

/// D(A): 1 + the longest zero-sum-free sequence length, by DFS over
/// non-decreasing sequences of non-zero elements with subset-sum pruning.
/// Root elements are restricted to unit-orbit representatives: units act
/// length-preservingly on zero-sum-free sequences, and iterating "apply a
/// unit shrinking the least element" yields a maximal sequence whose least
/// element is minimal in its own unit orbit.  Root branches are
/// independent, so `threads` > 1 splits them across workers.
inline DavenportResult davenport(const AbelianGroupPtr& A, const SearchBudget& budget = {},
                                 int threads = 1) {
  auto t0 = std::chrono::steady_clock::now();
  DavenportResult res;
  if (A->order() == 1) {
    res.value = 1;
    res.witness = Sequence(A, {0});
    return res;
  }
  SearchBudget::State st;
  long best = 0;

  std::vector<long> roots;
  {
    auto units = A->units_mod_exponent();
    for (long a = 1; a < A->order(); ++a) {
      long mn = a;
      for (long u : units) mn = std::min(mn, A->unit_action(u, a));
      if (mn == a) roots.push_back(a);
    }
  }

  // One worker explores the zero-sum-free sequences whose least element
  // lies in its root slice; shared state is just the running maximum.
  auto explore = [&A, &budget](const std::vector<long>& myroots, SearchBudget::State& state,
                               std::atomic<long>& shared_best) {
    detail::SumSet sums(A->order());
    std::function<void(long, long)> dfs = [&](long last, long len) {
      budget.tick(state, "davenport");
      long cur = shared_best.load(std::memory_order_relaxed);
      while (len > cur && !shared_best.compare_exchange_weak(cur, len)) {
      }
      for (long a = std::max(last, 1L); a < A->order(); ++a) {
        if (sums.test(A->neg(a))) continue;
        detail::SumSet saved = sums;
        sums.fold_in(*A, a);
        sums.set(a);
        dfs(a, len + 1);
        sums = saved;
      }
    };
    for (long r : myroots) {
      detail::SumSet sums0(A->order());
      sums0.set(r);
      sums = sums0;
      dfs(r, 1);
    }
  };

  std::atomic<long> shared_best{0};
  if (threads <= 1) {
    explore(roots, st, shared_best);
  } else {
    long nt = std::min<long>(threads, roots.size());
    std::vector<std::vector<long>> slices(static_cast<size_t>(std::max(nt, 1L)));
    for (size_t i = 0; i < roots.size(); ++i) slices[i % slices.size()].push_back(roots[i]);
    std::vector<SearchBudget::State> states(slices.size());
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(slices.size());
    for (size_t i = 0; i < slices.size(); ++i)
      workers.emplace_back([&, i] {
        try {
          explore(slices[i], states[i], shared_best);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& w : workers) w.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& s : states) st.nodes += s.nodes;
  }
  best = shared_best.load();

  res.value = best + 1;

  // Witness: first irreducible of length exactly best+1 (one exists, since
  // stripping any element of a maximal irreducible leaves a zero-sum-free
  // sequence of length best).
  Sequence prefix(A);
  detail::SumSet wsums(A->order());
  bool found = false;
  std::function<void(long, long, long)> wdfs = [&](long last, long len, long sig) {
    if (found) return;
    budget.tick(st, "davenport");
    if (len == best) {
      long close = A->neg(sig);
      if (close >= last && detail::count_subsets_with_sum(prefix, sig) == 1) {
        res.witness = prefix;
        res.witness.push(close, 1);
        found = true;
      }
      return;
    }
    for (long a = std::max(last, 1L); a < A->order() && !found; ++a) {
      if (wsums.test(A->neg(a))) continue;
      detail::SumSet saved = wsums;
      wsums.fold_in(*A, a);
      wsums.set(a);
      prefix.push(a, 1);
      wdfs(a, len + 1, A->add(sig, a));
      prefix.pop(a);
      wsums = saved;
    }
  };
  if (best == 0) {
    res.witness = Sequence(A, {0});
  } else {
    wdfs(1, 0, 0);
    if (!found) throw internal_error("davenport: witness reconstruction failed");
  }
  res.nodes = st.nodes;
  res.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

namespace detail {

/// Enumerates the irreducible zero-sum sub-multisets of s containing its
/// least element; fn returning true stops the walk (and returns true).
///
/// In a factorization of a zero-sum sequence into maximally many parts,
/// refining the part that holds the least element shows the recursion over
/// exactly these parts is complete for factorization questions.
inline bool for_each_irreducible_part(const Sequence& s,
                                      const std::function<bool(const Sequence&)>& fn) {
  if (s.empty()) return false;
  const auto& A = s.parent();
  const auto& ents = s.entries();
  long e0 = ents.front().first;
  if (e0 == 0) {
    // The only irreducible part containing 0 is (0) itself.
    Sequence part(A);
    part.push(0, 1);
    return fn(part);
  }

  // Position of each element index within ents, for the close-once rule.
  auto position_of = [&](long elem) -> long {
    for (size_t i = 0; i < ents.size(); ++i)
      if (ents[i].first == elem) return static_cast<long>(i);
    return -1;
  };

  Sequence prefix(A);
  SumSet sums(A->order());
  bool stop = false;

  // dfs(pos, sig): prefix is a zero-sum-free sub-multiset of entries [0,pos)
  // containing e0 unless empty; sig = sigma(prefix).
  std::function<void(size_t, long)> dfs = [&](size_t pos, long sig) {
    if (stop) return;
    if (!prefix.empty()) {
      long close = A->neg(sig);
      long cpos = position_of(close);
      // Close exactly once: at the first dfs position strictly past the
      // closing element's own entry slot.
      if (cpos >= 0 && cpos < static_cast<long>(pos) &&
          (ents[cpos].second - prefix.multiplicity(close)) >= 1 &&
          close >= prefix.entries().back().first &&
          count_subsets_with_sum(prefix, sig) == 1) {
        Sequence part = prefix;
        part.push(close, 1);
        if (fn(part)) {
          stop = true;
          return;
        }
      }
    }
    if (pos >= ents.size()) return;
    auto [w, mult] = ents[pos];
    if (!(pos == 0 && prefix.empty())) dfs(pos + 1, sig);  // skip branch; e0 is mandatory
    if (stop) return;
    SumSet saved = sums;
    long added = 0;
    long cursig = sig;
    for (long j = 1; j <= mult && !stop; ++j) {
      if (sums.test(A->neg(w))) break;  // prefix would stop being zero-sum-free
      sums.fold_in(*A, w);
      sums.set(w);
      prefix.push(w, 1);
      ++added;
      cursig = A->add(cursig, w);
      dfs(pos + 1, cursig);
    }
    if (added) prefix.pop(w, added);
    sums = saved;
  };
  dfs(0, 0);
  return stop;
}

/// Two-sided memo for "factors into at least j parts" decisions.
struct PartsMemo {
  // key -> (largest j known true, smallest j known false)
  std::unordered_map<std::string, std::pair<long, long>> table;
};

inline bool splits_into_at_least(const Sequence& s, long j, PartsMemo& memo,
                                 const SearchBudget& budget, SearchBudget::State& st) {
  if (j <= 0) return true;
  if (s.empty() || s.length() < j) return false;
  if (j == 1) return true;  // callers pass zero-sum sequences only
  std::string key = s.key();
  auto [it, inserted] = memo.table.try_emplace(key, 0L, 1L << 30);
  if (!inserted) {
    if (j <= it->second.first) return true;
    if (j >= it->second.second) return false;
  }
  budget.tick(st, "zero-sum factor search");
  bool ok = for_each_irreducible_part(s, [&](const Sequence& part) {
    if (part.length() == s.length()) return false;  // part == s leaves nothing for j-1 >= 1
    Sequence rest = s.remove(part);
    return splits_into_at_least(rest, j - 1, memo, budget, st);
  });
  auto& slot = memo.table[key];
  if (ok) slot.first = std::max(slot.first, j);
  else slot.second = std::min(slot.second, j);
  return ok;
}

}  // namespace detail

struct MaxPartsResult {
  long parts = 0;
  Factorization witness;
};

/// Maximum number of non-empty zero-sum parts in a factorization of s,
/// with one witness.  Exact: recursively extract an irreducible part
/// containing the least element, memoized on the remaining multiset.
inline MaxPartsResult max_zero_sum_parts(const Sequence& s, const SearchBudget& budget = {}) {
  if (s.sigma_index() != 0) throw input_error("max_zero_sum_parts: sequence is not zero-sum");
  SearchBudget::State st;
  std::unordered_map<std::string, std::pair<long, Sequence>> memo;  // key -> (best, first part)

  std::function<long(const Sequence&)> best = [&](const Sequence& t) -> long {
    if (t.empty()) return 0;
    auto key = t.key();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second.first;
    budget.tick(st, "max_zero_sum_parts");
    long b = 0;
    Sequence chosen(t.parent());
    detail::for_each_irreducible_part(t, [&](const Sequence& part) {
      long v = 1 + best(t.remove(part));
      if (v > b) {
        b = v;
        chosen = part;
      }
      return false;  // keep searching for the max
    });
    if (b == 0) throw internal_error("max_zero_sum_parts: zero-sum sequence with no part");
    memo[key] = {b, chosen};
    return b;
  };

  MaxPartsResult res;
  res.parts = best(s);
  Sequence rest = s;
  while (!rest.empty()) {
    const auto& [b, part] = memo.at(rest.key());
    res.witness.parts.push_back(part);
    rest = rest.remove(part);
  }
  return res;
}

struct DavenportKResult {
  long value = 0;
  Sequence witness;
  std::uint64_t nodes = 0;
  double wall_ms = 0;
};

/// D_k(A): the longest zero-sum sequence that cannot be factored into more
/// than k non-empty zero-sum parts.  A maximal such sequence is a product
/// of exactly k irreducibles (pad shorter ones with (0)), so the search
/// runs over k-element multisets of the Hilbert basis, pruning a partial
/// product as soon as it factors into more parts than irreducibles chosen.
inline DavenportKResult davenport_k(const AbelianGroupPtr& A, long k,
                                    const SearchBudget& budget = {}, int threads = 1) {
  if (k < 1) throw input_error("davenport_k: k must be >= 1");
  auto t0 = std::chrono::steady_clock::now();
  SearchBudget::State st;

  auto d1 = davenport(A, budget, threads);
  if (k == 1) {
    DavenportKResult r;
    r.value = d1.value;
    r.witness = d1.witness;
    r.nodes = d1.nodes;
    r.wall_ms = d1.wall_ms;
    return r;
  }

  auto basis = enumerate_irreducibles(A, d1.value, budget);
  std::sort(basis.begin(), basis.end(), [](const Sequence& a, const Sequence& b) {
    if (a.length() != b.length()) return a.length() > b.length();
    return a.entries() < b.entries();
  });

  long bestLen = 0;
  Sequence bestSeq(A);
  detail::PartsMemo memo;

  std::function<void(size_t, const Sequence&, long)> dfs = [&](size_t from, const Sequence& prod,
                                                               long chosen) {
    if (chosen == k) {
      if (prod.length() > bestLen) {
        bestLen = prod.length();
        bestSeq = prod;
      }
      return;
    }
    for (size_t i = from; i < basis.size(); ++i) {
      long remaining = k - chosen;
      if (prod.length() + remaining * basis[i].length() <= bestLen) break;  // length-sorted
      budget.tick(st, "davenport_k");
      Sequence next = prod.concat(basis[i]);
      // A product of (chosen+1) irreducibles splits into chosen+1 parts; if
      // it splits further, the completed product would exceed k parts.
      if (detail::splits_into_at_least(next, chosen + 2, memo, budget, st)) continue;
      dfs(i, next, chosen + 1);
    }
  };
  dfs(0, Sequence(A), 0);
  if (bestLen == 0) throw internal_error("davenport_k: search found no candidate");

  DavenportKResult r;
  r.value = bestLen;
  r.witness = bestSeq;
  r.nodes = st.nodes;
  r.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Shortest non-empty zero-sum subsequence of a sequence over Z_p (p
/// prime), or nullopt if none exists.  For |S| >= p the result is
/// guaranteed to have length <= h(S).
inline std::optional<Sequence> find_short_zero_sum(const Sequence& s) {
  const auto& A = s.parent();
  if (A->rank() != 1)
    throw input_error("find_short_zero_sum: parent must be cyclic of prime order");
  long p = A->order();
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw input_error("find_short_zero_sum: parent order is not prime");

  const long INF = 1L << 30;
  const auto& ents = s.entries();
  const size_t T = ents.size();
  // dp[t][x] = min size of a non-empty sub-multiset of the first t entries
  // summing to x.  A subset may "start" at the empty state with sum 0.
  std::vector<std::vector<long>> dp(T + 1, std::vector<long>(static_cast<size_t>(p), INF));
  for (size_t t = 1; t <= T; ++t) {
    auto [w, mult] = ents[t - 1];
    dp[t] = dp[t - 1];
    for (long from = 0; from < p; ++from) {
      long base = std::min(dp[t - 1][from], from == 0 ? 0L : INF);
      if (base >= INF) continue;
      long sum = from;
      for (long j = 1; j <= mult; ++j) {
        sum = A->add(sum, w);
        dp[t][sum] = std::min(dp[t][sum], base + j);
      }
    }
  }
  if (dp[T][0] >= INF) {
    if (s.length() >= p)
      throw internal_error("find_short_zero_sum: no zero-sum despite |S| >= p");
    return std::nullopt;
  }

  Sequence out(A);
  long cur = 0;
  long len = dp[T][0];
  for (size_t t = T; t >= 1 && len > 0; --t) {
    if (dp[t - 1][cur] == len) continue;  // achievable without entry t
    auto [w, mult] = ents[t - 1];
    bool moved = false;
    for (long j = 1; j <= mult && !moved; ++j) {
      long from = A->add(cur, A->neg(A->scalar_mul(j, w)));
      long base = std::min(dp[t - 1][from], from == 0 ? 0L : INF);
      if (base + j == len) {
        out.push(w, j);
        cur = from;
        len = base;
        moved = true;
      }
    }
    if (!moved) throw internal_error("find_short_zero_sum: backtrack failed");
  }
  if (out.sigma_index() != 0 || out.empty() || out.length() != dp[T][0])
    throw internal_error("find_short_zero_sum: reconstruction failed");
  if (s.length() >= p && out.length() > s.height())
    throw internal_error("find_short_zero_sum: length bound violated");
  return out;
}

/// q^T: sums of q pairwise-distinct elements of T.
inline std::vector<GroupElement> restricted_sumset(const std::vector<GroupElement>& T, long q) {
  if (q < 0) throw input_error("restricted_sumset: q < 0");
  if (q > static_cast<long>(T.size())) throw input_error("restricted_sumset: q > |T|");
  if (T.empty()) return {};
  const auto& A = T.front().parent();
  std::vector<detail::SumSet> layer(static_cast<size_t>(q) + 1, detail::SumSet(A->order()));
  layer[0].set(0);
  for (const auto& t : T) {
    for (long j = q - 1; j >= 0; --j) {
      for (long i = 0; i < A->order(); ++i)
        if (layer[j].test(i)) layer[j + 1].set(A->add(i, t.index()));
    }
  }
  std::vector<GroupElement> out;
  for (long i : layer[q].to_indices()) out.emplace_back(A, i);
  return out;
}

}  // namespace nlab
