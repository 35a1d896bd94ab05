#pragma once

// Brute-force reference implementations used only by the test suites.
// These stay independent of the search/pruning code paths they check.

#include <functional>
#include <set>
#include <vector>

#include "noetherlab/abelian.hpp"
#include "noetherlab/zerosum.hpp"

namespace oracle {

using nlab::AbelianGroupPtr;
using nlab::Sequence;

/// All multisets over {0,..,|A|-1} of length between 1 and max_len.
inline std::vector<std::vector<long>> all_multisets(const AbelianGroupPtr& A, long max_len,
                                                    bool nonzero_only = false) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> rec = [&](long last) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<long>(cur.size()) == max_len) return;
    for (long a = last; a < A->order(); ++a) {
      cur.push_back(a);
      rec(a);
      cur.pop_back();
    }
  };
  rec(nonzero_only ? 1 : 0);
  return out;
}

inline long sum_of(const AbelianGroupPtr& A, const std::vector<long>& v) {
  long s = 0;
  for (long e : v) s = A->add(s, e);
  return s;
}

/// Sums of all subsets (including the empty one), by enumerating the
/// power set of positions.
inline std::set<long> subset_sums_brute(const AbelianGroupPtr& A, const std::vector<long>& v) {
  std::set<long> sums;
  size_t n = v.size();
  for (size_t mask = 0; mask < (1ULL << n); ++mask) {
    long s = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) s = A->add(s, v[i]);
    sums.insert(s);
  }
  return sums;
}

inline bool is_zero_sum(const AbelianGroupPtr& A, const std::vector<long>& v) {
  return sum_of(A, v) == 0;
}

/// Irreducibility by checking every proper non-empty position subset.
inline bool is_irreducible_brute(const AbelianGroupPtr& A, const std::vector<long>& v) {
  if (v.empty() || !is_zero_sum(A, v)) return false;
  size_t n = v.size();
  for (size_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
    long s = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) s = A->add(s, v[i]);
    if (s == 0) return false;
  }
  return true;
}

/// Maximum number of parts over all factorizations into non-empty
/// zero-sum position blocks, by exhaustive recursion.
inline long max_parts_brute(const AbelianGroupPtr& A, std::vector<long> v) {
  if (v.empty()) return 0;
  size_t n = v.size();
  long best = is_zero_sum(A, v) ? 1 : -1000000;
  // Split off any non-empty proper subset containing position 0.
  for (size_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
    if (!(mask & 1)) continue;
    long s = 0;
    std::vector<long> rest;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1ULL << i)) s = A->add(s, v[i]);
      else rest.push_back(v[i]);
    }
    if (s != 0) continue;
    best = std::max(best, 1 + max_parts_brute(A, rest));
  }
  return best;
}

/// Shortest non-empty zero-sum subset size, or -1.
inline long shortest_zero_sum_brute(const AbelianGroupPtr& A, const std::vector<long>& v) {
  size_t n = v.size();
  long best = -1;
  for (size_t mask = 1; mask < (1ULL << n); ++mask) {
    long s = 0;
    long c = 0;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1ULL << i)) {
        s = A->add(s, v[i]);
        ++c;
      }
    if (s == 0 && (best < 0 || c < best)) best = c;
  }
  return best;
}

inline Sequence to_seq(const AbelianGroupPtr& A, const std::vector<long>& v) {
  return Sequence(A, v);
}

}  // namespace oracle
