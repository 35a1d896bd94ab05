#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "noetherlab/zerosum.hpp"
#include "oracles.hpp"

using namespace nlab;

namespace {
Sequence seq(const AbelianGroupPtr& A, const std::vector<long>& v) { return Sequence(A, v); }
}

TEST_CASE("sigma") {
  auto z7 = make_group({7});
  CHECK(sigma(Sequence(z7)).is_zero());
  CHECK(sigma(seq(z7, {1, 2, 3})).coords() == std::vector<long>{6});

  auto k4 = make_group({2, 2});
  // the three involutions sum to zero
  CHECK(sigma(seq(k4, {1, 2, 3})).is_zero());
}

TEST_CASE("subset_sums") {
  auto z5 = make_group({5});
  auto s = subset_sums(seq(z5, {1, 1}));
  REQUIRE(s.size() == 3);
  CHECK(s[0].index() == 0);
  CHECK(s[1].index() == 1);
  CHECK(s[2].index() == 2);

  auto z7 = make_group({7});
  CHECK(subset_sums(seq(z7, {1, 2, 3})).size() == 7);

  // agreement with direct power-set enumeration
  for (auto A : {make_group({7}), make_group({2, 4})}) {
    for (auto& v : oracle::all_multisets(A, 4)) {
      auto got = subset_sums(oracle::to_seq(A, v));
      std::set<long> gotIdx;
      for (auto& e : got) gotIdx.insert(e.index());
      CHECK(gotIdx == oracle::subset_sums_brute(A, v));
    }
  }
}

TEST_CASE("subset-sum growth bound over Z_p") {
  // |Sigma(S)| >= min(p, d+1) for non-zero sequences over Z_p
  for (long p : {5L, 7L}) {
    auto A = make_group({p});
    for (auto& v : oracle::all_multisets(A, p, /*nonzero_only=*/true)) {
      auto sums = subset_sums(oracle::to_seq(A, v));
      CHECK(static_cast<long>(sums.size()) >=
            std::min(p, static_cast<long>(v.size()) + 1));
    }
  }
}

TEST_CASE("is_irreducible_zero_sum") {
  auto k4 = make_group({2, 2});
  CHECK(is_irreducible_zero_sum(seq(k4, {0})));
  CHECK(is_irreducible_zero_sum(seq(k4, {1, 2, 3})));
  CHECK_FALSE(is_irreducible_zero_sum(seq(k4, {1, 1, 2, 2})));

  auto z7 = make_group({7});
  CHECK(is_irreducible_zero_sum(seq(z7, {1, 1, 1, 1, 1, 1, 1})));

  CHECK_THROWS_AS(is_irreducible_zero_sum(Sequence(z7)), input_error);

  for (auto A : {make_group({5}), make_group({2, 2}), make_group({6})}) {
    for (auto& v : oracle::all_multisets(A, 5)) {
      if (!oracle::is_zero_sum(A, v)) continue;
      CHECK(is_irreducible_zero_sum(oracle::to_seq(A, v)) ==
            oracle::is_irreducible_brute(A, v));
    }
  }
}

TEST_CASE("enumerate_irreducibles: Klein group Hilbert basis") {
  auto k4 = make_group({2, 2});
  auto got = enumerate_irreducibles(k4, 4);
  std::set<Sequence> expect = {seq(k4, {0}), seq(k4, {1, 1}), seq(k4, {2, 2}),
                               seq(k4, {3, 3}), seq(k4, {1, 2, 3})};
  CHECK(std::set<Sequence>(got.begin(), got.end()) == expect);
}

TEST_CASE("enumerate_irreducibles: small cases against brute force") {
  auto z2 = make_group({2});
  auto got2 = enumerate_irreducibles(z2, 2);
  REQUIRE(got2.size() == 2);
  CHECK(got2[0] == seq(z2, {0}));
  CHECK(got2[1] == seq(z2, {1, 1}));

  auto z3 = make_group({3});
  auto got3 = enumerate_irreducibles(z3, 3);
  std::set<Sequence> expect3 = {seq(z3, {0}), seq(z3, {1, 2}), seq(z3, {1, 1, 1}),
                                seq(z3, {2, 2, 2})};
  CHECK(std::set<Sequence>(got3.begin(), got3.end()) == expect3);

  for (auto A : {make_group({4}), make_group({5}), make_group({6}), make_group({2, 4})}) {
    std::set<Sequence> brute;
    for (auto& v : oracle::all_multisets(A, 6))
      if (oracle::is_irreducible_brute(A, v)) brute.insert(oracle::to_seq(A, v));
    auto got = enumerate_irreducibles(A, 6);
    CHECK(std::set<Sequence>(got.begin(), got.end()) == brute);
    for (auto& s : got) CHECK(is_irreducible_zero_sum(s));
  }
}

TEST_CASE("davenport small closed forms") {
  for (long n = 2; n <= 8; ++n) CHECK(davenport(make_group({n})).value == n);
  CHECK(davenport(make_group({})).value == 1);
  CHECK(davenport(make_group({2, 2})).value == 3);
  CHECK(davenport(make_group({3, 3})).value == 5);
  CHECK(davenport(make_group({2, 4})).value == 5);
  CHECK(davenport(make_group({2, 2, 2})).value == 4);

  // the witness is a maximal irreducible
  auto r = davenport(make_group({3, 3}));
  CHECK(r.witness.length() == 5);
  CHECK(is_irreducible_zero_sum(r.witness));
}

TEST_CASE("davenport agrees with irreducible enumeration") {
  for (auto A : {make_group({6}), make_group({2, 4}), make_group({3, 3}),
                 make_group({2, 2, 2})}) {
    long bound = 1;
    for (long d : A->invariant_factors()) bound += d - 1;
    auto irr = enumerate_irreducibles(A, bound);
    long longest = 0;
    for (auto& s : irr) longest = std::max(longest, s.length());
    CHECK(davenport(A).value == longest);
  }
}

TEST_CASE("max_zero_sum_parts") {
  auto z3 = make_group({3});
  CHECK(max_zero_sum_parts(seq(z3, {0, 0})).parts == 2);

  auto k4 = make_group({2, 2});
  auto r = max_zero_sum_parts(seq(k4, {1, 1, 2, 2, 3, 3}));
  CHECK(r.parts == 3);
  // witness parts: non-empty, zero-sum, concatenating back to the input
  Sequence glued(k4);
  for (auto& part : r.witness.parts) {
    CHECK_FALSE(part.empty());
    CHECK(sigma(part).is_zero());
    glued = glued.concat(part);
  }
  CHECK(glued == seq(k4, {1, 1, 2, 2, 3, 3}));

  CHECK_THROWS_AS(max_zero_sum_parts(seq(k4, {1})), input_error);

  for (auto A : {make_group({5}), make_group({2, 2}), make_group({4})}) {
    for (auto& v : oracle::all_multisets(A, 6)) {
      if (!oracle::is_zero_sum(A, v)) continue;
      CHECK(max_zero_sum_parts(oracle::to_seq(A, v)).parts == oracle::max_parts_brute(A, v));
    }
  }
}

TEST_CASE("davenport_k closed forms") {
  // D_k(Z_n) = kn
  for (long n = 2; n <= 5; ++n)
    for (long k = 1; k <= 3; ++k) CHECK(davenport_k(make_group({n}), k).value == k * n);

  // D_k(Z_n x Z_m) = km + n - 1
  for (long k = 1; k <= 3; ++k) {
    CHECK(davenport_k(make_group({2, 2}), k).value == 2 * k + 1);
    CHECK(davenport_k(make_group({2, 4}), k).value == 4 * k + 1);
  }

  // D_k(Z_2^3) = 4, 7, 9
  CHECK(davenport_k(make_group({2, 2, 2}), 1).value == 4);
  CHECK(davenport_k(make_group({2, 2, 2}), 2).value == 7);
  CHECK(davenport_k(make_group({2, 2, 2}), 3).value == 9);

  CHECK_THROWS_AS(davenport_k(make_group({2}), 0), input_error);
}

TEST_CASE("davenport_k witness and monotonicity") {
  for (auto A : {make_group({5}), make_group({2, 2}), make_group({2, 4})}) {
    long prev = 0;
    long d1 = davenport(A).value;
    for (long k = 1; k <= 3; ++k) {
      auto r = davenport_k(A, k);
      CHECK(sigma(r.witness).is_zero());
      CHECK(r.witness.length() == r.value);
      CHECK(max_zero_sum_parts(r.witness).parts <= k);
      if (k == 1) CHECK(r.value == d1);
      if (k > 1) CHECK(r.value >= prev + 1);
      CHECK(r.value <= k * d1);
      prev = r.value;
    }
  }
}

TEST_CASE("find_short_zero_sum") {
  auto z7 = make_group({7});
  Sequence s(z7);
  s.push(1, 5);
  s.push(2, 3);
  auto t = find_short_zero_sum(s);
  REQUIRE(t.has_value());
  CHECK(sigma(*t).is_zero());
  CHECK(t->length() <= 5);  // h(S) = 5

  Sequence ones(z7);
  ones.push(1, 7);
  auto t2 = find_short_zero_sum(ones);
  REQUIRE(t2.has_value());
  CHECK(*t2 == ones);

  auto z5 = make_group({5});
  CHECK_FALSE(find_short_zero_sum(seq(z5, {1, 2})).has_value());

  CHECK_THROWS_AS(find_short_zero_sum(seq(make_group({2, 2}), {1})), input_error);
  CHECK_THROWS_AS(find_short_zero_sum(seq(make_group({6}), {1})), input_error);

  // shortest length agrees with subset enumeration
  for (auto& v : oracle::all_multisets(z5, 6)) {
    auto got = find_short_zero_sum(oracle::to_seq(z5, v));
    long want = oracle::shortest_zero_sum_brute(z5, v);
    if (want < 0) CHECK_FALSE(got.has_value());
    else {
      REQUIRE(got.has_value());
      CHECK(got->length() == want);
      CHECK(sigma(*got).is_zero());
      CHECK(oracle::to_seq(z5, v).contains(*got));
    }
  }
}

TEST_CASE("short zero-sum bound, exhaustive at p=5 up to length p+2") {
  auto z5 = make_group({5});
  for (auto& v : oracle::all_multisets(z5, 7)) {
    if (static_cast<long>(v.size()) < 5) continue;
    auto s = oracle::to_seq(z5, v);
    auto t = find_short_zero_sum(s);
    REQUIRE(t.has_value());
    CHECK(t->length() <= s.height());
  }
}

TEST_CASE("restricted_sumset") {
  auto z7 = make_group({7});
  std::vector<GroupElement> T = {GroupElement(z7, 1L), GroupElement(z7, 2L),
                                 GroupElement(z7, 3L)};
  auto r = restricted_sumset(T, 2);
  REQUIRE(r.size() == 3);
  CHECK(r[0].index() == 3);
  CHECK(r[1].index() == 4);
  CHECK(r[2].index() == 5);

  auto r1 = restricted_sumset(T, 1);
  REQUIRE(r1.size() == 3);
  CHECK(r1[0].index() == 1);

  auto r3 = restricted_sumset(T, 3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].index() == 6);

  CHECK_THROWS_AS(restricted_sumset(T, 4), input_error);
}

TEST_CASE("restricted sumset lower bound at p=7") {
  // |q^T| >= min(p, q|T| - q^2 + 1) over all T in Z_p minus 0
  auto z7 = make_group({7});
  for (size_t mask = 1; mask < (1u << 6); ++mask) {
    std::vector<GroupElement> T;
    for (long i = 0; i < 6; ++i)
      if (mask & (1u << i)) T.emplace_back(z7, i + 1);
    for (long q = 1; q <= std::min<long>(3, T.size()); ++q) {
      auto r = restricted_sumset(T, q);
      long bound = std::min<long>(7, q * T.size() - q * q + 1);
      CHECK(static_cast<long>(r.size()) >= bound);
    }
  }
}

TEST_CASE("budget errors") {
  SearchBudget tiny;
  tiny.node_cap = 5;
  CHECK_THROWS_AS(davenport(make_group({3, 3}), tiny), budget_error);
}

TEST_CASE("unit action on sequences preserves multisets up to relabeling") {
  auto z7 = make_group({7});
  // the orbit {1,2,4} is stable under doubling
  Sequence s(z7, {1, 2, 4});
  CHECK(s.unit_image(2) == s);
  Sequence t(z7, {1, 1, 3});
  CHECK(t.unit_image(2) == Sequence(z7, {2, 2, 6}));
  CHECK(t.unit_image(2).length() == t.length());
  CHECK(t.unit_image(2).height() == t.height());
}

TEST_CASE("root-parallel davenport matches the sequential search") {
  for (auto A : {make_group({8}), make_group({2, 6}), make_group({3, 3})}) {
    auto seq1 = davenport(A);
    auto par = davenport(A, {}, 4);
    CHECK(par.value == seq1.value);
    CHECK(is_irreducible_zero_sum(par.witness));
  }
}

TEST_CASE("every small zero-sum sequence factors into Hilbert basis members") {
  for (auto A : {make_group({9}), make_group({2, 2, 2})}) {
    auto basis = enumerate_irreducibles(A, davenport(A).value);
    std::set<Sequence> members(basis.begin(), basis.end());
    std::vector<long> elems;
    for (long i = 0; i < A->order(); ++i) elems.push_back(i);
    std::function<void(size_t, long, Sequence&)> rec = [&](size_t i, long rem, Sequence& s) {
      if (!s.empty() && sigma(s).is_zero()) {
        auto parts = max_zero_sum_parts(s).witness;
        Sequence glued(A);
        for (const auto& p : parts.parts) {
          CHECK(members.count(p) == 1);
          glued = glued.concat(p);
        }
        CHECK(glued == s);
      }
      if (i == elems.size() || rem == 0) return;
      for (long take = 1; take <= rem; ++take) {
        s.push(elems[i], take);
        rec(i + 1, rem - take, s);
        s.pop(elems[i], take);
      }
      rec(i + 1, rem, s);
    };
    Sequence s(A);
    rec(0, 6, s);
  }
}
