#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "noetherlab/invariant.hpp"

using namespace nlab;
using fixtures::mono;

namespace {

// Character-theoretic dimension of (F[V]^G)_d for the monomial group
// G = A x| <g>: average over all group elements of the trace on degree-d
// monomials.  Independent of the transfer/elimination path -- it never
// touches RowSpan or transfer().
long molien_dim(const MonomialRep& rep, long d) {
  auto A = rep.group();
  long E = A->exponent();
  long M = rep.scalar_modulus();
  long mod = std::lcm(std::max(E, 1L), M);

  std::vector<Monomial> all;
  Monomial m(rep.nvars());
  std::function<void(size_t, long)> gen = [&](size_t i, long rem) {
    if (i == rep.nvars()) {
      if (rem == 0) all.push_back(m);
      return;
    }
    for (long e = 0; e <= rem; ++e) {
      m.set_exp(i, static_cast<std::uint16_t>(e));
      gen(i + 1, rem - e);
    }
    m.set_exp(i, 0);
  };
  gen(0, d);

  Cyclo total(0, mod);
  for (long j = 0; j < rep.quotient_order(); ++j) {
    for (const auto& mm : all) {
      auto [img, sexp] = rep.monomial_image(mm, j);
      if (!(img == mm)) continue;
      // scalar from g^j times the character sum over a in A
      Cyclo gs = Cyclo::root(mod, M == 0 ? 0 : sexp * (mod / M));
      long w = rep.monomial_weight(mm);
      auto wc = A->coords_of(w);
      for (long ai = 0; ai < A->order(); ++ai) {
        auto ac = A->coords_of(ai);
        long pairing = 0;
        for (int r = 0; r < A->rank(); ++r)
          pairing = (pairing + wc[r] * ac[r] * (E / A->invariant_factors()[r])) % E;
        total += gs * Cyclo::root(mod, pairing * (mod / E));
      }
    }
  }
  Rational dim = total.rational_value() / Rational(rep.group_order());
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("molien_dim: non-integer dimension");
  return static_cast<long>(dim.get_num().get_si());
}

}  // namespace

TEST_CASE("transfer basics") {
  auto rep = fixtures::z7z3_vplus();
  // tau(x^7) = x^7 + y^7 + z^7
  Polynomial t7 = transfer(mono({7, 0, 0}), rep);
  Polynomial want;
  want.add_term(mono({7, 0, 0}), Cyclo(1));
  want.add_term(mono({0, 7, 0}), Cyclo(1));
  want.add_term(mono({0, 0, 7}), Cyclo(1));
  CHECK(t7 == want);

  // tau(xyz) = 3 xyz
  CHECK(transfer(mono({1, 1, 1}), rep) ==
        Polynomial::term(mono({1, 1, 1}), Cyclo(3)));

  // a weight-0 variable with a nontrivial character transfers to zero
  auto repw = fixtures::z7z3_vplus_w();
  CHECK(transfer(mono({0, 0, 0, 1}), repw).is_zero());

  CHECK_THROWS_AS(transfer(mono({1, 0, 0}), rep), input_error);
}

TEST_CASE("transfers are G-invariant") {
  for (auto rep : {fixtures::z7z3_vplus_vminus(), fixtures::a4_perm4()}) {
    InvariantEngine eng(rep);
    for (long d = 1; d <= 5; ++d)
      for (const auto& tau : eng.transfer_generators(d)) {
        CHECK(is_g_invariant(tau, rep));
      }
  }
  auto repw = fixtures::a4_perm4_w();
  InvariantEngine engw(repw);
  for (long d = 1; d <= 4; ++d)
    for (const auto& tau : engw.transfer_generators(d)) CHECK(is_g_invariant(tau, repw));
}

TEST_CASE("invariant_basis trivial cases") {
  // one variable, trivial weight, trivial quotient: R_d = {x^d}
  auto one = fixtures::abelian_full_rep(make_group({}));
  auto basis = invariant_basis(one, 5);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == Polynomial::monomial(mono({5})));

  // sign representation of Z_2: invariants exactly in even degrees
  auto z2 = make_group({2});
  std::vector<long> dual = {0, 1};
  auto sign = MonomialRep(z2, 1, dual, {{1, 0, 0}});
  CHECK(invariant_basis(sign, 1).empty());
  CHECK(invariant_basis(sign, 2).size() == 1);
  CHECK(invariant_basis(sign, 3).empty());
  CHECK(invariant_basis(sign, 4).size() == 1);
}

TEST_CASE("spanning rank agrees with the character-theoretic dimension") {
  auto a4 = fixtures::a4_perm4();
  InvariantEngine eng(a4);
  for (long d = 1; d <= 6; ++d) CHECK(eng.r_dim(d) == molien_dim(a4, d));

  auto z7 = fixtures::z7z3_vplus_vminus();
  InvariantEngine eng7(z7);
  for (long d = 1; d <= 5; ++d) CHECK(eng7.r_dim(d) == molien_dim(z7, d));

  auto repw = fixtures::a4_perm4_w();
  InvariantEngine engw(repw);
  for (long d = 1; d <= 5; ++d) CHECK(engw.r_dim(d) == molien_dim(repw, d));
}

TEST_CASE("beta of small abelian modules equals the Davenport constant") {
  // Z_3 acting by zeta_3 on one variable: beta = D(Z_3) = 3
  auto z3 = make_group({3});
  std::vector<long> dual3 = {0, 1, 2};
  auto rep3 = MonomialRep(z3, 1, dual3, {{1, 0, 0}});
  auto scan3 = beta_k_of_module(rep3, 1, 4);
  CHECK(scan3.value == 3);

  // sign representation: beta_1 = 2
  auto z2 = make_group({2});
  std::vector<long> dual2 = {0, 1};
  auto rep2 = MonomialRep(z2, 1, dual2, {{1, 0, 0}});
  CHECK(beta_k_of_module(rep2, 1, 4).value == 2);

  // full character module of Z_4: beta_1 = D(Z_4) = 4, beta_2 = 8
  auto z4full = fixtures::abelian_full_rep(make_group({4}));
  InvariantEngine eng(z4full);
  CHECK(eng.beta_k_of_module(1, 5).value == 4);
  CHECK(eng.beta_k_of_module(2, 9).value == 8);

  // Klein module: beta_1 = 3, beta_2 = 5
  auto k4full = fixtures::abelian_full_rep(make_group({2, 2}));
  InvariantEngine engk(k4full);
  CHECK(engk.beta_k_of_module(1, 4).value == 3);
  CHECK(engk.beta_k_of_module(2, 6).value == 5);
}

TEST_CASE("A_4 permutation module: the degree-6 invariant") {
  auto a4 = fixtures::a4_perm4();
  Polynomial s = fixtures::a4_degree6_invariant();
  CHECK(s.homogeneous_degree() == 6);
  CHECK(is_g_invariant(s, a4));

  // s = (x^2-y^2)(x^2-z^2)(y^2-z^2) in the eigenbasis
  auto sq = [&](int i) {
    std::vector<std::uint16_t> e(4, 0);
    e[static_cast<size_t>(i)] = 2;
    return Polynomial::monomial(Monomial(e));
  };
  CHECK(s == (sq(1) - sq(2)) * (sq(1) - sq(3)) * (sq(2) - sq(3)));

  InvariantEngine eng(a4);
  CHECK_FALSE(eng.in_power_ideal(s, 1));
  // while squares of invariants decompose
  Polynomial t2 = Polynomial::monomial(mono({2, 0, 0, 0}));
  CHECK(eng.in_power_ideal(t2, 1));
  // s * e1 lies outside (R_+)^3, s * e4 is the degree-10 witness
  CHECK_FALSE(eng.in_power_ideal(s * fixtures::a4_e1(), 2));

  CHECK_THROWS_AS(eng.in_power_ideal(Polynomial::monomial(mono({0, 1, 0, 0})), 1),
                  input_error);
}

TEST_CASE("in_power_ideal monotone in k") {
  auto a4 = fixtures::a4_perm4();
  InvariantEngine eng(a4);
  for (long d = 2; d <= 6; ++d)
    for (const auto& f : eng.r_basis(d)) {
      bool in2 = eng.in_power_ideal(f, 1);
      bool in3 = eng.in_power_ideal(f, 2);
      if (in3) CHECK(in2);  // membership at larger k implies smaller k
    }
}

TEST_CASE("beta_k trivial bound") {
  auto k4full = fixtures::abelian_full_rep(make_group({2, 2}));
  InvariantEngine eng(k4full);
  long b1 = eng.beta_k_of_module(1, 4).value;
  long b2 = eng.beta_k_of_module(2, 8).value;
  CHECK(b2 <= 2 * b1);
  CHECK(b2 >= b1 + 1);
}

TEST_CASE("cap sufficiency reporting") {
  auto z2 = make_group({2});
  std::vector<long> dual2 = {0, 1};
  auto rep2 = MonomialRep(z2, 1, dual2, {{1, 0, 0}});
  auto scan = beta_k_of_module(rep2, 1, 1);
  CHECK_FALSE(scan.cap_theoretically_sufficient);
  auto scan2 = beta_k_of_module(rep2, 1, 2);
  CHECK(scan2.cap_theoretically_sufficient);
  CHECK(scan2.value == 2);
}

TEST_CASE("Goebel span: terminal monomials and R_+ L_+ fill every degree") {
  // span{terminal monomials of degree d} + (L^G_+ L_+)_d = L_d
  for (auto rep : {fixtures::z7z3_vplus(), fixtures::a4_perm4()}) {
    InvariantEngine eng(rep);
    size_t v = rep.nvars();
    for (long d = 1; d <= (v == 3 ? 6 : 5); ++d) {
      // column space: all monomials of degree d
      std::vector<Monomial> all;
      Monomial m(v);
      std::function<void(size_t, long)> gen = [&](size_t i, long rem) {
        if (i == v) {
          if (rem == 0) all.push_back(m);
          return;
        }
        for (long e = 0; e <= rem; ++e) {
          m.set_exp(i, static_cast<std::uint16_t>(e));
          gen(i + 1, rem - e);
        }
        m.set_exp(i, 0);
      };
      gen(0, d);
      std::map<Monomial, std::uint32_t> col;
      for (size_t i = 0; i < all.size(); ++i) col[all[i]] = static_cast<std::uint32_t>(i);
      auto vecf = [&](const Polynomial& f) {
        SparseVec out;
        for (auto& [mm, c] : f.terms()) out.emplace_back(col.at(mm), c);
        std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
        return out;
      };
      RowSpan span;
      for (const auto& mm : all)
        if (is_terminal(mm, rep)) span.insert(vecf(Polynomial::monomial(mm)));
      for (long e = 1; e < d; ++e) {
        for (const auto& r : eng.r_basis(e)) {
          // multiply by every monomial of degree d-e
          std::vector<Monomial> lows;
          Monomial mm(v);
          std::function<void(size_t, long)> gen2 = [&](size_t i, long rem) {
            if (i == v) {
              if (rem == 0) lows.push_back(mm);
              return;
            }
            for (long x = 0; x <= rem; ++x) {
              mm.set_exp(i, static_cast<std::uint16_t>(x));
              gen2(i + 1, rem - x);
            }
            mm.set_exp(i, 0);
          };
          gen2(0, d - e);
          for (const auto& low : lows) span.insert(vecf(r * Polynomial::monomial(low)));
        }
      }
      CHECK(span.rank() == all.size());
    }
  }
}

TEST_CASE("six-term transfer identity") {
  auto rep = fixtures::z7z3_vplus_vminus();
  // v = w fixed by g: both sides vanish
  CHECK(verify_trukk(rep, mono({1, 1, 1, 0, 0, 0}), mono({1, 1, 1, 0, 0, 0}),
                     mono({1, 1, 1, 0, 0, 0})));

  // random A-invariant triples
  InvariantEngine eng(rep);
  std::vector<Monomial> pool;
  for (long d = 1; d <= 4; ++d)
    for (const auto& m : eng.ainv_monomials(d)) pool.push_back(m);
  std::mt19937 rng(12345);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  for (int rep_i = 0; rep_i < 30; ++rep_i)
    CHECK(verify_trukk(rep, pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]));

  // also with nontrivial scalars (A_4 with signs)
  auto a4 = fixtures::a4_perm4();
  InvariantEngine enga(a4);
  std::vector<Monomial> poola;
  for (long d = 1; d <= 4; ++d)
    for (const auto& m : enga.ainv_monomials(d)) poola.push_back(m);
  std::uniform_int_distribution<size_t> picka(0, poola.size() - 1);
  for (int rep_i = 0; rep_i < 30; ++rep_i)
    CHECK(verify_trukk(a4, poola[picka(rng)], poola[picka(rng)], poola[picka(rng)]));

  CHECK_THROWS_AS(verify_trukk(rep, mono({1, 0, 0, 0, 0, 0}), mono({1, 1, 1, 0, 0, 0}),
                               mono({1, 1, 1, 0, 0, 0})),
                  input_error);
}

TEST_CASE("index-power containment on samples") {
  auto rep = fixtures::z7z3_vplus_vminus();
  InvariantEngine eng(rep);
  auto report = verify_knopeta(eng, 25, 117);
  CHECK(report.samples == 25);
  CHECK(report.pass());

  auto a4 = fixtures::a4_perm4();
  InvariantEngine enga(a4);
  auto reporta = verify_knopeta(enga, 25, 118);
  CHECK(reporta.pass());

  // n = 1: trivially fine
  auto ab = fixtures::abelian_full_rep(make_group({3}));
  InvariantEngine engb(ab);
  CHECK(verify_knopeta(engb, 5, 1).pass());
}

TEST_CASE("gapless degree claims at (p,q) = (7,3)") {
  auto rep = fixtures::z7z3_vplus();
  auto binom = verify_binom_claim(rep);
  CHECK(binom.degree_bound == 3);  // C(3,2) with |O| = 3, s = 1
  CHECK(binom.pass());
  CHECK(binom.gapless_count > 0);  // gapless monomials exist; all carry bricks

  auto nagy = verify_gapless_degree_claims(rep, "nagy");
  CHECK(nagy.degree_lo == 5);  // min(7, (7+3)/2)
  CHECK(nagy.divisor_bound == 3);
  CHECK(nagy.pass());
  CHECK(nagy.gapless_count > 0);

  CHECK_THROWS_AS(verify_gapless_degree_claims(rep, "kicsi", 5, 2), input_error);
  CHECK_THROWS_AS(verify_gapless_degree_claims(rep, "nosuch"), input_error);
}

TEST_CASE("empty monomial satisfies the claims vacuously") {
  auto rep = fixtures::z7z3_vplus();
  CHECK(is_gapless(Monomial(3), rep));
  CHECK_FALSE(is_brick(Monomial(3), rep));
}
