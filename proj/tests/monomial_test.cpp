#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "noetherlab/monomial.hpp"

using namespace nlab;
using fixtures::mono;

TEST_CASE("MonomialRep validation") {
  auto A = make_group({7});
  // image weight must match the dual action
  std::vector<RepVariable> bad = {{1, 1, 0}, {3, 2, 0}, {4, 0, 0}};
  CHECK_THROWS_AS(MonomialRep::with_unit_action(A, 3, 2, bad), input_error);

  // scalar defect: g^3 must be the identity
  auto K = make_group({2, 2});
  std::vector<long> dual = {0, 2, 3, 1};
  std::vector<RepVariable> bad2 = {{0, 0, 1}};  // t -> -t has order 2, not dividing... 3
  CHECK_THROWS_AS(MonomialRep(K, 3, dual, bad2, 2), input_error);

  auto rep = fixtures::z7z3_vplus();
  CHECK(rep.quotient_order() == 3);
  CHECK(rep.group_order() == 21);
  CHECK(rep.scalar_field_modulus() == 1);
  CHECK(fixtures::a4_perm4().scalar_field_modulus() == 2);
  CHECK(fixtures::z7z3_vplus_w().scalar_field_modulus() == 3);

  // orbit enumeration is fixed: zero orbit first, then by least element
  auto orbs = fixtures::z7z3_vplus_vminus().orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<long>{0});
  CHECK(orbs[1] == std::vector<long>{1, 2, 4});
  CHECK(orbs[2] == std::vector<long>{3, 5, 6});
}

TEST_CASE("weight sequences") {
  auto rep = fixtures::z7z3_vplus();
  auto ws = weight_sequence(mono({1, 0, 0}), rep);
  CHECK(ws.seq == Sequence(rep.group(), {1}));
  CHECK(sigma(ws.seq).index() == 1);

  auto xyz = weight_sequence(mono({1, 1, 1}), rep);
  CHECK(xyz.seq == Sequence(rep.group(), {1, 2, 4}));
  CHECK(sigma(xyz.seq).is_zero());

  auto empty = weight_sequence(mono({0, 0, 0}), rep);
  CHECK(empty.seq.empty());
  CHECK(sigma(empty.seq).is_zero());
}

TEST_CASE("shape and the reverse-lexicographic order") {
  auto rep = fixtures::z7z3_vplus();
  auto A = rep.group();

  // S = (1,1): one orbit partition (1,1); T = (1,2): partition (2)
  Sequence S(A, {1, 1}), T(A, {1, 2});
  auto lS = shape(S, rep), lT = shape(T, rep);
  CHECK(lS[1] == std::vector<long>{1, 1});
  CHECK(lT[1] == std::vector<long>{2});
  CHECK(shape_less(lT, lS));
  CHECK_FALSE(shape_less(lS, lT));
  CHECK_FALSE(shape_less(lS, lS));

  // multiplying in more letters always lowers the shape
  auto rep6 = fixtures::z7z3_vplus_vminus();
  std::vector<Sequence> pool = {
      Sequence(A, {1}), Sequence(A, {1, 2}), Sequence(A, {2, 4, 4}), Sequence(A, {3, 1}),
      Sequence(A, {1, 1, 2, 4}), Sequence(A, {5, 6}), Sequence(A, {4})};
  for (const auto& s : pool)
    for (const auto& t : pool) {
      bool share_orbit = false;
      for (auto& [es, ms] : s.entries())
        for (auto& [et, mt] : t.entries())
          if (rep6.orbit_of(es) == rep6.orbit_of(et)) share_orbit = true;
      if (!share_orbit) continue;
      CHECK(shape_less(shape(s.concat(t), rep6), shape(s, rep6)));
    }
}

TEST_CASE("bricks") {
  auto rep = fixtures::z7z3_vplus();
  CHECK(is_brick(mono({1, 1, 1}), rep));        // weights {1,2,4} = full orbit
  CHECK_FALSE(is_brick(mono({2, 0, 0}), rep));  // (1,1) has multiplicity 2
  CHECK_FALSE(is_brick(mono({1, 1, 0}), rep));  // {1,2} proper subset

  auto a4 = fixtures::a4_perm4();
  CHECK(is_brick(mono({1, 0, 0, 0}), a4));      // A-invariant variable
  CHECK(is_brick(mono({0, 1, 1, 1}), a4));      // {a,b,c} full orbit
  CHECK_FALSE(is_brick(mono({2, 0, 0, 0}), a4));

  // order-4 quotient: the minimal subgroup is <g^2>, bricks are +/- pairs
  auto z5 = make_group({5});
  std::vector<RepVariable> vars = {{1, 1, 0}, {2, 2, 0}, {4, 3, 0}, {3, 0, 0}};
  auto z5z4 = MonomialRep::with_unit_action(z5, 4, 2, vars);
  CHECK(z5z4.minimal_subgroup_powers() == std::vector<long>{2});
  CHECK(is_brick(mono({1, 0, 1, 0}), z5z4));       // weights {1,4}
  CHECK(is_brick(mono({0, 1, 0, 1}), z5z4));       // weights {2,3}
  CHECK_FALSE(is_brick(mono({1, 1, 0, 0}), z5z4));  // weights {1,2}
}

TEST_CASE("gapless sequences") {
  auto rep = fixtures::z7z3_vplus();
  auto A = rep.group();
  CHECK(is_gapless(Sequence(A, {1, 1, 2}), rep));
  CHECK_FALSE(is_gapless(Sequence(A, {1, 1}), rep));
  CHECK(is_gapless(Sequence(A, {1, 2, 4, 1, 2, 4}), rep));
  CHECK(is_gapless(Sequence(A), rep));  // empty
  CHECK(is_gapless(mono({2, 1, 0}), rep));
  CHECK_FALSE(is_gapless(mono({2, 0, 0}), rep));
}

namespace {

// Independent terminal-monomial oracle: raw loops over all divisors and
// coset representatives, with shapes recomputed from first principles.
std::vector<std::vector<long>> naive_shape(const Sequence& s, const MonomialRep& rep) {
  std::vector<std::vector<long>> mu(rep.orbits().size());
  for (size_t oi = 0; oi < rep.orbits().size(); ++oi) {
    std::vector<long> mults;
    for (auto& [e, m] : s.entries())
      if (rep.orbit_of(e) == static_cast<int>(oi)) mults.push_back(m);
    long h = 0;
    for (long m : mults) h = std::max(h, m);
    for (long level = 1; level <= h; ++level) {
      long c = 0;
      for (long m : mults)
        if (m >= level) ++c;
      mu[oi].push_back(c);
    }
  }
  return mu;
}

bool naive_shape_less(const std::vector<std::vector<long>>& a,
                      const std::vector<std::vector<long>>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    for (size_t j = 0;; ++j) {
      long av = j < a[i].size() ? a[i][j] : 0;
      long bv = j < b[i].size() ? b[i][j] : 0;
      if (av != bv) return av > bv;
    }
  }
  return false;
}

bool naive_terminal(const Monomial& m, const MonomialRep& rep) {
  auto base = naive_shape(rep.weight_sequence(m), rep);
  std::function<bool(size_t, Monomial&)> any_good = [&](size_t i, Monomial& u) -> bool {
    if (i == m.nvars()) {
      if (u.degree() == 0 || u.degree() >= m.degree()) return false;
      if (!rep.is_a_invariant(u)) return false;
      Monomial v = u.divide_into(m);
      for (long j = 1; j < rep.quotient_order(); ++j) {
        auto ub = rep.monomial_image(u, j).first;
        if (!naive_shape_less(naive_shape(rep.weight_sequence(ub * v), rep), base))
          return false;
      }
      return true;
    }
    for (std::uint16_t e = 0; e <= m.exp(i); ++e) {
      u.set_exp(i, e);
      if (any_good(i + 1, u)) return true;
    }
    u.set_exp(i, 0);
    return false;
  };
  Monomial u(m.nvars());
  return !any_good(0, u);
}

}  // namespace

TEST_CASE("terminal monomials") {
  auto rep = fixtures::z7z3_vplus();

  // single-variable monomials below the Davenport constant are terminal
  CHECK(is_terminal(mono({3, 0, 0}), rep));
  CHECK(is_terminal(mono({0, 5, 0}), rep));

  // good factors are A-invariant proper divisors that drop the shape
  auto gf = good_factor(mono({1, 1, 1}), rep);
  CHECK_FALSE(gf.has_value());  // xyz is fixed by g, shapes cannot drop

  // exhaustive agreement with the brute-force oracle on small monomials
  auto rep6 = fixtures::z7z3_vplus_vminus();
  std::vector<Monomial> cases;
  std::function<void(size_t, long, Monomial&)> gen = [&](size_t i, long rem, Monomial& m) {
    if (i == 6) {
      if (m.degree() >= 1) cases.push_back(m);
      return;
    }
    for (long e = 0; e <= rem; ++e) {
      m.set_exp(i, static_cast<std::uint16_t>(e));
      gen(i + 1, rem - e, m);
    }
    m.set_exp(i, 0);
  };
  Monomial work(6);
  gen(0, 4, work);
  long checked = 0;
  for (const auto& m : cases) {
    CHECK(is_terminal(m, rep6) == naive_terminal(m, rep6));
    ++checked;
  }
  CHECK(checked > 100);

  // variable subsets must be g-stable
  CHECK_THROWS_AS(good_factor(mono({1, 1, 1}), rep, std::vector<int>{0}), input_error);
  CHECK(good_factor(mono({1, 1, 1}), rep, std::vector<int>{0, 1, 2}) ==
        good_factor(mono({1, 1, 1}), rep));
}
