#pragma once

// Stock monomial representations used by the verification suites and
// shipped as JSON under data/reps/.

#include "noetherlab/invariant.hpp"
#include "noetherlab/monomial.hpp"

namespace nlab::reps {

inline Monomial mono(std::vector<std::uint16_t> e) { return Monomial(std::move(e)); }

/// Z_7 x| Z_3 on V_+ (weights 1,2,4 cycled by doubling).
inline MonomialRep z7z3_vplus() {
  auto A = make_group({7});
  std::vector<RepVariable> vars = {{1, 1, 0}, {2, 2, 0}, {4, 0, 0}};
  return MonomialRep::with_unit_action(A, 3, 2, vars);
}

/// Z_7 x| Z_3 on V_+ ⊕ V_- (6 variables, pure permutation action).
inline MonomialRep z7z3_vplus_vminus() {
  auto A = make_group({7});
  std::vector<RepVariable> vars = {
      {1, 1, 0}, {2, 2, 0}, {4, 0, 0},  // V_+
      {3, 4, 0}, {6, 5, 0}, {5, 3, 0},  // V_-
  };
  return MonomialRep::with_unit_action(A, 3, 2, vars);
}

/// Z_7 x| Z_3 on V_+ ⊕ (V_0 with character zeta_3): 4 variables, the last
/// picks up zeta_3 under the quotient generator.
inline MonomialRep z7z3_vplus_w() {
  auto A = make_group({7});
  std::vector<RepVariable> vars = {{1, 1, 0}, {2, 2, 0}, {4, 0, 0}, {0, 3, 1}};
  return MonomialRep::with_unit_action(A, 3, 2, vars, /*scalar_modulus=*/3);
}

/// Z_7 x| Z_3 on V_+ ⊕ V_- ⊕ V_0(zeta_3): 7 variables.
inline MonomialRep z7z3_vplus_vminus_w() {
  auto A = make_group({7});
  std::vector<RepVariable> vars = {
      {1, 1, 0}, {2, 2, 0}, {4, 0, 0}, {3, 4, 0}, {6, 5, 0}, {5, 3, 0}, {0, 6, 1},
  };
  return MonomialRep::with_unit_action(A, 3, 2, vars, /*scalar_modulus=*/3);
}

/// A_4 on the natural 4-point permutation module in the eigenbasis of the
/// Klein normal subgroup: variables (t,x,y,z) of weights (0,a,b,c); the
/// 3-cycle acts by x -> y -> -z -> -x with signs.
inline MonomialRep a4_perm4() {
  auto A = make_group({2, 2});
  std::vector<long> dual = {0, 2, 3, 1};
  std::vector<RepVariable> vars = {{0, 0, 0}, {1, 2, 0}, {2, 3, 1}, {3, 1, 1}};
  return MonomialRep(A, 3, dual, vars, /*scalar_modulus=*/2);
}

/// A_4 permutation module extended by a 1-dimensional summand with
/// character zeta_3.
inline MonomialRep a4_perm4_w() {
  auto A = make_group({2, 2});
  std::vector<long> dual = {0, 2, 3, 1};
  std::vector<RepVariable> vars = {
      {0, 0, 0}, {1, 2, 0}, {2, 3, 3}, {3, 1, 3}, {0, 4, 2}};
  return MonomialRep(A, 3, dual, vars, /*scalar_modulus=*/6);
}

/// Z_11 x| Z_5 on the orbit of 1 under multiplication by 3.
inline MonomialRep z11z5_vplus() {
  auto A = make_group({11});
  std::vector<RepVariable> vars = {{1, 1, 0}, {3, 2, 0}, {9, 3, 0}, {5, 4, 0}, {4, 0, 0}};
  return MonomialRep::with_unit_action(A, 5, 3, vars);
}

/// All characters of an abelian group, once each, with trivial quotient.
inline MonomialRep abelian_full_rep(const AbelianGroupPtr& A) {
  std::vector<long> dual(static_cast<size_t>(A->order()));
  for (long i = 0; i < A->order(); ++i) dual[i] = i;
  std::vector<RepVariable> vars;
  for (long i = 0; i < A->order(); ++i) vars.push_back({i, static_cast<int>(i), 0});
  return MonomialRep(A, 1, dual, vars);
}

namespace detail {
inline Polynomial a4_point_linear(long ct, long cx, long cy, long cz) {
  Polynomial p;
  Rational h(1, 2);
  auto term = [&](size_t i, long c) {
    if (!c) return;
    std::vector<std::uint16_t> e(4, 0);
    e[i] = 1;
    p.add_term(Monomial(e), Cyclo(Rational(c) * h));
  };
  term(0, ct);
  term(1, cx);
  term(2, cy);
  term(3, cz);
  return p;
}
}  // namespace detail

/// The degree-6 invariant of the A_4 permutation module: the Vandermonde
/// product of the four point coordinates, expressed in the eigenbasis,
/// where it equals (x^2-y^2)(x^2-z^2)(y^2-z^2).
inline Polynomial a4_degree6_invariant() {
  using detail::a4_point_linear;
  Polynomial u1 = a4_point_linear(1, 1, 1, 1), u2 = a4_point_linear(1, 1, -1, -1),
             u3 = a4_point_linear(1, -1, 1, -1), u4 = a4_point_linear(1, -1, -1, 1);
  return (u1 - u2) * (u1 - u3) * (u1 - u4) * (u2 - u3) * (u2 - u4) * (u3 - u4);
}

/// First and fourth elementary symmetric polynomials of the four point
/// coordinates, in the eigenbasis.
inline Polynomial a4_e1() {
  Polynomial p;
  p.add_term(mono({1, 0, 0, 0}), Cyclo(2));
  return p;
}

inline Polynomial a4_e4() {
  using detail::a4_point_linear;
  return a4_point_linear(1, 1, 1, 1) * a4_point_linear(1, 1, -1, -1) *
         a4_point_linear(1, -1, 1, -1) * a4_point_linear(1, -1, -1, 1);
}

}  // namespace nlab::reps
