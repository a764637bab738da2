#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "soc3/poly.hpp"
#include "test_util.hpp"

using namespace soc3;

TEST_CASE("monomial enumeration follows the fixed basis order") {
  auto u0 = monomials(kU0Vars, 2);
  std::vector<std::string> got;
  for (const Mono& m : u0) got.push_back(m.str());
  REQUIRE(got == std::vector<std::string>{"y^2", "y*z", "y*w", "z^2", "z*w",
                                          "w^2"});
  auto lin = monomials(kAllVars, 1);
  REQUIRE(lin.size() == 4);
  REQUIRE(lin[0].str() == "x");
  REQUIRE(lin[3].str() == "w");
  auto deg0 = monomials(kU0Vars, 0);
  REQUIRE(deg0.size() == 1);
  REQUIRE(deg0[0].degree() == 0);
}

TEST_CASE("contraction follows the monomial rule") {
  QQ f;
  // contract(x^2, x^{*(3)}) = x^*
  DivPow<QQ> x3(f, Mono{{3, 0, 0, 0}}, f.one());
  SymPoly<QQ> x2(f, Mono{{2, 0, 0, 0}}, f.one());
  DivPow<QQ> r = contract(x2, x3);
  REQUIRE(r == DivPow<QQ>(f, Mono{{1, 0, 0, 0}}, f.one()));

  DivPow<QQ> phi = parse_divpow(f, testutil::kPhi7);
  SymPoly<QQ> one = SymPoly<QQ>::constant(f, f.one());
  REQUIRE(contract(one, phi) == phi);

  // exponent of y exceeds 1: contract(y^2, x^{*(2)} y^*) = 0
  DivPow<QQ> x2y(f, Mono{{2, 1, 0, 0}}, f.one());
  SymPoly<QQ> y2(f, Mono{{0, 2, 0, 0}}, f.one());
  REQUIRE(contract(y2, x2y).is_zero());

  // degree mismatch raises
  SymPoly<QQ> x4(f, Mono{{4, 0, 0, 0}}, f.one());
  REQUIRE_THROWS_AS(contract(x4, x3), Error);
}

TEST_CASE("pairing is the dual-basis pairing") {
  QQ f;
  DivPow<QQ> x3(f, Mono{{3, 0, 0, 0}}, f.one());
  SymPoly<QQ> x3s(f, Mono{{3, 0, 0, 0}}, f.one());
  SymPoly<QQ> x2y(f, Mono{{2, 1, 0, 0}}, f.one());
  REQUIRE(pair_eval(x3, x3s) == f.one());
  REQUIRE(pair_eval(x3, x2y).is_zero());
  DivPow<QQ> mixed = parse_divpow(f, "x^2*y+z^3");
  REQUIRE(pair_eval(mixed, x2y) == f.one());
  REQUIRE_THROWS_AS(pair_eval(x3, x2y * x2y), Error);
}

TEST_CASE("dual monomials pair to the identity matrix") {
  QQ f;
  auto ms = monomials(kAllVars, 3);
  for (const Mono& a : ms)
    for (const Mono& b : ms) {
      DivPow<QQ> da(f, a, f.one());
      SymPoly<QQ> sb(f, b, f.one());
      REQUIRE(pair_eval(da, sb) == (a == b ? f.one() : f.zero()));
    }
}

TEST_CASE("contraction is a module action") {
  QQ f;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    DivPow<QQ> nu = testutil::random_phi(f, rng);
    SymPoly<QQ> u(f), v(f);
    for (const Mono& m : monomials(kAllVars, 1))
      u.add_term(m, testutil::small_coeff(f, rng));
    for (const Mono& m : monomials(kAllVars, 1))
      v.add_term(m, testutil::small_coeff(f, rng));
    REQUIRE(contract(u * v, nu) == contract(u, contract(v, nu)));
  }
}

TEST_CASE("substitute_dual with the identity is the identity") {
  QQ f;
  DivPow<QQ> phi = parse_divpow(f, testutil::kPhi6);
  REQUIRE(substitute_dual(phi, ScalarMat<QQ>::identity(f, 4)) == phi);
}

TEST_CASE("substitute_dual rejects singular changes") {
  QQ f;
  DivPow<QQ> phi = parse_divpow(f, testutil::kPhi9);
  ScalarMat<QQ> m(f, 4, 4);
  REQUIRE_THROWS_AS(substitute_dual(phi, m), Error);
}

TEST_CASE("the characteristic-2 change of variables straightens the MVW system") {
  GF f(2);
  DivPow<GF> phi = parse_divpow(f, "x^3+x*y*z+x*y*w+x*z*w+y*z*w");
  // new duals X*=x*, Y*=y*+w*, Z*=z*+w*, W*=w*: N columns express the new
  // dual basis, and the variables move by M = (N^T)^{-1}
  ScalarMat<GF> n(f, 4, 4);
  auto one = f.one();
  n.at(0, 0) = one;
  n.at(1, 1) = one;
  n.at(2, 2) = one;
  n.at(3, 1) = one;
  n.at(3, 2) = one;
  n.at(3, 3) = one;
  ScalarMat<GF> m = invert(n.transpose());
  DivPow<GF> got = substitute_dual(phi, m);
  DivPow<GF> want = parse_divpow(f, "x^3+x*y*z+y*z*w");
  REQUIRE(got == want);
}

TEST_CASE("substitute_dual is a group action") {
  QQ f;
  std::mt19937_64 rng(11);
  DivPow<QQ> phi = parse_divpow(f, testutil::kPhi7);
  for (int trial = 0; trial < 5; ++trial) {
    ScalarMat<QQ> m = testutil::random_invertible(f, rng);
    DivPow<QQ> back = substitute_dual(substitute_dual(phi, m), invert(m));
    REQUIRE(back == phi);
  }
}

TEST_CASE("substitute_dual agrees with the pairing definition") {
  QQ f;
  std::mt19937_64 rng(13);
  DivPow<QQ> phi = testutil::random_phi(f, rng);
  ScalarMat<QQ> m = testutil::random_invertible(f, rng);
  DivPow<QQ> phi2 = substitute_dual(phi, m);
  std::vector<SymPoly<QQ>> newvar;
  for (int i = 0; i < 4; ++i) {
    SymPoly<QQ> L(f);
    for (int r = 0; r < 4; ++r) L.add_term(Mono::var(r), m.at(r, i));
    newvar.push_back(L);
  }
  for (const Mono& mp : monomials(kAllVars, 3)) {
    SymPoly<QQ> expand = SymPoly<QQ>::constant(f, f.one());
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < mp.e[i]; ++k) expand = expand * newvar[i];
    REQUIRE(phi2.coeff(mp) == pair_eval(phi, expand));
  }
}

TEST_CASE("polynomial parser round trips") {
  QQ f;
  SymPoly<QQ> p = parse_sympoly(f, "x^2*y - 3/2*z*w^2 + w^3");
  REQUIRE(p.coeff(Mono{{2, 1, 0, 0}}) == f.one());
  REQUIRE(p.coeff(Mono{{0, 0, 1, 2}}) == Rat::of_fraction(-3, 2));
  SymPoly<QQ> q = parse_sympoly(f, p.str());
  REQUIRE(p == q);
  REQUIRE_THROWS_AS(parse_sympoly(f, "x^2 + $"), Error);
}

TEST_CASE("prime field arithmetic is exact") {
  GF f(101);
  Fp a = f.of_int(45), b = f.of_int(77);
  REQUIRE((a * b) / b == a);
  REQUIRE((a - a).is_zero());
  REQUIRE_THROWS_AS(f.zero().inv(), Error);
  REQUIRE_THROWS_AS(GF(100), Error);
}
