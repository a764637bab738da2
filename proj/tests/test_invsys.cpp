#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "soc3/invsys.hpp"
#include "soc3/verify.hpp"
#include "test_util.hpp"

using namespace soc3;

static SymPoly<QQ> mono_q(const QQ& f, int i, int j) {
  return SymPoly<QQ>(f, Mono::var(i) + Mono::var(j), f.one());
}

TEST_CASE("oracle computes (1,4,4,1) on the fixtures") {
  QQ f;
  for (const char* s : {testutil::kPhi9, testutil::kPhi7, testutil::kPhi6}) {
    auto o = annihilator_oracle(f, parse_divpow(f, s));
    REQUIRE(o.hf == std::vector<int>({1, 4, 4, 1}));
    REQUIRE(o.ann_basis[1].empty());
    REQUIRE(o.ann_basis[2].size() == 6);
    REQUIRE(o.ann_basis[3].size() == 19);
  }
}

TEST_CASE("oracle on the exceptional system over F_2") {
  GF f(2);
  auto o = annihilator_oracle(f, parse_divpow(f, testutil::kPhiExc));
  REQUIRE(o.hf == std::vector<int>({1, 4, 4, 1}));
  // degree-2 annihilator is spanned by xy, xz, xw, y^2, z^2, w^2
  std::vector<SymPoly<GF>> expect;
  for (const char* s : {"x*y", "x*z", "x*w", "y^2", "z^2", "w^2"})
    expect.push_back(parse_sympoly(f, s));
  REQUIRE(ideal_equal(f, o.ann_basis[2], expect, 2));
  // x^3 + yzw is a degree-3 annihilator element outside P_1 * (ann)_2
  SymPoly<GF> cubic = parse_sympoly(f, "x^3+y*z*w");
  REQUIRE(contract(cubic, o.phi).is_zero());
  REQUIRE(ideal_piece_dim(f, o.ann_basis[2], 3) == 18);
  REQUIRE(minimal_generator_count(o) == 7);
}

TEST_CASE("oracle detects a missing variable") {
  QQ f;
  DivPow<QQ> phi(f, Mono{{3, 0, 0, 0}}, f.one());
  auto o = annihilator_oracle(f, phi);
  REQUIRE(o.hf == std::vector<int>({1, 1, 1, 1}));
  // y, z, w annihilate
  for (int v = 1; v < 4; ++v) {
    bool found = false;
    SymPoly<QQ> lin = SymPoly<QQ>::variable(f, v);
    for (const auto& g : o.ann_basis[1])
      found = found || (g == lin);
    REQUIRE(found);
  }
  InverseSystem<QQ> sys{f, phi};
  REQUIRE_THROWS_AS(validate_embedding_dim(sys), Error);
}

TEST_CASE("weak Lefschetz checks") {
  QQ f;
  auto o7 = annihilator_oracle(f, parse_divpow(f, testutil::kPhi7));
  REQUIRE(weak_lefschetz_check(o7, SymPoly<QQ>::variable(f, 0)));

  GF f2(2);
  auto oe = annihilator_oracle(f2, parse_divpow(f2, testutil::kPhiExc));
  // no linear form works: exhaustive over all 15 nonzero forms
  for (int mask = 1; mask < 16; ++mask) {
    SymPoly<GF> ell(f2);
    for (int v = 0; v < 4; ++v)
      if (mask & (1 << v)) ell.add_term(Mono::var(v), f2.one());
    REQUIRE_FALSE(weak_lefschetz_check(oe, ell));
  }
}

TEST_CASE("weak Lefschetz x implies det p nonzero on a corpus") {
  QQ f;
  auto corpus = testutil::valid_corpus(f, 15, 99);
  for (const auto& phi : corpus) {
    auto o = annihilator_oracle(f, phi);
    if (weak_lefschetz_check(o, SymPoly<QQ>::variable(f, 0))) {
      REQUIRE(!det(lefschetz_pairing_matrix(phi)).is_zero());
    }
  }
}

TEST_CASE("prepare positions the fixtures") {
  QQ f;
  SECTION("Phi9: p is the x<->w permutation, SM = 0, case Nine") {
    auto ns = prepare(InverseSystem<QQ>{f, parse_divpow(f, testutil::kPhi9)});
    REQUIRE(ns.tag == CaseTag::Nine);
    ScalarMat<QQ> perm(f, 4, 4);
    perm.at(0, 3) = f.one();
    perm.at(1, 1) = f.one();
    perm.at(2, 2) = f.one();
    perm.at(3, 0) = f.one();
    REQUIRE(ns.p == perm);
    REQUIRE(ns.sm.is_zero());
    REQUIRE(ns.applied_change == ScalarMat<QQ>::identity(f, 4));
  }
  SECTION("Phi7: SM = diag(1,0,0), case Seven") {
    auto ns = prepare(InverseSystem<QQ>{f, parse_divpow(f, testutil::kPhi7)});
    REQUIRE(ns.tag == CaseTag::Seven);
    ScalarMat<QQ> want(f, 3, 3);
    want.at(0, 0) = f.one();
    REQUIRE(ns.sm == want);
    REQUIRE(ns.alpha);
    REQUIRE(*ns.alpha == f.one());
  }
  SECTION("Phi6: SM invertible, case Six") {
    auto ns = prepare(InverseSystem<QQ>{f, parse_divpow(f, testutil::kPhi6)});
    REQUIRE(ns.tag == CaseTag::Six);
    REQUIRE(ns.sm_rank == 3);
    REQUIRE(!det(ns.sm).is_zero());
  }
}

TEST_CASE("prepare returns Exceptional over F_2 and errors elsewhere") {
  GF f2(2);
  auto ns = prepare(InverseSystem<GF>{f2, parse_divpow(f2, testutil::kPhiExc)});
  REQUIRE(ns.tag == CaseTag::Exceptional);
  REQUIRE(ns.exceptional_change.has_value());
  // the MVW form reaches the same tag after detection
  auto ns2 = prepare(InverseSystem<GF>{
      f2, parse_divpow(f2, "x^3+x*y*z+x*y*w+x*z*w+y*z*w")});
  REQUIRE(ns2.tag == CaseTag::Exceptional);
  REQUIRE(ns2.exceptional_change.has_value());
}

TEST_CASE("bilinear form: symmetry and stated values") {
  QQ f;
  DivPow<QQ> phi9 = parse_divpow(f, testutil::kPhi9);
  ScalarMat<QQ> pinv9 = invert(lefschetz_pairing_matrix(phi9));
  REQUIRE(bilinear_pair(phi9, pinv9, mono_q(f, 2, 2), mono_q(f, 3, 3))
              .is_zero());
  // w^2 Phi9 = 0 under the contraction oracle
  REQUIRE(contract(mono_q(f, 3, 3), phi9).is_zero());

  DivPow<QQ> phi7 = parse_divpow(f, testutil::kPhi7);
  ScalarMat<QQ> pinv7 = invert(lefschetz_pairing_matrix(phi7));
  Rat d = bilinear_pair(phi7, pinv7, mono_q(f, 1, 1), mono_q(f, 2, 2)) -
          bilinear_pair(phi7, pinv7, mono_q(f, 1, 2), mono_q(f, 1, 2));
  REQUIRE(d.is_zero());  // SM_33 of Phi7

  // symmetry on all basis pairs
  std::mt19937_64 rng(17);
  DivPow<QQ> phi = testutil::valid_corpus(f, 1, 55)[0];
  ScalarMat<QQ> p = lefschetz_pairing_matrix(phi);
  if (!det(p).is_zero()) {
    ScalarMat<QQ> pinv = invert(p);
    auto basis = monomials(kU0Vars, 2);
    for (const Mono& a : basis)
      for (const Mono& b : basis) {
        SymPoly<QQ> sa(f, a, f.one()), sb(f, b, f.one());
        REQUIRE(bilinear_pair(phi, pinv, sa, sb) ==
                bilinear_pair(phi, pinv, sb, sa));
      }
  }
  REQUIRE_THROWS_AS(
      bilinear_pair(phi9, pinv9, mono_q(f, 0, 1), mono_q(f, 1, 1)), Error);
}

TEST_CASE("SM is symmetric on random valid systems") {
  QQ f;
  int checked = 0;
  for (const auto& phi : testutil::valid_corpus(f, 50, 123)) {
    ScalarMat<QQ> p = lefschetz_pairing_matrix(phi);
    if (det(p).is_zero()) continue;
    ScalarMat<QQ> sm = compute_SM(phi, invert(p));
    REQUIRE(sm.is_symmetric());
    ++checked;
  }
  REQUIRE(checked >= 40);
}

TEST_CASE("p is symmetric for every valid Phi") {
  QQ f;
  for (const auto& phi : testutil::valid_corpus(f, 25, 321))
    REQUIRE(lefschetz_pairing_matrix(phi).is_symmetric());
}

TEST_CASE("case tag and Hilbert function are substitution invariants") {
  QQ f;
  std::mt19937_64 rng(77);
  for (const char* s : {testutil::kPhi9, testutil::kPhi7, testutil::kPhi6}) {
    DivPow<QQ> phi = parse_divpow(f, s);
    auto ns = prepare(InverseSystem<QQ>{f, phi});
    for (int trial = 0; trial < 2; ++trial) {
      ScalarMat<QQ> m = testutil::random_invertible(f, rng);
      DivPow<QQ> phi2 = substitute_dual(phi, m);
      auto o2 = annihilator_oracle(f, phi2);
      REQUIRE(o2.hf == std::vector<int>({1, 4, 4, 1}));
      auto ns2 = prepare(InverseSystem<QQ>{f, phi2}, 1 + trial);
      REQUIRE(ns2.tag == ns.tag);
    }
  }
}

TEST_CASE("prepare rejects embedding dimension below four") {
  QQ f;
  DivPow<QQ> phi(f, Mono{{3, 0, 0, 0}}, f.one());
  REQUIRE_THROWS_AS(prepare(InverseSystem<QQ>{f, phi}), Error);
}
