#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "soc3/graded.hpp"
#include "soc3/invsys.hpp"
#include "test_util.hpp"

using namespace soc3;

TEST_CASE("reduce on trivial inputs") {
  QQ f;
  auto id = ScalarMat<QQ>::identity(f, 4);
  Reduced<QQ> r = reduce(id);
  REQUIRE(r.rank == 4);
  REQUIRE(r.kernel.cols() == 0);

  ScalarMat<QQ> z(f, 3, 8);
  Reduced<QQ> rz = reduce(z);
  REQUIRE(rz.rank == 0);
  REQUIRE(rz.kernel == ScalarMat<QQ>::identity(f, 8));
}

TEST_CASE("the special B has rank 2") {
  QQ f;
  ScalarMat<QQ> b(f, 3, 8);
  b.at(1, 2) = f.of_int(5);
  b.at(2, 1) = f.of_int(-5);
  REQUIRE(rank(b) == 2);
}

TEST_CASE("reduce is idempotent and satisfies rank-nullity") {
  std::mt19937_64 rng(5);
  QQ f;
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<int> dim(1, 7);
    ScalarMat<QQ> m(f, dim(rng), dim(rng));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = testutil::small_coeff(f, rng);
    Reduced<QQ> r = reduce(m);
    REQUIRE(r.rank + r.kernel.cols() == m.cols());
    Reduced<QQ> rr = reduce(r.rref);
    REQUIRE(rr.rref == r.rref);
    // kernel columns really lie in the kernel
    if (r.kernel.cols() > 0) REQUIRE((m * r.kernel).is_zero());
  }
}

TEST_CASE("invert") {
  QQ f;
  REQUIRE(invert(ScalarMat<QQ>::identity(f, 3)) ==
          ScalarMat<QQ>::identity(f, 3));
  ScalarMat<QQ> perm(f, 4, 4);
  perm.at(0, 2) = f.one();
  perm.at(1, 0) = f.one();
  perm.at(2, 3) = f.one();
  perm.at(3, 1) = f.one();
  REQUIRE(invert(perm) == perm.transpose());
  ScalarMat<QQ> sing(f, 2, 2);
  sing.at(0, 0) = f.one();
  REQUIRE_THROWS_AS(invert(sing), Error);
}

TEST_CASE("p of Phi9 is a self-inverse permutation") {
  QQ f;
  DivPow<QQ> phi = parse_divpow(f, testutil::kPhi9);
  ScalarMat<QQ> p = lefschetz_pairing_matrix(phi);
  REQUIRE(p.is_symmetric());
  REQUIRE(p * p == ScalarMat<QQ>::identity(f, 4));
  REQUIRE(invert(p) == p);
}

TEST_CASE("classical adjoint of 3x3 matrices") {
  QQ f;
  REQUIRE(classical_adjoint3(ScalarMat<QQ>::identity(f, 3)) ==
          ScalarMat<QQ>::identity(f, 3));
  ScalarMat<QQ> d(f, 3, 3);
  d.at(0, 0) = f.of_int(2);
  d.at(1, 1) = f.of_int(3);
  d.at(2, 2) = f.of_int(5);
  ScalarMat<QQ> a = classical_adjoint3(d);
  REQUIRE(a.at(0, 0) == f.of_int(15));
  REQUIRE(a.at(1, 1) == f.of_int(10));
  REQUIRE(a.at(2, 2) == f.of_int(6));
  // rank <= 1 symmetric: all cofactors vanish
  ScalarMat<QQ> r1(f, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r1.at(i, j) = f.of_int((i + 1) * (j + 1));
  REQUIRE(classical_adjoint3(r1).is_zero());
}

template <class F>
static void adjoint_identity_roundtrip(const F& f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    ScalarMat<F> s(f, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s.at(i, j) = testutil::small_coeff(f, rng);
    ScalarMat<F> lhs = s * classical_adjoint3(s);
    ScalarMat<F> rhs = ScalarMat<F>::identity(f, 3).scaled(det(s));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("s * adj(s) = det(s) I over Q and F_p") {
  adjoint_identity_roundtrip(QQ{}, 21);
  adjoint_identity_roundtrip(GF(101), 22);
  adjoint_identity_roundtrip(GF(2), 23);
}

TEST_CASE("rank-1 congruence on stated examples") {
  QQ f;
  ScalarMat<QQ> d(f, 3, 3);
  d.at(0, 0) = f.of_int(7);
  auto [q1, a1] = rank1_congruence(d);
  REQUIRE(q1 == ScalarMat<QQ>::identity(f, 3));
  REQUIRE(a1 == f.of_int(7));

  ScalarMat<QQ> d2(f, 3, 3);
  d2.at(2, 2) = f.of_int(4);
  auto [q2, a2] = rank1_congruence(d2);
  REQUIRE(a2 == f.of_int(4));
  ScalarMat<QQ> perm(f, 3, 3);
  perm.at(0, 2) = f.one();
  perm.at(1, 1) = f.one();
  perm.at(2, 0) = f.one();
  REQUIRE(q2 == perm);

  // s = v v^T for v = (1,1,0)
  ScalarMat<QQ> s(f, 3, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s.at(i, j) = f.one();
  auto [q3, a3] = rank1_congruence(s);
  ScalarMat<QQ> want(f, 3, 3);
  want.at(0, 0) = f.one();
  REQUIRE(q3.transpose() * s * q3 == want);
  REQUIRE(a3 == f.one());
}

template <class F>
static void congruence_roundtrip(const F& f, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < 25) {
    std::vector<typename F::Elt> v;
    for (int i = 0; i < 3; ++i) v.push_back(testutil::small_coeff(f, rng));
    typename F::Elt lam = testutil::small_coeff(f, rng);
    ScalarMat<F> s(f, 3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s.at(i, j) = lam * v[i] * v[j];
    if (rank(s) != 1) continue;
    auto [q, alpha] = rank1_congruence(s);
    ScalarMat<F> diag(f, 3, 3);
    diag.at(0, 0) = alpha;
    REQUIRE(q.transpose() * s * q == diag);
    REQUIRE(!alpha.is_zero());
    REQUIRE(!det(q).is_zero());
    ++done;
  }
}

TEST_CASE("rank-1 congruence always reaches the diagonal form") {
  congruence_roundtrip(QQ{}, 31);
  congruence_roundtrip(GF(101), 32);
  congruence_roundtrip(GF(2), 33);
}

TEST_CASE("rank-1 congruence rejects other ranks") {
  QQ f;
  REQUIRE_THROWS_AS(rank1_congruence(ScalarMat<QQ>::identity(f, 3)), Error);
  REQUIRE_THROWS_AS(rank1_congruence(ScalarMat<QQ>(f, 3, 3)), Error);
}

TEST_CASE("graded composition respects shapes and degrees") {
  QQ f;
  GradedMatrix<QQ> a(f, {0}, {1, 2});
  a.set(0, 0, SymPoly<QQ>::variable(f, 0));
  a.set(0, 1, SymPoly<QQ>::variable(f, 1) * SymPoly<QQ>::variable(f, 2));
  GradedMatrix<QQ> id(f, {1, 2}, {1, 2});
  id.set(0, 0, SymPoly<QQ>::constant(f, f.one()));
  id.set(1, 1, SymPoly<QQ>::constant(f, f.one()));
  REQUIRE(graded_compose(a, id) == a);
  GradedMatrix<QQ> wrong(f, {0, 0}, {1});
  REQUIRE_THROWS_AS(graded_compose(a, wrong), Error);
  // degree-violating entry is rejected at set()
  GradedMatrix<QQ> bad(f, {0}, {1});
  REQUIRE_THROWS_AS(
      bad.set(0, 0, SymPoly<QQ>(f, Mono{{2, 0, 0, 0}}, f.one())), Error);
}
