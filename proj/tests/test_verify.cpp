#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "soc3/pipeline.hpp"
#include "test_util.hpp"

using namespace soc3;

namespace {

GradedComplex<QQ> tilde_of(const QQ& f, const char* s) {
  auto ns = prepare(InverseSystem<QQ>{f, parse_divpow(f, s)});
  return assemble_tilde(basic_soc_deg3(ns));
}

// flips the sign of one nonzero term of one entry of one differential
GradedComplex<QQ> flip_entry(const GradedComplex<QQ>& c, int pos, int i,
                             int j) {
  GradedComplex<QQ> out = c;
  const SymPoly<QQ>& e = c.diff[pos].at(i, j);
  out.diff[pos].set(i, j, -e);
  return out;
}

}  // namespace

TEST_CASE("composition check accepts the fixtures and catches a sign flip") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi7);
  REQUIRE(check_zero_compositions(til));
  // deliberately mutate a nonzero entry
  bool flipped = false;
  for (int i = 0; i < til.diff[1].rows() && !flipped; ++i)
    for (int j = 0; j < til.diff[1].cols() && !flipped; ++j)
      if (!til.diff[1].at(i, j).is_zero()) {
        GradedComplex<QQ> bad = flip_entry(til, 1, i, j);
        REQUIRE_FALSE(check_zero_compositions(bad));
        flipped = true;
      }
  REQUIRE(flipped);
}

TEST_CASE("graded exactness accepts the fixtures") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi7);
  auto res = check_graded_exactness(til, {1, 4, 4, 1}, 8, "tilde");
  REQUIRE(res.pass);
}

TEST_CASE("truncating the last differential breaks exactness") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi7);
  GradedComplex<QQ> trunc;
  trunc.label = "truncated";
  trunc.diff = {til.diff[0], til.diff[1], til.diff[2]};
  auto res = check_graded_exactness(trunc, {1, 4, 4, 1}, 8, "trunc");
  REQUIRE_FALSE(res.pass);
  REQUIRE(res.first_fail_degree <= 7);
}

TEST_CASE("exactness reports are monotone in the bound") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi6);
  for (int d = 0; d <= 8; ++d)
    REQUIRE(check_graded_exactness(til, {1, 4, 4, 1}, d, "m").pass);
}

TEST_CASE("Euler characteristic matches the Hilbert function") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi9);
  std::vector<int> hf = euler_hf(til, 10);
  REQUIRE(hf[0] == 1);
  REQUIRE(hf[1] == 4);
  REQUIRE(hf[2] == 4);
  REQUIRE(hf[3] == 1);
  for (int d = 4; d <= 10; ++d) REQUIRE(hf[d] == 0);
}

TEST_CASE("ideal equality on the stated examples") {
  QQ f;
  SymPoly<QQ> y = SymPoly<QQ>::variable(f, 1);
  SymPoly<QQ> y2 = y * y;
  REQUIRE(ideal_equal(f, {y}, {y, y2}));
  REQUIRE_FALSE(ideal_equal(f, {y}, {y2}));
  REQUIRE(ideal_equal(f, std::vector<SymPoly<QQ>>{}, {}));
  REQUIRE_FALSE(ideal_equal(f, {y}, {}));
}

TEST_CASE("ideal equality over a prime field") {
  GF f(101);
  SymPoly<GF> z = SymPoly<GF>::variable(f, 2);
  SymPoly<GF> w = SymPoly<GF>::variable(f, 3);
  REQUIRE(ideal_equal(f, {z, w}, {z + w, w}));
  REQUIRE_FALSE(ideal_equal(f, {z}, {w}));
}

TEST_CASE("regular element checks") {
  QQ f;
  SymPoly<QQ> y2 = parse_sympoly(f, "y^2");
  SymPoly<QQ> z2 = parse_sympoly(f, "z^2");
  SymPoly<QQ> x = SymPoly<QQ>::variable(f, 0);
  // x is regular on the complete intersection P/(y^2, z^2)
  REQUIRE(check_regular_element(f, {y2, z2}, x, 5));
  // an element of J is never regular
  REQUIRE_FALSE(check_regular_element(f, {y2, z2}, y2, 3));
}

TEST_CASE("alternating check") {
  QQ f;
  GradedMatrix<QQ> alt(f, {0, 0}, {1, 1});
  alt.set(0, 1, SymPoly<QQ>::variable(f, 1));
  alt.set(1, 0, -SymPoly<QQ>::variable(f, 1));
  REQUIRE(check_alternating(alt));
  GradedMatrix<QQ> sym(f, {0, 0}, {1, 1});
  sym.set(0, 1, SymPoly<QQ>::variable(f, 1));
  sym.set(1, 0, SymPoly<QQ>::variable(f, 1));
  REQUIRE_FALSE(check_alternating(sym));
  GradedMatrix<QQ> diag(f, {0}, {1});
  diag.set(0, 0, SymPoly<QQ>::variable(f, 2));
  REQUIRE_FALSE(check_alternating(diag));
}

TEST_CASE("betti tables read off the shifts") {
  QQ f;
  GradedComplex<QQ> til = tilde_of(f, testutil::kPhi9);
  auto t = betti_table(til);
  REQUIRE(t[{0, 0}] == 1);
  REQUIRE(t[{1, 2}] == 6);
  REQUIRE(t[{1, 3}] == 3);
  REQUIRE(t[{2, 3}] == 8);
  REQUIRE(t[{2, 4}] == 8);
  REQUIRE(t[{3, 4}] == 3);
  REQUIRE(t[{3, 5}] == 6);
  REQUIRE(t[{4, 7}] == 1);
}

TEST_CASE("mapping cone machinery validates the six case") {
  QQ f;
  auto ns = prepare(InverseSystem<QQ>{f, parse_divpow(f, testutil::kPhi6)});
  auto six = minres6(ns);
  auto cm = six.hypersurface_map();
  REQUIRE(check_chain_map_squares(cm));
  VerificationReport r;
  check_mapping_cone(cm, {1, 4, 4, 1}, 6, "six", r);
  for (const auto& c : r.checks) {
    INFO(c.name);
    REQUIRE(c.pass);
  }
}

TEST_CASE("exactness over a prime field uses direct ranks") {
  GF f2(2);
  auto lp = exceptional_resolution(f2);
  auto cone = mapping_cone(lp.map);
  REQUIRE(check_graded_exactness(cone, {1, 4, 4, 1}, 10, "exc").pass);
  // mutate one entry: set K1's first entry from y^2 to y^2 + x^2
  GradedComplex<GF> bad = cone;
  SymPoly<GF> e = bad.diff[0].at(0, 2);
  bad.diff[0].set(0, 2, e + parse_sympoly(f2, "x^2"));
  bool comp = check_zero_compositions(bad);
  bool exact = comp && check_graded_exactness(bad, {1, 4, 4, 1}, 8, "m").pass;
  REQUIRE_FALSE(exact);
}
