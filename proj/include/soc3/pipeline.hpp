#pragma once

#include <optional>
#include <string>
#include <vector>

#include "soc3/cases.hpp"

namespace soc3 {

template <class F>
struct ResolveOptions {
  bool verify = true;
  int degree_bound = 10;
};

template <class F>
struct CaseResult {
  CaseTag tag = CaseTag::Nine;
  NormalizedSystem<F> ns;
  std::optional<CoreMatrices<F>> core;
  std::optional<GradedComplex<F>> tilde;
  std::optional<GradedComplex<F>> minimal;
  std::optional<SevenResolution<F>> seven;
  std::optional<LinkedPair<F>> linked;
  std::optional<SixResult<F>> six;
  int generator_count = 0;
  VerificationReport report;
};

namespace detail {

template <class F>
bool grid_equals_graded(const F&, const PolyGrid<F>& g,
                        const GradedMatrix<F>& m) {
  if (static_cast<int>(g.size()) != m.rows()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(g[i].size()) != m.cols()) return false;
    for (int j = 0; j < m.cols(); ++j)
      if (!(g[i][j] == m.at(i, j))) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// identity suite on the core matrices

template <class F>
void verify_core_identities(const NormalizedSystem<F>& ns,
                            const CoreMatrices<F>& cm,
                            const AnnihilatorOracle<F>& oracle,
                            VerificationReport& r) {
  const F& f = ns.f;
  using detail::grid_of;
  using detail::PolyGrid;
  r.add("p symmetric", ns.p.is_symmetric());
  r.add("SM symmetric", cm.sm.is_symmetric());

  PolyGrid<F> A = grid_of(cm.A), D = grid_of(cm.D);
  SymPoly<F> X = SymPoly<F>::variable(f, 0);
  SymPoly<F> X2 = X * X;

  bool id1 = true;  // x^2 C B^T + D A^T = 0
  for (int i = 0; i < 6 && id1; ++i)
    for (int j = 0; j < 3 && id1; ++j) {
      SymPoly<F> s(f);
      for (int k = 0; k < 8; ++k) {
        if (!cm.B.at(j, k).is_zero())
          s = s + X2.scaled(cm.C.at(i, k) * cm.B.at(j, k));
        s = s + D[i][k] * A[j][k];
      }
      id1 = s.is_zero();
    }
  r.add("x^2 C B^T + D A^T = 0", id1);

  bool id2 = true;  // x f11 B + f12 D = 0
  for (int k = 0; k < 8 && id2; ++k) {
    SymPoly<F> s(f);
    for (int j = 0; j < 3; ++j)
      if (!cm.B.at(j, k).is_zero())
        s = s + (X * cm.f11.at(0, j)).scaled(cm.B.at(j, k));
    for (int j = 0; j < 6; ++j) s = s + cm.f12.at(0, j) * D[j][k];
    id2 = s.is_zero();
  }
  r.add("x f11 B + f12 D = 0", id2);

  bool alt = true;  // A B^T alternating over P
  for (int i = 0; i < 3 && alt; ++i)
    for (int j = 0; j <= i && alt; ++j) {
      SymPoly<F> sij(f), sji(f);
      for (int k = 0; k < 8; ++k) {
        if (!cm.B.at(j, k).is_zero()) sij = sij + A[i][k].scaled(cm.B.at(j, k));
        if (!cm.B.at(i, k).is_zero()) sji = sji + A[j][k].scaled(cm.B.at(i, k));
      }
      alt = (i == j) ? sij.is_zero() : (sij == -sji);
    }
  r.add("A B^T alternating", alt);

  bool pm = true;  // every nonzero B entry is plus or minus an SM entry
  for (int i = 0; i < 3 && pm; ++i)
    for (int k = 0; k < 8 && pm; ++k) {
      const auto& b = cm.B.at(i, k);
      if (b.is_zero()) continue;
      bool found = false;
      for (int a = 0; a < 3 && !found; ++a)
        for (int c = 0; c < 3 && !found; ++c)
          found = (b == cm.sm.at(a, c)) || (b == -cm.sm.at(a, c));
      pm = found;
    }
  r.add("B entries are +- SM entries", pm);

  int rb = rank(cm.B);
  r.add("rank B in {0,2,3}", rb == 0 || rb == 2 || rb == 3,
        "rank B = " + std::to_string(rb));
  r.add("rank B = rank c1", rb == rank(c1_matrix(cm.sm)));
  int gens = minimal_generator_count(oracle);
  r.add("minimal generators = 9 - rank B", gens == 9 - rb,
        "oracle count " + std::to_string(gens));
  int rsm = rank(cm.sm);
  bool tag_ok = (ns.tag == CaseTag::Nine && rsm == 0) ||
                (ns.tag == CaseTag::Seven && rsm == 1) ||
                (ns.tag == CaseTag::Six && rsm >= 2);
  r.add("case tag matches SM rank", tag_ok, case_name(ns.tag));
}

// ---------------------------------------------------------------------------
// the two assemblies against the oracle

template <class F>
void verify_assemblies(const NormalizedSystem<F>& ns,
                       const CoreMatrices<F>& cm,
                       const AnnihilatorOracle<F>& oracle, int D,
                       VerificationReport& r) {
  const F& f = ns.f;
  GradedComplex<F> lin = assemble_linear(cm);
  GradedComplex<F> til = assemble_tilde(cm);
  r.add("(F,f) compositions zero", check_zero_compositions(lin));
  r.add("(F,ftilde) compositions zero", check_zero_compositions(til));
  r.add("(F,f) Betti totals (1,9,16,9,1)",
        betti_totals(lin) == std::vector<int>({1, 9, 16, 9, 1}));
  r.add("(F,ftilde) graded shape",
        til.module_degrees(1) ==
                std::vector<int>({3, 3, 3, 2, 2, 2, 2, 2, 2}) &&
            til.module_degrees(2) ==
                std::vector<int>({4, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 3,
                                  3}) &&
            til.module_degrees(3) ==
                std::vector<int>({4, 4, 4, 5, 5, 5, 5, 5, 5}) &&
            til.module_degrees(4) == std::vector<int>({7}));

  DivPow<F> xphi = contract(SymPoly<F>::variable(f, 0), ns.phi);
  AnnihilatorOracle<F> oracle_x = annihilator_oracle(f, xphi);
  r.add(check_graded_exactness(lin, oracle_x.hf_padded(D), D,
                               "(F,f) exactness vs ann(x Phi)"));
  r.add(check_graded_exactness(til, oracle.hf_padded(D), D,
                               "(F,ftilde) exactness vs ann(Phi)"));
  r.add("ideal(f1) = ann(x Phi)",
        ideal_equal(f, row_entries(lin.diff[0]), oracle_x.generators()));
  r.add("ideal(ftilde1) = ann(Phi)",
        ideal_equal(f, row_entries(til.diff[0]), oracle.generators()));
}

// ---------------------------------------------------------------------------
// case-specific verification

template <class F>
void verify_nine(CaseResult<F>& res, const AnnihilatorOracle<F>& oracle,
                 int D) {
  const F& f = res.ns.f;
  VerificationReport& r = res.report;
  r.add("B = 0", res.core->B.is_zero());
  r.add("SM = 0", res.core->sm.is_zero());
  r.add("linked9 cone equals (F,ftilde) entrywise",
        linked9_cone_matches_tilde(*res.linked, *res.tilde));
  check_mapping_cone(res.linked->map, oracle.hf_padded(D), D, "linked9", r);
  r.add("bottom row at x=0 is the Eagon-Northcott skeleton",
        res.core->A.drop_x() == en_skeleton_Abar(f) &&
            res.core->D.drop_x() == en_skeleton_Dbar(f) &&
            res.core->f12.drop_x() == en_skeleton_f12bar(f));
}

template <class F>
void verify_seven(CaseResult<F>& res, const AnnihilatorOracle<F>& oracle,
                  int D) {
  const F& f = res.ns.f;
  VerificationReport& r = res.report;
  GradedComplex<F> e = res.seven->complex();
  r.add("minres7 compositions zero", check_zero_compositions(e));
  r.add(check_graded_exactness(e, oracle.hf_padded(D), D,
                               "minres7 exactness vs ann(Phi)"));
  r.add("ideal(E1) = ann(Phi)",
        ideal_equal(f, row_entries(e.diff[0]), oracle.generators()));
  r.add("minres7 Betti totals (1,7,12,7,1)",
        betti_totals(e) == std::vector<int>({1, 7, 12, 7, 1}));

  auto brown = brown_complex(f, *res.linked->brown);
  bool match = detail::grid_equals_graded(f, brown[0], res.linked->bottom1) &&
               detail::grid_equals_graded(f, brown[1], res.linked->bottom2) &&
               detail::grid_equals_graded(f, brown[2], res.linked->bottom3);
  r.add("linked7 bottom row is the Brown complex with z2 = 0", match);
  check_mapping_cone(res.linked->map, oracle.hf_padded(D), D, "linked7", r);
  GradedComplex<F> cone = mapping_cone(res.linked->map);
  r.add("linked7 cone matches minres7 degreewise",
        betti_table(cone) == betti_table(e));
}

template <class F>
void verify_six(CaseResult<F>& res, const AnnihilatorOracle<F>& oracle,
                int D) {
  const F& f = res.ns.f;
  VerificationReport& r = res.report;
  const SixResult<F>& six = *res.six;
  r.add("X alternating", check_alternating(six.X));
  r.add("L alternating", check_alternating(six.L));
  {
    bool ld = true;
    for (int i = 0; i < 6 && ld; ++i) {
      SymPoly<F> s(f);
      for (int j = 0; j < 6; ++j)
        s = s + six.L.at(i, j).scaled(six.delta.at(j, 0));
      ld = s.is_zero();
    }
    r.add("L delta = 0", ld);
  }
  GradedComplex<F> bottom = six.bottom();
  r.add("d1 X = 0 and X d1^T = 0", check_zero_compositions(bottom));
  int Dj = D + 2;
  std::vector<int> hfj = euler_hf(bottom, Dj);
  r.add(check_graded_exactness(bottom, hfj, Dj,
                               "six bottom row exactness (P/J)"));
  std::vector<SymPoly<F>> j_gens = row_entries(six.d1);
  r.add("f regular on P/J",
        check_regular_element(f, j_gens, six.f6, D, hfj));
  std::vector<SymPoly<F>> all_gens = j_gens;
  all_gens.push_back(six.f6);
  r.add("ideal(d1) + (f) = ann(Phi)",
        ideal_equal(f, all_gens, oracle.generators()));
  check_mapping_cone(six.hypersurface_map(), oracle.hf_padded(D), D,
                     "six hypersurface cone", r);
  r.add("six Betti totals (1,6,10,6,1)",
        betti_totals(*res.minimal) == std::vector<int>({1, 6, 10, 6, 1}));
}

template <class F>
void verify_exceptional(CaseResult<F>& res, int D) {
  const F& f = res.ns.f;
  VerificationReport& r = res.report;
  check_mapping_cone(res.linked->map, {1, 4, 4, 1}, D, "exceptional", r);
  GradedComplex<F> cone = mapping_cone(res.linked->map);
  std::vector<SymPoly<F>> cone_gens = row_entries(cone.diff[0]);
  r.add("cone ideal = (xy,xz,xw,y^2,z^2,w^2,x^3+yzw)",
        ideal_equal(f, cone_gens, exceptional_ideal(f)));
  r.add("exceptional normal form found",
        res.ns.exceptional_change.has_value());
  if (res.ns.exceptional_change) {
    DivPow<F> normal = substitute_dual(res.ns.phi, *res.ns.exceptional_change);
    AnnihilatorOracle<F> o = annihilator_oracle(f, normal);
    r.add("cone ideal = ann(normalized Phi)",
          ideal_equal(f, cone_gens, o.generators()));
    r.add("Hilbert function (1,4,4,1)",
          o.hf == std::vector<int>({1, 4, 4, 1}));
  }
}

// ---------------------------------------------------------------------------
// dispatcher

template <class F>
CaseResult<F> resolve(const NormalizedSystem<F>& ns,
                      const ResolveOptions<F>& opts = {}) {
  const F& f = ns.f;
  CaseResult<F> res;
  res.ns = ns;
  res.tag = ns.tag;
  res.report.degree_bound = opts.degree_bound;
  if (ns.tag == CaseTag::Exceptional) {
    res.linked = exceptional_resolution(f);
    res.minimal = mapping_cone(res.linked->map);
    res.generator_count = 7;
    if (opts.verify) verify_exceptional(res, opts.degree_bound);
    return res;
  }
  res.core = basic_soc_deg3(ns);
  res.tilde = assemble_tilde(*res.core);
  AnnihilatorOracle<F> oracle = annihilator_oracle(f, ns.phi);
  switch (ns.tag) {
    case CaseTag::Nine:
      res.linked = linked9(ns);
      res.minimal = res.tilde;
      res.generator_count = 9;
      break;
    case CaseTag::Seven:
      res.seven = minres7(ns);
      res.linked = linked7(ns);
      res.minimal = res.seven->complex();
      res.generator_count = 7;
      break;
    case CaseTag::Six:
      res.six = minres6(ns);
      res.minimal = mapping_cone(res.six->hypersurface_map());
      res.generator_count = 6;
      break;
    default:
      fail(ErrorKind::Invariant, "unexpected case tag");
  }
  if (opts.verify) {
    verify_core_identities(ns, *res.core, oracle, res.report);
    verify_assemblies(ns, *res.core, oracle, opts.degree_bound, res.report);
    if (ns.tag == CaseTag::Nine)
      verify_nine(res, oracle, opts.degree_bound);
    else if (ns.tag == CaseTag::Seven)
      verify_seven(res, oracle, opts.degree_bound);
    else
      verify_six(res, oracle, opts.degree_bound);
  }
  return res;
}

}  // namespace soc3
