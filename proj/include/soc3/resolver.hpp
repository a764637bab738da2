#pragma once

#include <vector>

#include "soc3/graded.hpp"
#include "soc3/invsys.hpp"

namespace soc3 {

// The seven matrices of the core construction: f11, f12 (degree-2 rows), A,
// D (linear entries), the constant B and C, and SM.  Row/column bases follow
// the fixed tables: columns of A and C are indexed by the kernel basis
// (y(x)y*-w(x)w*, y(x)z*, y(x)w*, z(x)y*, z(x)z*-w(x)w*, z(x)w*, w(x)y*,
// w(x)z*), columns of B and D by the quotient basis (y(x)y*, z(x)y*,
// w(x)y*, y(x)z*, z(x)z*, w(x)z*, y(x)w*, z(x)w*).
template <class F>
struct CoreMatrices {
  GradedMatrix<F> f11;  // 1x3
  GradedMatrix<F> f12;  // 1x6
  GradedMatrix<F> A;    // 3x8, linear
  ScalarMat<F> B;       // 3x8
  ScalarMat<F> C;       // 6x8
  GradedMatrix<F> D;    // 6x8, linear
  ScalarMat<F> sm;      // 3x3
};

namespace detail {

template <class F>
std::vector<int> repeat(int value, int n) {
  return std::vector<int>(n, value);
}

// re-tags degree vectors; entry degrees must stay consistent
template <class F>
GradedMatrix<F> retag(const GradedMatrix<F>& m, const std::vector<int>& rdeg,
                      const std::vector<int>& cdeg) {
  GradedMatrix<F> r(m.field(), rdeg, cdeg);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j));
  return r;
}

template <class F>
GradedMatrix<F> plain_transpose(const GradedMatrix<F>& m,
                                const std::vector<int>& rdeg,
                                const std::vector<int>& cdeg) {
  GradedMatrix<F> r(m.field(), rdeg, cdeg);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(j, i, m.at(i, j));
  return r;
}

}  // namespace detail

// p^{-1} applied to a degree-1 divided-power element: write it on the dual
// basis, apply the inverse matrix, and read off a linear form.
template <class F>
SymPoly<F> pinv_linear_form(const NormalizedSystem<F>& ns,
                            const DivPow<F>& nu) {
  const F& f = ns.f;
  ScalarMat<F> c = ns.p_inv * dual_coords(nu);
  SymPoly<F> out(f);
  for (int r = 0; r < 4; ++r) out.add_term(Mono::var(r), c.at(r, 0));
  return out;
}

template <class F>
SymPoly<F> pinv_dual_var(const NormalizedSystem<F>& ns, int dual_var) {
  const F& f = ns.f;
  SymPoly<F> out(f);
  for (int r = 0; r < 4; ++r)
    out.add_term(Mono::var(r), ns.p_inv.at(r, dual_var));
  return out;
}

template <class F>
CoreMatrices<F> basic_soc_deg3(const NormalizedSystem<F>& ns) {
  const F& f = ns.f;
  if (ns.tag == CaseTag::Exceptional)
    fail(ErrorKind::Singular,
         "One must choose Phi so that the only linear element in ann(Phi) is "
         "zero and the first variable is a weak Lefschetz element");
  const DivPow<F>& phi = ns.phi;
  const int y = 1, z = 2, w = 3;
  SymPoly<F> X = SymPoly<F>::variable(f, 0);
  auto var = [&](int i) { return SymPoly<F>::variable(f, i); };
  auto m2 = [&](int i, int j) {
    return SymPoly<F>(f, Mono::var(i) + Mono::var(j), f.one());
  };
  auto ip = [&](const SymPoly<F>& a, const SymPoly<F>& b) {
    return bilinear_pair(phi, ns.p_inv, a, b);
  };
  std::vector<Mono> vsq = monomials(kU0Vars, 2);

  CoreMatrices<F> cm{
      GradedMatrix<F>(f, {0}, detail::repeat<F>(2, 3)),
      GradedMatrix<F>(f, {0}, detail::repeat<F>(2, 6)),
      GradedMatrix<F>(f, detail::repeat<F>(0, 3), detail::repeat<F>(1, 8)),
      ScalarMat<F>(f, 3, 8),
      ScalarMat<F>(f, 6, 8),
      GradedMatrix<F>(f, detail::repeat<F>(0, 6), detail::repeat<F>(1, 8)),
      ns.sm};

  // f11: column for nu* is x p^{-1}(nu*)
  for (int j = 0; j < 3; ++j) cm.f11.set(0, j, X * pinv_dual_var(ns, j + 1));

  // f12: column for u2 is u2 - x p^{-1}(u2 Phi)
  for (int k = 0; k < 6; ++k) {
    SymPoly<F> u2(f, vsq[k], f.one());
    SymPoly<F> tail = pinv_linear_form(ns, contract(u2, phi));
    cm.f12.set(0, k, u2 - X * tail);
  }

  // B: constant differences of bilinear values, columns on the quotient basis
  {
    auto col = [&](int j, const typename F::Elt& r0, const typename F::Elt& r1,
                   const typename F::Elt& r2) {
      cm.B.at(0, j) = r0;
      cm.B.at(1, j) = r1;
      cm.B.at(2, j) = r2;
    };
    typename F::Elt o = f.zero();
    col(0, o, ip(m2(y, w), m2(z, z)) - ip(m2(y, z), m2(z, w)),
        ip(m2(y, w), m2(z, w)) - ip(m2(y, z), m2(w, w)));
    col(1, ip(m2(y, z), m2(z, w)) - ip(m2(y, w), m2(z, z)), o,
        ip(m2(z, w), m2(z, w)) - ip(m2(z, z), m2(w, w)));
    col(2, ip(m2(y, z), m2(w, w)) - ip(m2(y, w), m2(z, w)),
        ip(m2(z, z), m2(w, w)) - ip(m2(z, w), m2(z, w)), o);
    col(3, o, ip(m2(y, y), m2(z, w)) - ip(m2(y, w), m2(y, z)),
        ip(m2(y, y), m2(w, w)) - ip(m2(y, w), m2(y, w)));
    col(4, ip(m2(y, w), m2(y, z)) - ip(m2(y, y), m2(z, w)), o,
        ip(m2(z, y), m2(w, w)) - ip(m2(z, w), m2(y, w)));
    col(5, ip(m2(y, w), m2(y, w)) - ip(m2(y, y), m2(w, w)),
        ip(m2(z, w), m2(y, w)) - ip(m2(w, w), m2(y, z)), o);
    col(6, o, ip(m2(y, z), m2(y, z)) - ip(m2(y, y), m2(z, z)),
        ip(m2(y, z), m2(y, w)) - ip(m2(y, y), m2(w, z)));
    col(7, ip(m2(y, y), m2(z, z)) - ip(m2(y, z), m2(y, z)), o,
        ip(m2(z, z), m2(y, w)) - ip(m2(z, y), m2(z, w)));
  }

  // constant-in-x skeleton of D
  const int kb222[6][8][2] = {
      // (variable index or -1, sign); see the Eagon-Northcott skeleton
      {{-1, 0}, {-1, 0}, {-1, 0}, {w, 1}, {-1, 0}, {-1, 0}, {z, -1}, {-1, 0}},
      {{w, -1}, {-1, 0}, {-1, 0}, {-1, 0}, {w, 1}, {-1, 0}, {y, 1}, {z, -1}},
      {{z, 1}, {-1, 0}, {-1, 0}, {y, -1}, {-1, 0}, {w, 1}, {-1, 0}, {-1, 0}},
      {{-1, 0}, {w, -1}, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {-1, 0}, {y, 1}},
      {{-1, 0}, {z, 1}, {w, -1}, {-1, 0}, {y, -1}, {-1, 0}, {-1, 0}, {-1, 0}},
      {{-1, 0}, {-1, 0}, {z, 1}, {-1, 0}, {-1, 0}, {y, -1}, {-1, 0}, {-1, 0}}};

  // l * (proj . p^{-1})(qu Phi) written on the quadric basis of y,z,w
  auto j12 = [&](int l, const SymPoly<F>& qu) {
    SymPoly<F> t = pinv_linear_form(ns, contract(qu, phi)).drop_x();
    return var(l) * t;
  };
  {
    std::vector<SymPoly<F>> cols;
    cols.push_back(-j12(z, m2(y, w)) + j12(w, m2(y, z)));
    cols.push_back(j12(w, m2(z, z)) - j12(z, m2(w, z)));
    cols.push_back(j12(w, m2(z, w)) - j12(z, m2(w, w)));
    cols.push_back(-j12(w, m2(y, y)) + j12(y, m2(w, y)));
    cols.push_back(-j12(w, m2(y, z)) + j12(y, m2(w, z)));
    cols.push_back(-j12(w, m2(y, w)) + j12(y, m2(w, w)));
    cols.push_back(j12(z, m2(y, y)) - j12(y, m2(y, z)));
    cols.push_back(j12(z, m2(y, z)) - j12(y, m2(z, z)));
    for (int jcol = 0; jcol < 8; ++jcol)
      for (int i = 0; i < 6; ++i) {
        SymPoly<F> entry(f);
        auto [v, s] = std::pair<int, int>(kb222[i][jcol][0], kb222[i][jcol][1]);
        if (v >= 0)
          entry.add_term(Mono::var(v), s > 0 ? f.one() : -f.one());
        typename F::Elt c = cols[jcol].coeff(vsq[i]);
        if (!c.is_zero()) entry.add_term(Mono::var(0), -c);
        cm.D.set(i, jcol, entry);
      }
  }

  // constant-in-x skeleton of A
  const int kb211[3][8][2] = {
      {{y, 1}, {-1, 0}, {-1, 0}, {z, 1}, {-1, 0}, {-1, 0}, {w, 1}, {-1, 0}},
      {{-1, 0}, {y, 1}, {-1, 0}, {-1, 0}, {z, 1}, {-1, 0}, {-1, 0}, {w, 1}},
      {{w, -1}, {-1, 0}, {y, 1}, {-1, 0}, {w, -1}, {z, 1}, {-1, 0}, {-1, 0}}};

  // (y*,z*,w*)-coordinates of [mu p^{-1}(nu*)](Phi)
  auto j14p = [&](int mu, int nu) {
    DivPow<F> img = contract(var(mu) * pinv_dual_var(ns, nu), phi);
    ScalarMat<F> c(f, 3, 1);
    for (int i = 0; i < 3; ++i) c.at(i, 0) = img.coeff(Mono::var(i + 1));
    return c;
  };
  {
    std::vector<ScalarMat<F>> cols;
    cols.push_back(j14p(y, y) - j14p(w, w));
    cols.push_back(j14p(y, z));
    cols.push_back(j14p(y, w));
    cols.push_back(j14p(z, y));
    cols.push_back(j14p(z, z) - j14p(w, w));
    cols.push_back(j14p(z, w));
    cols.push_back(j14p(w, y));
    cols.push_back(j14p(w, z));
    for (int jcol = 0; jcol < 8; ++jcol)
      for (int i = 0; i < 3; ++i) {
        SymPoly<F> entry(f);
        auto [v, s] = std::pair<int, int>(kb211[i][jcol][0], kb211[i][jcol][1]);
        if (v >= 0)
          entry.add_term(Mono::var(v), s > 0 ? f.one() : -f.one());
        typename F::Elt c = cols[jcol].at(i, 0);
        if (!c.is_zero()) entry.add_term(Mono::var(0), -c);
        cm.A.set(i, jcol, entry);
      }
  }

  // C = -(columns mu (proj . p^{-1})(nu*) on the quadric basis)
  auto j14 = [&](int mu, int nu) {
    return var(mu) * pinv_dual_var(ns, nu).drop_x();
  };
  {
    std::vector<SymPoly<F>> cols;
    cols.push_back(j14(y, y) - j14(w, w));
    cols.push_back(j14(y, z));
    cols.push_back(j14(y, w));
    cols.push_back(j14(z, y));
    cols.push_back(j14(z, z) - j14(w, w));
    cols.push_back(j14(z, w));
    cols.push_back(j14(w, y));
    cols.push_back(j14(w, z));
    for (int jcol = 0; jcol < 8; ++jcol)
      for (int i = 0; i < 6; ++i) cm.C.at(i, jcol) = -cols[jcol].coeff(vsq[i]);
  }
  return cm;
}

namespace detail {

template <class F>
GradedMatrix<F> scalar_block(const ScalarMat<F>& m, int rdeg, int cdeg) {
  return graded_from_scalar(m, repeat<F>(rdeg, m.rows()),
                            repeat<F>(cdeg, m.cols()));
}

template <class F>
GradedMatrix<F> poly_scaled_block(const ScalarMat<F>& m, const SymPoly<F>& s,
                                  int rdeg, int cdeg) {
  GradedMatrix<F> r(m.field(), repeat<F>(rdeg, m.rows()),
                    repeat<F>(cdeg, m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) r.set(i, j, s.scaled(m.at(i, j)));
  return r;
}

template <class F>
GradedMatrix<F> graded_block(const GradedMatrix<F>& m, int rdeg, int cdeg) {
  return retag(m, repeat<F>(rdeg, m.rows()), repeat<F>(cdeg, m.cols()));
}

template <class F>
GradedMatrix<F> graded_block_scaled(const GradedMatrix<F>& m,
                                    const SymPoly<F>& s, int rdeg, int cdeg) {
  GradedMatrix<F> r(m.field(), repeat<F>(rdeg, m.rows()),
                    repeat<F>(cdeg, m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.set(i, j, m.at(i, j) * s);
  return r;
}

template <class F>
GradedMatrix<F> transpose_block(const GradedMatrix<F>& m, int rdeg, int cdeg) {
  return plain_transpose(m, repeat<F>(rdeg, m.cols()),
                         repeat<F>(cdeg, m.rows()));
}

}  // namespace detail

// The Gorenstein-linear resolution of P/ann(x Phi):
//   f1 = [f11 | f12], f2 = [A xB; xC D], f3 = [xB^T D^T; A^T xC^T],
//   f4 = [f11^T; f12^T].
template <class F>
GradedComplex<F> assemble_linear(const CoreMatrices<F>& cm) {
  using namespace detail;
  const F& f = cm.f11.field();
  SymPoly<F> X = SymPoly<F>::variable(f, 0);
  GradedComplex<F> c;
  c.label = "lefschetz-linear";
  GradedMatrix<F> f1 =
      hcat(graded_block(cm.f11, 0, 2), graded_block(cm.f12, 0, 2));
  GradedMatrix<F> f2 = block2x2(
      graded_block(cm.A, 2, 3), poly_scaled_block(cm.B, X, 2, 3),
      poly_scaled_block(cm.C, X, 2, 3), graded_block(cm.D, 2, 3));
  GradedMatrix<F> xBt = poly_scaled_block(cm.B.transpose(), X, 3, 4);
  GradedMatrix<F> f3 =
      block2x2(xBt, transpose_block(cm.D, 3, 4), transpose_block(cm.A, 3, 4),
               poly_scaled_block(cm.C.transpose(), X, 3, 4));
  GradedMatrix<F> f4 =
      vcat(transpose_block(cm.f11, 4, 6), transpose_block(cm.f12, 4, 6));
  c.diff = {f1, f2, f3, f4};
  c.validate_chain();
  return c;
}

// The resolution of P/ann Phi:
//   F1 = [x f11 | f12], F2 = [A B; x^2 C D], F3 = [B^T D^T; A^T x^2 C^T],
//   F4 = [x f11^T; f12^T].
template <class F>
GradedComplex<F> assemble_tilde(const CoreMatrices<F>& cm) {
  using namespace detail;
  const F& f = cm.f11.field();
  SymPoly<F> X = SymPoly<F>::variable(f, 0);
  SymPoly<F> X2 = X * X;
  GradedComplex<F> c;
  c.label = "ann-phi";
  GradedMatrix<F> F1 =
      hcat(graded_block_scaled(cm.f11, X, 0, 3), graded_block(cm.f12, 0, 2));
  GradedMatrix<F> F2 = block2x2(
      graded_block(cm.A, 3, 4), scalar_block(cm.B, 3, 3),
      poly_scaled_block(cm.C, X2, 2, 4), graded_block(cm.D, 2, 3));
  // rows of F3 carry degrees (4 x8, 3 x8); columns (4 x3, 5 x6)
  GradedMatrix<F> Bt = scalar_block(cm.B.transpose(), 4, 4);
  GradedMatrix<F> Dt = transpose_block(cm.D, 4, 5);
  GradedMatrix<F> At = transpose_block(cm.A, 3, 4);
  GradedMatrix<F> x2Ct = poly_scaled_block(cm.C.transpose(), X2, 3, 5);
  GradedMatrix<F> F3 = block2x2(Bt, Dt, At, x2Ct);
  GradedMatrix<F> F4 = vcat(
      [&] {
        GradedMatrix<F> t = transpose_block(cm.f11, 4, 6);
        return graded_block_scaled(t, X, 4, 7);
      }(),
      transpose_block(cm.f12, 5, 7));
  c.diff = {F1, F2, F3, F4};
  c.validate_chain();
  return c;
}

// The x = 0 skeleton: A, D reduce mod x to these constants and f12 to the
// monomial row; the bottom row of the nine-generator linked pair degenerates
// to the Eagon-Northcott resolution.
template <class F>
GradedMatrix<F> en_skeleton_Abar(const F& f) {
  GradedMatrix<F> m(f, detail::repeat<F>(0, 3), detail::repeat<F>(1, 8));
  auto set = [&](int i, int j, int v, int s) {
    m.set(i, j, SymPoly<F>(f, Mono::var(v), s > 0 ? f.one() : -f.one()));
  };
  set(0, 0, 1, 1);
  set(0, 3, 2, 1);
  set(0, 6, 3, 1);
  set(1, 1, 1, 1);
  set(1, 4, 2, 1);
  set(1, 7, 3, 1);
  set(2, 0, 3, -1);
  set(2, 2, 1, 1);
  set(2, 4, 3, -1);
  set(2, 5, 2, 1);
  return m;
}

template <class F>
GradedMatrix<F> en_skeleton_Dbar(const F& f) {
  GradedMatrix<F> m(f, detail::repeat<F>(0, 6), detail::repeat<F>(1, 8));
  auto set = [&](int i, int j, int v, int s) {
    m.set(i, j, SymPoly<F>(f, Mono::var(v), s > 0 ? f.one() : -f.one()));
  };
  set(0, 3, 3, 1);
  set(0, 6, 2, -1);
  set(1, 0, 3, -1);
  set(1, 4, 3, 1);
  set(1, 6, 1, 1);
  set(1, 7, 2, -1);
  set(2, 0, 2, 1);
  set(2, 3, 1, -1);
  set(2, 5, 3, 1);
  set(3, 1, 3, -1);
  set(3, 7, 1, 1);
  set(4, 1, 2, 1);
  set(4, 2, 3, -1);
  set(4, 4, 1, -1);
  set(5, 2, 2, 1);
  set(5, 5, 1, -1);
  return m;
}

template <class F>
GradedMatrix<F> en_skeleton_f12bar(const F& f) {
  GradedMatrix<F> m(f, {0}, detail::repeat<F>(2, 6));
  std::vector<Mono> vsq = monomials(kU0Vars, 2);
  for (int k = 0; k < 6; ++k) m.set(0, k, SymPoly<F>(f, vsq[k], f.one()));
  return m;
}

}  // namespace soc3
