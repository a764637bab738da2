#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "soc3/error.hpp"
#include "soc3/graded.hpp"
#include "soc3/linalg.hpp"
#include "soc3/poly.hpp"

namespace soc3 {

enum class CaseTag { Nine, Seven, Six, Exceptional };

inline std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::Nine: return "Nine";
    case CaseTag::Seven: return "Seven";
    case CaseTag::Six: return "Six";
    case CaseTag::Exceptional: return "Exceptional";
  }
  return "?";
}

// A homogeneous degree-3 element of the divided-power dual.
template <class F>
struct InverseSystem {
  F f;
  DivPow<F> phi;
};

template <class F>
InverseSystem<F> make_inverse_system(const F& f, const DivPow<F>& phi) {
  auto d = phi.homogeneous_degree();
  if (!d) {
    if (phi.is_zero())
      fail(ErrorKind::Validation, "Phi must be nonzero of degree 3");
    fail(ErrorKind::Validation, "Phi must be homogeneous");
  }
  if (*d != 3) fail(ErrorKind::Validation, "Phi must have degree 3");
  return InverseSystem<F>{f, phi};
}

// Coefficient column of u(Phi) in D_1 = U* on the dual basis x*,y*,z*,w*.
template <class F>
ScalarMat<F> dual_coords(const DivPow<F>& v) {
  ScalarMat<F> c(v.field(), 4, 1);
  for (int i = 0; i < 4; ++i) c.at(i, 0) = v.coeff(Mono::var(i));
  return c;
}

// Graded annihilator of Phi computed degree by degree from the contraction
// maps Sym_d -> D_{sigma-d}, together with the Hilbert function of P/ann Phi
// and quotient-space bases used for multiplication maps.
template <class F>
struct AnnihilatorOracle {
  F f;
  DivPow<F> phi;
  int socle_degree = 3;
  std::vector<int> hf;  // degrees 0..sigma; zero beyond
  // kernel bases by degree (index 0 unused, 1..sigma populated)
  std::vector<std::vector<SymPoly<F>>> ann_basis;
  // quotient data per degree: monomial list, rref of ann span, free cols
  struct Quotient {
    std::vector<Mono> mons;
    ScalarMat<F> rref;        // rows span (ann)_d
    std::vector<int> pivots;  // pivot columns
    std::vector<int> frees;   // quotient basis = free columns
  };
  std::vector<Quotient> quotient;

  int dim_A(int d) const {
    if (d < 0 || d > socle_degree) return 0;
    return hf[d];
  }

  // generators spanning the ideal degreewise: the kernel bases together with
  // everything in degree sigma+1
  std::vector<SymPoly<F>> generators() const {
    std::vector<SymPoly<F>> gens;
    for (int d = 1; d <= socle_degree; ++d)
      for (const auto& g : ann_basis[d]) gens.push_back(g);
    for (const Mono& m : monomials(kAllVars, socle_degree + 1))
      gens.push_back(SymPoly<F>(f, m, f.one()));
    return gens;
  }

  std::vector<int> hf_padded(int D) const {
    std::vector<int> h = hf;
    h.resize(static_cast<size_t>(D) + 1, 0);
    return h;
  }

  // coordinates of (the class of) a polynomial in the quotient basis
  ScalarMat<F> project(int d, const SymPoly<F>& p) const {
    const Quotient& q = quotient[d];
    std::vector<typename F::Elt> v;
    v.reserve(q.mons.size());
    for (const Mono& m : q.mons) v.push_back(p.coeff(m));
    for (size_t r = 0; r < q.pivots.size(); ++r) {
      typename F::Elt c = v[q.pivots[r]];
      if (c.is_zero()) continue;
      for (size_t j = 0; j < q.mons.size(); ++j)
        v[j] -= c * q.rref.at(static_cast<int>(r), static_cast<int>(j));
    }
    ScalarMat<F> out(f, static_cast<int>(q.frees.size()), 1);
    for (size_t i = 0; i < q.frees.size(); ++i)
      out.at(static_cast<int>(i), 0) = v[q.frees[i]];
    return out;
  }
};

template <class F>
AnnihilatorOracle<F> annihilator_oracle(const F& f, const DivPow<F>& phi) {
  auto deg = phi.homogeneous_degree();
  if (!deg || phi.is_zero())
    fail(ErrorKind::Validation, "oracle needs a nonzero homogeneous element");
  int sigma = *deg;
  AnnihilatorOracle<F> o;
  o.f = f;
  o.phi = phi;
  o.socle_degree = sigma;
  o.hf.assign(sigma + 1, 0);
  o.hf[0] = 1;
  o.ann_basis.assign(sigma + 1, {});
  o.quotient.assign(sigma + 1, {});
  for (int d = 1; d <= sigma; ++d) {
    std::vector<Mono> cols = monomials(kAllVars, d);
    std::vector<Mono> rows = monomials(kAllVars, sigma - d);
    ScalarMat<F> m(f, static_cast<int>(rows.size()),
                   static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      DivPow<F> img = contract(SymPoly<F>(f, cols[j], f.one()), phi);
      for (size_t i = 0; i < rows.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(j)) = img.coeff(rows[i]);
    }
    Reduced<F> red = reduce(m);
    o.hf[d] = red.rank;
    for (int k = 0; k < red.kernel.cols(); ++k) {
      SymPoly<F> g(f);
      for (size_t j = 0; j < cols.size(); ++j)
        g.add_term(cols[j], red.kernel.at(static_cast<int>(j), k));
      o.ann_basis[d].push_back(g);
    }
  }
  // quotient bases
  for (int d = 0; d <= sigma; ++d) {
    auto& q = o.quotient[d];
    q.mons = monomials(kAllVars, d);
    ScalarMat<F> span(f, static_cast<int>(o.ann_basis[d].size()),
                      static_cast<int>(q.mons.size()));
    for (size_t i = 0; i < o.ann_basis[d].size(); ++i)
      for (size_t j = 0; j < q.mons.size(); ++j)
        span.at(static_cast<int>(i), static_cast<int>(j)) =
            o.ann_basis[d][i].coeff(q.mons[j]);
    Reduced<F> red = reduce(span);
    q.pivots = red.pivots;
    size_t pi = 0;
    for (int c = 0; c < static_cast<int>(q.mons.size()); ++c) {
      if (pi < q.pivots.size() && q.pivots[pi] == c)
        ++pi;
      else
        q.frees.push_back(c);
    }
    q.rref = ScalarMat<F>(f, red.rank, static_cast<int>(q.mons.size()));
    for (int i = 0; i < red.rank; ++i)
      for (int j = 0; j < static_cast<int>(q.mons.size()); ++j)
        q.rref.at(i, j) = red.rref.at(i, j);
    q.pivots.resize(red.rank);
  }
  return o;
}

template <class F>
AnnihilatorOracle<F> annihilator_oracle(const InverseSystem<F>& sys) {
  return annihilator_oracle(sys.f, sys.phi);
}

// dim of the span of { m * g : g in gens, m monomial of degree d - deg g }
// inside P_d, computed exactly.
template <class F>
int ideal_piece_dim(const F& f, const std::vector<SymPoly<F>>& gens, int d) {
  std::vector<Mono> basis = monomials(kAllVars, d);
  std::map<Mono, int, MonoDescLex> idx;
  int k = 0;
  for (const Mono& m : basis) idx[m] = k++;
  std::vector<std::vector<typename F::Elt>> rows;
  for (const SymPoly<F>& g : gens) {
    auto dg = g.homogeneous_degree();
    if (!dg) {
      if (g.is_zero()) continue;
      fail(ErrorKind::Validation, "ideal generators must be homogeneous");
    }
    if (*dg > d) continue;
    for (const Mono& m : monomials(kAllVars, d - *dg)) {
      std::vector<typename F::Elt> row(basis.size(), f.zero());
      for (const auto& [gm, gc] : g.terms()) row[idx.at(gm + m)] += gc;
      rows.push_back(std::move(row));
    }
  }
  ScalarMat<F> span(f, static_cast<int>(rows.size()),
                    static_cast<int>(basis.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      span.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return reduce(span).rank;
}

// Number of minimal generators of ann Phi, read off the oracle:
// sum over d of dim (ann)_d - dim P_1*(ann)_{d-1}.
template <class F>
int minimal_generator_count(const AnnihilatorOracle<F>& o) {
  const F& f = o.f;
  int sigma = o.socle_degree;
  int total = 0;
  std::vector<SymPoly<F>> below;
  for (int d = 1; d <= sigma + 1; ++d) {
    int dim_ann = d == sigma + 1 ? dim_poly_degree(d)
                                 : static_cast<int>(o.ann_basis[d].size());
    int from_below = ideal_piece_dim(f, below, d);
    total += dim_ann - from_below;
    if (d <= sigma)
      for (const auto& g : o.ann_basis[d]) below.push_back(g);
  }
  return total;
}

// Multiplication mu_ell: A_i -> A_{i+1} on the oracle's quotient bases.
template <class F>
ScalarMat<F> multiplication_map(const AnnihilatorOracle<F>& o,
                                const SymPoly<F>& ell, int i) {
  const F& f = o.f;
  const auto& src = o.quotient[i];
  ScalarMat<F> m(f, o.dim_A(i + 1), o.dim_A(i));
  for (size_t k = 0; k < src.frees.size(); ++k) {
    SymPoly<F> b(f, src.mons[src.frees[k]], f.one());
    ScalarMat<F> col = o.project(i + 1, ell * b);
    for (int r = 0; r < col.rows(); ++r)
      m.at(r, static_cast<int>(k)) = col.at(r, 0);
  }
  return m;
}

template <class F>
bool weak_lefschetz_check(const AnnihilatorOracle<F>& o,
                          const SymPoly<F>& ell) {
  if (ell.is_zero()) return false;
  for (int i = 0; i < o.socle_degree; ++i) {
    ScalarMat<F> m = multiplication_map(o, ell, i);
    int want = std::min(o.dim_A(i), o.dim_A(i + 1));
    if (rank(m) != want) return false;
  }
  return true;
}

template <class F>
bool weak_lefschetz_check(const InverseSystem<F>& sys, const SymPoly<F>& ell) {
  return weak_lefschetz_check(annihilator_oracle(sys), ell);
}

// The symmetric map p(u) = u(x Phi) as a 4x4 matrix: p[i][j] = (x v_i v_j)(Phi).
template <class F>
ScalarMat<F> lefschetz_pairing_matrix(const DivPow<F>& phi) {
  const F& f = phi.field();
  ScalarMat<F> p(f, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Mono m = Mono::var(0) + Mono::var(i) + Mono::var(j);
      DivPow<F> c = contract(SymPoly<F>(f, m, f.one()), phi);
      p.at(i, j) = c.coeff(Mono::unit());
    }
  return p;
}

// <u2, u2'> = [u2 p^{-1}(u2' Phi)](Phi) for u2, u2' in Sym_2 of y,z,w.
template <class F>
typename F::Elt bilinear_pair(const DivPow<F>& phi, const ScalarMat<F>& p_inv,
                              const SymPoly<F>& u2, const SymPoly<F>& u2p) {
  if (u2.involves(0) || u2p.involves(0))
    fail(ErrorKind::Domain, "bilinear form arguments must avoid x");
  ScalarMat<F> a = dual_coords(contract(u2, phi));
  ScalarMat<F> b = dual_coords(contract(u2p, phi));
  ScalarMat<F> r = a.transpose() * (p_inv * b);
  return r.at(0, 0);
}

namespace detail {

template <class F>
SymPoly<F> mono2(const F& f, int i, int j) {
  return SymPoly<F>(f, Mono::var(i) + Mono::var(j), f.one());
}

}  // namespace detail

// The 3x3 symmetric matrix SM of bilinear differences controlling the case
// split.
template <class F>
ScalarMat<F> compute_SM(const DivPow<F>& phi, const ScalarMat<F>& p_inv) {
  const F& f = phi.field();
  auto ip = [&](const SymPoly<F>& a, const SymPoly<F>& b) {
    return bilinear_pair(phi, p_inv, a, b);
  };
  const int y = 1, z = 2, w = 3;
  auto m2 = [&](int i, int j) { return detail::mono2(f, i, j); };
  ScalarMat<F> sm(f, 3, 3);
  sm.at(0, 0) = ip(m2(z, z), m2(w, w)) - ip(m2(z, w), m2(z, w));
  sm.at(0, 1) = ip(m2(z, w), m2(y, w)) - ip(m2(z, y), m2(w, w));
  sm.at(0, 2) = ip(m2(y, z), m2(z, w)) - ip(m2(z, z), m2(y, w));
  sm.at(1, 0) = ip(m2(y, w), m2(z, w)) - ip(m2(y, z), m2(w, w));
  sm.at(1, 1) = ip(m2(y, y), m2(w, w)) - ip(m2(y, w), m2(y, w));
  sm.at(1, 2) = ip(m2(y, z), m2(y, w)) - ip(m2(y, y), m2(w, z));
  sm.at(2, 0) = ip(m2(y, z), m2(z, w)) - ip(m2(y, w), m2(z, z));
  sm.at(2, 1) = ip(m2(y, w), m2(y, z)) - ip(m2(y, y), m2(z, w));
  sm.at(2, 2) = ip(m2(y, y), m2(z, z)) - ip(m2(y, z), m2(y, z));
  return sm;
}

// Matrix of the map u (x) nu -> u ^ Gamma(nu) on the quotient basis
// (y(x)y*, z(x)y*, w(x)y*, y(x)z*, z(x)z*, w(x)z*, y(x)w*, z(x)w*), rows on
// the basis (y^z, y^w, z^w).  Gamma has matrix SM.
template <class F>
ScalarMat<F> c1_matrix(const ScalarMat<F>& sm) {
  const F& f = sm.field();
  ScalarMat<F> c1(f, 3, 8);
  // quotient basis as (u, nu) pairs with u,nu in {0,1,2} ~ {y,z,w}
  const int pairs[8][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1},
                           {1, 1}, {2, 1}, {0, 2}, {1, 2}};
  auto wedge_row = [&](int a, int b) {
    // index of e_a ^ e_b in (y^z, y^w, z^w), with sign
    if (a == b) return std::pair<int, int>(-1, 0);
    int sgn = 1;
    if (a > b) {
      std::swap(a, b);
      sgn = -1;
    }
    if (a == 0 && b == 1) return std::pair<int, int>(0, sgn);
    if (a == 0 && b == 2) return std::pair<int, int>(1, sgn);
    return std::pair<int, int>(2, sgn);
  };
  for (int col = 0; col < 8; ++col) {
    int u = pairs[col][0], nu = pairs[col][1];
    for (int g = 0; g < 3; ++g) {
      // Gamma(nu) has coefficient sm(g, nu) on basis vector g
      auto [row, sgn] = wedge_row(u, g);
      if (row < 0) continue;
      typename F::Elt c = sm.at(g, nu);
      if (sgn < 0) c = -c;
      c1.at(row, col) += c;
    }
  }
  return c1;
}

// Result of positioning Phi: weak Lefschetz element moved to the x slot and,
// in the rank-1 case, SM brought to diag(alpha,0,0).
template <class F>
struct NormalizedSystem {
  F f;
  DivPow<F> phi;
  ScalarMat<F> applied_change;
  ScalarMat<F> p;
  ScalarMat<F> p_inv;
  ScalarMat<F> sm;
  int sm_rank = 0;
  std::optional<typename F::Elt> alpha;
  CaseTag tag = CaseTag::Nine;
  // change of variables carrying Phi to x^{*(3)} + y*z*w* (char 2 only)
  std::optional<ScalarMat<F>> exceptional_change;
};

namespace detail {

// Completes a nonzero column to an invertible 4x4 matrix using standard
// basis vectors, keeping the given column first.
template <class F>
ScalarMat<F> complete_basis(const F& f, const ScalarMat<F>& col) {
  ScalarMat<F> m(f, 4, 4);
  for (int i = 0; i < 4; ++i) m.at(i, 0) = col.at(i, 0);
  int filled = 1;
  for (int v = 0; v < 4 && filled < 4; ++v) {
    ScalarMat<F> trial = m;
    trial.at(v, filled) = f.one();
    ScalarMat<F> head = trial.submatrix({0, 1, 2, 3}, [&] {
      std::vector<int> c;
      for (int j = 0; j <= filled; ++j) c.push_back(j);
      return c;
    }());
    if (rank(head) == filled + 1) {
      m = trial;
      ++filled;
    }
  }
  if (filled < 4) fail(ErrorKind::Invariant, "basis completion failed");
  return m;
}

template <class F>
SymPoly<F> linear_form(const F& f, const std::vector<typename F::Elt>& c) {
  SymPoly<F> ell(f);
  for (int i = 0; i < 4; ++i) ell.add_term(Mono::var(i), c[i]);
  return ell;
}

// Deterministic candidate linear forms: variables, then sums of two
// variables.
template <class F>
std::vector<SymPoly<F>> deterministic_candidates(const F& f) {
  std::vector<SymPoly<F>> out;
  for (int i = 0; i < 4; ++i) out.push_back(SymPoly<F>::variable(f, i));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      out.push_back(SymPoly<F>::variable(f, i) + SymPoly<F>::variable(f, j));
  return out;
}

inline std::vector<Rat> random_coeffs(const QQ& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  std::vector<Rat> c;
  for (int i = 0; i < 4; ++i) c.push_back(f.of_int(d(rng)));
  return c;
}

inline std::vector<Fp> random_coeffs(const GF& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint64_t> d(0, f.p - 1);
  std::vector<Fp> c;
  for (int i = 0; i < 4; ++i) c.push_back(Fp(d(rng), f.p));
  return c;
}

// All normalized (first nonzero coefficient = 1) linear forms over a small
// prime field, in lexicographic order.
inline std::vector<std::vector<Fp>> normalized_forms(const GF& f) {
  std::vector<std::vector<Fp>> out;
  uint64_t p = f.p;
  for (int lead = 0; lead < 4; ++lead) {
    std::vector<uint64_t> tail(3 - lead, 0);
    while (true) {
      std::vector<Fp> c(4, Fp(0, p));
      c[lead] = Fp(1, p);
      for (int i = 0; i < 3 - lead; ++i) c[lead + 1 + i] = Fp(tail[i], p);
      out.push_back(c);
      int k = 3 - lead - 1;
      while (k >= 0 && tail[k] == p - 1) tail[k--] = 0;
      if (k < 0) break;
      ++tail[k];
    }
  }
  return out;
}

template <class F>
std::optional<SymPoly<F>> find_weak_lefschetz(const F& f,
                                              const AnnihilatorOracle<F>& o,
                                              uint64_t seed) {
  for (const SymPoly<F>& ell : deterministic_candidates(f))
    if (weak_lefschetz_check(o, ell)) return ell;
  if (f.characteristic() > 0 && f.characteristic() <= 101) {
    GF gf{static_cast<uint64_t>(f.characteristic())};
    if constexpr (std::is_same_v<F, GF>) {
      for (const auto& c : normalized_forms(gf)) {
        SymPoly<F> ell = linear_form(f, c);
        if (weak_lefschetz_check(o, ell)) return ell;
      }
      return std::nullopt;
    }
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_coeffs(f, rng);
    SymPoly<F> ell = linear_form(f, c);
    if (ell.is_zero()) continue;
    if (weak_lefschetz_check(o, ell)) return ell;
  }
  return std::nullopt;
}

inline std::optional<ScalarMat<GF>> find_exceptional_change(
    const GF& f, const DivPow<GF>& phi) {
  if (f.p != 2) return std::nullopt;
  DivPow<GF> target(f);
  target.add_term(Mono{{3, 0, 0, 0}}, f.one());
  target.add_term(Mono{{0, 1, 1, 1}}, f.one());
  // identity first, then every invertible binary matrix
  std::vector<ScalarMat<GF>> cands;
  cands.push_back(ScalarMat<GF>::identity(f, 4));
  for (uint32_t bits = 0; bits < (1u << 16); ++bits) {
    ScalarMat<GF> m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        m.at(i, j) = Fp((bits >> (4 * i + j)) & 1u, 2);
    if (det(m).is_zero()) continue;
    cands.push_back(m);
  }
  for (const auto& m : cands)
    if (substitute_dual(phi, m) == target) return m;
  return std::nullopt;
}

}  // namespace detail

template <class F>
void validate_embedding_dim(const InverseSystem<F>& sys) {
  AnnihilatorOracle<F> o = annihilator_oracle(sys);
  if (o.hf[1] != 4)
    fail(ErrorKind::EmbeddingDim,
         "ann(Phi) contains a nonzero linear form; embedding dimension is "
         "less than four");
}

template <class F>
NormalizedSystem<F> prepare(const InverseSystem<F>& sys, uint64_t seed = 0) {
  const F& f = sys.f;
  AnnihilatorOracle<F> o = annihilator_oracle(sys);
  if (o.hf[1] != 4)
    fail(ErrorKind::EmbeddingDim,
         "ann(Phi) contains a nonzero linear form; embedding dimension is "
         "less than four");
  NormalizedSystem<F> ns;
  ns.f = f;
  auto ell = detail::find_weak_lefschetz(f, o, seed);
  if (!ell) {
    if (f.characteristic() == 2) {
      ns.tag = CaseTag::Exceptional;
      ns.phi = sys.phi;
      ns.applied_change = ScalarMat<F>::identity(f, 4);
      ns.p = ScalarMat<F>(f, 4, 4);
      ns.p_inv = ScalarMat<F>(f, 4, 4);
      ns.sm = ScalarMat<F>(f, 3, 3);
      ns.sm_rank = 0;
      if constexpr (std::is_same_v<F, GF>)
        ns.exceptional_change = detail::find_exceptional_change(f, sys.phi);
      return ns;
    }
    fail(ErrorKind::Search,
         "no weak Lefschetz element found over characteristic != 2");
  }
  // move ell into the x slot
  ScalarMat<F> col(f, 4, 1);
  for (int i = 0; i < 4; ++i) col.at(i, 0) = ell->coeff(Mono::var(i));
  ScalarMat<F> change = detail::complete_basis(f, col);
  bool is_x = true;
  for (int i = 0; i < 4; ++i)
    if (col.at(i, 0) != (i == 0 ? f.one() : f.zero())) is_x = false;
  if (is_x) change = ScalarMat<F>::identity(f, 4);
  DivPow<F> phi = substitute_dual(sys.phi, change);

  ns.phi = phi;
  ns.applied_change = change;
  ns.p = lefschetz_pairing_matrix(phi);
  ns.p_inv = invert(ns.p);
  ns.sm = compute_SM(phi, ns.p_inv);
  ns.sm_rank = rank(ns.sm);
  if (ns.sm_rank == 1) {
    auto [q, alpha] = rank1_congruence(ns.sm);
    (void)alpha;
    if (!(q == ScalarMat<F>::identity(f, 3))) {
      // the new dual basis of U_0 is (y*,z*,w*)q, so the variables move by
      // blockdiag(1, (q^T)^{-1})
      ScalarMat<F> m2(f, 4, 4);
      m2.at(0, 0) = f.one();
      ScalarMat<F> qti = invert(q.transpose());
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m2.at(1 + i, 1 + j) = qti.at(i, j);
      phi = substitute_dual(phi, m2);
      ns.phi = phi;
      ns.applied_change = change * m2;
      ns.p = lefschetz_pairing_matrix(phi);
      ns.p_inv = invert(ns.p);
      ns.sm = compute_SM(phi, ns.p_inv);
      if (rank(ns.sm) != 1) fail(ErrorKind::Invariant, "SM rank changed");
    }
    // SM recomputed in the new coordinates is diag(alpha,0,0); alpha picks
    // up the square of the determinant of the basis change and is kept as
    // produced, not normalized to 1.
    ScalarMat<F> want(f, 3, 3);
    want.at(0, 0) = ns.sm.at(0, 0);
    if (ns.sm.at(0, 0).is_zero() || !(ns.sm == want))
      fail(ErrorKind::Invariant, "SM not in diagonal normal form");
    ns.alpha = ns.sm.at(0, 0);
  }
  ns.tag = ns.sm_rank == 0  ? CaseTag::Nine
           : ns.sm_rank == 1 ? CaseTag::Seven
                             : CaseTag::Six;
  return ns;
}

}  // namespace soc3
