#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soc3/graded.hpp"
#include "soc3/invsys.hpp"
#include "soc3/modpiece.hpp"

namespace soc3 {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  int first_fail_degree = -1;
};

struct VerificationReport {
  int degree_bound = 10;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(const std::string& name, bool pass, const std::string& detail = "",
           int fail_degree = -1) {
    checks.push_back({name, pass, detail, fail_degree});
  }
};

// ---------------------------------------------------------------------------
// composition-zero

template <class F>
bool check_zero_compositions(const GradedComplex<F>& c) {
  c.validate_chain();
  for (size_t i = 0; i + 1 < c.diff.size(); ++i)
    if (!graded_compose(c.diff[i], c.diff[i + 1]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// degreewise exactness
//
// For each internal degree d <= D the expected ranks R_i of the pieces
// (f_i)_d follow from the prescribed H_0 Hilbert function:
//   R_1 = dim (F_0)_d - hf[d],  R_{i+1} = dim (F_i)_d - R_i,  R_{L+1} = 0.
// Because the compositions are zero, rank f_i + rank f_{i+1} <= dim (F_i)_d
// always holds, so exactness at every position of degree d is equivalent to
// rank (f_i)_d = R_i for all i.  Over Q a rank computed modulo a prime is a
// lower bound for the rational rank; hitting all the targets therefore
// certifies the rational ranks exactly.

namespace detail {

struct DegreeTargets {
  std::vector<int> dims;  // dim (F_i)_d for i = 0..L
  std::vector<int> R;     // R[i] = expected rank of f_{i+1}, i = 0..L-1
  bool consistent = true;
};

template <class F>
DegreeTargets degree_targets(const GradedComplex<F>& c,
                             const std::vector<int>& hf, int d) {
  DegreeTargets t;
  int L = c.length();
  for (int i = 0; i <= L; ++i) t.dims.push_back(c.module_piece_dim(i, d));
  int h = d < static_cast<int>(hf.size()) ? hf[d] : 0;
  int r = t.dims[0] - h;
  for (int i = 0; i < L; ++i) {
    if (r < 0) t.consistent = false;
    t.R.push_back(r);
    r = t.dims[i + 1] - r;
  }
  if (r != 0) t.consistent = false;  // kernel of the last map must vanish
  return t;
}

inline int exact_piece_rank(const GradedMatrix<QQ>& m, int d) {
  ScalarMat<QQ> piece = graded_piece(m, d);
  return reduce(piece).rank;
}

}  // namespace detail

// Expected H_0 Hilbert function forced by the shift vectors (the Euler
// characteristic per degree).
template <class F>
std::vector<int> euler_hf(const GradedComplex<F>& c, int D) {
  std::vector<int> hf;
  for (int d = 0; d <= D; ++d) {
    int s = 0;
    for (int i = 0; i <= c.length(); ++i)
      s += (i % 2 == 0 ? 1 : -1) * c.module_piece_dim(i, d);
    hf.push_back(s);
  }
  return hf;
}

inline CheckResult check_graded_exactness(const GradedComplex<GF>& c,
                                          const std::vector<int>& hf, int D,
                                          const std::string& name) {
  CheckResult out{name, true, "", -1};
  for (int d = 0; d <= D; ++d) {
    detail::DegreeTargets t = detail::degree_targets(c, hf, d);
    if (!t.consistent) {
      out.pass = false;
      out.first_fail_degree = d;
      out.detail = "Euler characteristic inconsistent at degree " +
                   std::to_string(d);
      return out;
    }
    for (int i = 0; i < c.length(); ++i) {
      if (t.dims[i] == 0 && t.dims[i + 1] == 0) continue;
      int r = rank_piece_mod(c.diff[i], d);
      if (r != t.R[i]) {
        out.pass = false;
        out.first_fail_degree = d;
        out.detail = "position " + std::to_string(i + 1) + " degree " +
                     std::to_string(d) + ": rank " + std::to_string(r) +
                     " expected " + std::to_string(t.R[i]);
        return out;
      }
    }
  }
  out.detail = "exact degreewise, verified up to degree " + std::to_string(D);
  return out;
}

inline CheckResult check_graded_exactness(const GradedComplex<QQ>& c,
                                          const std::vector<int>& hf, int D,
                                          const std::string& name) {
  CheckResult out{name, true, "", -1};
  std::vector<detail::DegreeTargets> targets;
  for (int d = 0; d <= D; ++d) {
    targets.push_back(detail::degree_targets(c, hf, d));
    if (!targets.back().consistent) {
      out.pass = false;
      out.first_fail_degree = d;
      out.detail = "Euler characteristic inconsistent at degree " +
                   std::to_string(d);
      return out;
    }
  }
  // pending (degree, position) pairs awaiting certification
  std::vector<std::pair<int, int>> pending;
  for (int d = 0; d <= D; ++d)
    for (int i = 0; i < c.length(); ++i)
      if (targets[d].dims[i] != 0 || targets[d].dims[i + 1] != 0)
        pending.emplace_back(d, i);
  for (uint64_t q : certification_primes()) {
    if (pending.empty()) break;
    GF gf(q);
    std::vector<std::optional<GradedMatrix<GF>>> reduced(c.length());
    bool prime_ok = true;
    for (int i = 0; i < c.length() && prime_ok; ++i) {
      reduced[i] = reduce_matrix_mod(c.diff[i], gf);
      if (!reduced[i]) prime_ok = false;
    }
    if (!prime_ok) continue;
    std::vector<std::pair<int, int>> still;
    for (auto [d, i] : pending) {
      int r = rank_piece_mod(*reduced[i], d);
      if (r == targets[d].R[i]) continue;  // certified exactly
      if (r > targets[d].R[i]) {
        out.pass = false;
        out.first_fail_degree = d;
        out.detail = "position " + std::to_string(i + 1) + " degree " +
                     std::to_string(d) + ": rank at least " +
                     std::to_string(r) + " exceeds expected " +
                     std::to_string(targets[d].R[i]);
        return out;
      }
      still.emplace_back(d, i);
    }
    pending.swap(still);
  }
  // whatever the primes could not certify gets decided exactly when small
  for (auto [d, i] : pending) {
    long cells = static_cast<long>(targets[d].dims[i]) * targets[d].dims[i + 1];
    if (cells <= 250000) {
      int r = detail::exact_piece_rank(c.diff[i], d);
      if (r == targets[d].R[i]) continue;
      out.pass = false;
      out.first_fail_degree = d;
      out.detail = "position " + std::to_string(i + 1) + " degree " +
                   std::to_string(d) + ": rank " + std::to_string(r) +
                   " expected " + std::to_string(targets[d].R[i]);
      return out;
    }
    out.pass = false;
    out.first_fail_degree = d;
    out.detail = "position " + std::to_string(i + 1) + " degree " +
                 std::to_string(d) + ": rank below expected " +
                 std::to_string(targets[d].R[i]) +
                 " for every certification prime";
    return out;
  }
  out.detail = "exact degreewise, verified up to degree " + std::to_string(D);
  return out;
}

// ---------------------------------------------------------------------------
// ideal equality and regular elements (degreewise spans)

namespace detail {

// row matrix whose degree-d piece is the span matrix of the ideal generated
// by gens inside P_d
template <class F>
GradedMatrix<F> span_row(const F& f, const std::vector<SymPoly<F>>& gens) {
  std::vector<int> cdeg;
  for (const auto& g : gens) {
    auto dg = g.homogeneous_degree();
    if (!dg) fail(ErrorKind::Validation, "generators must be homogeneous");
    cdeg.push_back(*dg);
  }
  GradedMatrix<F> m(f, {0}, cdeg);
  for (size_t j = 0; j < gens.size(); ++j)
    m.set(0, static_cast<int>(j), gens[j]);
  return m;
}

inline int span_dim_exact(const GradedMatrix<GF>& row, int d) {
  return rank_piece_mod(row, d);
}

inline int span_dim_exact(const GradedMatrix<QQ>& row, int d) {
  // try to certify a full span cheaply; otherwise reduce exactly
  int full = dim_poly_degree(d);
  for (uint64_t q : certification_primes()) {
    auto red = reduce_matrix_mod(row, GF(q));
    if (!red) continue;
    if (rank_piece_mod(*red, d) == full) return full;
    break;
  }
  return exact_piece_rank(row, d);
}

}  // namespace detail

// Degreewise span equality of two homogeneous ideals up to degree D.
template <class F>
bool ideal_equal(const F& f, const std::vector<SymPoly<F>>& gens_a,
                 const std::vector<SymPoly<F>>& gens_b, int D = 8) {
  GradedMatrix<F> ra = detail::span_row(f, gens_a);
  GradedMatrix<F> rb = detail::span_row(f, gens_b);
  std::vector<SymPoly<F>> both = gens_a;
  both.insert(both.end(), gens_b.begin(), gens_b.end());
  GradedMatrix<F> rab = detail::span_row(f, both);
  for (int d = 0; d <= D; ++d) {
    int full = dim_poly_degree(d);
    int da = detail::span_dim_exact(ra, d);
    int db = detail::span_dim_exact(rb, d);
    if (da != db) return false;
    // once both spans are all of P_d they stay full in every higher degree
    if (da == full) break;
    if (detail::span_dim_exact(rab, d) != da) return false;
  }
  return true;
}

// Multiplication by g is injective on (P/J)_d for every d <= D.  When the
// Hilbert function of P/J is known exactly (hf_J), ranks are certified
// modulo primes; otherwise the spans are computed exactly.
template <class F>
bool check_regular_element(const F& f, const std::vector<SymPoly<F>>& gens_j,
                           const SymPoly<F>& g, int D = 10,
                           const std::optional<std::vector<int>>& hf_j =
                               std::nullopt) {
  auto dg = g.homogeneous_degree();
  if (!dg || *dg == 0)
    fail(ErrorKind::Validation, "regular element must be homogeneous of positive degree");
  GradedMatrix<F> rj = detail::span_row(f, gens_j);
  std::vector<SymPoly<F>> with_g = gens_j;
  with_g.push_back(g);
  GradedMatrix<F> rjg = detail::span_row(f, with_g);
  auto dim_j = [&](int e) -> int {
    if (hf_j && e < static_cast<int>(hf_j->size()))
      return dim_poly_degree(e) - (*hf_j)[e];
    return detail::span_dim_exact(rj, e);
  };
  for (int d = 0; d <= D; ++d) {
    int a = dim_j(d + *dg);
    int j = dim_j(d);
    int b = dim_poly_degree(d);
    int target = a + b - j;
    // rank of [J_{d+dg} | g*P_d]; always <= target, equality iff injective
    int got = -1;
    if constexpr (std::is_same_v<F, QQ>) {
      for (uint64_t q : certification_primes()) {
        auto red = reduce_matrix_mod(rjg, GF(q));
        if (!red) continue;
        got = rank_piece_mod(*red, d + *dg);
        break;
      }
      if (got != target) got = detail::exact_piece_rank(rjg, d + *dg);
    } else {
      got = detail::span_dim_exact(rjg, d + *dg);
    }
    if (got != target) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// alternating test: m^T = -m with zero diagonal (the diagonal condition is
// independent in characteristic 2)

template <class F>
bool check_alternating(const GradedMatrix<F>& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Shape, "alternating test expects square");
  for (int i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (!(m.at(i, j) == -m.at(j, i))) return false;
  }
  return true;
}

template <class F>
bool check_alternating_scalar(const ScalarMat<F>& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Shape, "alternating test expects square");
  for (int i = 0; i < m.rows(); ++i) {
    if (!m.at(i, i).is_zero()) return false;
    for (int j = i + 1; j < m.cols(); ++j)
      if (!(m.at(i, j) == -m.at(j, i))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// chain maps and mapping cones

// A degree-zero map of complexes: vert[i] : T_i -> B_i covering the
// identification H_0(top) -> H_0(bottom); top and bottom have equal length.
template <class F>
struct ChainMap {
  GradedComplex<F> top;
  GradedComplex<F> bottom;
  std::vector<GradedMatrix<F>> vert;  // size length+1
};

template <class F>
bool check_chain_map_squares(const ChainMap<F>& cm) {
  int L = cm.top.length();
  if (cm.bottom.length() != L || static_cast<int>(cm.vert.size()) != L + 1)
    fail(ErrorKind::Shape, "chain map shape mismatch");
  for (int i = 1; i <= L; ++i) {
    GradedMatrix<F> lhs = graded_compose(cm.vert[i - 1], cm.top.diff[i - 1]);
    GradedMatrix<F> rhs = graded_compose(cm.bottom.diff[i - 1], cm.vert[i]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// Mapping cone with C_n = T_{n-1} (+) B_n; the vertical enters position n
// with sign (-1)^{n+1}.
template <class F>
GradedComplex<F> mapping_cone(const ChainMap<F>& cm) {
  const F& f = cm.vert[0].field();
  int L = cm.top.length();
  GradedComplex<F> cone;
  cone.label = "cone(" + cm.bottom.label + ")";
  cone.diff.push_back(hcat(cm.vert[0], cm.bottom.diff[0]));
  for (int n = 2; n <= L + 1; ++n) {
    const GradedMatrix<F>& t = cm.top.diff[n - 2];   // T_{n-1} -> T_{n-2}
    const GradedMatrix<F>& v = cm.vert[n - 1];       // T_{n-1} -> B_{n-1}
    GradedMatrix<F> sv = (n % 2 == 0) ? -v : v;
    if (n <= L) {
      const GradedMatrix<F>& k = cm.bottom.diff[n - 1];  // B_n -> B_{n-1}
      GradedMatrix<F> zero_block(f, t.row_degrees(), k.col_degrees());
      cone.diff.push_back(block2x2(t, zero_block, sv, k));
    } else {
      cone.diff.push_back(vcat(t, sv));
    }
  }
  cone.validate_chain();
  return cone;
}

template <class F>
void check_mapping_cone(const ChainMap<F>& cm, const std::vector<int>& hf,
                        int D, const std::string& prefix,
                        VerificationReport& report) {
  bool squares = check_chain_map_squares(cm);
  report.add(prefix + ": chain-map squares commute", squares);
  if (!squares) return;
  GradedComplex<F> cone = mapping_cone(cm);
  report.add(prefix + ": cone compositions zero", check_zero_compositions(cone));
  report.add(check_graded_exactness(cone, hf, D, prefix + ": cone exactness"));
}

}  // namespace soc3
