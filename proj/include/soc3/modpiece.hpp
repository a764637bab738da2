#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "soc3/field.hpp"
#include "soc3/graded.hpp"

namespace soc3 {

// Degree-d piece of a graded matrix over a prime field, flattened to raw
// residues for fast elimination.
struct PieceRows {
  int nrows = 0;
  int ncols = 0;
  std::vector<std::vector<uint64_t>> rows;
};

inline PieceRows realize_piece_mod(const GradedMatrix<GF>& m, int d) {
  PieceRows out;
  std::vector<std::vector<Mono>> cmon(m.cols());
  std::vector<int> roff(m.rows() + 1, 0), coff(m.cols() + 1, 0);
  std::map<int, std::map<Mono, int, MonoDescLex>> idx_by_deg;
  for (int i = 0; i < m.rows(); ++i) {
    int dd = d - m.row_degrees()[i];
    int n = dd >= 0 ? dim_poly_degree(dd) : 0;
    roff[i + 1] = roff[i] + n;
    if (dd >= 0 && !idx_by_deg.count(dd)) {
      auto& idx = idx_by_deg[dd];
      int k = 0;
      for (const Mono& mm : monomials(kAllVars, dd)) idx[mm] = k++;
    }
  }
  for (int j = 0; j < m.cols(); ++j) {
    int dd = d - m.col_degrees()[j];
    if (dd >= 0) cmon[j] = monomials(kAllVars, dd);
    coff[j + 1] = coff[j] + static_cast<int>(cmon[j].size());
  }
  out.nrows = roff[m.rows()];
  out.ncols = coff[m.cols()];
  out.rows.assign(out.nrows, std::vector<uint64_t>(out.ncols, 0));
  for (int i = 0; i < m.rows(); ++i) {
    int rd = d - m.row_degrees()[i];
    if (rd < 0) continue;
    const auto& idx = idx_by_deg.at(rd);
    for (int j = 0; j < m.cols(); ++j) {
      const SymPoly<GF>& p = m.at(i, j);
      if (p.is_zero()) continue;
      uint64_t q = m.field().p;
      for (size_t k = 0; k < cmon[j].size(); ++k)
        for (const auto& [pm, pc] : p.terms()) {
          int r = roff[i] + idx.at(pm + cmon[j][k]);
          int c = coff[j] + static_cast<int>(k);
          out.rows[r][c] = (out.rows[r][c] + pc.value()) % q;
        }
    }
  }
  return out;
}

// Row elimination mod p.  For p below 2^21 the inner loop accumulates
// products lazily in 64 bits; pivot rows are normalized so values stay under
// 2^53 across at most 2^11 pivot steps.
inline int rank_rows_mod(PieceRows& pr, uint64_t p) {
  const bool lazy = p < (1ull << 21) && std::min(pr.nrows, pr.ncols) < (1 << 11);
  int rank = 0;
  for (int c = 0; c < pr.ncols && rank < pr.nrows; ++c) {
    int piv = -1;
    for (int i = rank; i < pr.nrows; ++i) {
      pr.rows[i][c] %= p;
      if (pr.rows[i][c] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(pr.rows[piv], pr.rows[rank]);
    auto& pivrow = pr.rows[rank];
    for (int j = c; j < pr.ncols; ++j) pivrow[j] %= p;
    uint64_t pinv = detail::invmod_u64(pivrow[c], p);
    for (int j = c; j < pr.ncols; ++j)
      pivrow[j] = detail::mulmod_u64(pivrow[j], pinv, p);
    for (int i = rank + 1; i < pr.nrows; ++i) {
      uint64_t v = pr.rows[i][c] % p;
      if (v == 0) {
        pr.rows[i][c] = 0;
        continue;
      }
      uint64_t mneg = p - v;
      auto* row = pr.rows[i].data();
      const auto* prow = pivrow.data();
      if (lazy) {
        for (int j = c; j < pr.ncols; ++j) row[j] += mneg * prow[j];
      } else {
        for (int j = c; j < pr.ncols; ++j)
          row[j] = (row[j] + detail::mulmod_u64(mneg, prow[j], p)) % p;
      }
      pr.rows[i][c] = 0;
    }
    ++rank;
  }
  return rank;
}

inline int rank_piece_mod(const GradedMatrix<GF>& m, int d) {
  PieceRows pr = realize_piece_mod(m, d);
  return rank_rows_mod(pr, m.field().p);
}

// Reduction of an exact rational polynomial matrix modulo a certification
// prime; empty when some denominator vanishes mod q.
inline std::optional<SymPoly<GF>> reduce_poly_mod(const SymPoly<QQ>& p,
                                                  const GF& gf) {
  SymPoly<GF> out(gf);
  for (const auto& [m, c] : p.terms()) {
    const mpq_class& q = c.raw();
    mpz_class mod(static_cast<unsigned long>(gf.p));
    mpz_class num = q.get_num() % mod, den = q.get_den() % mod;
    if (num < 0) num += mod;
    if (den < 0) den += mod;
    if (den == 0) return std::nullopt;
    Fp n(num.get_ui(), gf.p), d(den.get_ui(), gf.p);
    out.add_term(m, n / d);
  }
  return out;
}

inline std::optional<GradedMatrix<GF>> reduce_matrix_mod(
    const GradedMatrix<QQ>& m, const GF& gf) {
  GradedMatrix<GF> out(gf, m.row_degrees(), m.col_degrees());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      auto p = reduce_poly_mod(m.at(i, j), gf);
      if (!p) return std::nullopt;
      out.set(i, j, *p);
    }
  return out;
}

// Certification primes: fixed pool just under 2^21 so the lazy elimination
// path applies.  Ranks computed mod q lower-bound the rational rank; hitting
// the expected rank certifies it exactly.
inline const std::vector<uint64_t>& certification_primes() {
  static const std::vector<uint64_t> primes = {2097143, 2097133, 2097131,
                                               2097097, 2097091, 2097083};
  return primes;
}

}  // namespace soc3
