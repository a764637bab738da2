#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soc3/error.hpp"
#include "soc3/poly.hpp"

namespace soc3 {

// Matrix over P with graded row/column bookkeeping: every nonzero entry
// (i,j) is homogeneous of degree col_degrees[j] - row_degrees[i].
template <class F>
class GradedMatrix {
 public:
  using K = typename F::Elt;

  GradedMatrix() : rows_(0), cols_(0) {}
  GradedMatrix(const F& f, std::vector<int> row_degrees,
               std::vector<int> col_degrees)
      : f_(f),
        rows_(static_cast<int>(row_degrees.size())),
        cols_(static_cast<int>(col_degrees.size())),
        rdeg_(std::move(row_degrees)),
        cdeg_(std::move(col_degrees)),
        e_(static_cast<size_t>(rows_) * cols_, SymPoly<F>(f)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return f_; }
  const std::vector<int>& row_degrees() const { return rdeg_; }
  const std::vector<int>& col_degrees() const { return cdeg_; }

  const SymPoly<F>& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  void set(int i, int j, const SymPoly<F>& p) {
    if (!p.is_zero()) {
      auto d = p.homogeneous_degree();
      if (!d || *d != cdeg_[j] - rdeg_[i])
        fail(ErrorKind::Shape, "entry degree violates grading");
    }
    e_[static_cast<size_t>(i) * cols_ + j] = p;
  }

  bool is_zero() const {
    for (const auto& p : e_)
      if (!p.is_zero()) return false;
    return true;
  }

  bool operator==(const GradedMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
      if (!(e_[i] == o.e_[i])) return false;
    return true;
  }

  GradedMatrix operator-() const {
    GradedMatrix r = *this;
    for (auto& p : r.e_) p = -p;
    return r;
  }

  GradedMatrix operator-(const GradedMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || rdeg_ != o.rdeg_ ||
        cdeg_ != o.cdeg_)
      fail(ErrorKind::Shape, "graded difference shape mismatch");
    GradedMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
    return r;
  }

  // Transpose in the graded-dual sense: degrees become twist - old degrees.
  GradedMatrix transpose_twist(int twist) const {
    std::vector<int> rd(cols_), cd(rows_);
    for (int j = 0; j < cols_; ++j) rd[j] = twist - cdeg_[j];
    for (int i = 0; i < rows_; ++i) cd[i] = twist - rdeg_[i];
    GradedMatrix r(f_, rd, cd);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
  }

  GradedMatrix submatrix(const std::vector<int>& rowsel,
                         const std::vector<int>& colsel) const {
    std::vector<int> rd, cd;
    for (int i : rowsel) rd.push_back(rdeg_[i]);
    for (int j : colsel) cd.push_back(cdeg_[j]);
    GradedMatrix r(f_, rd, cd);
    for (size_t i = 0; i < rowsel.size(); ++i)
      for (size_t j = 0; j < colsel.size(); ++j)
        r.set(static_cast<int>(i), static_cast<int>(j),
              at(rowsel[i], colsel[j]));
    return r;
  }

  GradedMatrix scaled(const SymPoly<F>& s, int degree_shift,
                      bool shift_cols = true) const {
    // multiply every entry by s (homogeneous of degree_shift) and move the
    // shift into the column or row degrees
    std::vector<int> rd = rdeg_, cd = cdeg_;
    if (shift_cols)
      for (int& d : cd) d += degree_shift;
    else
      for (int& d : rd) d -= degree_shift;
    GradedMatrix r(f_, rd, cd);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) * s);
    return r;
  }

  GradedMatrix drop_x() const {
    GradedMatrix r(f_, rdeg_, cdeg_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j).drop_x());
    return r;
  }

 private:
  F f_;
  int rows_, cols_;
  std::vector<int> rdeg_, cdeg_;
  std::vector<SymPoly<F>> e_;
};

template <class F>
GradedMatrix<F> graded_compose(const GradedMatrix<F>& a,
                               const GradedMatrix<F>& b) {
  if (a.cols() != b.rows() || a.col_degrees() != b.row_degrees())
    fail(ErrorKind::Shape, "graded composition shape/degree mismatch");
  GradedMatrix<F> r(a.field(), a.row_degrees(), b.col_degrees());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      SymPoly<F> s(a.field());
      for (int k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s = s + a.at(i, k) * b.at(k, j);
      }
      r.set(i, j, s);
    }
  return r;
}

// Builds a graded matrix from constants; entry degrees must come out zero,
// i.e. cdeg[j] == rdeg[i] wherever the constant is nonzero.
template <class F>
GradedMatrix<F> graded_from_scalar(const ScalarMat<F>& m,
                                   const std::vector<int>& rdeg,
                                   const std::vector<int>& cdeg) {
  GradedMatrix<F> r(m.field(), rdeg, cdeg);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero())
        r.set(i, j, SymPoly<F>::constant(m.field(), m.at(i, j)));
  return r;
}

// Concatenates blocks [[ul, ur], [ll, lr]]; degree vectors must agree along
// the glued edges.
template <class F>
GradedMatrix<F> block2x2(const GradedMatrix<F>& ul, const GradedMatrix<F>& ur,
                         const GradedMatrix<F>& ll, const GradedMatrix<F>& lr) {
  if (ul.row_degrees() != ur.row_degrees() ||
      ll.row_degrees() != lr.row_degrees() ||
      ul.col_degrees() != ll.col_degrees() ||
      ur.col_degrees() != lr.col_degrees())
    fail(ErrorKind::Shape, "block degrees mismatch");
  std::vector<int> rd = ul.row_degrees(), cd = ul.col_degrees();
  rd.insert(rd.end(), ll.row_degrees().begin(), ll.row_degrees().end());
  cd.insert(cd.end(), ur.col_degrees().begin(), ur.col_degrees().end());
  GradedMatrix<F> r(ul.field(), rd, cd);
  auto put = [&](const GradedMatrix<F>& b, int i0, int j0) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) r.set(i0 + i, j0 + j, b.at(i, j));
  };
  put(ul, 0, 0);
  put(ur, 0, ul.cols());
  put(ll, ul.rows(), 0);
  put(lr, ul.rows(), ul.cols());
  return r;
}

template <class F>
GradedMatrix<F> hcat(const GradedMatrix<F>& a, const GradedMatrix<F>& b) {
  if (a.row_degrees() != b.row_degrees())
    fail(ErrorKind::Shape, "hcat row degrees mismatch");
  std::vector<int> cd = a.col_degrees();
  cd.insert(cd.end(), b.col_degrees().begin(), b.col_degrees().end());
  GradedMatrix<F> r(a.field(), a.row_degrees(), cd);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.at(i, j));
  }
  return r;
}

template <class F>
GradedMatrix<F> vcat(const GradedMatrix<F>& a, const GradedMatrix<F>& b) {
  if (a.col_degrees() != b.col_degrees())
    fail(ErrorKind::Shape, "vcat col degrees mismatch");
  std::vector<int> rd = a.row_degrees();
  rd.insert(rd.end(), b.row_degrees().begin(), b.row_degrees().end());
  GradedMatrix<F> r(a.field(), rd, a.col_degrees());
  for (int j = 0; j < a.cols(); ++j) {
    for (int i = 0; i < a.rows(); ++i) r.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows(); ++i) r.set(a.rows() + i, j, b.at(i, j));
  }
  return r;
}

// A chain of graded matrices d[0] = f_1, d[1] = f_2, ...; F_0 has the row
// degrees of f_1 and F_i the column degrees of f_i.
template <class F>
struct GradedComplex {
  std::string label;
  std::vector<GradedMatrix<F>> diff;

  void validate_chain() const {
    for (size_t i = 0; i + 1 < diff.size(); ++i)
      if (diff[i].col_degrees() != diff[i + 1].row_degrees())
        fail(ErrorKind::Shape, "chain degrees mismatch at position " +
                                   std::to_string(i + 1));
  }

  int length() const { return static_cast<int>(diff.size()); }

  // degrees of the free module at homological position i
  const std::vector<int>& module_degrees(int i) const {
    if (i == 0) return diff.at(0).row_degrees();
    return diff.at(i - 1).col_degrees();
  }

  int module_piece_dim(int i, int d) const {
    int n = 0;
    for (int g : module_degrees(i))
      if (d - g >= 0) n += dim_poly_degree(d - g);
    return n;
  }
};

// entries of a one-row matrix, e.g. the columns of a first differential
template <class F>
std::vector<SymPoly<F>> row_entries(const GradedMatrix<F>& m) {
  std::vector<SymPoly<F>> out;
  for (int j = 0; j < m.cols(); ++j) out.push_back(m.at(0, j));
  return out;
}

// Betti table read off the shift vectors: (position, internal degree) -> count.
template <class F>
std::map<std::pair<int, int>, int> betti_table(const GradedComplex<F>& c) {
  std::map<std::pair<int, int>, int> t;
  for (int i = 0; i <= c.length(); ++i)
    for (int d : c.module_degrees(i)) ++t[{i, d}];
  return t;
}

template <class F>
std::vector<int> betti_totals(const GradedComplex<F>& c) {
  std::vector<int> t;
  for (int i = 0; i <= c.length(); ++i)
    t.push_back(static_cast<int>(c.module_degrees(i).size()));
  return t;
}

// Realizes the internal-degree-d piece of a graded matrix as a scalar
// matrix.  Rows are indexed by (row i, monomial of degree d - rdeg[i]) and
// columns by (col j, monomial of degree d - cdeg[j]).
template <class F>
ScalarMat<F> graded_piece(const GradedMatrix<F>& m, int d) {
  const F& f = m.field();
  std::vector<std::vector<Mono>> rmon(m.rows()), cmon(m.cols());
  int nrows = 0, ncols = 0;
  std::vector<int> roff(m.rows() + 1, 0), coff(m.cols() + 1, 0);
  for (int i = 0; i < m.rows(); ++i) {
    int dd = d - m.row_degrees()[i];
    if (dd >= 0) rmon[i] = monomials(kAllVars, dd);
    roff[i + 1] = roff[i] + static_cast<int>(rmon[i].size());
  }
  nrows = roff[m.rows()];
  for (int j = 0; j < m.cols(); ++j) {
    int dd = d - m.col_degrees()[j];
    if (dd >= 0) cmon[j] = monomials(kAllVars, dd);
    coff[j + 1] = coff[j] + static_cast<int>(cmon[j].size());
  }
  ncols = coff[m.cols()];
  // map monomials of each needed degree to row offsets
  ScalarMat<F> out(f, nrows, ncols);
  std::map<int, std::map<Mono, int, MonoDescLex>> index_by_degree;
  for (int i = 0; i < m.rows(); ++i) {
    int dd = d - m.row_degrees()[i];
    if (dd < 0 || index_by_degree.count(dd)) continue;
    auto& idx = index_by_degree[dd];
    int k = 0;
    for (const Mono& mm : monomials(kAllVars, dd)) idx[mm] = k++;
  }
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) {
      const SymPoly<F>& p = m.at(i, j);
      if (p.is_zero()) continue;
      int rd = d - m.row_degrees()[i];
      if (rd < 0) continue;
      const auto& idx = index_by_degree.at(rd);
      for (size_t cjk = 0; cjk < cmon[j].size(); ++cjk) {
        const Mono& cm = cmon[j][cjk];
        for (const auto& [pm, pc] : p.terms()) {
          Mono target = pm + cm;
          auto it = idx.find(target);
          if (it == idx.end()) fail(ErrorKind::Invariant, "graded piece index");
          out.at(roff[i] + it->second, coff[j] + static_cast<int>(cjk)) += pc;
        }
      }
    }
  return out;
}

}  // namespace soc3
