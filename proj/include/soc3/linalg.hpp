#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "soc3/error.hpp"
#include "soc3/field.hpp"

namespace soc3 {

// Dense matrix of exact scalars over the field context F.
template <class F>
class ScalarMat {
 public:
  using K = typename F::Elt;

  ScalarMat() : rows_(0), cols_(0) {}
  ScalarMat(const F& f, int rows, int cols)
      : f_(f), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, f.zero()) {}

  static ScalarMat identity(const F& f, int n) {
    ScalarMat m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const F& field() const { return f_; }

  K& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const K& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  bool is_zero() const {
    for (const K& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool operator==(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (a_[i] != o.a_[i]) return false;
    return true;
  }

  ScalarMat operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::Shape, "matrix product shape");
    ScalarMat r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const K& v = at(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  ScalarMat operator+(const ScalarMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(ErrorKind::Shape, "matrix sum shape");
    ScalarMat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  ScalarMat operator-() const {
    ScalarMat r = *this;
    for (K& v : r.a_) v = -v;
    return r;
  }

  ScalarMat operator-(const ScalarMat& o) const { return *this + (-o); }

  ScalarMat scaled(const K& c) const {
    ScalarMat r = *this;
    for (K& v : r.a_) v = v * c;
    return r;
  }

  ScalarMat transpose() const {
    ScalarMat r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  ScalarMat submatrix(const std::vector<int>& rowsel,
                      const std::vector<int>& colsel) const {
    ScalarMat r(f_, static_cast<int>(rowsel.size()),
                static_cast<int>(colsel.size()));
    for (size_t i = 0; i < rowsel.size(); ++i)
      for (size_t j = 0; j < colsel.size(); ++j)
        r.at(static_cast<int>(i), static_cast<int>(j)) =
            at(rowsel[i], colsel[j]);
    return r;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  F f_;
  int rows_, cols_;
  std::vector<K> a_;
};

template <class F>
struct Reduced {
  int rank = 0;
  std::vector<int> pivots;   // pivot column indices, one per pivot row
  ScalarMat<F> rref;         // reduced row-echelon form
  ScalarMat<F> kernel;       // kernel basis as columns
  ScalarMat<F> image;        // pivot columns of the input (image basis)
};

// Exact Gauss-Jordan row reduction.
template <class F>
Reduced<F> reduce(const ScalarMat<F>& m) {
  const F& f = m.field();
  Reduced<F> out;
  out.rref = m;
  ScalarMat<F>& a = out.rref;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    typename F::Elt inv = a.at(r, c).inv();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      typename F::Elt m0 = a.at(i, c);
      for (int j = c; j < a.cols(); ++j)
        a.at(i, j) -= m0 * a.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  // kernel basis: one column per free column
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    for (int c = 0; c < a.cols(); ++c) {
      if (pi < out.pivots.size() && out.pivots[pi] == c)
        ++pi;
      else
        free_cols.push_back(c);
    }
  }
  out.kernel = ScalarMat<F>(f, m.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    out.kernel.at(fc, static_cast<int>(k)) = f.one();
    for (int i = 0; i < out.rank; ++i)
      out.kernel.at(out.pivots[i], static_cast<int>(k)) = -a.at(i, fc);
  }
  out.image = m.submatrix(
      [&] {
        std::vector<int> all(m.rows());
        for (int i = 0; i < m.rows(); ++i) all[i] = i;
        return all;
      }(),
      out.pivots);
  return out;
}

template <class F>
int rank(const ScalarMat<F>& m) {
  return reduce(m).rank;
}

template <class F>
ScalarMat<F> invert(const ScalarMat<F>& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Shape, "inverse of non-square");
  const F& f = m.field();
  int n = m.rows();
  ScalarMat<F> aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = f.one();
  }
  Reduced<F> red = reduce(aug);
  if (red.rank < n || red.pivots[n - 1] >= n)
    fail(ErrorKind::Singular, "matrix is singular");
  ScalarMat<F> inv(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.rref.at(i, n + j);
  return inv;
}

template <class F>
typename F::Elt det(const ScalarMat<F>& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::Shape, "det of non-square");
  const F& f = m.field();
  ScalarMat<F> a = m;
  typename F::Elt d = f.one();
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return f.zero();
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      d = -d;
    }
    d = d * a.at(c, c);
    typename F::Elt inv = a.at(c, c).inv();
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      typename F::Elt m0 = a.at(i, c) * inv;
      for (int j = c; j < n; ++j) a.at(i, j) -= m0 * a.at(c, j);
    }
  }
  return d;
}

// Classical adjoint of a 3x3 matrix: entry (i,j) is the (j,i) cofactor, so
// s * adj(s) = det(s) * I.
template <class F>
ScalarMat<F> classical_adjoint3(const ScalarMat<F>& s) {
  if (s.rows() != 3 || s.cols() != 3)
    fail(ErrorKind::Shape, "classical adjoint expects 3x3");
  const F& f = s.field();
  ScalarMat<F> adj(f, 3, 3);
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return s.at(r0, c0) * s.at(r1, c1) - s.at(r0, c1) * s.at(r1, c0);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j == 0) ? 1 : 0, r1 = (j == 2) ? 1 : 2;
      int c0 = (i == 0) ? 1 : 0, c1 = (i == 2) ? 1 : 2;
      typename F::Elt cof = minor2(r0, r1, c0, c1);
      if ((i + j) % 2 == 1) cof = -cof;
      adj.at(i, j) = cof;
    }
  return adj;
}

// Congruence-diagonalizes a symmetric matrix of rank exactly one:
// returns (q, alpha) with q^T s q = diag(alpha, 0, ..., 0).  A rank-1
// symmetric matrix is lambda*v*v^T, so it always has a nonzero diagonal
// entry; no characteristic-2 polarization is ever needed.
template <class F>
std::pair<ScalarMat<F>, typename F::Elt> rank1_congruence(
    const ScalarMat<F>& s) {
  const F& f = s.field();
  int n = s.rows();
  if (s.cols() != n) fail(ErrorKind::Shape, "congruence expects square");
  if (!s.is_symmetric()) fail(ErrorKind::Rank, "matrix is not symmetric");
  if (rank(s) != 1) fail(ErrorKind::Rank, "matrix rank is not 1");
  int d = -1;
  for (int i = 0; i < n; ++i)
    if (!s.at(i, i).is_zero()) {
      d = i;
      break;
    }
  if (d < 0) fail(ErrorKind::Rank, "rank-1 symmetric matrix has zero diagonal");
  ScalarMat<F> q = ScalarMat<F>::identity(f, n);
  if (d != 0)
    for (int i = 0; i < n; ++i) std::swap(q.at(i, 0), q.at(i, d));
  ScalarMat<F> t = q.transpose() * s * q;
  typename F::Elt alpha = t.at(0, 0);
  ScalarMat<F> e = ScalarMat<F>::identity(f, n);
  for (int j = 1; j < n; ++j) e.at(0, j) = -(t.at(0, j) / alpha);
  q = q * e;
  t = q.transpose() * s * q;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i != 0 || j != 0) && !t.at(i, j).is_zero())
        fail(ErrorKind::Invariant, "residual block nonzero in congruence");
  return {q, alpha};
}

}  // namespace soc3
