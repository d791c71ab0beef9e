#pragma once

// Exact dense linear algebra over a field scalar K (Fp or Rat): reduced row
// echelon form, kernel bases, column-span membership, and row-space subspaces.
// Everything downstream reduces its questions to the functions in this header.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "grex/field.hpp"

namespace Eigen {

template <>
struct NumTraits<grex::Fp> : GenericNumTraits<grex::Fp> {
  typedef grex::Fp Real;
  typedef grex::Fp NonInteger;
  typedef grex::Fp Literal;
  typedef grex::Fp Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 4
  };
  static inline Real epsilon() { return grex::Fp(); }
  static inline Real dummy_precision() { return grex::Fp(); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<grex::Rat> : GenericNumTraits<grex::Rat> {
  typedef grex::Rat Real;
  typedef grex::Rat NonInteger;
  typedef grex::Rat Literal;
  typedef grex::Rat Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return grex::Rat(); }
  static inline Real dummy_precision() { return grex::Rat(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace grex {

template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return false;
  return true;
}

template <class K>
bool is_zero_mat(const Mat<K>& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

template <class K>
struct RrefResult {
  Mat<K> R;
  std::vector<Index> pivots;  // strictly increasing pivot columns
  Index rank = 0;
};

// Unique reduced row echelon form; pivot = first nonzero entry in each
// remaining column, so the result is deterministic over any exact field.
template <class K>
RrefResult<K> rref(Mat<K> a) {
  RrefResult<K> out;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    K d = a(r, c).inv();
    for (Index j = c; j < cols; ++j) a(r, j) *= d;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      K f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.R = std::move(a);
  return out;
}

// Basis of {v : A v = 0}, one column per free variable of the RREF.
template <class K>
Mat<K> kernel_basis(const Mat<K>& a) {
  RrefResult<K> e = rref(a);
  const Index cols = a.cols();
  std::vector<char> is_pivot(cols, 0);
  for (Index c : e.pivots) is_pivot[c] = 1;
  Mat<K> ker(cols, cols - e.rank);
  ker.setZero();
  Index k = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    ker(c, k) = K(1);
    for (Index r = 0; r < e.rank; ++r) ker(e.pivots[r], k) = -e.R(r, c);
    ++k;
  }
  return ker;
}

// First solution of A c = v in RREF back-substitution order (free variables
// zero); absent when v is outside the column span.
template <class K>
std::optional<Vec<K>> membership(const Mat<K>& a, const Vec<K>& v) {
  if (v.size() != a.rows()) throw std::invalid_argument("membership: dimension mismatch");
  Mat<K> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = v;
  RrefResult<K> e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vec<K> c(a.cols());
  c.setZero();
  for (Index r = 0; r < e.rank; ++r) c[e.pivots[r]] = e.R(r, a.cols());
  return c;
}

template <class K>
Index rank(const Mat<K>& a) {
  return rref(a).rank;
}

// A linear subspace of K^n held as the unique RREF of a spanning set of row
// vectors. Equality of subspaces is literal equality of representations.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient) : ambient_(ambient), rows_(0, ambient) {}

  static Subspace zero(Index ambient) { return Subspace(ambient); }

  static Subspace from_rows(const Mat<K>& rows) {
    Subspace s(rows.cols());
    RrefResult<K> e = rref(rows);
    s.rows_ = e.R.topRows(e.rank);
    s.pivots_ = std::move(e.pivots);
    return s;
  }
  static Subspace from_cols(const Mat<K>& cols) { return from_rows(Mat<K>(cols.transpose())); }

  static Subspace full(Index ambient, const K& one) {
    Mat<K> id(ambient, ambient);
    id.setZero();
    for (Index i = 0; i < ambient; ++i) id(i, i) = one;
    return from_rows(id);
  }

  Index ambient() const { return ambient_; }
  Index dim() const { return rows_.rows(); }
  const Mat<K>& basis_rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // Residue of v after eliminating all pivot coordinates; zero iff v lies in
  // the subspace. The residue is supported on non-pivot coordinates and gives
  // the coordinates of v in the complement basis {e_c : c non-pivot}.
  Vec<K> reduce(Vec<K> v) const {
    for (Index r = 0; r < dim(); ++r) {
      K f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (Index j = pivots_[r]; j < ambient_; ++j) v[j] -= f * rows_(r, j);
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec<K>(reduce(v)); }

  bool contains(const Subspace& other) const {
    for (Index r = 0; r < other.dim(); ++r)
      if (!contains(Vec<K>(other.rows_.row(r).transpose()))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    if (ambient_ != o.ambient_ || dim() != o.dim() || pivots_ != o.pivots_) return false;
    for (Index i = 0; i < rows_.rows(); ++i)
      for (Index j = 0; j < rows_.cols(); ++j)
        if (rows_(i, j) != o.rows_(i, j)) return false;
    return true;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::vector<Index> nonpivot_coords() const {
    std::vector<char> is_pivot(ambient_, 0);
    for (Index c : pivots_) is_pivot[c] = 1;
    std::vector<Index> out;
    for (Index c = 0; c < ambient_; ++c)
      if (!is_pivot[c]) out.push_back(c);
    return out;
  }

  // Append one vector (no-op if already contained).
  Subspace extended(const Vec<K>& v) const {
    Mat<K> m(dim() + 1, ambient_);
    m.topRows(dim()) = rows_;
    m.row(dim()) = v.transpose();
    return from_rows(m);
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    Mat<K> m(a.dim() + b.dim(), a.ambient_);
    m.topRows(a.dim()) = a.rows_;
    m.bottomRows(b.dim()) = b.rows_;
    return from_rows(m);
  }

  // Zassenhaus: rref of [A|A; B|0], rows with zero left half span the
  // intersection in the right half.
  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    const Index n = a.ambient_;
    Mat<K> m(a.dim() + b.dim(), 2 * n);
    m.setZero();
    m.block(0, 0, a.dim(), n) = a.rows_;
    m.block(0, n, a.dim(), n) = a.rows_;
    m.block(a.dim(), 0, b.dim(), n) = b.rows_;
    RrefResult<K> e = rref(std::move(m));
    std::vector<Index> keep;
    for (Index r = 0; r < e.rank; ++r) {
      bool left_zero = true;
      for (Index j = 0; j < n; ++j)
        if (!e.R(r, j).is_zero()) { left_zero = false; break; }
      if (left_zero) keep.push_back(r);
    }
    Mat<K> rows(Index(keep.size()), n);
    for (size_t i = 0; i < keep.size(); ++i) rows.row(Index(i)) = e.R.block(keep[i], n, 1, n);
    return from_rows(rows);
  }

 private:
  Index ambient_ = 0;
  Mat<K> rows_;
  std::vector<Index> pivots_;
};

// Coset representatives of sup/sub (sub must be contained in sup): reduce
// sup's basis by sub, re-echelonize. Rows are a basis of the quotient.
template <class K>
Mat<K> quotient_reps(const Subspace<K>& sup, const Subspace<K>& sub) {
  Mat<K> m(sup.dim(), sup.ambient());
  for (Index r = 0; r < sup.dim(); ++r)
    m.row(r) = sub.reduce(Vec<K>(sup.basis_rows().row(r).transpose())).transpose();
  RrefResult<K> e = rref(std::move(m));
  return e.R.topRows(e.rank);
}

}  // namespace grex
