#include "coxlat/matrix.hpp"

#include <algorithm>

namespace coxlat {

Mat::Mat(const NumberField& f, int rows, int cols)
    : fld_(&f), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows) * cols, FieldElement(f)) {}

Mat Mat::identity(const NumberField& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement(f, 1L);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product dimension mismatch");
  Mat r(*fld_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const FieldElement& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InternalError("matrix apply dimension mismatch");
  Vec r(rows_, FieldElement(*fld_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Mat Mat::transpose() const {
  Mat r(*fld_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || fld_ != o.fld_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Vec Mat::column(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, c));
  return v;
}

void Mat::set_column(int c, const Vec& v) {
  for (int i = 0; i < rows_; ++i) at(i, c) = v[i];
}

std::string Mat::key() const {
  std::string s;
  for (const auto& e : a_) {
    s += e.key();
    s.push_back(';');
  }
  return s;
}

Mat mat_from_columns(const NumberField& f, int rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) m.set_column(static_cast<int>(c), cols[c]);
  return m;
}

namespace {

// Row echelon reduction in place; returns pivot (row, col) pairs.
// Deterministic: first nonzero entry scanning down each column.
std::vector<std::pair<int, int>> echelon(Mat& a) {
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    FieldElement inv = a.at(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      FieldElement f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Mat a) { return static_cast<int>(echelon(a).size()); }

FieldElement det(Mat a) {
  if (a.rows() != a.cols()) throw InternalError("determinant of non-square matrix");
  const NumberField& f = a.field();
  FieldElement d(f, 1L);
  int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return FieldElement(f);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    FieldElement inv = a.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      FieldElement g = a.at(i, c) * inv;
      for (int j = c; j < n; ++j) a.at(i, j) -= g * a.at(c, j);
    }
  }
  return d;
}

Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw InternalError("inverse of non-square matrix");
  int n = a.rows();
  const NumberField& f = a.field();
  Mat aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = FieldElement(f, 1L);
  }
  auto pivots = echelon(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back().second >= n)
    throw Error("matrix is singular");
  Mat r(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = aug.at(i, n + j);
  return r;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  int n = a.rows(), m = a.cols();
  const NumberField& f = a.field();
  Mat aug(f, n, m + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, m) = b[i];
  }
  auto pivots = echelon(aug);
  if (!pivots.empty() && pivots.back().second == m) return std::nullopt;
  Vec x(m, FieldElement(f));
  for (const auto& [r, c] : pivots) x[c] = aug.at(r, m);
  return x;
}

std::vector<Vec> null_space(const Mat& a) {
  Mat e = a;
  auto pivots = echelon(e);
  const NumberField& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (const auto& [r, c] : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(a.cols(), FieldElement(f));
    v[c] = FieldElement(f, 1L);
    for (const auto& [r, pc] : pivots) v[pc] = -e.at(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> pivot_columns(Mat a) {
  auto pivots = echelon(a);
  std::vector<int> cols;
  cols.reserve(pivots.size());
  for (const auto& [r, c] : pivots) cols.push_back(c);
  return cols;
}

std::vector<Vec> column_space(const Mat& a) {
  auto cols = pivot_columns(a);
  std::vector<Vec> basis;
  basis.reserve(cols.size());
  for (int c : cols) basis.push_back(a.column(c));
  return basis;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, const NumberField& f) {
  if (vec_is_zero(v)) return true;
  if (basis.empty()) return false;
  int n = static_cast<int>(v.size());
  Mat m(f, n, static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) m.set_column(static_cast<int>(c), basis[c]);
  return solve(m, v).has_value();
}

Vec vec_zero(const NumberField& f, int n) { return Vec(n, FieldElement(f)); }

Vec vec_neg(Vec v) {
  for (auto& e : v) e = -e;
  return v;
}

Vec vec_add(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec vec_sub(Vec a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec vec_scale(Vec a, const FieldElement& c) {
  for (auto& e : a) e *= c;
  return a;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

std::string vec_key(const Vec& v) {
  std::string s;
  for (const auto& e : v) {
    s += e.key();
    s.push_back(';');
  }
  return s;
}

}  // namespace coxlat
