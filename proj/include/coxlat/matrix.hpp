#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxlat/scalar.hpp"

namespace coxlat {

using Vec = std::vector<FieldElement>;

/// Dense matrix over a fixed NumberField, row-major.  All entries share the
/// field of construction; exact arithmetic throughout.
class Mat {
 public:
  Mat(const NumberField& f, int rows, int cols);
  static Mat identity(const NumberField& f, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const NumberField& field() const { return *fld_; }

  FieldElement& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const FieldElement& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_identity() const;

  Vec column(int c) const;
  void set_column(int c, const Vec& v);

  std::string key() const;

 private:
  const NumberField* fld_;
  int rows_, cols_;
  std::vector<FieldElement> a_;
};

/// Matrix whose columns are the given vectors.
Mat mat_from_columns(const NumberField& f, int rows, const std::vector<Vec>& cols);

int rank(Mat a);
FieldElement det(Mat a);
/// Inverse of a square matrix; throws Error when singular.
Mat inverse(const Mat& a);
/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Basis of the null space of A.
std::vector<Vec> null_space(const Mat& a);
/// Indices of a maximal set of linearly independent columns, in column order.
std::vector<int> pivot_columns(Mat a);
/// Basis of the column space: the pivot columns of A.
std::vector<Vec> column_space(const Mat& a);
/// True when v lies in the span of the given vectors.
bool in_span(const std::vector<Vec>& basis, const Vec& v, const NumberField& f);

Vec vec_zero(const NumberField& f, int n);
Vec vec_neg(Vec v);
Vec vec_add(Vec a, const Vec& b);
Vec vec_sub(Vec a, const Vec& b);
Vec vec_scale(Vec a, const FieldElement& c);
bool vec_is_zero(const Vec& v);
std::string vec_key(const Vec& v);

}  // namespace coxlat
