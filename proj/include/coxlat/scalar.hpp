#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxlat {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rat = mpq_class;

/// Error raised on invalid input (bad type symbols, mixed fields, division
/// by zero, elements outside the interval, ...).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Error raised when an internal invariant that should be unconditionally
/// true fails; always indicates a bug or corrupted table.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

int sgn(const Rat& q);
std::string rat_str(const Rat& q);

/// The real number field Q(theta) with theta = 2*cos(pi/m), presented by the
/// minimal polynomial of theta together with a rational interval isolating
/// the embedding theta among the conjugate roots.
///
/// Fields are interned: cos_field(m) returns a reference that stays valid for
/// the lifetime of the process, and two elements belong to the same field iff
/// their field pointers compare equal.  Degree-one cases (m = 2, 3) collapse
/// to the canonical rational field.
class NumberField {
 public:
  NumberField(const NumberField&) = delete;
  NumberField& operator=(const NumberField&) = delete;

  /// The rational field Q (degree-1 presentation, theta = 1 = 2cos(pi/3)).
  static const NumberField& rationals();

  /// Q(2cos(pi/m)) for 2 <= m <= 30; throws Error outside that range.
  static const NumberField& cos_field(int m);

  int generator_order() const { return m_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }

  /// Monic minimal polynomial of theta, ascending coefficients.
  const std::vector<Rat>& min_poly() const { return min_poly_; }

  /// Rational interval (lo, hi) containing exactly one root of min_poly,
  /// namely 2cos(pi/m).
  const Rat& interval_lo() const { return lo_; }
  const Rat& interval_hi() const { return hi_; }

  /// theta to double precision (for export paths only; the core never
  /// consumes this).
  double theta_double() const { return theta_double_; }

  /// Number of roots of min_poly in (a, b], by Sturm's theorem.
  int count_roots(const Rat& a, const Rat& b) const;

 private:
  NumberField(int m, std::vector<Rat> min_poly);
  friend struct FieldRegistry;

  int m_;
  std::vector<Rat> min_poly_;
  std::vector<std::vector<Rat>> sturm_;     // Sturm chain of min_poly
  std::vector<std::vector<Rat>> red_;       // theta^(d+k) in the power basis
  Rat lo_, hi_;
  double theta_double_ = 0.0;

  friend class FieldElement;
};

/// An element of a NumberField, stored as coordinates in the power basis
/// 1, theta, theta^2, ...  Immutable value semantics; all arithmetic is
/// exact and results are kept in canonical form.
class FieldElement {
 public:
  /// Zero of the rational field.
  FieldElement();
  /// Zero of the given field.
  explicit FieldElement(const NumberField& f);
  /// Rational constant in the given field.
  FieldElement(const NumberField& f, Rat c0);
  FieldElement(const NumberField& f, long c0);

  static FieldElement theta(const NumberField& f);
  static FieldElement from_coeffs(const NumberField& f, std::vector<Rat> c);

  const NumberField& field() const { return *fld_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all theta-coordinates vanish).
  bool is_rational() const;
  /// The rational value; valid only when is_rational().
  const Rat& rational_value() const;

  /// Exact sign of the value under the real embedding: -1, 0 or +1.
  int sign() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  FieldElement& operator*=(const Rat& q);
  friend FieldElement operator*(FieldElement a, const Rat& q) { return a *= q; }

  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  /// Canonical human-readable polynomial string in theta, ascending powers,
  /// e.g. "0", "-1/2", "1/2+1/2*t", "2*t", "t^2".
  std::string str() const;

  /// Compact canonical key; equal keys iff equal values in the same field.
  std::string key() const;

  /// Value to double precision (export paths only).
  double to_double() const;

 private:
  const NumberField* fld_;
  std::vector<Rat> c_;

  void check_same_field(const FieldElement& o) const;
  void reduce(std::vector<Rat>& prod) const;
};

}  // namespace coxlat
