#pragma once

#include <span>
#include <string>
#include <vector>

#include "p1kit/field.hpp"

namespace p1kit {

/// Homogeneous form in x, y. Coefficient i multiplies x^i y^(degree-i).
///
/// The zero form carries a flag and no coefficients; it has no degree
/// (degree() returns -1).
class BinaryForm {
 public:
  explicit BinaryForm(const Field& field) : field_(field) {}
  /// All-zero coefficient vectors collapse to the zero form.
  BinaryForm(const Field& field, std::vector<Scalar> coefficients);

  static BinaryForm zero(const Field& field) { return BinaryForm(field); }
  static BinaryForm constant(const Scalar& c);
  /// a*x + b*y
  static BinaryForm linear(const Scalar& a, const Scalar& b);

  const Field& field() const { return field_; }
  bool is_zero() const { return zero_; }
  int degree() const { return zero_ ? -1 : static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  /// Coefficient of x^i y^(degree-i); zero outside range.
  Scalar coefficient(int i) const;

  /// Exponent of the largest power of x (resp. y) dividing the form.
  int x_valuation() const;
  int y_valuation() const;

  /// Scales so the coefficient of the highest x-power present is 1.
  BinaryForm monic() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  /// Requires equal degrees unless one side is zero.
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  BinaryForm scaled(const Scalar& c) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
  bool zero_ = true;
};

/// Monic gcd in the homogeneous sense. Zero entries are ignored; a
/// degree-0 result means the forms have no common zero on P^1.
/// Throws PreconditionError if every form is zero.
BinaryForm binary_form_gcd(std::span<const BinaryForm> forms);

}  // namespace p1kit
