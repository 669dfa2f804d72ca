#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace p1kit {

/// Polynomial over Q in a'_2, ..., a'_r where a'_i has weight i-1.
///
/// Monomials are exponent vectors indexed by i-2. Every stored term keeps its
/// weight next to the exponents.
class GradedPoly {
 public:
  struct Monomial {
    std::vector<std::uint32_t> exponents;  // exponents[k] is the power of a'_{k+2}
    std::uint32_t weight = 0;

    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exponents < b.exponents; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
  };

  /// Zero polynomial in the variables a'_2..a'_r (r >= 1; r = 1 has no variables).
  explicit GradedPoly(unsigned r = 1) : r_(r) {}

  static GradedPoly constant(unsigned r, const mpq_class& c);
  /// The generator a'_i, 2 <= i <= r.
  static GradedPoly generator(unsigned r, unsigned i);

  unsigned rank() const { return r_; }
  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpq_class coefficient(const std::vector<std::uint32_t>& exponents) const;

  /// True iff every term has weight w (the zero polynomial is homogeneous of every weight).
  bool is_homogeneous(std::uint32_t w) const;

  friend GradedPoly operator+(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator-(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly scaled(const mpq_class& c) const;
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.r_ == b.r_ && a.terms_ == b.terms_; }

  std::string to_string() const;

  /// All exponent vectors of weight w, in lexicographic order.
  static std::vector<Monomial> monomials_of_weight(unsigned r, std::uint32_t w);
  static std::uint32_t weight_of(const std::vector<std::uint32_t>& exponents);

 private:
  void add_term(const Monomial& m, const mpq_class& c);

  unsigned r_;
  std::map<Monomial, mpq_class> terms_;
};

}  // namespace p1kit
