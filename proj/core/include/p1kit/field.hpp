#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "p1kit/errors.hpp"

namespace p1kit {

/// Field descriptor: the rationals, or F_p for a prime p <= 2^31.
struct Field {
  enum class Kind : std::uint8_t { Rational, Prime };

  Kind kind = Kind::Rational;
  std::uint32_t prime = 0;

  static Field rationals() { return {}; }
  /// Throws PreconditionError unless p is a prime <= 2^31.
  static Field prime_field(std::uint64_t p);
  /// Parses "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_prime() const { return kind == Kind::Prime; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

void require_same_field(const Field& a, const Field& b);

/// Exact scalar: a rational in lowest terms, or a residue in [0, p).
/// Immutable value type; arithmetic between different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(const Field& field);
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  /// Rationals as "num/den" or "num"; residues as decimal (negative input is reduced).
  static Scalar parse(const Field& field, std::string_view text);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  Field field_;
  std::variant<mpq_class, std::uint32_t> value_{mpq_class(0)};
};

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(const mpz_class& v, std::uint32_t p);

}  // namespace modp

}  // namespace p1kit
