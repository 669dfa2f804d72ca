#include "p1kit/field.hpp"

#include <charconv>
#include <limits>

namespace p1kit {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime_field(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime_u64(p))
    throw PreconditionError("field characteristic must be a prime <= 2^31, got " +
                            std::to_string(p));
  return Field{Kind::Prime, static_cast<std::uint32_t>(p)};
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw PreconditionError("unknown field descriptor '" + std::string(text) +
                          "' (expected Q or Fp:<p>)");
}

std::string Field::name() const {
  return is_prime() ? "Fp:" + std::to_string(prime) : std::string("Q");
}

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.name() + " vs " + b.name());
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("inverse of zero in F_p");
  // extended Euclid on signed 64-bit
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace modp

Scalar::Scalar(const Field& field) : field_(field) {
  if (field.is_prime()) value_ = std::uint32_t{0};
}

Scalar::Scalar(const Field& field, long value) : field_(field) {
  if (field.is_prime()) {
    long r = value % static_cast<long>(field.prime);
    if (r < 0) r += field.prime;
    value_ = static_cast<std::uint32_t>(r);
  } else {
    value_ = mpq_class(value);
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field) {
  if (field.is_prime()) {
    mpq_class v = value;
    v.canonicalize();
    std::uint32_t den = modp::reduce(v.get_den(), field.prime);
    if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(field.prime));
    value_ = modp::mul(modp::reduce(v.get_num(), field.prime), modp::inv(den, field.prime), field.prime);
  } else {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
  }
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw PreconditionError("malformed scalar '" + s + "'");
  return Scalar(field, q);
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return std::get<std::uint32_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (field_.is_prime()) throw FieldMismatch("rational() called on an F_p scalar");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_prime()) throw FieldMismatch("residue() called on a rational scalar");
  return std::get<std::uint32_t>(value_);
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  if (field_.is_prime())
    out.value_ = modp::sub(0, residue(), field_.prime);
  else
    out.value_ = mpq_class(-rational());
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar out(field_);
  if (field_.is_prime())
    out.value_ = modp::inv(residue(), field_.prime);
  else
    out.value_ = mpq_class(1 / rational());
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  Scalar out(a.field_);
  if (a.field_.is_prime())
    out.value_ = modp::add(a.residue(), b.residue(), a.field_.prime);
  else
    out.value_ = mpq_class(a.rational() + b.rational());
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  Scalar out(a.field_);
  if (a.field_.is_prime())
    out.value_ = modp::sub(a.residue(), b.residue(), a.field_.prime);
  else
    out.value_ = mpq_class(a.rational() - b.rational());
  return out;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  Scalar out(a.field_);
  if (a.field_.is_prime())
    out.value_ = modp::mul(a.residue(), b.residue(), a.field_.prime);
  else
    out.value_ = mpq_class(a.rational() * b.rational());
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  require_same_field(a.field_, b.field_);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

}  // namespace p1kit
