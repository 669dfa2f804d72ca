#include "p1kit/binary_form.hpp"

#include <algorithm>
#include <sstream>

namespace p1kit {

namespace {

// Dense univariate polynomial, index = power of x, no trailing zeros.
using Univariate = std::vector<Scalar>;

void trim(Univariate& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

Univariate poly_mod(Univariate a, const Univariate& b) {
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    Scalar factor = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Univariate poly_gcd(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

}  // namespace

BinaryForm::BinaryForm(const Field& field, std::vector<Scalar> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) require_same_field(field_, c.field());
  zero_ = std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
  if (zero_) coeffs_.clear();
}

BinaryForm BinaryForm::constant(const Scalar& c) { return BinaryForm(c.field(), {c}); }

BinaryForm BinaryForm::linear(const Scalar& a, const Scalar& b) {
  // index 0 is y, index 1 is x
  return BinaryForm(a.field(), {b, a});
}

Scalar BinaryForm::coefficient(int i) const {
  if (zero_ || i < 0 || i > degree()) return Scalar(field_);
  return coeffs_[static_cast<std::size_t>(i)];
}

int BinaryForm::x_valuation() const {
  if (zero_) return -1;
  int i = 0;
  while (coeffs_[static_cast<std::size_t>(i)].is_zero()) ++i;
  return i;
}

int BinaryForm::y_valuation() const {
  if (zero_) return -1;
  int top = degree();
  while (coeffs_[static_cast<std::size_t>(top)].is_zero()) --top;
  return degree() - top;
}

BinaryForm BinaryForm::monic() const {
  if (zero_) return *this;
  int top = degree() - y_valuation();
  return scaled(coeffs_[static_cast<std::size_t>(top)].inverse());
}

BinaryForm BinaryForm::scaled(const Scalar& c) const {
  if (zero_) return *this;
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& a : coeffs_) out.push_back(a * c);
  return BinaryForm(field_, std::move(out));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field_, b.field_);
  if (a.zero_ || b.zero_) return BinaryForm(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return BinaryForm(a.field_, std::move(out));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  require_same_field(a.field_, b.field_);
  if (a.zero_) return b;
  if (b.zero_) return a;
  if (a.degree() != b.degree())
    throw PreconditionError("adding binary forms of different degrees");
  std::vector<Scalar> out = a.coeffs_;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs_[i];
  return BinaryForm(a.field_, std::move(out));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  return a + b.scaled(Scalar(b.field(), -1));
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
  return a.coeffs_ == b.coeffs_;
}

std::string BinaryForm::to_string() const {
  if (zero_) return "0";
  std::ostringstream out;
  bool first = true;
  const int n = degree();
  for (int i = n; i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string mono;
    auto power = [](const char* var, int e) {
      if (e == 0) return std::string();
      return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    std::string xs = power("x", i), ys = power("y", n - i);
    mono = xs.empty() ? ys : (ys.empty() ? xs : xs + "*" + ys);
    std::string coef = c.to_string();
    if (!first) out << " + ";
    if (mono.empty())
      out << coef;
    else if (c.is_one())
      out << mono;
    else
      out << coef << "*" << mono;
    first = false;
  }
  return out.str();
}

BinaryForm binary_form_gcd(std::span<const BinaryForm> forms) {
  const BinaryForm* seed = nullptr;
  for (const auto& f : forms)
    if (!f.is_zero()) {
      seed = &f;
      break;
    }
  if (seed == nullptr) throw PreconditionError("binary_form_gcd: all forms are zero");
  const Field field = seed->field();

  // Dehomogenize at y = 1 and track the power of y separately: a form of
  // degree n whose top x-power is t carries exactly y^(n-t).
  int y_power = seed->y_valuation();
  Univariate g;
  bool started = false;
  for (const auto& f : forms) {
    require_same_field(field, f.field());
    if (f.is_zero()) continue;
    y_power = std::min(y_power, f.y_valuation());
    auto coeffs = f.coefficients();
    Univariate u(coeffs.begin(), coeffs.end());
    trim(u);
    g = started ? poly_gcd(std::move(g), std::move(u)) : poly_gcd(std::move(u), {});
    started = true;
  }

  const int k = static_cast<int>(g.size()) - 1;
  std::vector<Scalar> out(static_cast<std::size_t>(k + y_power + 1), Scalar(field));
  // g(x) homogenized to degree k, then times y^y_power: x^i y^(k-i+y_power)
  for (int i = 0; i <= k; ++i) out[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(i)];
  return BinaryForm(field, std::move(out));
}

}  // namespace p1kit
