#include "p1kit/graded_poly.hpp"

#include <sstream>

#include "p1kit/errors.hpp"

namespace p1kit {

namespace {

unsigned variable_count(unsigned r) { return r >= 2 ? r - 1 : 0; }

void check_compatible(const GradedPoly& a, const GradedPoly& b) {
  if (a.rank() != b.rank()) throw PreconditionError("graded polynomials over different variable sets");
}

}  // namespace

std::uint32_t GradedPoly::weight_of(const std::vector<std::uint32_t>& exponents) {
  std::uint32_t w = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) w += exponents[k] * static_cast<std::uint32_t>(k + 1);
  return w;
}

GradedPoly GradedPoly::constant(unsigned r, const mpq_class& c) {
  GradedPoly p(r);
  p.add_term(Monomial{std::vector<std::uint32_t>(variable_count(r), 0), 0}, c);
  return p;
}

GradedPoly GradedPoly::generator(unsigned r, unsigned i) {
  if (i < 2 || i > r) throw PreconditionError("generator index out of range");
  std::vector<std::uint32_t> e(variable_count(r), 0);
  e[i - 2] = 1;
  GradedPoly p(r);
  p.add_term(Monomial{e, i - 1}, 1);
  return p;
}

void GradedPoly::add_term(const Monomial& m, const mpq_class& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

mpq_class GradedPoly::coefficient(const std::vector<std::uint32_t>& exponents) const {
  auto it = terms_.find(Monomial{exponents, 0});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool GradedPoly::is_homogeneous(std::uint32_t w) const {
  for (const auto& [m, c] : terms_)
    if (m.weight != w || weight_of(m.exponents) != w) return false;
  return true;
}

GradedPoly operator+(const GradedPoly& a, const GradedPoly& b) {
  check_compatible(a, b);
  GradedPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

GradedPoly operator-(const GradedPoly& a, const GradedPoly& b) { return a + b.scaled(-1); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  check_compatible(a, b);
  GradedPoly out(a.r_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      GradedPoly::Monomial m{ma.exponents, ma.weight + mb.weight};
      for (std::size_t k = 0; k < m.exponents.size(); ++k) m.exponents[k] += mb.exponents[k];
      out.add_term(m, ca * cb);
    }
  return out;
}

GradedPoly GradedPoly::scaled(const mpq_class& c) const {
  GradedPoly out(r_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < m.exponents.size(); ++k) {
      if (m.exponents[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "a" + std::to_string(k + 2);
      if (m.exponents[k] > 1) mono += "^" + std::to_string(m.exponents[k]);
    }
    if (mono.empty())
      out << c.get_str();
    else if (c == 1)
      out << mono;
    else
      out << c.get_str() << "*" << mono;
  }
  return out.str();
}

std::vector<GradedPoly::Monomial> GradedPoly::monomials_of_weight(unsigned r, std::uint32_t w) {
  const unsigned n = variable_count(r);
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(n, 0);
  // variable k has weight k+1; fill from the first variable, remainder goes forward
  auto rec = [&](auto&& self, std::size_t k, std::uint32_t remaining) -> void {
    if (k == n) {
      if (remaining == 0) out.push_back(Monomial{e, w});
      return;
    }
    const std::uint32_t wk = static_cast<std::uint32_t>(k + 1);
    for (std::uint32_t p = 0; p * wk <= remaining; ++p) {
      e[k] = p;
      self(self, k + 1, remaining - p * wk);
    }
    e[k] = 0;
  };
  if (n == 0) {
    if (w == 0) out.push_back(Monomial{{}, 0});
    return out;
  }
  rec(rec, 0, w);
  return out;
}

}  // namespace p1kit
