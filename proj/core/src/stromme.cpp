#include "p1kit/stromme.hpp"

namespace p1kit {

void KroneckerPair::validate() const {
  require_same_field(alpha.field(), j.field());
  if (alpha.rows() != alpha.cols()) throw PreconditionError("Kronecker alpha must be square");
  if (j.cols() != alpha.cols()) throw PreconditionError("Kronecker j must have D columns");
  if (j.rows() == 0) throw PreconditionError("Kronecker j must have r >= 1 rows");
}

Pencil assemble_from_kronecker(const KroneckerPair& k) {
  k.validate();
  const Field& f = k.alpha.field();
  const std::size_t d = k.source_rank(), r = k.cokernel_rank();
  FieldMatrix a = FieldMatrix::vstack(FieldMatrix::identity(f, d), FieldMatrix(f, r, d));
  FieldMatrix b = FieldMatrix::vstack(k.alpha.scaled(Scalar(f, -1)), k.j);
  return Pencil(std::move(a), std::move(b));
}

bool is_standard_at_infinity(const Pencil& p) {
  const std::size_t d = p.source_rank();
  const Field& f = p.field();
  return p.a() == FieldMatrix::vstack(FieldMatrix::identity(f, d), FieldMatrix(f, p.cokernel_rank(), d));
}

KroneckerPair kronecker_from_standard(const Pencil& p, int m) {
  if (!is_standard_at_infinity(p))
    throw PreconditionError("kronecker_from_standard: pencil is not standard at infinity");
  const std::size_t d = p.source_rank();
  KroneckerPair k{p.b().row_block(0, d).scaled(Scalar(p.field(), -1)),
                  p.b().row_block(d, p.cokernel_rank()), m};
  return k;
}

bool composite_vanishes(const Pencil& p, const Pencil& resolution) {
  if (resolution.target_rank() != p.target_rank())
    throw PreconditionError("composite_vanishes: target ranks differ");
  // Degree-1 sections of O^(D+r): coordinates component-major over (y, x).
  const FieldMatrix image = h0_map(p, 1);
  const std::size_t base = matrix_rank(image);
  const Field& f = p.field();
  for (std::size_t col = 0; col < resolution.source_rank(); ++col) {
    FieldMatrix extended(f, image.rows(), image.cols() + 1);
    for (std::size_t i = 0; i < image.rows(); ++i)
      for (std::size_t j = 0; j < image.cols(); ++j) extended.set(i, j, image.at(i, j));
    for (std::size_t c = 0; c < resolution.target_rank(); ++c) {
      extended.set(c * 2 + 0, image.cols(), resolution.b().at(c, col));
      extended.set(c * 2 + 1, image.cols(), resolution.a().at(c, col));
    }
    if (matrix_rank(extended) != base) return false;
  }
  return true;
}

namespace {

// A Laurent term c * x^ex * y^ey in one component of O(-1)^(D+r).
struct LaurentTerm {
  std::size_t component;
  int ex;
  int ey;
  Scalar coeff;
};

}  // namespace

Pencil forward_resolution(const Pencil& p) {
  if (!full_rank_everywhere(p))
    throw PreconditionError("forward_resolution: pencil is not full rank everywhere");
  if (cohomology_dims(p, -1).h1 != 0)
    throw PreconditionError("forward_resolution: h1(E(-1)) != 0");

  const Field& f = p.field();
  const std::size_t t = p.target_rank();

  // H0(E(-1)) = ker(H1(O(-2))^D -> H1(O(-1))^(D+r)); each basis vector v is
  // the Cech class sum_j v_j x^-1 y^-1 e_j.
  const auto sections = kernel_basis(h1_map(p, -1));
  // H0(O(-1)) = 0, so H0(E) is all of H0(O)^(D+r) = k^(D+r).
  if (h0_map(p, 0).cols() != 0) throw std::logic_error("forward_resolution: unexpected H0(O(-1))");

  const std::size_t d = sections.size();
  FieldMatrix mx(f, t, d), my(f, t, d);
  for (std::size_t s = 0; s < d; ++s) {
    const Vector& v = sections[s];
    // (xA + yB) v / (xy) = (A v) y^-1 + (B v) x^-1
    std::vector<LaurentTerm> terms;
    const Vector av = p.a().apply(v), bv = p.b().apply(v);
    for (std::size_t c = 0; c < t; ++c) {
      if (!av[c].is_zero()) terms.push_back({c, 0, -1, av[c]});
      if (!bv[c].is_zero()) terms.push_back({c, -1, 0, bv[c]});
    }
    // Split into t_x (regular where x != 0: y-exponent >= 0) and
    // t_y = t_x - (that cochain), regular where y != 0.
    // x * t_x and y * t_y are the global sections x*s and y*s in H0(O)^(D+r).
    for (const auto& term : terms) {
      if (term.ey >= 0) {
        if (term.ex + 1 != 0 || term.ey != 0) throw std::logic_error("forward_resolution: bad x-lift");
        mx.set(term.component, s, mx.at(term.component, s) + term.coeff);
      } else {
        if (term.ex != 0 || term.ey + 1 != 0) throw std::logic_error("forward_resolution: bad y-lift");
        my.set(term.component, s, my.at(term.component, s) - term.coeff);
      }
    }
  }

  // x M_y - y M_x; the opposite sign is tried only if the composite fails to vanish.
  Pencil candidate(my, mx.scaled(Scalar(f, -1)));
  if (composite_vanishes(p, candidate)) return candidate;
  Pencil flipped(my, mx);
  if (composite_vanishes(p, flipped)) return flipped;
  throw std::logic_error("forward_resolution: neither sign gives a vanishing composite");
}

}  // namespace p1kit
