#include "p1kit/ktheory.hpp"

#include <algorithm>

namespace p1kit {

KClass k_mul(KClass u, KClass v) { return {u.a * v.a, u.a * v.b + v.a * u.b}; }

KClass class_of(const SplittingType& e) {
  KClass total;
  for (long part : e.parts()) total = total + KClass{1, -part};
  return total;
}

long long pushforward_shriek(KClass c) { return c.a - c.b; }

AppendixSides appendix_identity_sides(const SplittingType& e, long m) {
  if (e.min_part() < -m)
    throw PreconditionError("identity needs every part >= -m; got " + e.to_string() +
                            " with m = " + std::to_string(m));
  long long sections = 0;  // h^0(E(m-1)) = rank of pi_* E(m-1)
  for (long part : e.parts()) sections += std::max(0L, part + m);
  const auto r = static_cast<long long>(e.rank());
  const KClass one_minus_gamma = KClass::one() - KClass::gamma();
  return {class_of(e) - r * KClass::one(), one_minus_gamma * KClass{sections - m * r, 0}};
}

bool verify_appendix_identity(const SplittingType& e, long m) {
  const auto sides = appendix_identity_sides(e, m);
  return sides.lhs == sides.rhs;
}

bool verify_stromme_k(const SplittingType& e) {
  if (e.min_part() < 0) throw PreconditionError("verify_stromme_k needs a globally generated type");
  long long h0 = 0, h0_minus = 0;
  for (long part : e.parts()) {
    h0 += part + 1;
    h0_minus += part;
  }
  return class_of(e) == h0 * KClass::one() - h0_minus * KClass::gamma();
}

std::vector<SquareCheck> splitting_square_checks(const Pencil& p, int lo, int hi) {
  std::vector<SquareCheck> out;
  const std::size_t r = p.cokernel_rank();
  for (int n = lo; n <= hi; ++n) {
    const CohDims prev = cohomology_dims(p, n - 1);
    SquareCheck c;
    c.n = n;
    c.applicable = prev.h1 == 0;
    c.h0_prev = prev.h0;
    c.h0 = cohomology_dims(p, n).h0;
    c.holds = !c.applicable || c.h0 == c.h0_prev + r;
    out.push_back(c);
  }
  return out;
}

bool verify_splitting_square(const Pencil& p, int lo, int hi) {
  const auto checks = splitting_square_checks(p, lo, hi);
  return std::all_of(checks.begin(), checks.end(), [](const SquareCheck& c) { return c.holds; });
}

}  // namespace p1kit
