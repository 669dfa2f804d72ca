#pragma once

#include <string>
#include <utility>

#include "p1kit/pencil.hpp"

namespace p1kit {

/// a + b*tau in K_0(P^1) = Z[gamma]/((gamma-1)^2), tau = gamma - 1, gamma = [O(-1)].
/// Rank is a, degree is -b.
struct KClass {
  long long a = 0;
  long long b = 0;

  static KClass one() { return {1, 0}; }
  static KClass gamma() { return {1, 1}; }
  /// The Bott element beta = gamma - 1.
  static KClass beta() { return {0, 1}; }

  long long rank() const { return a; }
  long long degree() const { return -b; }

  friend KClass operator+(KClass u, KClass v) { return {u.a + v.a, u.b + v.b}; }
  friend KClass operator-(KClass u, KClass v) { return {u.a - v.a, u.b - v.b}; }
  friend KClass operator-(KClass u) { return {-u.a, -u.b}; }
  friend KClass operator*(long long n, KClass u) { return {n * u.a, n * u.b}; }
  friend bool operator==(const KClass&, const KClass&) = default;

  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Product with tau^2 = 0.
KClass k_mul(KClass u, KClass v);
inline KClass operator*(KClass u, KClass v) { return k_mul(u, v); }

/// [O(e_1) + ... + O(e_r)] = (r, -d), from [O(e)] = gamma^(-e) = 1 - e tau.
KClass class_of(const SplittingType& e);

/// Euler characteristic pushforward to a point: pi_!(a + b tau) = a - b.
long long pushforward_shriek(KClass c);

struct AppendixSides {
  KClass lhs;  // [E] - r
  KClass rhs;  // (1 - gamma)([pi_* E(m-1)] - m r)
};

/// Both sides of [E] - r = (1 - gamma)(pi^*[pi_* E(m-1)] - m r), with
/// [pi_* E(m-1)] the rank sum_i h^0(O(e_i + m - 1)). Throws PreconditionError
/// unless every e_i >= -m.
AppendixSides appendix_identity_sides(const SplittingType& e, long m);
bool verify_appendix_identity(const SplittingType& e, long m);

/// Checks [E] = (D + r) - D gamma with D = h^0(E(-1)) and D + r = h^0(E).
/// Throws PreconditionError on a negative part.
bool verify_stromme_k(const SplittingType& e);

struct SquareCheck {
  int n = 0;
  bool applicable = false;  // h^1(E(n-1)) = 0
  std::size_t h0 = 0;       // h^0(E(n))
  std::size_t h0_prev = 0;  // h^0(E(n-1))
  bool holds = false;
};

/// For each n in [lo, hi] with h^1(E(n-1)) = 0, checks h^0(E(n)) = h^0(E(n-1)) + r.
std::vector<SquareCheck> splitting_square_checks(const Pencil& p, int lo, int hi);
bool verify_splitting_square(const Pencil& p, int lo, int hi);

}  // namespace p1kit
