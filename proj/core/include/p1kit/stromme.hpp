#pragma once

#include "p1kit/pencil.hpp"

namespace p1kit {

/// A point (alpha, j) of Hom(A, A) + Hom(A, O^r), with D = rank A = d + m r.
struct KroneckerPair {
  FieldMatrix alpha;  // D x D
  FieldMatrix j;      // r x D
  int m = 1;          // twist context

  /// Throws PreconditionError / FieldMismatch if the shapes or fields disagree.
  void validate() const;
  std::size_t source_rank() const { return alpha.cols(); }
  std::size_t cokernel_rank() const { return j.rows(); }

  friend bool operator==(const KroneckerPair&, const KroneckerPair&) = default;
};

/// The pencil (I x - alpha y ; j y), standard at infinity.
Pencil assemble_from_kronecker(const KroneckerPair& k);

/// True iff A = (I ; 0) exactly, i.e. the pencil is (I ; 0) at y = 0.
bool is_standard_at_infinity(const Pencil& p);

/// Inverse of assemble_from_kronecker: alpha = -(top block of B), j = bottom
/// block of B. Throws PreconditionError unless is_standard_at_infinity(p).
KroneckerPair kronecker_from_standard(const Pencil& p, int m = 1);

/// Pencil of pi^*pi_*E(-1)(-1) -> pi^*pi_*E for E = coker(p).
///
/// H^0(E(-1)) is taken as the kernel of the H^1 connecting map and H^0(E) as
/// the quotient of H^0(O^(D+r)); the multiplication maps M_x, M_y come from
/// lifting each section of E(-1) to Cech cochains. The result is
/// x M_y - y M_x, with the sign confirmed by checking that the composite into
/// E vanishes. Throws PreconditionError if p is not full rank or h^1(E(-1)) != 0.
Pencil forward_resolution(const Pencil& p);

/// True iff every column of `resolution` lies in the image of `p` on degree-1
/// sections, i.e. the composite O(-1)^d -> O^(d+r) -> coker(p) is zero.
bool composite_vanishes(const Pencil& p, const Pencil& resolution);

}  // namespace p1kit
