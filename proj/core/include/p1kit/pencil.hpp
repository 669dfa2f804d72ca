#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "p1kit/binary_form.hpp"
#include "p1kit/matrix.hpp"

namespace p1kit {

/// Grothendieck splitting type: parts e_1 >= ... >= e_r of E = O(e_1) + ... + O(e_r).
class SplittingType {
 public:
  /// Sorts the parts into weakly decreasing order. Throws on an empty vector.
  explicit SplittingType(std::vector<long> parts);
  /// Parses "(2,1,0)".
  static SplittingType parse(std::string_view text);

  std::span<const long> parts() const { return parts_; }
  std::size_t rank() const { return parts_.size(); }
  long degree() const;
  long max_part() const { return parts_.front(); }
  long min_part() const { return parts_.back(); }

  /// Sizes of the runs of equal parts, largest part first. Sums to rank().
  std::vector<std::size_t> multiplicities() const;

  /// E(n): every part shifted by n.
  SplittingType twist(long n) const;
  /// Direct sum.
  SplittingType direct_sum(const SplittingType& other) const;

  std::string to_string() const;

  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType& a, const SplittingType& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<long> parts_;
};

/// Cohomology dimensions of E(twist).
struct CohDims {
  int twist = 0;
  std::size_t h0 = 0;
  std::size_t h1 = 0;

  friend bool operator==(const CohDims&, const CohDims&) = default;
};

/// Matrix of linear forms xA + yB of shape (D+r) x D, read as the map
/// O(-1)^D -> O^(D+r), v -> (xA + yB) v. Its cokernel is the bundle it presents.
class Pencil {
 public:
  /// Requires A and B of equal shape over one field with rows > cols.
  Pencil(FieldMatrix a, FieldMatrix b);
  /// D = 0: presents the trivial bundle O^r.
  static Pencil empty(const Field& field, std::size_t r);

  const Field& field() const { return a_.field(); }
  const FieldMatrix& a() const { return a_; }
  const FieldMatrix& b() const { return b_; }
  std::size_t source_rank() const { return a_.cols(); }
  std::size_t target_rank() const { return a_.rows(); }
  std::size_t cokernel_rank() const { return a_.rows() - a_.cols(); }

  /// Entry (i, j) as the linear form A_ij x + B_ij y.
  BinaryForm entry(std::size_t i, std::size_t j) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  FieldMatrix a_;
  FieldMatrix b_;
};

/// Block-diagonal Kronecker pencil with cokernel O(e_1) + ... + O(e_r).
/// A part e >= 1 contributes an (e+1) x e block with x on the diagonal and y
/// on the subdiagonal; a part 0 contributes one zero row. Throws on negative parts.
Pencil block_pencil(const SplittingType& e, const Field& field);

/// All C(D+r, D) maximal minors, row subsets in lexicographic (bitmask) order.
/// Empty for D = 0.
std::vector<BinaryForm> maximal_minors(const Pencil& p);

/// True iff the pencil has full rank at every point of P^1 (over the algebraic
/// closure), i.e. the maximal minors have no common zero. Vacuously true for D = 0.
bool full_rank_everywhere(const Pencil& p);

/// The map H^0(O(n-1))^D -> H^0(O(n))^(D+r) on monomial bases x^i y^(k-i),
/// component-major.
FieldMatrix h0_map(const Pencil& p, int n);
/// The map H^1(O(n-1))^D -> H^1(O(n))^(D+r) on Cech bases x^-a y^-(|k|-a),
/// a = 1..|k|-1, component-major.
FieldMatrix h1_map(const Pencil& p, int n);

/// h^0 and h^1 of E(n) for E = coker(p), from the long exact sequence of
/// 0 -> O(n-1)^D -> O(n)^(D+r) -> E(n) -> 0. Throws PreconditionError if the
/// pencil is not full rank.
CohDims cohomology_dims(const Pencil& p, int n);

/// Splitting type from second differences of f(n) = h^0(E(-n)).
SplittingType splitting_type(const Pencil& p);

/// G * P * H.
Pencil transform(const Pencil& p, const FieldMatrix& g, const FieldMatrix& h);

/// G * P * H for seeded random invertible G in GL(D+r), H in GL(D).
Pencil random_equivalent(const Pencil& p, std::uint64_t seed);

}  // namespace p1kit
