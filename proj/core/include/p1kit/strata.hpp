#pragma once

#include <cstdint>
#include <vector>

#include "p1kit/graded_poly.hpp"
#include "p1kit/matrix.hpp"
#include "p1kit/pencil.hpp"

namespace p1kit {

/// Polynomial in q with nonnegative integer coefficients, index = power of q.
using QPoly = std::vector<std::uint64_t>;

struct SplittingStratum {
  SplittingType e;
  std::uint64_t codim = 0;                  // u(e) = h^1(End E)
  std::vector<std::size_t> multiplicities;  // n_1..n_s
  QPoly flag_poincare;
};

struct BettiTable {
  std::vector<std::uint64_t> ranks;  // ranks[i] = rank of the codimension-i piece

  std::size_t max_codim() const { return ranks.empty() ? 0 : ranks.size() - 1; }
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// u(e) = sum over ordered pairs (i, j) of max(0, e_j - e_i - 1).
std::uint64_t h1_end(const SplittingType& e);

/// Splitting types of rank r and degree d with h1_end <= max_codim, in
/// lexicographic order of the descending part vectors.
std::vector<SplittingType> enumerate_splitting_types(std::size_t r, long d, std::uint64_t max_codim);

SplittingStratum make_stratum(const SplittingType& e);

struct CodimReport {
  std::size_t r = 0;
  long d = 0;
  long m = 0;
  bool vacuous = false;            // r = 1
  std::uint64_t expected = 0;      // d + m r + 1
  std::uint64_t minimum = 0;       // min u over the bad locus
  std::vector<SplittingType> minimizers;
  std::vector<long> predicted;     // (-m-1, balanced remainder)
  bool passed = false;
};

/// Enumerates types of rank r, degree d with a part <= -m-1 and u <= d+mr+3,
/// and checks that the minimal u is d+mr+1, attained at (-m-1, balanced
/// remainder). Requires d + m r >= 0.
CodimReport check_codim_theorem(std::size_t r, long d, long m);

/// Gaussian multinomial [n_1 + ... + n_s; n_1, ..., n_s]_q.
QPoly flag_poincare(const std::vector<std::size_t>& multiplicities);
/// Same, checking that the multiplicities sum to r.
QPoly flag_poincare(const std::vector<std::size_t>& multiplicities, std::size_t r);

/// Betti numbers from the stratification: each stratum contributes its flag
/// Poincare polynomial shifted by u(e).
BettiTable betti_via_strata(std::size_t r, long d, std::size_t max_codim);

/// c_j = [t^j] exp(a'_2 t + a'_3 t^2/2 + ... + a'_r t^(r-1)/(r-1)), j = 1..max_codim.
/// Empty for r < 2.
std::vector<GradedPoly> chow_generators(std::size_t r, std::size_t max_codim);

struct SubringReport {
  BettiTable ranks;                         // Q-ranks per codimension
  std::vector<LatticeReport> lattice;       // per codimension, denominators cleared row-wise
};

/// Dimension of the span of all weight-i monomials in the c_j inside the
/// weight-i part of Q[a'_2, ..., a'_r], for i = 0..max_codim.
SubringReport subring_betti(std::size_t r, std::size_t max_codim);

/// Number of partitions of i into parts of size <= r-1.
BettiTable partition_betti(std::size_t r, std::size_t max_codim);

}  // namespace p1kit
