#pragma once

#include <cstdint>
#include <span>
#include <string>

namespace p1kit {

struct CountReport {
  std::size_t D = 0;
  std::size_t r = 0;
  std::uint32_t q = 0;
  std::uint64_t total = 0;
  std::uint64_t full_rank = 0;
  std::uint64_t complement = 0;
  std::size_t ambient_dim = 0;

  std::string to_json() const;
};

inline constexpr double kDefaultCountBudget = 1e8;

/// Tallies the pairs (alpha, j) in Hom(F_q^D, F_q^D) + Hom(F_q^D, F_q^r) whose
/// assembled pencil is full rank everywhere. Ambient dimension D^2 + rD.
/// Throws BudgetExceeded if q^ambient > budget; q must be prime.
CountReport count_kronecker_locus(std::size_t D, std::size_t r, std::uint32_t q,
                                  double budget = kDefaultCountBudget, unsigned threads = 4);

/// Same over all (D+r) x D pencils of linear forms. Ambient dimension 2D(D+r).
CountReport count_fr_locus(std::size_t D, std::size_t r, std::uint32_t q,
                           double budget = kDefaultCountBudget, unsigned threads = 4);

struct CodimFit {
  double max_deviation = 0;  // over the reports with a nonempty complement
  std::size_t fitted = 0;    // how many reports entered the maximum
  std::string note;          // set when some complement is empty
};

/// max over q of |log_q(complement) - (ambient_dim - r)|. Needs reports for one
/// (D, r) at three or more distinct q; throws PreconditionError otherwise.
CodimFit codim_fit(std::span<const CountReport> reports);

}  // namespace p1kit
