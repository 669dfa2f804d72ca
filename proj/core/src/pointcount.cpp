#include "p1kit/pointcount.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "p1kit/errors.hpp"
#include "p1kit/stromme.hpp"

namespace p1kit {

std::string CountReport::to_json() const {
  std::ostringstream os;
  os << "{\"D\":" << D << ",\"r\":" << r << ",\"q\":" << q << ",\"total\":" << total
     << ",\"full_rank\":" << full_rank << ",\"complement\":" << complement
     << ",\"ambient_dim\":" << ambient_dim << "}";
  return os.str();
}

namespace {

std::uint64_t checked_total(std::uint32_t q, std::size_t dim, double budget) {
  const double required = std::pow(static_cast<double>(q), static_cast<double>(dim));
  if (required > budget) {
    std::ostringstream os;
    os << "enumeration needs " << q << "^" << dim << " = " << required
       << " points, budget is " << budget;
    throw BudgetExceeded(os.str(), required);
  }
  std::uint64_t t = 1;
  for (std::size_t i = 0; i < dim; ++i) t *= q;
  return t;
}

// Digits of `index` in base q, least significant first.
void decode(std::uint64_t index, std::uint32_t q, std::vector<long>& digits) {
  for (auto& d : digits) {
    d = static_cast<long>(index % q);
    index /= q;
  }
}

using PencilOf = std::function<Pencil(const std::vector<long>&)>;

CountReport enumerate(std::size_t D, std::size_t r, std::uint32_t q, std::size_t dim,
                      double budget, unsigned threads, const PencilOf& build) {
  CountReport rep;
  rep.D = D;
  rep.r = r;
  rep.q = q;
  rep.ambient_dim = dim;
  rep.total = checked_total(q, dim, budget);
  if (D == 0) {
    rep.full_rank = rep.total;
    return rep;
  }
  threads = std::max(1u, threads);
  std::vector<std::uint64_t> tallies(threads, 0);
  auto work = [&](unsigned t) {
    const std::uint64_t lo = rep.total * t / threads, hi = rep.total * (t + 1) / threads;
    std::vector<long> digits(dim);
    for (std::uint64_t i = lo; i < hi; ++i) {
      decode(i, q, digits);
      if (full_rank_everywhere(build(digits))) ++tallies[t];
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
  work(0);
  for (auto& th : pool) th.join();
  for (auto c : tallies) rep.full_rank += c;
  rep.complement = rep.total - rep.full_rank;
  return rep;
}

}  // namespace

CountReport count_kronecker_locus(std::size_t D, std::size_t r, std::uint32_t q, double budget,
                                  unsigned threads) {
  if (r == 0) throw PreconditionError("count_kronecker_locus needs r >= 1");
  const Field f = Field::prime_field(q);
  const auto build = [&](const std::vector<long>& x) {
    KroneckerPair k{FieldMatrix(f, D, D), FieldMatrix(f, r, D)};
    std::size_t at = 0;
    for (std::size_t i = 0; i < D; ++i)
      for (std::size_t j = 0; j < D; ++j) k.alpha.set(i, j, Scalar(f, x[at++]));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < D; ++j) k.j.set(i, j, Scalar(f, x[at++]));
    return assemble_from_kronecker(k);
  };
  return enumerate(D, r, q, D * D + r * D, budget, threads, build);
}

CountReport count_fr_locus(std::size_t D, std::size_t r, std::uint32_t q, double budget,
                           unsigned threads) {
  if (r == 0) throw PreconditionError("count_fr_locus needs r >= 1");
  const Field f = Field::prime_field(q);
  const std::size_t cells = D * (D + r);
  const auto build = [&](const std::vector<long>& x) {
    FieldMatrix a(f, D + r, D), b(f, D + r, D);
    for (std::size_t c = 0; c < cells; ++c) {
      a.set(c / D, c % D, Scalar(f, x[c]));
      b.set(c / D, c % D, Scalar(f, x[cells + c]));
    }
    return Pencil(std::move(a), std::move(b));
  };
  return enumerate(D, r, q, 2 * cells, budget, threads, build);
}

CodimFit codim_fit(std::span<const CountReport> reports) {
  std::set<std::uint32_t> qs;
  for (const auto& rep : reports) {
    if (rep.D != reports.front().D || rep.r != reports.front().r)
      throw PreconditionError("codim_fit: reports mix different (D, r)");
    qs.insert(rep.q);
  }
  if (qs.size() < 3) throw PreconditionError("codim_fit needs reports at >= 3 distinct q");

  CodimFit fit;
  for (const auto& rep : reports) {
    if (rep.complement == 0) {
      std::ostringstream os;
      os << "q=" << rep.q << ": complement empty, codim > log_q(total) = " << rep.ambient_dim;
      fit.note += (fit.note.empty() ? "" : "; ") + os.str();
      continue;
    }
    const double logq = std::log(static_cast<double>(rep.complement)) / std::log(static_cast<double>(rep.q));
    const double expected = static_cast<double>(rep.ambient_dim) - static_cast<double>(rep.r);
    fit.max_deviation = std::max(fit.max_deviation, std::abs(logq - expected));
    ++fit.fitted;
  }
  return fit;
}

}  // namespace p1kit
