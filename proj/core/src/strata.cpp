#include "p1kit/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace p1kit {

std::uint64_t h1_end(const SplittingType& e) {
  std::uint64_t u = 0;
  for (long ei : e.parts())
    for (long ej : e.parts())
      if (ej - ei - 1 > 0) u += static_cast<std::uint64_t>(ej - ei - 1);
  return u;
}

namespace {

long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

std::vector<SplittingType> enumerate_splitting_types(std::size_t r, long d, std::uint64_t max_codim) {
  if (r == 0) throw PreconditionError("rank must be >= 1");
  const long rl = static_cast<long>(r);
  // A pair (min, max) alone contributes max - min - 1, so the spread is at
  // most max_codim + 1 around the average part d / r.
  const long spread = static_cast<long>(max_codim) + 1;
  const long lo = floor_div(d, rl) - spread;
  const long hi = ceil_div(d, rl) + spread;

  std::vector<SplittingType> out;
  std::vector<long> parts;
  parts.reserve(r);
  auto rec = [&](auto&& self, long cap, long remaining) -> void {
    const long left = rl - static_cast<long>(parts.size());
    if (left == 0) {
      if (remaining == 0) {
        SplittingType e(parts);
        if (h1_end(e) <= max_codim) out.push_back(std::move(e));
      }
      return;
    }
    for (long v = cap; v >= lo; --v) {
      // remaining parts lie in [lo, v]
      if (remaining - v > (left - 1) * v) break;
      if (remaining - v < (left - 1) * lo) continue;
      parts.push_back(v);
      self(self, v, remaining - v);
      parts.pop_back();
    }
  };
  rec(rec, hi, d);
  std::sort(out.begin(), out.end());
  return out;
}

SplittingStratum make_stratum(const SplittingType& e) {
  auto mult = e.multiplicities();
  QPoly poincare = flag_poincare(mult);
  return SplittingStratum{e, h1_end(e), std::move(mult), std::move(poincare)};
}

CodimReport check_codim_theorem(std::size_t r, long d, long m) {
  const long rl = static_cast<long>(r);
  if (r == 0) throw PreconditionError("rank must be >= 1");
  if (d + m * rl < 0) throw PreconditionError("check_codim_theorem requires d + m r >= 0");

  CodimReport report;
  report.r = r;
  report.d = d;
  report.m = m;
  report.expected = static_cast<std::uint64_t>(d + m * rl + 1);
  if (r == 1) {
    report.vacuous = true;
    report.passed = true;
    return report;
  }

  // (-m-1, then d+m+1 spread as evenly as possible over r-1 parts)
  const long rest = d + m + 1;
  const long q = floor_div(rest, rl - 1);
  const long extra = rest - q * (rl - 1);
  report.predicted.push_back(-m - 1);
  for (long i = 0; i < rl - 1; ++i) report.predicted.push_back(i < extra ? q + 1 : q);
  std::sort(report.predicted.begin(), report.predicted.end(), std::greater<>());

  bool found = false;
  for (const auto& e : enumerate_splitting_types(r, d, report.expected + 2)) {
    if (e.min_part() > -m - 1) continue;
    const std::uint64_t u = h1_end(e);
    if (!found || u < report.minimum) {
      report.minimum = u;
      report.minimizers.clear();
      found = true;
    }
    if (u == report.minimum) report.minimizers.push_back(e);
  }
  const SplittingType predicted(report.predicted);
  report.passed = found && report.minimum == report.expected &&
                  std::find(report.minimizers.begin(), report.minimizers.end(), predicted) !=
                      report.minimizers.end();
  return report;
}

namespace {

QPoly multiply(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// [n; k]_q via q-Pascal: [n;k] = [n-1;k-1] + q^k [n-1;k]
QPoly q_binomial(std::size_t n, std::size_t k) {
  std::vector<std::vector<QPoly>> t(n + 1, std::vector<QPoly>(k + 1));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= std::min(i, k); ++j) {
      if (j == 0 || j == i) {
        t[i][j] = QPoly{1};
        continue;
      }
      const QPoly& left = t[i - 1][j - 1];
      const QPoly& right = t[i - 1][j];
      QPoly sum(std::max(left.size(), right.size() + j), 0);
      for (std::size_t a = 0; a < left.size(); ++a) sum[a] += left[a];
      for (std::size_t a = 0; a < right.size(); ++a) sum[a + j] += right[a];
      t[i][j] = std::move(sum);
    }
  }
  return t[n][k];
}

}  // namespace

QPoly flag_poincare(const std::vector<std::size_t>& multiplicities) {
  QPoly out{1};
  std::size_t total = 0;
  for (std::size_t n : multiplicities) {
    total += n;
    out = multiply(out, q_binomial(total, n));
  }
  return out;
}

QPoly flag_poincare(const std::vector<std::size_t>& multiplicities, std::size_t r) {
  if (std::accumulate(multiplicities.begin(), multiplicities.end(), std::size_t{0}) != r)
    throw PreconditionError("flag_poincare: multiplicities do not sum to r");
  return flag_poincare(multiplicities);
}

BettiTable betti_via_strata(std::size_t r, long d, std::size_t max_codim) {
  BettiTable table{std::vector<std::uint64_t>(max_codim + 1, 0)};
  for (const auto& e : enumerate_splitting_types(r, d, max_codim)) {
    const auto stratum = make_stratum(e);
    for (std::size_t k = 0; k < stratum.flag_poincare.size(); ++k) {
      const std::uint64_t i = stratum.codim + k;
      if (i > max_codim) break;
      table.ranks[i] += stratum.flag_poincare[k];
    }
  }
  return table;
}

std::vector<GradedPoly> chow_generators(std::size_t r, std::size_t max_codim) {
  if (r < 2) return {};
  const auto rr = static_cast<unsigned>(r);
  // E = exp(S), S = sum_j s_j t^j with j s_j = a'_{j+1}; E' = S'E gives
  // k e_k = sum_{j=1}^{min(k, r-1)} a'_{j+1} e_{k-j}.
  std::vector<GradedPoly> e{GradedPoly::constant(rr, 1)};
  for (std::size_t k = 1; k <= max_codim; ++k) {
    GradedPoly acc(rr);
    for (std::size_t j = 1; j <= std::min(k, r - 1); ++j)
      acc = acc + GradedPoly::generator(rr, static_cast<unsigned>(j + 1)) * e[k - j];
    e.push_back(acc.scaled(mpq_class(1, static_cast<unsigned long>(k))));
  }
  e.erase(e.begin());
  return e;
}

namespace {

void partitions(std::size_t n, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

SubringReport subring_betti(std::size_t r, std::size_t max_codim) {
  if (r == 0) throw PreconditionError("rank must be >= 1");
  const auto rr = static_cast<unsigned>(r);
  const auto gens = chow_generators(r, max_codim);
  SubringReport report;
  report.ranks.ranks.assign(max_codim + 1, 0);

  std::map<std::vector<std::size_t>, GradedPoly> products;
  products.emplace(std::vector<std::size_t>{}, GradedPoly::constant(rr, 1));
  auto product_of = [&](auto&& self, const std::vector<std::size_t>& parts) -> const GradedPoly& {
    auto it = products.find(parts);
    if (it != products.end()) return it->second;
    std::vector<std::size_t> rest(parts.begin() + 1, parts.end());
    GradedPoly value = gens[parts.front() - 1] * self(self, rest);
    return products.emplace(parts, std::move(value)).first->second;
  };

  for (std::size_t i = 0; i <= max_codim; ++i) {
    const auto basis = GradedPoly::monomials_of_weight(rr, static_cast<std::uint32_t>(i));
    std::vector<std::vector<std::size_t>> monos;
    std::vector<std::size_t> scratch;
    if (r >= 2 || i == 0) partitions(i, i, scratch, monos);

    FieldMatrix m(Field::rationals(), monos.size(), basis.size());
    IntMatrix lattice(monos.size(), basis.size());
    for (std::size_t row = 0; row < monos.size(); ++row) {
      const GradedPoly& poly = product_of(product_of, monos[row]);
      mpz_class l = 1;
      for (std::size_t col = 0; col < basis.size(); ++col) {
        mpq_class c = poly.coefficient(basis[col].exponents);
        m.set(row, col, Scalar(Field::rationals(), c));
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
      }
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const mpq_class& c = m.at(row, col).rational();
        lattice.at(row, col) = c.get_num() * (l / c.get_den());
      }
    }
    report.ranks.ranks[i] = matrix_rank(m);
    report.lattice.push_back(hnf_rank(lattice));
  }
  return report;
}

BettiTable partition_betti(std::size_t r, std::size_t max_codim) {
  if (r == 0) throw PreconditionError("rank must be >= 1");
  std::vector<std::uint64_t> count(max_codim + 1, 0);
  count[0] = 1;
  for (std::size_t part = 1; part + 1 <= r; ++part)
    for (std::size_t i = part; i <= max_codim; ++i) count[i] += count[i - part];
  return BettiTable{std::move(count)};
}

}  // namespace p1kit
