#include "p1kit/pencil.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "p1kit/random.hpp"

namespace p1kit {

// ---------------------------------------------------------------- SplittingType

SplittingType::SplittingType(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("splitting type must have at least one part");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

SplittingType SplittingType::parse(std::string_view text) {
  auto fail = [&] { return PreconditionError("malformed splitting type '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') throw fail();
  text = text.substr(1, text.size() - 2);
  std::vector<long> parts;
  for (;;) {
    const auto comma = text.find(',');
    auto token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) throw fail();
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return SplittingType(std::move(parts));
}

long SplittingType::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::vector<std::size_t> SplittingType::multiplicities() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1])
      out.push_back(1);
    else
      ++out.back();
  }
  return out;
}

SplittingType SplittingType::twist(long n) const {
  std::vector<long> p = parts_;
  for (auto& e : p) e += n;
  return SplittingType(std::move(p));
}

SplittingType SplittingType::direct_sum(const SplittingType& other) const {
  std::vector<long> p = parts_;
  p.insert(p.end(), other.parts_.begin(), other.parts_.end());
  return SplittingType(std::move(p));
}

std::string SplittingType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------- Pencil

Pencil::Pencil(FieldMatrix a, FieldMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  require_same_field(a_.field(), b_.field());
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols())
    throw PreconditionError("pencil matrices A and B must have the same shape");
  if (a_.rows() <= a_.cols())
    throw PreconditionError("pencil must have more rows than columns (cokernel rank r >= 1)");
}

Pencil Pencil::empty(const Field& field, std::size_t r) {
  return Pencil(FieldMatrix(field, r, 0), FieldMatrix(field, r, 0));
}

BinaryForm Pencil::entry(std::size_t i, std::size_t j) const {
  return BinaryForm::linear(a_.at(i, j), b_.at(i, j));
}

Pencil block_pencil(const SplittingType& e, const Field& field) {
  if (e.min_part() < 0) throw PreconditionError("block_pencil: negative part in " + e.to_string());
  const auto rows = static_cast<std::size_t>(e.degree()) + e.rank();
  const auto cols = static_cast<std::size_t>(e.degree());
  FieldMatrix a(field, rows, cols), b(field, rows, cols);
  const Scalar one(field, 1);
  std::size_t row0 = 0, col0 = 0;
  for (long part : e.parts()) {
    const auto n = static_cast<std::size_t>(part);
    for (std::size_t k = 0; k < n; ++k) {
      a.set(row0 + k, col0 + k, one);
      b.set(row0 + k + 1, col0 + k, one);
    }
    row0 += n + 1;
    col0 += n;
  }
  return Pencil(std::move(a), std::move(b));
}

std::vector<BinaryForm> maximal_minors(const Pencil& p) {
  const std::size_t n = p.target_rank(), d = p.source_rank();
  if (d == 0) return {};
  if (n > 24) throw PreconditionError("maximal_minors: too many rows for subset expansion");

  // Expand column by column; dp[mask] is the signed sum over injective
  // assignments of the processed columns to the rows in mask. Placing row i
  // adds one inversion per already-used row above it.
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::optional<BinaryForm>> dp(full);
  dp[0] = BinaryForm::constant(Scalar(p.field(), 1));
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::optional<BinaryForm>> next(full);
    for (std::size_t mask = 0; mask < full; ++mask) {
      if (!dp[mask] || static_cast<std::size_t>(std::popcount(mask)) != c) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) continue;
        BinaryForm lin = p.entry(i, c);
        if (lin.is_zero()) continue;
        const int above = std::popcount(mask >> (i + 1));
        BinaryForm term = *dp[mask] * lin;
        if (above % 2) term = term.scaled(Scalar(p.field(), -1));
        auto& slot = next[mask | (std::size_t{1} << i)];
        slot = slot ? *slot + term : term;
      }
    }
    dp = std::move(next);
  }

  std::vector<BinaryForm> minors;
  for (std::size_t mask = 0; mask < full; ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == d)
      minors.push_back(dp[mask] ? *dp[mask] : BinaryForm::zero(p.field()));
  return minors;
}

bool full_rank_everywhere(const Pencil& p) {
  if (p.source_rank() == 0) return true;
  const auto minors = maximal_minors(p);
  if (std::all_of(minors.begin(), minors.end(), [](const BinaryForm& f) { return f.is_zero(); }))
    return false;
  return binary_form_gcd(minors).degree() == 0;
}

// ------------------------------------------------------------------ cohomology

namespace {

std::size_t h0_line(int k) { return k >= 0 ? static_cast<std::size_t>(k + 1) : 0; }
std::size_t h1_line(int k) { return k <= -2 ? static_cast<std::size_t>(-k - 1) : 0; }

}  // namespace

FieldMatrix h0_map(const Pencil& p, int n) {
  const std::size_t d = p.source_rank(), t = p.target_rank();
  const std::size_t src = h0_line(n - 1), dst = h0_line(n);
  FieldMatrix m(p.field(), t * dst, d * src);
  // source monomial x^i y^(n-1-i): times x -> x^(i+1) y^(n-1-i), times y -> x^i y^(n-i)
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < src; ++i)
      for (std::size_t c = 0; c < t; ++c) {
        const std::size_t col = j * src + i;
        if (!p.a().at(c, j).is_zero()) m.set(c * dst + i + 1, col, m.at(c * dst + i + 1, col) + p.a().at(c, j));
        if (!p.b().at(c, j).is_zero()) m.set(c * dst + i, col, m.at(c * dst + i, col) + p.b().at(c, j));
      }
  return m;
}

FieldMatrix h1_map(const Pencil& p, int n) {
  const std::size_t d = p.source_rank(), t = p.target_rank();
  const std::size_t src = h1_line(n - 1), dst = h1_line(n);
  FieldMatrix m(p.field(), t * dst, d * src);
  // source basis index s <-> x^-a y^-b with a = s+1, a + b = 1-n.
  // times x: x^-(a-1) y^-b, survives iff a >= 2 (target index s-1).
  // times y: x^-a y^-(b-1), survives iff b >= 2, i.e. a <= -n-1 (target index s).
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t s = 0; s < src; ++s)
      for (std::size_t c = 0; c < t; ++c) {
        const std::size_t col = j * src + s;
        const std::size_t a = s + 1;
        if (a >= 2 && !p.a().at(c, j).is_zero())
          m.set(c * dst + s - 1, col, m.at(c * dst + s - 1, col) + p.a().at(c, j));
        if (s < dst && !p.b().at(c, j).is_zero())
          m.set(c * dst + s, col, m.at(c * dst + s, col) + p.b().at(c, j));
      }
  return m;
}

namespace {

CohDims cohomology_unchecked(const Pencil& p, int n) {
  const std::size_t d = p.source_rank(), t = p.target_rank();

  const std::size_t rank0 = matrix_rank(h0_map(p, n));
  const std::size_t rank1 = matrix_rank(h1_map(p, n));
  // 0 -> H0(O(n-1)^D) -> H0(O(n)^t) -> H0(E(n)) -> H1(O(n-1)^D) -> H1(O(n)^t) -> H1(E(n)) -> 0
  const std::size_t coker0 = t * h0_line(n) - rank0;
  const std::size_t ker1 = d * h1_line(n - 1) - rank1;
  const std::size_t coker1 = t * h1_line(n) - rank1;
  return CohDims{n, coker0 + ker1, coker1};
}

}  // namespace

CohDims cohomology_dims(const Pencil& p, int n) {
  if (!full_rank_everywhere(p))
    throw PreconditionError("cohomology_dims: pencil is not full rank everywhere");
  return cohomology_unchecked(p, n);
}

SplittingType splitting_type(const Pencil& p) {
  if (!full_rank_everywhere(p))
    throw PreconditionError("splitting_type: pencil is not full rank everywhere");
  // f(n) = h0(E(-n)) is weakly decreasing and vanishes past the largest part.
  std::vector<long> f;
  for (int n = 0;; ++n) {
    f.push_back(static_cast<long>(cohomology_unchecked(p, -n).h0));
    if (f.back() == 0) break;
  }
  f.push_back(0);
  f.push_back(0);

  std::vector<long> parts;
  for (std::size_t n = 0; n + 2 < f.size(); ++n) {
    const long mult = f[n] - 2 * f[n + 1] + f[n + 2];
    if (mult < 0) throw std::logic_error("splitting_type: negative second difference");
    parts.insert(parts.end(), static_cast<std::size_t>(mult), static_cast<long>(n));
  }
  SplittingType e(std::move(parts));
  if (e.rank() != p.cokernel_rank() || e.degree() != static_cast<long>(p.source_rank()))
    throw std::logic_error("splitting_type: recovered type " + e.to_string() +
                           " is inconsistent with pencil shape");
  return e;
}

Pencil transform(const Pencil& p, const FieldMatrix& g, const FieldMatrix& h) {
  return Pencil(g * p.a() * h, g * p.b() * h);
}

namespace {

FieldMatrix random_invertible(const Field& field, std::size_t n, Rng& rng) {
  for (;;) {
    FieldMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.scalar(field));
    if (matrix_rank(m) == n) return m;
  }
}

}  // namespace

Pencil random_equivalent(const Pencil& p, std::uint64_t seed) {
  Rng rng(seed);
  FieldMatrix g = random_invertible(p.field(), p.target_rank(), rng);
  FieldMatrix h = random_invertible(p.field(), p.source_rank(), rng);
  return transform(p, g, h);
}

}  // namespace p1kit
