#include "p1kit/matrix.hpp"

#include <algorithm>
#include <utility>

namespace p1kit {

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar(field)) {}

FieldMatrix::FieldMatrix(const Field& field, std::size_t rows, std::size_t cols,
                         std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw PreconditionError("matrix entry count does not match rows*cols");
  for (const auto& e : entries_) require_same_field(field_, e.field());
}

FieldMatrix FieldMatrix::identity(const Field& field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar(field, 1);
  return m;
}

FieldMatrix FieldMatrix::from_rows(const Field& field, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  FieldMatrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.entries_[i * c + j] = Scalar(field, rows[i][j]);
  }
  return m;
}

void FieldMatrix::set(std::size_t i, std::size_t j, Scalar value) {
  require_same_field(field_, value.field());
  entries_[i * cols_ + j] = std::move(value);
}

Vector FieldMatrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = at(i, j);
  return t;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

FieldMatrix FieldMatrix::row_block(std::size_t row0, std::size_t n) const {
  if (row0 + n > rows_) throw PreconditionError("row block out of range");
  std::vector<Scalar> e(entries_.begin() + static_cast<std::ptrdiff_t>(row0 * cols_),
                        entries_.begin() + static_cast<std::ptrdiff_t>((row0 + n) * cols_));
  return FieldMatrix(field_, n, cols_, std::move(e));
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& top, const FieldMatrix& bottom) {
  require_same_field(top.field_, bottom.field_);
  if (top.cols_ != bottom.cols_) throw PreconditionError("vstack: column counts differ");
  std::vector<Scalar> e = top.entries_;
  e.insert(e.end(), bottom.entries_.begin(), bottom.entries_.end());
  return FieldMatrix(top.field_, top.rows_ + bottom.rows_, top.cols_, std::move(e));
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product: inner dimensions differ");
  FieldMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.entries_[i * b.cols_ + j] += aik * b.at(k, j);
    }
  return out;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum: shapes differ");
  FieldMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  return a + b.scaled(Scalar(b.field(), -1));
}

FieldMatrix FieldMatrix::scaled(const Scalar& c) const {
  FieldMatrix out = *this;
  for (auto& e : out.entries_) e *= c;
  return out;
}

Vector FieldMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector product: size mismatch");
  Vector out(rows_, Scalar(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool operator==(const FieldMatrix& a, const FieldMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.entries_ == b.entries_;
}

namespace {

std::size_t rank_mod_p(const FieldMatrix& m) {
  const std::uint32_t p = m.field().prime;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = m.entries()[k].residue();

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    const std::uint32_t inv = modp::inv(a[rank * cols + c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      std::uint32_t f = a[i * cols + c];
      if (f == 0) continue;
      f = modp::mul(f, inv, p);
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = modp::sub(a[i * cols + j], modp::mul(f, a[rank * cols + j], p), p);
    }
    ++rank;
  }
  return rank;
}

// Bareiss elimination on the integer matrix obtained by clearing each row's
// denominators. Every intermediate entry is a minor of the input, so the
// divisions by the previous pivot are exact.
std::size_t rank_rational(const FieldMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class& den = m.at(i, j).rational().get_den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      a[i * cols + j] = q.get_num() * (l / q.get_den());
    }
  }

  mpz_class prev = 1, tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < cols; ++j) swap(a[piv * cols + j], a[rank * cols + j]);
    const mpz_class& pivot = a[rank * cols + c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      mpz_class f = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& e = a[i * cols + j];
        const mpz_class& top = a[rank * cols + j];
        if (sgn(f) == 0) {
          if (sgn(e) == 0) continue;
          e *= pivot;
        } else {
          tmp = f * top;
          e *= pivot;
          e -= tmp;
        }
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
      }
      a[i * cols + c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t matrix_rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m.field().is_prime() ? rank_mod_p(m) : rank_rational(m);
}

FieldMatrix rref(const FieldMatrix& m, std::vector<std::size_t>* pivots) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Scalar> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return a[i * cols + j]; };
  std::vector<std::size_t> piv_cols;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const Scalar inv = at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      const Scalar f = at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!at(r, j).is_zero()) at(i, j) -= f * at(r, j);
    }
    piv_cols.push_back(c);
    ++r;
  }
  if (pivots != nullptr) *pivots = std::move(piv_cols);
  return FieldMatrix(m.field(), rows, cols, std::move(a));
}

std::vector<Vector> kernel_basis(const FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  const FieldMatrix e = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(m.field()));
    v[free] = Scalar(m.field(), 1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -e.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (rows[i].size() != m.cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Row Hermite normal form with entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntRows hermite_rows(IntRows a, std::size_t cols) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < a.size(); ++c) {
    std::size_t piv = a.size();
    for (std::size_t i = top; i < a.size(); ++i)
      if (sgn(a[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[top], a[piv]);
    for (std::size_t i = top + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[top][c].get_mpz_t(), a[i][c].get_mpz_t());
      const mpz_class u = a[top][c] / g, v = a[i][c] / g;
      for (std::size_t k = c; k < cols; ++k) {
        const mpz_class x = a[top][k], y = a[i][k];
        a[top][k] = s * x + t * y;
        a[i][k] = u * y - v * x;
      }
    }
    if (sgn(a[top][c]) < 0)
      for (std::size_t k = c; k < cols; ++k) a[top][k] = -a[top][k];
    for (std::size_t i = 0; i < top; ++i) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][c].get_mpz_t(), a[top][c].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= q * a[top][k];
    }
    ++top;
  }
  a.resize(top);
  return a;
}

IntRows transpose_rows(const IntRows& a, std::size_t cols) {
  IntRows t(cols, std::vector<mpz_class>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  return t;
}

bool is_diagonal(const IntRows& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (i != j && sgn(a[i][j]) != 0) return false;
  return true;
}

}  // namespace

LatticeReport hnf_rank(const IntMatrix& input) {
  IntRows a(input.rows, std::vector<mpz_class>(input.cols));
  for (std::size_t i = 0; i < input.rows; ++i)
    for (std::size_t j = 0; j < input.cols; ++j) a[i][j] = input.at(i, j);

  a = hermite_rows(std::move(a), input.cols);
  LatticeReport report;
  report.rank = a.size();
  // alternate row and column Hermite forms until diagonal
  std::size_t cols = input.cols;
  while (!is_diagonal(a)) {
    a = hermite_rows(transpose_rows(a, cols), a.size());
    cols = a.empty() ? 0 : a[0].size();
  }
  for (std::size_t i = 0; i < a.size(); ++i) report.divisors.push_back(abs(a[i][i]));
  // diagonal to Smith form: (a, b) -> (gcd, lcm) until each divides the next
  auto& d = report.divisors;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return report;
}

}  // namespace p1kit
