#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "p1kit/field.hpp"

namespace p1kit {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single field.
class FieldMatrix {
 public:
  explicit FieldMatrix(const Field& field, std::size_t rows = 0, std::size_t cols = 0);
  /// Throws FieldMismatch if an entry is over another field, PreconditionError on a size mismatch.
  FieldMatrix(const Field& field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static FieldMatrix identity(const Field& field, std::size_t n);
  static FieldMatrix from_rows(const Field& field, const std::vector<std::vector<long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Scalar> entries() const { return entries_; }

  const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Scalar value);

  Vector column(std::size_t j) const;
  FieldMatrix transpose() const;
  bool is_zero() const;

  /// Rows [row0, row0+n) as a new matrix.
  FieldMatrix row_block(std::size_t row0, std::size_t n) const;
  /// Stacks `top` over `bottom` (same column count).
  static FieldMatrix vstack(const FieldMatrix& top, const FieldMatrix& bottom);

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
  friend FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
  FieldMatrix scaled(const Scalar& c) const;
  Vector apply(std::span<const Scalar> v) const;

  friend bool operator==(const FieldMatrix& a, const FieldMatrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Rank over the matrix's field: fraction-free (Bareiss) elimination over Q,
/// plain Gaussian elimination over F_p.
std::size_t matrix_rank(const FieldMatrix& m);

/// Basis of the right kernel, read off the reduced row echelon form: one
/// vector per free column (in increasing column order) with a 1 in that
/// column and zeros in the other free columns.
std::vector<Vector> kernel_basis(const FieldMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
FieldMatrix rref(const FieldMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Integer matrix for lattice computations.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  mpz_class& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

struct LatticeReport {
  std::size_t rank = 0;
  /// Nonzero Smith invariants d_1 | d_2 | ... | d_rank, all positive.
  std::vector<mpz_class> divisors;
};

/// Rank and elementary divisors via Smith normal form over Z.
LatticeReport hnf_rank(const IntMatrix& m);

}  // namespace p1kit
