#pragma once

#include "p1kit/matrix.hpp"
#include "p1kit/pencil.hpp"
#include "p1kit/random.hpp"

namespace p1kit::test {

inline FieldMatrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.scalar(f));
  return m;
}

// Low-rank product plus noise-free structure so ranks vary.
inline FieldMatrix random_low_rank(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  const auto k = static_cast<std::size_t>(rng.between(0, static_cast<long>(std::min(rows, cols))));
  return random_matrix(rng, f, rows, k) * random_matrix(rng, f, k, cols);
}

inline BinaryForm random_form(Rng& rng, const Field& f, int degree) {
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rng.scalar(f));
  return BinaryForm(f, std::move(c));
}

inline Pencil random_full_rank(Rng& rng, const Field& f, std::size_t D, std::size_t r) {
  for (;;) {
    Pencil p(random_matrix(rng, f, D + r, D), random_matrix(rng, f, D + r, D));
    if (full_rank_everywhere(p)) return p;
  }
}

inline std::vector<long> parts_of(const SplittingType& e) { return {e.parts().begin(), e.parts().end()}; }

}  // namespace p1kit::test
