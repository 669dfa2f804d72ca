#include <doctest.h>

#include "p1kit/stromme.hpp"
#include "support.hpp"

using namespace p1kit;

namespace {
const Field kQ = Field::rationals();

KroneckerPair pair(const Field& f, std::vector<std::vector<long>> alpha, std::vector<std::vector<long>> j) {
  return {FieldMatrix::from_rows(f, alpha), FieldMatrix::from_rows(f, j)};
}
}  // namespace

TEST_SUITE("stromme") {
  TEST_CASE("assemble examples") {
    const Pencil p = assemble_from_kronecker(pair(kQ, {{0}}, {{1}}));
    CHECK(p == block_pencil(SplittingType({1}), kQ));
    CHECK(splitting_type(p) == SplittingType({1}));

    CHECK_FALSE(full_rank_everywhere(assemble_from_kronecker(pair(kQ, {{3}}, {{0}}))));

    const Pencil two = assemble_from_kronecker(pair(kQ, {{0, 0}, {0, 0}}, {{1, 0}, {0, 1}}));
    CHECK(splitting_type(two) == SplittingType({1, 1}));

    CHECK_THROWS(assemble_from_kronecker(pair(kQ, {{0, 0}}, {{1, 0}})));
  }

  TEST_CASE("standard at infinity") {
    Rng rng(1);
    const Field f = Field::prime_field(101);
    const KroneckerPair k{test::random_matrix(rng, f, 3, 3), test::random_matrix(rng, f, 2, 3)};
    const Pencil p = assemble_from_kronecker(k);
    CHECK(is_standard_at_infinity(p));
    CHECK(is_standard_at_infinity(block_pencil(SplittingType({1}), kQ)));
    CHECK_FALSE(is_standard_at_infinity(random_equivalent(p, 3)));
    CHECK(is_standard_at_infinity(block_pencil(SplittingType({2}), kQ)));
    CHECK_FALSE(is_standard_at_infinity(block_pencil(SplittingType({2, 1}), kQ)));
  }

  TEST_CASE("extract and assemble are inverse") {
    const Pencil p(FieldMatrix::from_rows(kQ, {{1}, {0}}), FieldMatrix::from_rows(kQ, {{-2}, {3}}));  // (x - 2y; 3y)
    const KroneckerPair k = kronecker_from_standard(p);
    CHECK(k.alpha == FieldMatrix::from_rows(kQ, {{2}}));
    CHECK(k.j == FieldMatrix::from_rows(kQ, {{3}}));
    CHECK(kronecker_from_standard(block_pencil(SplittingType({1}), kQ)) == pair(kQ, {{0}}, {{1}}));

    Rng rng(2);
    for (const Field& f : {kQ, Field::prime_field(5)}) {
      for (int t = 0; t < 30; ++t) {
        const auto D = static_cast<std::size_t>(rng.between(0, 4)), r = static_cast<std::size_t>(rng.between(1, 3));
        const KroneckerPair kk{test::random_matrix(rng, f, D, D), test::random_matrix(rng, f, r, D)};
        CHECK(kronecker_from_standard(assemble_from_kronecker(kk)) == kk);
        const Pencil pp = assemble_from_kronecker(kk);
        CHECK(assemble_from_kronecker(kronecker_from_standard(pp)) == pp);
      }
    }
    CHECK_THROWS_AS(kronecker_from_standard(block_pencil(SplittingType({2, 1}), kQ)), PreconditionError);
  }

  TEST_CASE("forward resolution examples") {
    const Pencil r11 = forward_resolution(block_pencil(SplittingType({1, 1}), kQ));
    CHECK(r11.target_rank() == 4);
    CHECK(r11.source_rank() == 2);
    CHECK(splitting_type(r11) == SplittingType({1, 1}));

    const Pencil r2 = forward_resolution(block_pencil(SplittingType({2}), kQ));
    CHECK(r2.target_rank() == 3);
    CHECK(r2.source_rank() == 2);
    CHECK(splitting_type(r2) == SplittingType({2}));

    const Pencil r0 = forward_resolution(Pencil::empty(kQ, 3));
    CHECK(r0.source_rank() == 0);
    CHECK(r0.target_rank() == 3);
  }

  TEST_CASE("round trip on random pencils, composite vanishes") {
    Rng rng(17);
    for (const Field& f : {Field::prime_field(5), Field::prime_field(101), kQ}) {
      for (int t = 0; t < 15; ++t) {
        const Pencil p = random_equivalent(
            test::random_full_rank(rng, f, static_cast<std::size_t>(rng.between(1, 4)), static_cast<std::size_t>(rng.between(1, 3))),
            rng.next());
        const Pencil res = forward_resolution(p);
        CHECK(splitting_type(res) == splitting_type(p));
        CHECK(composite_vanishes(p, res));
        CHECK(res.source_rank() == p.source_rank());
        CHECK(res.cokernel_rank() == p.cokernel_rank());
      }
    }
  }

  TEST_CASE("dimension law for Kronecker data with twist m") {
    // D = d + m r; E(-m) has rank r and degree d.
    Rng rng(23);
    const Field f = Field::prime_field(101);
    for (long r = 1; r <= 3; ++r)
      for (long m = 1; m <= 2; ++m)
        for (long d = 0; d <= 2; ++d) {
          const auto D = static_cast<std::size_t>(d + m * r);
          for (;;) {
            const KroneckerPair k{test::random_matrix(rng, f, D, D), test::random_matrix(rng, f, static_cast<std::size_t>(r), D),
                                  static_cast<int>(m)};
            const Pencil p = assemble_from_kronecker(k);
            if (!full_rank_everywhere(p)) continue;
            const SplittingType e = splitting_type(p).twist(-m);
            CHECK(static_cast<long>(e.rank()) == r);
            CHECK(e.degree() == d);
            break;
          }
        }
  }
}
