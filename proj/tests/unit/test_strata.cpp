#include <doctest.h>

#include "oracle.hpp"
#include "p1kit/strata.hpp"
#include "p1kit/random.hpp"

using namespace p1kit;

namespace {

GradedPoly gen(unsigned r, unsigned i) { return GradedPoly::generator(r, i); }

bool same(const GradedPoly& p, const oracle::Poly& o) {
  oracle::Poly mine;
  for (const auto& [mono, c] : p.terms()) mine[mono.exponents] = c;
  return mine == o;
}

}  // namespace

TEST_SUITE("strata") {
  TEST_CASE("h1_end examples") {
    CHECK(h1_end(SplittingType({2, 2, 2})) == 0);
    CHECK(h1_end(SplittingType({-1, 1})) == 1);
    CHECK(h1_end(SplittingType({0, 2})) == 1);
    CHECK(h1_end(SplittingType({-3, 0, 3})) == 2 + 5 + 2);
    CHECK(h1_end(SplittingType({1, 0})) == 0);
  }

  TEST_CASE("h1_end is twist invariant and vanishes exactly on balanced types") {
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
      std::vector<long> parts(static_cast<std::size_t>(rng.between(1, 5)));
      for (auto& e : parts) e = rng.between(-4, 4);
      const SplittingType e(parts);
      CHECK(h1_end(e) == h1_end(e.twist(rng.between(-5, 5))));
      CHECK((h1_end(e) == 0) == (e.max_part() - e.min_part() <= 1));
    }
  }

  TEST_CASE("enumeration is lexicographic and complete") {
    const auto types = enumerate_splitting_types(2, 0, 5);
    // (j, -j) has u = 2j - 1
    REQUIRE(types.size() == 4);
    CHECK(types[0] == SplittingType({0, 0}));
    CHECK(types[1] == SplittingType({1, -1}));
    CHECK(types[3] == SplittingType({3, -3}));
    for (const auto& e : enumerate_splitting_types(3, 1, 6)) {
      CHECK(e.degree() == 1);
      CHECK(h1_end(e) <= 6);
    }
  }

  TEST_CASE("codimension theorem examples") {
    auto rep = check_codim_theorem(2, 0, 1);
    CHECK(rep.passed);
    CHECK(rep.minimum == 3);
    CHECK(rep.minimizers == std::vector<SplittingType>{SplittingType({-2, 2})});

    rep = check_codim_theorem(3, 1, 1);
    CHECK(rep.passed);
    CHECK(rep.minimum == 5);

    rep = check_codim_theorem(2, 0, 0);
    CHECK(rep.minimum == 1);
    CHECK(rep.minimizers == std::vector<SplittingType>{SplittingType({-1, 1})});

    rep = check_codim_theorem(1, 3, 2);
    CHECK(rep.vacuous);
    CHECK(rep.passed);
    CHECK_THROWS_AS(check_codim_theorem(2, -3, 1), PreconditionError);
  }

  TEST_CASE("flag Poincare polynomials") {
    CHECK(flag_poincare({3}) == QPoly{1});
    CHECK(flag_poincare({1, 1}, 2) == QPoly{1, 1});
    CHECK(flag_poincare({1, 1, 1}, 3) == QPoly{1, 2, 2, 1});
    CHECK_THROWS_AS(flag_poincare({1, 1}, 3), PreconditionError);
  }

  TEST_CASE("flag Poincare matches inversion counting, is palindromic, evaluates to the multinomial") {
    const std::vector<std::vector<std::size_t>> cases = {{2, 1}, {1, 2, 1}, {3, 2}, {2, 2, 2}, {1, 1, 1, 1}, {4, 1, 2}};
    for (const auto& mults : cases) {
      const QPoly p = flag_poincare(mults);
      CHECK(p == oracle::q_multinomial(mults));
      CHECK(std::equal(p.begin(), p.end(), p.rbegin()));
      std::uint64_t at_one = 0, n = 0, multinomial = 1;
      for (auto c : p) at_one += c;
      for (auto k : mults)
        for (std::size_t i = 1; i <= k; ++i) multinomial = multinomial * ++n / i;
      CHECK(at_one == multinomial);
    }
  }

  TEST_CASE("Betti tables") {
    CHECK(betti_via_strata(2, 0, 6).ranks == std::vector<std::uint64_t>(7, 1));
    CHECK(betti_via_strata(1, 5, 4).ranks == std::vector<std::uint64_t>{1, 0, 0, 0, 0});
    CHECK(betti_via_strata(3, 0, 5).ranks == std::vector<std::uint64_t>{1, 1, 2, 2, 3, 3});
    CHECK(partition_betti(2, 5).ranks == std::vector<std::uint64_t>(6, 1));
    CHECK(partition_betti(3, 4).ranks[4] == 3);
    CHECK(partition_betti(5, 0).ranks == std::vector<std::uint64_t>{1});
    CHECK(subring_betti(2, 4).ranks.ranks == std::vector<std::uint64_t>(5, 1));
    CHECK(subring_betti(3, 4).ranks.ranks == std::vector<std::uint64_t>{1, 1, 2, 2, 3});
    for (std::size_t r = 1; r <= 5; ++r)
      for (std::size_t i = 0; i <= 8; ++i) CHECK(partition_betti(r, 8).ranks[i] == oracle::partitions(i, r - 1));
  }

  TEST_CASE("subring lattice report") {
    const auto rep = subring_betti(3, 3);
    REQUIRE(rep.lattice.size() == 4);
    std::size_t total = 0;
    for (std::size_t i = 1; i <= 2; ++i) total += rep.lattice[i].rank;
    CHECK(total == 3);  // positive weights up to 2
    total += rep.lattice[3].rank;
    CHECK(total == 5);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(rep.lattice[i].rank == rep.ranks.ranks[i]);
  }

  TEST_CASE("Chow generators") {
    CHECK(chow_generators(1, 4).empty());
    for (unsigned r = 2; r <= 5; ++r) CHECK(chow_generators(r, 1)[0] == gen(r, 2));

    const auto c3 = chow_generators(3, 2);
    CHECK(c3[1] == gen(3, 3).scaled(mpq_class(1, 2)) + (gen(3, 2) * gen(3, 2)).scaled(mpq_class(1, 2)));

    const auto c2 = chow_generators(2, 5);
    GradedPoly power = GradedPoly::constant(2, 1);
    mpz_class fact = 1;
    for (unsigned j = 1; j <= 5; ++j) {
      power = power * gen(2, 2);
      fact *= j;
      CHECK(c2[j - 1] == power.scaled(mpq_class(1) / mpq_class(fact)));
    }
  }

  TEST_CASE("Chow generators equal the exp series and are homogeneous") {
    for (std::size_t r = 2; r <= 5; ++r) {
      const auto gens = chow_generators(r, 7);
      const auto series = oracle::exp_series(r, 7);
      for (std::size_t j = 0; j < 7; ++j) {
        CHECK(same(gens[j], series[j]));
        CHECK(gens[j].is_homogeneous(static_cast<std::uint32_t>(j + 1)));
      }
    }
  }
}
