#include <doctest.h>

#include "p1kit/conn.hpp"
#include "p1kit/errors.hpp"
#include "p1kit/random.hpp"

using namespace p1kit;

namespace {
ConnExpr A(ConnAtom a) { return ConnExpr::atom(a); }
}  // namespace

TEST_SUITE("conn_ledger") {
  TEST_CASE("atom levels") {
    CHECK(ConnAtom::affine_bundle(5).level().is_infinite());
    CHECK(ConnAtom::open_complement(4).level() == Level::of(3));
    CHECK(ConnAtom::declared(7).level() == Level::of(7));
    CHECK_THROWS_AS(ConnAtom::open_complement(0), PreconditionError);
    CHECK(Level::of(1000) < Level::infinity());
    CHECK(Level::infinity().to_string() == "inf");
  }

  TEST_CASE("eval_level examples") {
    CHECK(eval_level(A(ConnAtom::affine_bundle(5))).is_infinite());
    const std::uint64_t n = 3;
    CHECK(eval_level(ConnExpr::compose({A(ConnAtom::open_complement(n + 1)), A(ConnAtom::affine_bundle(n + 1))})) ==
          Level::of(3));
    CHECK(eval_level(ConnExpr::two_of_three(A(ConnAtom::declared(4)), A(ConnAtom::declared(7)))) == Level::of(4));
    CHECK(eval_level(ConnExpr::compose({})).is_infinite());
  }

  TEST_CASE("fibered product") {
    CHECK(fibered_product_level(Level::of(3), Level::of(5)) == Level::of(3));
    CHECK(fibered_product_level(Level::of(4), Level::infinity()) == Level::of(4));
    CHECK(fibered_product_level(Level::of(2), Level::of(2)) == Level::of(2));
  }

  TEST_CASE("eval_level is monotone in each atom") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
      std::vector<ConnAtom> atoms;
      for (long i = rng.between(1, 5); i > 0; --i) {
        switch (rng.below(3)) {
          case 0: atoms.push_back(ConnAtom::affine_bundle(rng.below(6))); break;
          case 1: atoms.push_back(ConnAtom::open_complement(1 + rng.below(8))); break;
          default: atoms.push_back(ConnAtom::declared(rng.below(8))); break;
        }
      }
      auto build = [](const std::vector<ConnAtom>& v) {
        std::vector<ConnExpr> parts;
        for (const auto& a : v) parts.push_back(ConnExpr::atom(a));
        return ConnExpr::compose(std::move(parts));
      };
      const Level before = eval_level(build(atoms));
      auto weaker = atoms;
      const std::size_t i = rng.below(weaker.size());
      const Level li = weaker[i].level();
      const std::uint64_t lower = li.is_infinite() ? rng.below(8) : (li.value() == 0 ? 0 : rng.below(li.value() + 1));
      weaker[i] = ConnAtom::declared(lower);
      CHECK(eval_level(build(weaker)) <= before);
    }
  }

  TEST_CASE("pullback only for nicely-connected atoms") {
    CHECK(pullback(ConnAtom::affine_bundle(2)).level().is_infinite());
    CHECK(pullback(ConnAtom::declared(3, true)).level() == Level::of(3));
    CHECK_THROWS_AS(pullback(ConnAtom::declared(3)), PreconditionError);
  }

  TEST_CASE("Cauchy and WHE predicates") {
    CHECK(check_cauchy(LadderSeq::affine(1, 0)));
    CHECK_FALSE(check_cauchy(LadderSeq::constant(7)));
    for (long r = 1; r <= 4; ++r)
      for (long d = 0; d <= 3; ++d)
        for (long m = 1; m <= 3; ++m) CHECK(check_cauchy(LadderSeq::affine(m, d + m * r)));
    CHECK(check_whe(LadderSeq::affine(1, 0)));
    CHECK_FALSE(check_whe(LadderSeq::constant(0)));
    for (long r = 1; r <= 4; ++r) CHECK(check_whe(LadderSeq::affine(1, r - 1)));
    CHECK_FALSE(check_cauchy(LadderSeq::prefix_then_slope({0, 5, 2}, 1)));
    CHECK(LadderSeq::prefix_then_slope({0, 2, 3}, 2).at(5) == 9);
    CHECK(LadderSeq::prefix_then_constant({1, 4}).at(10) == 4);
  }

  TEST_CASE("grid edges") {
    auto g = grid_edge_levels(2, 0, 1, 0);
    CHECK(g.horizontal == 1);
    CHECK(g.vertical == 2);
    CHECK(g.hypothesis_ok);
    g = grid_edge_levels(1, 0, 1, 0);
    CHECK(g.horizontal == 0);
    CHECK(g.vertical == 1);
    g = grid_edge_levels(2, 0, 1, 5);
    CHECK(g.horizontal == 6);
    CHECK(g.vertical == 7);
    CHECK_FALSE(grid_edge_levels(3, 0, 0, 2).hypothesis_ok);
  }

  TEST_CASE("p-final") {
    CHECK(verify_p_final(LadderSeq::affine(1, 0), LadderSeq::constant(1)).passed);
    CHECK_FALSE(verify_p_final(LadderSeq::constant(3), LadderSeq::affine(1, 1)).passed);
    CHECK(verify_p_final(LadderSeq::affine(1, 0), LadderSeq::affine(1, 1)).passed);
    // constant b is allowed
    const auto rep = verify_p_final(LadderSeq::affine(1, 0), LadderSeq::constant(4), 2, 1);
    CHECK(rep.ladder_unbounded);
    CHECK_THROWS_AS(verify_p_final(LadderSeq::affine(-1, 5), LadderSeq::constant(1)), PreconditionError);
    CHECK_THROWS_AS(verify_p_final(LadderSeq::affine(1, 0), LadderSeq::constant(0)), PreconditionError);
  }

  TEST_CASE("claim2 codimension") {
    CHECK(claim2_codim(1, 0, 1) == 4);
    CHECK(claim2_codim(2, 0, 1) == 6);
    CHECK(claim2_codim(2, 1, 1) == 7);
    for (long r = 1; r <= 6; ++r)
      for (long d = 0; d <= 5; ++d)
        for (long m = 0; m <= 5; ++m) CHECK(claim2_codim(r, d, m) == static_cast<std::uint64_t>(m * (r + 1) + d + m * r + 1));
  }

  TEST_CASE("presets") {
    const auto bgl = replay_preset("claimBGL", 3);
    REQUIRE_FALSE(bgl.empty());
    CHECK(bgl.front().derived == "3-conn");
    CHECK(bgl.front().claimed == "3-conn");
    for (const char* p : {"claimBGL", "gs1", "gs2", "grid", "p-final"})
      for (const auto& l : replay_preset(p)) CHECK((l.pass || l.flagged));
    CHECK_THROWS_AS(replay_preset("nope"), PreconditionError);
  }
}
