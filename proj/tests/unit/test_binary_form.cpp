#include <doctest.h>

#include "p1kit/binary_form.hpp"
#include "support.hpp"

using namespace p1kit;

namespace {

const Field kQ = Field::rationals();

BinaryForm form(std::vector<long> c) {
  std::vector<Scalar> s;
  for (long v : c) s.emplace_back(kQ, v);
  return BinaryForm(kQ, std::move(s));
}

BinaryForm gcd_of(std::vector<BinaryForm> v) { return binary_form_gcd(v); }

}  // namespace

TEST_SUITE("binary_form") {
  TEST_CASE("zero form is canonical") {
    CHECK(form({0, 0, 0}).is_zero());
    CHECK(form({0, 0, 0}) == BinaryForm::zero(kQ));
    CHECK(BinaryForm::zero(kQ).degree() == -1);
    CHECK(form({0, 1}).degree() == 1);
  }

  TEST_CASE("gcd examples") {
    const BinaryForm x = form({0, 1}), y = form({1, 0});
    CHECK(gcd_of({x, y}).degree() == 0);
    CHECK(gcd_of({x * y, x * x}) == x);
    const BinaryForm l = form({-6, 3});  // 3x - 6y
    CHECK(gcd_of({l}) == form({-2, 1}));
    CHECK(gcd_of({BinaryForm::zero(kQ), y * y}) == y * y);
    CHECK_THROWS_AS(gcd_of({BinaryForm::zero(kQ)}), PreconditionError);
  }

  TEST_CASE("gcd(f h, g h) = h gcd(f, g) up to a unit") {
    for (const Field& f : {Field::rationals(), Field::prime_field(7), Field::prime_field(101)}) {
      Rng rng(99 + f.prime);
      for (int t = 0; t < 100; ++t) {
        const BinaryForm a = test::random_form(rng, f, static_cast<int>(rng.between(0, 3)));
        const BinaryForm b = test::random_form(rng, f, static_cast<int>(rng.between(0, 3)));
        const BinaryForm h = test::random_form(rng, f, static_cast<int>(rng.between(0, 2)));
        if (a.is_zero() || b.is_zero() || h.is_zero()) continue;
        std::vector<BinaryForm> ab{a, b}, abh{a * h, b * h};
        CHECK(binary_form_gcd(abh) == (h * binary_form_gcd(ab)).monic());
      }
    }
  }

  TEST_CASE("valuations and products") {
    const BinaryForm x = form({0, 1}), y = form({1, 0});
    const BinaryForm f = x * x * y * form({1, 1});
    CHECK(f.degree() == 4);
    CHECK(f.x_valuation() == 2);
    CHECK(f.y_valuation() == 1);
    CHECK(form({2, 4}).monic() == form({1, 2}).scaled(Scalar(kQ, 1)).monic());
    CHECK_THROWS(x + x * y);
  }
}
