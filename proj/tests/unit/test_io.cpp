#include <doctest.h>

#include "p1kit/errors.hpp"
#include "p1kit/io.hpp"
#include "support.hpp"

using namespace p1kit;

TEST_SUITE("io") {
  TEST_CASE("matrix round trip") {
    Rng rng(31);
    for (const Field& f : {Field::rationals(), Field::prime_field(101)}) {
      FieldMatrix m = test::random_matrix(rng, f, 3, 2);
      if (!f.is_prime()) m.set(0, 0, Scalar::parse(f, "3/2"));
      CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
    const FieldMatrix m = matrix_from_json(R"({"field":"Q","rows":1,"cols":2,"entries":[["-3/6", 4]]})");
    CHECK(m.at(0, 0).to_string() == "-1/2");
    CHECK(m.at(0, 1).to_string() == "4");
  }

  TEST_CASE("pencil round trip") {
    const Pencil p = block_pencil(SplittingType({2, 1, 0}), Field::prime_field(5));
    CHECK(pencil_from_json(pencil_to_json(p)) == p);
    const Pencil e = pencil_from_json(R"({"field":"Q","D":0,"r":2,"A":[],"B":[[],[]]})");
    CHECK(e == Pencil::empty(Field::rationals(), 2));
    const Pencil euler = pencil_from_json(R"({"D":1,"r":1,"A":[["1"],["0"]],"B":[[0],[1]]})");
    CHECK(splitting_type(euler) == SplittingType({1}));
  }

  TEST_CASE("malformed input reports a position") {
    try {
      pencil_from_json(R"({"D":1, "r":1, "A": [[1],[0]] "B": []})");
      FAIL("expected JsonError");
    } catch (const JsonError& e) {
      CHECK(e.position() > 20);
      CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(pencil_from_json(R"({"D":1,"r":1,"A":[[1]],"B":[[0],[1]]})"), JsonError);
    CHECK_THROWS_AS(pencil_from_json(R"({"D":1,"r":1,"A":[["x"],[0]],"B":[[0],[1]]})"), JsonError);
    CHECK_THROWS_AS(pencil_from_json(R"({"field":"Fp:4","D":1,"r":1,"A":[[1],[0]],"B":[[0],[1]]})"), JsonError);
    CHECK_THROWS_AS(matrix_from_json("[1,2]"), JsonError);
  }
}
