#include <doctest.h>

#include "ks/algebra.hpp"
#include "ks/ansatz.hpp"
#include "ks/generators.hpp"
#include "ks/verifier.hpp"
#include "support.hpp"

using namespace ks;

TEST_CASE("brackets of named generators") {
  CHECK(bracket(gen::T(), gen::R()).is_zero());
  CHECK(bracket(gen::T(), gen::V1()) == gen::Z1() - gen::Z2());
  CHECK(bracket(gen::Xt(), gen::Yt()) == Poly(4) * gen::T());
  CHECK(bracket(gen::Z2(), gen::W(Poly(var::x))) == gen::W(-Poly(var::x)));
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 20; ++i) {
    VField a = test::random_field(rng, 2), b = test::random_field(rng, 2), c = test::random_field(rng, 2);
    Rat s = test::small_rat(rng);
    CHECK(bracket(a, b) == Poly(-1) * bracket(b, a));
    CHECK(bracket(Poly(s) * a + c, b) == Poly(s) * bracket(a, b) + bracket(c, b));
  }
}

TEST_CASE("structure constants and Jacobi") {
  for (const auto& fc : {FCase::arbitrary(), FCase::power(Poly(1), Poly(3)), FCase::zero(), FCase::exponential(Poly(1)),
                         FCase::linear(Poly(1)), FCase::constant(2)}) {
    INFO(fc.to_string());
    const auto c = classify(fc, 4);
    const auto sc = structure_constants(c.basis);
    CHECK(sc.independent);
    CHECK(sc.closed);
    CHECK(jacobi_check(c.basis));
    for (std::size_t i = 0; i < c.basis.size(); ++i)
      for (std::size_t j = 0; j < c.basis.size(); ++j)
        for (std::size_t k = 0; k < c.basis.size(); ++k) CHECK(sc.at(i, j, k) == -sc.at(j, i, k));
  }
}

TEST_CASE("brackets stay symmetries") {
  const FCase fc = FCase::power(Poly(1), Poly(3));
  const auto c = classify(fc, 4);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    VField a, b;
    for (const auto& S : c.basis.fields) {
      a += Poly(test::small_rat(rng)) * S;
      b += Poly(test::small_rat(rng)) * S;
    }
    CHECK(verify_generator(bracket(a, b), fc).is_symmetry);
  }
}

TEST_CASE("non-closure is reported") {
  AlgebraBasis B;
  B.add("T", gen::T());
  B.add("R", gen::R());
  B.add("W", gen::W(Poly(var::x)));
  // [R, x d/du] = y d/du is outside the span
  const auto sc = structure_constants(B);
  CHECK_FALSE(sc.closed);
  REQUIRE(sc.leaks.size() == 1);
  CHECK(sc.leaks[0].bracket == gen::W(Poly(var::y)));
  AlgebraBasis one;
  one.add("T", gen::T());
  CHECK(jacobi_check(one));
  AlgebraBasis dup;
  dup.add("T", gen::T());
  dup.add("2T", Poly(2) * gen::T());
  CHECK_FALSE(linearly_independent(dup));
}
