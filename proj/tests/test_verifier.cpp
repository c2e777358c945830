#include <doctest.h>

#include "ks/generators.hpp"
#include "ks/verifier.hpp"

using namespace ks;

namespace {

const Poly K(var::k), P(var::p);

std::vector<FCase> all_cases() {
  return {FCase::arbitrary(), FCase::zero(),       FCase::constant(2), FCase::linear(K),
          FCase::power(K, P), FCase::exponential(K)};
}

}  // namespace

TEST_CASE("translations and rotation under every case") {
  for (const auto& fc : all_cases())
    for (const char* n : {"T", "R", "Xt", "Yt"}) {
      INFO(n << " " << fc.to_string());
      CHECK(verify_generator(gen::named(n), fc).is_symmetry);
    }
}

TEST_CASE("listed generators") {
  for (const char* n : {"Z1", "Z2", "V1", "V2", "V3"}) CHECK(verify_generator(gen::named(n), FCase::zero()).is_symmetry);
  CHECK(verify_generator(gen::Z2(), FCase::linear(K)).is_symmetry);
  CHECK(verify_generator(gen::Z_symbolic(), FCase::power(K, P)).is_symmetry);
  const FCase cubic = FCase::power(K, Poly(3));
  for (const char* n : {"Z:3", "V1", "V2", "V3"}) CHECK(verify_generator(gen::named(n), cubic).is_symmetry);
  CHECK(verify_generator(gen::Z3(), FCase::exponential(K)).is_symmetry);
  for (const auto& [n, S] : gen::known_family(FCase::constant(make_rat(-3, 1))))
    CHECK(verify_generator(S, FCase::constant(-3)).is_symmetry);
}

TEST_CASE("non-symmetries are rejected with a certificate") {
  auto v = verify_generator(gen::Z1(), FCase::exponential(Poly(1)));
  CHECK_FALSE(v.is_symmetry);
  REQUIRE(v.certificate.size() == 1);
  CHECK(v.certificate[0].tag == BasisTag::exp_u());
  CHECK(v.certificate[0].coeff == 2);
  CHECK_FALSE(verify_generator(gen::V1(), FCase::power(Poly(1), Poly(5))).is_symmetry);
  CHECK_FALSE(verify_generator(gen::Z2(), FCase::arbitrary()).is_symmetry);
  CHECK_FALSE(verify_generator(gen::Z1(), FCase::power(K, P)).is_symmetry);
  // the unshifted zero-case dilation fails for a constant source
  CHECK_FALSE(verify_generator(gen::Z2(), FCase::constant(2)).is_symmetry);
}

TEST_CASE("Z with concrete exponent") {
  CHECK(gen::Z(5).alpha == Poly(make_rat(-1, 2)));
  for (int p : {-1, 2, 5, 7}) CHECK(verify_generator(gen::Z(p), FCase::power(K, Poly(p))).is_symmetry);
}

TEST_CASE("numeric spot check") {
  CHECK(numeric_spot_check(gen::V2(), FCase::power(Poly(1), Poly(3)), 50, 0));
  CHECK(numeric_spot_check(gen::T(), FCase::zero(), 10, 0));
  VField bad = gen::V2();
  bad.alpha += Poly(1);
  CHECK_FALSE(numeric_spot_check(bad, FCase::power(Poly(1), Poly(3)), 10, 0));
  CHECK_FALSE(numeric_spot_check(gen::V1(), FCase::power(Poly(2), Poly(5)), 10, 4));
  CHECK_THROWS_AS(numeric_spot_check(gen::T(), FCase::exponential(Poly(1)), 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(numeric_spot_check(gen::T(), FCase::power(K, P), 1, 0), std::invalid_argument);
}
