#include <doctest.h>

#include "ks/determining.hpp"
#include "ks/generators.hpp"

using namespace ks;

TEST_CASE("derived determining equations match the transcription") {
  const DetSystem derived = derive_determining();
  const DetSystem written = transcribed_determining();
  REQUIRE(derived.equations.size() == 9);
  for (const auto& [label, eq] : written.equations) {
    INFO(label << ": " << derived.at(label).to_string() << "  vs  " << eq.to_string());
    CHECK(derived.at(label) == eq);
  }
}

TEST_CASE("jet coefficients before normalisation") {
  const DetSystem s = derive_determining();
  // u_xy coefficient is -2 * E2
  LinDet uxy = Rat(-2) * s.at("E2");
  LinDet expect = op::d(Fn::Phi, {1, 0, 0}, -2) + op::d(Fn::Xi, {0, 1, 0}, -2) +
                  op::d(Fn::Phi, {0, 0, 1}, Rat(-4) * Poly(var::y)) + op::d(Fn::Xi, {0, 0, 1}, Rat(4) * Poly(var::x));
  CHECK(uxy == expect);
}

TEST_CASE("dependent equations") {
  const DetSystem s = derive_determining();
  auto r = check_dependencies(s);
  // multipliers -x, -y on E1, E2 do not close
  CHECK_FALSE(r.literal_relation_holds());
  REQUIRE(r.e9_combination);
  CHECK(r.e9_combination->evaluate(s) == s.at("E9"));
  LinDet fixed = Poly(var::y) * s.at("E7") + Poly(var::x) * s.at("E8") -
                 Rat(2) * Poly(var::x) * Poly(var::x) * s.at("E1") -
                 Rat(2) * Poly(var::x) * Poly(var::y) * s.at("E2");
  CHECK(fixed == s.at("E9"));
  CHECK_FALSE(r.e5_from_first_order_only);
  REQUIRE(r.e5_combination);
  CHECK(r.e5_combination->evaluate(s) == s.at("E5"));
  MESSAGE("E5 = " << r.e5_combination->to_string());
}

TEST_CASE("perturbed system leaves a residual") {
  DetSystem s = derive_determining();
  DetSystem bad;
  for (auto [l, e] : s.equations) bad.add(l, l == "E9" ? e + op::d(Fn::Xi, {0, 0, 0}) : e);
  auto r = check_dependencies(bad);
  CHECK_FALSE(r.e9_combination);
  CHECK_FALSE(r.relation_residual.is_zero());
}

TEST_CASE("reduced system follows from the nine") {
  const DetSystem nine = derive_determining();
  for (const auto& [label, comb] : reduced_from_nine(nine)) {
    INFO(label);
    REQUIRE(comb);
    CHECK(comb->evaluate(nine) == reduced_system().at(label));
  }
  const DetSystem red = reduced_system();
  CHECK(red.at("R1") == nine.at("E1"));
  CHECK(red.at("R6") == Rat(-1) * nine.at("E7"));
}

TEST_CASE("consequence identities") {
  CHECK(check_consequences(gen::V2()).all());
  CHECK(check_consequences(gen::T()).all());
  VField S;
  S.xi = Poly(var::t);
  auto r = check_consequences(S);
  std::map<std::string, bool> got(r.checks.begin(), r.checks.end());
  CHECK_FALSE(got["lap phi = 4 xi_t"]);
  CHECK(got["lap xi = -4 phi_t"]);
  CHECK(got["X alpha = -2 phi_t"]);
  CHECK_FALSE(got["Y alpha = 2 xi_t"]);
  CHECK_FALSE(got["tau_t = 2y xi_t - 2x phi_t + 2 X xi"]);
  CHECK(got["alpha_t = -(X xi)_t"]);
}

TEST_CASE("applying an equation to a generator") {
  const DetSystem s = derive_determining();
  for (const auto& [name, S] : gen::known_family(FCase::zero()))
    for (const auto& [label, eq] : s.equations) {
      INFO(name << " " << label);
      CHECK(eq.apply(S, FCase::zero()).is_zero());
    }
  VField S;
  S.xi = Poly(var::t);
  CHECK_FALSE(s.at("E1").apply(S, FCase::arbitrary()).is_zero());
}

TEST_CASE("duplicate labels rejected") {
  DetSystem s;
  s.add("a", LinDet());
  CHECK_THROWS_AS(s.add("a", LinDet()), std::invalid_argument);
}
