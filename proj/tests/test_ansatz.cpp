#include <doctest.h>

#include "ks/ansatz.hpp"
#include "ks/generators.hpp"
#include "ks/geometry.hpp"
#include "ks/verifier.hpp"

using namespace ks;

namespace {

bool in_kernel(const ExactMatrix& M, const std::vector<Poly>& v) {
  for (const auto& row : M.rows) {
    Poly s;
    for (const auto& [c, e] : row) s += e * v[c];
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ansatz layout") {
  Ansatz A(4);
  CHECK(A.per_component() == 35);
  CHECK(A.size() == 175);
  auto v = A.encode(gen::V1());
  REQUIRE(v);
  CHECK(A.field(*v) == gen::V1());
  CHECK_FALSE(Ansatz(3).encode(gen::V1()));
  // each unknown appears exactly once
  VField G = A.generic();
  std::size_t terms = 0;
  for (Fn f : kFns) terms += G[f].size();
  CHECK(terms == A.size());
}

TEST_CASE("small assemblies") {
  const Kernel K1 = nullspace(assemble(FCase::arbitrary(), 1));
  const Ansatz A1(1);
  ExactMatrix M = assemble(FCase::arbitrary(), 1);
  CHECK(in_kernel(M, *A1.encode(gen::T())));
  CHECK(in_kernel(M, *A1.encode(gen::R())));
  for (const auto& v : K1.basis) CHECK(verify_generator(A1.field(v), FCase::arbitrary()).is_symmetry);
  CHECK(classify(FCase::exponential(Poly(1)), 2).dimension == 5);
}

TEST_CASE("known generators lie in the kernel at degree 4") {
  for (const auto& fc : {FCase::arbitrary(), FCase::zero(), FCase::linear(Poly(1)), FCase::power(Poly(1), Poly(3)),
                         FCase::power(Poly(1), Poly(5)), FCase::exponential(Poly(1)), FCase::constant(-3)}) {
    const ExactMatrix M = assemble(fc, 4);
    for (const auto& [n, S] : gen::known_family(fc)) {
      INFO(fc.to_string() << " " << n);
      CHECK(in_kernel(M, *Ansatz(4).encode(S)));
    }
  }
}

TEST_CASE("classification dimensions at degree 4") {
  const std::vector<std::pair<FCase, std::size_t>> expect{
      {FCase::arbitrary(), 4},
      {FCase::exponential(Poly(var::k)), 5},
      {FCase::power(Poly(1), Poly(5)), 5},
      {FCase::power(Poly(1), Poly(7)), 5},
      {FCase::power(Poly(1), Poly(-1)), 5},
      {FCase::power(Poly(var::k), Poly(3)), 8},
      {FCase::zero(), 9},
      {FCase::linear(Poly(1)), 5},
      {FCase::constant(2), 9},
  };
  for (const auto& [fc, dim] : expect) {
    INFO(fc.to_string());
    const Classification c = classify(fc, 4);
    CHECK(c.dimension == dim);
    CHECK(c.matches_family);
    for (bool ok : c.verified) CHECK(ok);
  }
}

TEST_CASE("classification details") {
  auto p5 = classify(FCase::power(Poly(1), Poly(5)), 4);
  REQUIRE(p5.basis.names.back() == "Z");
  CHECK(p5.basis.fields.back().alpha == Poly(make_rat(-1, 2)));
  auto cst = classify(FCase::constant(2), 4);
  CHECK(cst.pure_beta > 0);
  CHECK(classify(FCase::power(Poly(1), Poly(2)), 4).excluded_exponent);
  // below the degree of V1 the critical case cannot see it
  CHECK(classify(FCase::power(Poly(1), Poly(3)), 3).dimension < 8);
}

TEST_CASE("symbolic exponent") {
  const Classification c = classify(FCase::power(Poly(var::k), Poly(var::p)), 4);
  CHECK(c.dimension == 5);
  CHECK(c.matches_family);
  bool saw3 = false;
  for (const auto& [r, d] : c.branch_points)
    if (r == 3) {
      saw3 = true;
      CHECK(d == std::optional<std::size_t>(8));
    }
  CHECK(saw3);
}

TEST_CASE("beta kernels") {
  auto b1 = beta_kernel(FCase::zero(), 1);
  CHECK(b1.size() == 4);
  auto b2 = beta_kernel(FCase::zero(), 2);
  CHECK(b2.size() == 6);
  for (const auto& b : beta_kernel(FCase::zero(), 4)) {
    CHECK(kohn_laplace(b).is_zero());
    CHECK(verify_generator(gen::W(b), FCase::zero()).is_symmetry);
  }
  // brute force over the degree-2 monomials: harmonic combinations
  const auto monos = coordinate_monomials(2);
  std::size_t harmonic = 0;
  for (const auto& m : monos) harmonic += kohn_laplace(Poly(m)).is_zero();
  CHECK(harmonic == 5);  // 1, x, y, t, x*y; x^2 - y^2 needs a combination
  CHECK(beta_kernel(FCase::linear(Poly(1)), 0).empty());
  for (int d = 0; d <= 4; ++d) CHECK(beta_kernel(FCase::linear(Poly(2)), d).empty());
  CHECK_THROWS_AS(beta_kernel(FCase::arbitrary(), 2), std::invalid_argument);
}

TEST_CASE("constant shift") {
  for (int c : {0, 1, 2, -3}) {
    auto r = constant_shift(c);
    CHECK(r.shift == Rat(make_rat(-c, 2)) * Poly(var::x) * Poly(var::x));
    CHECK(r.residual_constant == 0);
    CHECK(r.matches_stated_sign == (c == 0));
  }
}

TEST_CASE("stability scans") {
  auto a = stability_scan(FCase::arbitrary(), 1, 4);
  CHECK(a.stable);
  for (const auto& [d, n] : a.dimensions) CHECK(n == 4);
  auto e = stability_scan(FCase::exponential(Poly(1)), 1, 4);
  for (const auto& [d, n] : e.dimensions) CHECK(n == 5);
  auto c = stability_scan(FCase::power(Poly(1), Poly(3)), 4, 6);
  for (const auto& [d, n] : c.dimensions) CHECK(n == 8);
  CHECK(stability_scan(FCase::power(Poly(1), Poly(3)), 2, 5).stable);
  CHECK_THROWS_AS(stability_scan(FCase::zero(), 3, 2), std::invalid_argument);
}
