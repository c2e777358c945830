#include <doctest.h>

#include "ks/geometry.hpp"
#include "support.hpp"

using namespace ks;

namespace {

FirstOrderOp scaled(Rat c, FirstOrderOp F) {
  F.a *= c;
  F.b *= c;
  F.c *= c;
  return F;
}

const FirstOrderOp kZero{};

H1Point random_point(std::mt19937_64& rng) { return {test::small_rat(rng), test::small_rat(rng), test::small_rat(rng)}; }

}  // namespace

TEST_CASE("frame commutators") {
  using namespace h1;
  CHECK(commutator(X(), Y()) == scaled(-4, T()));
  CHECK(commutator(X(), T()) == kZero);
  CHECK(commutator(Y(), T()) == kZero);
  CHECK(commutator(Xt(), Yt()) == scaled(4, T()));
  CHECK(commutator(X(), Xt()) == kZero);
  CHECK(commutator(X(), Yt()) == kZero);
  CHECK(commutator(Y(), Xt()) == kZero);
  CHECK(commutator(Y(), Yt()) == kZero);
  FirstOrderOp bad{Poly(var::u), Poly(), Poly()};
  CHECK_THROWS_AS(commutator(bad, X()), std::invalid_argument);
}

TEST_CASE("Kohn-Laplacian") {
  using namespace var;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    Poly e = test::random_poly(rng, 4, 6);
    CHECK(kohn_laplace(e) == kohn_laplace_expanded(e));
  }
  CHECK(kohn_laplace(Poly(x) * Poly(x)) == Poly(2));
  CHECK(kohn_laplace(Poly(x) * Poly(y)).is_zero());
  CHECK(kohn_laplace(Poly(t)).is_zero());
  CHECK(kohn_laplace(Poly(t) * Poly(t)) == Rat(8) * (Poly(x) * Poly(x) + Poly(y) * Poly(y)));
}

TEST_CASE("group law") {
  std::mt19937_64 rng(17);
  const H1Point e{0, 0, 0};
  for (int i = 0; i < 100; ++i) {
    H1Point a = random_point(rng), b = random_point(rng), c = random_point(rng);
    CHECK(group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c)));
    CHECK(group_mul(a, group_inverse(a)) == e);
    CHECK(group_mul(e, a) == a);
  }
}

TEST_CASE("left invariance of X and Y") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const H1Point a = random_point(rng);
    const Poly e = test::random_poly(rng, 4, 6);
    for (const auto& F : {h1::X(), h1::Y()}) CHECK(apply_field(F, left_translate(e, a)) == left_translate(apply_field(F, e), a));
    CHECK(kohn_laplace(left_translate(e, a)) == left_translate(kohn_laplace(e), a));
  }
}

TEST_CASE("left translation matches the group law") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 10; ++i) {
    const H1Point a = random_point(rng), q = random_point(rng);
    const Poly e = test::random_poly(rng, 3, 5);
    const auto g = group_mul(a, q);
    auto at = [](const Poly& f, const H1Point& pt) {
      return evaluate(f, {{var::x, pt[0]}, {var::y, pt[1]}, {var::t, pt[2]}});
    };
    CHECK(at(left_translate(e, a), q) == at(e, g));
  }
}

TEST_CASE("frame examples") {
  using namespace var;
  const Poly X_(x), Y_(y), T_(t);
  CHECK(apply_field(h1::X(), Rat(make_rat(1, 2)) * X_ * X_) == X_);
  CHECK(apply_field(h1::Y(), X_ * T_) == Rat(-2) * X_ * X_);
  CHECK(apply_field(h1::X(), T_) == Rat(2) * Y_);
  CHECK(kohn_laplace(Rat(make_rat(1, 2)) * X_ * X_) == Poly(1));
  CHECK(kohn_laplace(X_ * T_) == Rat(4) * Y_);
  CHECK(group_mul({0, 0, 0}, {1, 2, 3}) == H1Point{1, 2, 3});
  CHECK(group_mul({1, 0, 0}, {0, 1, 0}) == H1Point{1, 1, -2});
  CHECK(group_inverse({1, 2, 3}) == H1Point{-1, -2, -3});
}
