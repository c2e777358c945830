#include "ks/geometry.hpp"

#include <stdexcept>

namespace ks {
namespace h1 {

FirstOrderOp X() { return {Poly(1), Poly(), Poly(var::y) * Rat(2)}; }
FirstOrderOp Y() { return {Poly(), Poly(1), Poly(var::x) * Rat(-2)}; }
FirstOrderOp T() { return {Poly(), Poly(), Poly(1)}; }
FirstOrderOp Xt() { return {Poly(1), Poly(), Poly(var::y) * Rat(-2)}; }
FirstOrderOp Yt() { return {Poly(), Poly(1), Poly(var::x) * Rat(2)}; }

}  // namespace h1

Poly apply_field(const FirstOrderOp& F, const Poly& e) {
  return F.a * partial(e, var::x) + F.b * partial(e, var::y) + F.c * partial(e, var::t);
}

Poly kohn_laplace(const Poly& e) {
  const auto X = h1::X(), Y = h1::Y();
  return apply_field(X, apply_field(X, e)) + apply_field(Y, apply_field(Y, e));
}

Poly kohn_laplace_expanded(const Poly& e) {
  using namespace var;
  Poly rho = Poly(x) * Poly(x) + Poly(y) * Poly(y);
  return partial(partial(e, x), x) + partial(partial(e, y), y) +
         Rat(4) * rho * partial(partial(e, t), t) + Rat(4) * Poly(y) * partial(partial(e, x), t) -
         Rat(4) * Poly(x) * partial(partial(e, y), t);
}

namespace {

bool coordinate_only(const FirstOrderOp& F) {
  auto bad = [](Var v) { return v.kind() == Var::Kind::Dependent || v.kind() == Var::Kind::Jet; };
  return !F.a.any_var(bad) && !F.b.any_var(bad) && !F.c.any_var(bad);
}

}  // namespace

FirstOrderOp commutator(const FirstOrderOp& F, const FirstOrderOp& G) {
  if (!coordinate_only(F) || !coordinate_only(G))
    throw std::invalid_argument("commutator: coefficients must be free of u and jets");
  FirstOrderOp out{apply_field(F, G.a) - apply_field(G, F.a), apply_field(F, G.b) - apply_field(G, F.b),
                   apply_field(F, G.c) - apply_field(G, F.c)};
  // The composed difference must agree with the first-order result on
  // quadratic probes, which detects any surviving second-order part.
  const std::array<Var, 3> c{var::x, var::y, var::t};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly probe = Poly(c[i]) * Poly(c[j]);
      Poly composed = apply_field(F, apply_field(G, probe)) - apply_field(G, apply_field(F, probe));
      if (composed != apply_field(out, probe))
        throw std::logic_error("commutator: second-order terms do not cancel");
    }
  return out;
}

H1Point group_mul(const H1Point& p, const H1Point& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2] + 2 * (p[1] * q[0] - p[0] * q[1])};
}

H1Point group_inverse(const H1Point& p) { return {-p[0], -p[1], -p[2]}; }

Poly left_translate(const Poly& e, const H1Point& a) {
  using namespace var;
  // a·(x, y, t) = (a0 + x, a1 + y, a2 + t + 2(a1 x - a0 y))
  Poly nx = Poly(a[0]) + Poly(x);
  Poly ny = Poly(a[1]) + Poly(y);
  Poly nt = Poly(a[2]) + Poly(t) + Rat(2) * (Rat(a[1]) * Poly(x) - Rat(a[0]) * Poly(y));
  return substitute(e, std::map<Var, Poly>{{x, nx}, {y, ny}, {t, nt}});
}

}  // namespace ks
