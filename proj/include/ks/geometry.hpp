#pragma once

#include <array>

#include "ks/poly.hpp"

namespace ks {

// a*d/dx + b*d/dy + c*d/dt with polynomial coefficients in (x, y, t).
struct FirstOrderOp {
  Poly a, b, c;

  bool operator==(const FirstOrderOp&) const = default;
};

namespace h1 {

// Left-invariant frame.
FirstOrderOp X();  // d/dx + 2y d/dt
FirstOrderOp Y();  // d/dy - 2x d/dt
FirstOrderOp T();  // d/dt
// Right-invariant counterparts.
FirstOrderOp Xt();  // d/dx - 2y d/dt
FirstOrderOp Yt();  // d/dy + 2x d/dt

}  // namespace h1

// Jets and parameters in e are constants for F.
Poly apply_field(const FirstOrderOp& F, const Poly& e);

// X^2 + Y^2.
Poly kohn_laplace(const Poly& e);

// Expanded form e_xx + e_yy + 4(x^2+y^2)e_tt + 4y e_xt - 4x e_yt.
Poly kohn_laplace_expanded(const Poly& e);

// [F, G] computed on coefficients. Throws std::invalid_argument if a
// coefficient involves u or jets, and std::logic_error if the composed
// operator F∘G - G∘F keeps a second-order part.
FirstOrderOp commutator(const FirstOrderOp& F, const FirstOrderOp& G);

using H1Point = std::array<Rat, 3>;

// (x,y,t)(x',y',t') = (x+x', y+y', t+t'+2(y x' - x y')).
H1Point group_mul(const H1Point& p, const H1Point& q);
H1Point group_inverse(const H1Point& p);

// e ∘ L_a: substitutes the left translate a·(x,y,t) into e.
Poly left_translate(const Poly& e, const H1Point& a);

}  // namespace ks
