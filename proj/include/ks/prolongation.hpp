#pragma once

#include <array>

#include "ks/poly.hpp"

namespace ks {

// Point generator xi d/dx + phi d/dy + tau d/dt + (alpha u + beta) d/du.
// Components are polynomials in (x, y, t), optionally with parameters or
// unknown-function symbols; never u or jets.
struct VField {
  Poly xi, phi, tau, alpha, beta;

  const Poly& operator[](Fn f) const;
  Poly& operator[](Fn f);

  Poly eta() const { return alpha * Poly(var::u) + beta; }
  bool well_formed() const;
  bool is_zero() const;

  VField& operator+=(const VField& o);
  VField& operator-=(const VField& o);
  friend VField operator+(VField a, const VField& b) { return a += b; }
  friend VField operator-(VField a, const VField& b) { return a -= b; }
  friend VField operator*(const Poly& c, const VField& v);
  bool operator==(const VField&) const = default;
};

// Generic field whose components are the unknown-function symbols
// xi(x,y,t), ..., beta(x,y,t).
VField symbolic_vfield();

// d/dx_i treating unknown-function symbols as functions of (x, y, t):
// d(xi_m)/dx_i = xi_{m + e_i}.
Poly coordinate_derivative(const Poly& e, Axis a);

// D_i e = d_i e + u_i e_u + sum_j u_ij e_{u_j}. Throws std::invalid_argument
// if e already contains second-order jets.
Poly total_derivative(const Poly& e, Axis a);

// Coefficients of the second prolongation, indexed like the jets.
struct Prolonged {
  std::array<Poly, 9> coeff;  // u_x, u_y, u_t, u_xx, u_xy, u_xt, u_yy, u_yt, u_tt

  const Poly& operator[](Var jet) const;
  Poly& operator[](Var jet);
  bool operator==(const Prolonged&) const = default;
};

Prolonged prolong2(const VField& S);

// eta^(2)_{ij} computed as D_j(eta^(1)_i) - u_{ix} D_j xi - u_{iy} D_j phi
// - u_{it} D_j tau, without symmetrising i and j.
Poly second_order_coefficient(const VField& S, Axis i, Axis j);

// The nine prolongation coefficients written out in closed form for
// eta = alpha u + beta with (xi, phi, tau) independent of u.
Prolonged closed_form_eta(const VField& S);

// Every coefficient has degree <= 1 in u and in each jet.
bool jet_linear(const Prolonged& P);

}  // namespace ks
