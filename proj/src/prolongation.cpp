#include "ks/prolongation.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>

namespace ks {

const Poly& VField::operator[](Fn f) const {
  switch (f) {
    case Fn::Xi: return xi;
    case Fn::Phi: return phi;
    case Fn::Tau: return tau;
    case Fn::Alpha: return alpha;
    case Fn::Beta: return beta;
  }
  throw std::logic_error("bad Fn");
}

Poly& VField::operator[](Fn f) { return const_cast<Poly&>(static_cast<const VField&>(*this)[f]); }

bool VField::well_formed() const {
  auto bad = [](Var v) { return v.kind() == Var::Kind::Dependent || v.kind() == Var::Kind::Jet; };
  for (Fn f : kFns)
    if ((*this)[f].any_var(bad)) return false;
  return true;
}

bool VField::is_zero() const {
  for (Fn f : kFns)
    if (!(*this)[f].is_zero()) return false;
  return true;
}

VField& VField::operator+=(const VField& o) {
  for (Fn f : kFns) (*this)[f] += o[f];
  return *this;
}

VField& VField::operator-=(const VField& o) {
  for (Fn f : kFns) (*this)[f] -= o[f];
  return *this;
}

VField operator*(const Poly& c, const VField& v) {
  VField out;
  for (Fn f : kFns) out[f] = c * v[f];
  return out;
}

VField symbolic_vfield() {
  VField S;
  for (Fn f : kFns) S[f] = Poly(var::fn(f));
  return S;
}

Poly coordinate_derivative(const Poly& e, Axis a) {
  Poly out = partial(e, var::coordinate(a));
  // collect the distinct unknown-function symbols first
  std::vector<Var> symbols;
  for (const auto& [m, c] : e.terms())
    for (const auto& [v, d] : m.factors())
      if (v.kind() == Var::Kind::FnDeriv) symbols.push_back(v);
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  for (Var v : symbols) {
    auto [f, idx] = *v.fn_deriv();
    out += partial(e, v) * Poly(var::fn(f, bump(idx, a)));
  }
  return out;
}

Poly total_derivative(const Poly& e, Axis a) {
  using namespace var;
  for (Var j : {u_xx, u_xy, u_xt, u_yy, u_yt, u_tt})
    if (e.depends_on(j)) throw std::invalid_argument("total_derivative: input contains second-order jets");
  Poly out = coordinate_derivative(e, a);
  out += Poly(jet(a)) * partial(e, u);
  for (Axis b : kAxes) out += Poly(jet(a, b)) * partial(e, jet(b));
  return out;
}

const Poly& Prolonged::operator[](Var jet) const {
  if (jet.kind() != Var::Kind::Jet) throw std::invalid_argument("Prolonged: not a jet variable");
  return coeff[jet.id() - var::u_x.id()];
}

Poly& Prolonged::operator[](Var jet) { return const_cast<Poly&>(static_cast<const Prolonged&>(*this)[jet]); }

namespace {

void require_well_formed(const VField& S) {
  if (!S.well_formed()) throw std::invalid_argument("generator components must not contain u or jets");
}

Poly first_order(const VField& S, Axis i) {
  using namespace var;
  return total_derivative(S.eta(), i) - Poly(u_x) * total_derivative(S.xi, i) -
         Poly(u_y) * total_derivative(S.phi, i) - Poly(u_t) * total_derivative(S.tau, i);
}

Poly second_order(const VField& S, const Poly& eta1_i, Axis i, Axis j) {
  return total_derivative(eta1_i, j) - Poly(var::jet(i, Axis::X)) * total_derivative(S.xi, j) -
         Poly(var::jet(i, Axis::Y)) * total_derivative(S.phi, j) -
         Poly(var::jet(i, Axis::T)) * total_derivative(S.tau, j);
}

}  // namespace

Prolonged prolong2(const VField& S) {
  require_well_formed(S);
  Prolonged P;
  std::array<Poly, 3> eta1;
  for (Axis i : kAxes) {
    eta1[static_cast<int>(i)] = first_order(S, i);
    P[var::jet(i)] = eta1[static_cast<int>(i)];
  }
  for (Axis i : kAxes)
    for (Axis j : kAxes)
      if (static_cast<int>(i) <= static_cast<int>(j))
        P[var::jet(i, j)] = second_order(S, eta1[static_cast<int>(i)], i, j);
  return P;
}

Poly second_order_coefficient(const VField& S, Axis i, Axis j) {
  require_well_formed(S);
  return second_order(S, first_order(S, i), i, j);
}

Prolonged closed_form_eta(const VField& S) {
  require_well_formed(S);
  using namespace var;
  // d(f, "xt") is the partial derivative of f along the listed axes.
  auto d = [](const Poly& f, std::string_view axes) {
    Poly r = f;
    for (char c : axes) r = coordinate_derivative(r, c == 'x' ? Axis::X : c == 'y' ? Axis::Y : Axis::T);
    return r;
  };
  const Poly &xi = S.xi, &phi = S.phi, &tau = S.tau, &al = S.alpha, &be = S.beta;
  const Poly U(u), Ux(u_x), Uy(u_y), Ut(u_t), Uxx(u_xx), Uxy(u_xy), Uxt(u_xt), Uyy(u_yy), Uyt(u_yt), Utt(u_tt);
  const Rat two(2);

  Prolonged P;
  P[u_x] = d(be, "x") + d(al, "x") * U + (al - d(xi, "x")) * Ux - d(phi, "x") * Uy - d(tau, "x") * Ut;
  P[u_y] = d(be, "y") + d(al, "y") * U - d(xi, "y") * Ux + (al - d(phi, "y")) * Uy - d(tau, "y") * Ut;
  P[u_t] = d(be, "t") + d(al, "t") * U - d(xi, "t") * Ux - d(phi, "t") * Uy + (al - d(tau, "t")) * Ut;

  P[u_xx] = d(be, "xx") + d(al, "xx") * U + (two * d(al, "x") - d(xi, "xx")) * Ux - d(phi, "xx") * Uy -
            d(tau, "xx") * Ut + (al - two * d(xi, "x")) * Uxx - two * d(phi, "x") * Uxy -
            two * d(tau, "x") * Uxt;
  P[u_yy] = d(be, "yy") + d(al, "yy") * U - d(xi, "yy") * Ux + (two * d(al, "y") - d(phi, "yy")) * Uy -
            d(tau, "yy") * Ut - two * d(xi, "y") * Uxy + (al - two * d(phi, "y")) * Uyy -
            two * d(tau, "y") * Uyt;
  P[u_tt] = d(be, "tt") + d(al, "tt") * U - d(xi, "tt") * Ux - d(phi, "tt") * Uy +
            (two * d(al, "t") - d(tau, "tt")) * Ut - two * d(xi, "t") * Uxt - two * d(phi, "t") * Uyt +
            (al - two * d(tau, "t")) * Utt;
  P[u_xt] = d(be, "xt") + d(al, "xt") * U + (d(al, "t") - d(xi, "xt")) * Ux - d(phi, "xt") * Uy +
            (d(al, "x") - d(tau, "xt")) * Ut - d(xi, "t") * Uxx - d(phi, "t") * Uxy - d(phi, "x") * Uyt +
            (al - d(xi, "x") - d(tau, "t")) * Uxt - d(tau, "x") * Utt;
  P[u_yt] = d(be, "yt") + d(al, "yt") * U - d(xi, "yt") * Ux + (d(al, "t") - d(phi, "yt")) * Uy +
            (d(al, "y") - d(tau, "yt")) * Ut - d(xi, "y") * Uxt - d(xi, "t") * Uxy - d(phi, "t") * Uyy +
            (al - d(phi, "y") - d(tau, "t")) * Uyt - d(tau, "y") * Utt;
  // eta_xy has no displayed formula; it follows the same pattern as eta_xt.
  P[u_xy] = d(be, "xy") + d(al, "xy") * U + (d(al, "y") - d(xi, "xy")) * Ux +
            (d(al, "x") - d(phi, "xy")) * Uy - d(tau, "xy") * Ut - d(xi, "y") * Uxx +
            (al - d(xi, "x") - d(phi, "y")) * Uxy - d(phi, "x") * Uyy - d(tau, "y") * Uxt -
            d(tau, "x") * Uyt;
  return P;
}

bool jet_linear(const Prolonged& P) {
  for (const Poly& c : P.coeff) {
    if (c.degree(var::u) > 1) return false;
    for (std::uint16_t j = var::u_x.id(); j <= var::u_tt.id(); ++j)
      if (c.degree(Var(j)) > 1) return false;
  }
  return true;
}

}  // namespace ks
