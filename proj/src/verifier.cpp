#include "ks/verifier.hpp"

#include <random>
#include <stdexcept>

namespace ks {

GExpr equation_rhs(const FCase& fc) {
  using namespace var;
  Poly rho = Poly(x) * Poly(x) + Poly(y) * Poly(y);
  Poly L = Poly(u_xx) + Poly(u_yy) + Rat(4) * rho * Poly(u_tt) + Rat(4) * Poly(y) * Poly(u_xt) -
           Rat(4) * Poly(x) * Poly(u_yt);
  return GExpr(L) + fc.f();
}

GExpr symmetry_defect(const VField& S, const FCase& fc) {
  const GExpr H = equation_rhs(fc);
  const Prolonged P = prolong2(S);

  auto d = [&H](Var v) { return map_components(H, [v](const Poly& c) { return partial(c, v); }); };
  GExpr SH = S.xi * d(var::x) + S.phi * d(var::y) + S.tau * d(var::t);
  SH += S.eta() * d_du(H, fc.p());
  for (std::uint16_t j = var::u_x.id(); j <= var::u_tt.id(); ++j) SH += P[Var(j)] * d(Var(j));

  // on shell: u_xx = u_xx - H
  const GExpr uxx = GExpr(Poly(var::u_xx)) - H;
  GExpr out = substitute_linear(SH, var::u_xx, uxx);
  if (auto p = fc.p_value()) out = fold_powers(out, *p);
  return out;
}

Verdict verify_generator(const VField& S, const FCase& fc) {
  Verdict v;
  GExpr defect = symmetry_defect(S, fc);
  v.is_symmetry = defect.is_zero();
  for (const auto& [tag, c] : defect.components())
    for (const auto& [m, coeff] : c.terms()) v.certificate.push_back({tag, m, coeff});
  return v;
}

namespace {

Rat draw(std::mt19937_64& rng, bool nonzero) {
  for (;;) {
    long num = static_cast<long>(rng() % 41) - 20;
    long den = static_cast<long>(rng() % 9) + 1;
    if (!nonzero || num != 0) return make_rat(num, den);
  }
}

Rat rat_pow(const Rat& base, long e) {
  Rat b = e < 0 ? Rat(1 / base) : base;
  Rat out(1);
  for (long i = 0; i < std::labs(e); ++i) out *= b;
  return out;
}

Rat eval_const(const Poly& e, const std::map<Var, Rat>& point) {
  Poly v = evaluate(e, point);
  if (!v.is_constant()) throw std::invalid_argument("spot check: expression has unassigned symbols");
  return v.constant_term();
}

}  // namespace

bool numeric_spot_check(const VField& S, const FCase& fc, int trials, std::uint64_t seed) {
  using namespace var;
  if (fc.symbolic()) throw std::invalid_argument("spot check needs rational constants");
  if (fc.kind() == FCase::Kind::Arbitrary || fc.kind() == FCase::Kind::Exp)
    throw std::invalid_argument("spot check needs a polynomial f");
  long p_int = 0;
  if (auto p = fc.p_value()) {
    if (!is_integer(*p)) throw std::invalid_argument("spot check needs an integer exponent");
    p_int = p->get_num().get_si();
  }
  const Rat kval = fc.kind() == FCase::Kind::Zero ? Rat(0) : *fc.k_value();

  // Generators may carry the symbols k and p; bind them to the case values.
  std::map<Var, Rat> params{{k, kval}};
  if (fc.kind() == FCase::Kind::Power) params[p] = Rat(p_int);
  VField G;
  for (Fn f : kFns) G[f] = evaluate(S[f], params);
  const Prolonged P = closed_form_eta(G);

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    std::map<Var, Rat> pt;
    for (Var v : {x, y, t}) pt[v] = draw(rng, false);
    pt[u] = draw(rng, true);
    for (Var v : {u_x, u_y, u_t, u_xy, u_xt, u_yy, u_yt, u_tt}) pt[v] = draw(rng, false);

    Rat fu, fpu;
    switch (fc.kind()) {
      case FCase::Kind::Zero: break;
      case FCase::Kind::Const: fu = kval; break;
      case FCase::Kind::Linear:
        fu = kval * pt[u];
        fpu = kval;
        break;
      case FCase::Kind::Power:
        fu = kval * rat_pow(pt[u], p_int);
        fpu = kval * p_int * rat_pow(pt[u], p_int - 1);
        break;
      default: break;
    }
    const Rat X = pt[x], Y = pt[y];
    const Rat rho = X * X + Y * Y;
    pt[u_xx] = -(pt[u_yy] + 4 * rho * pt[u_tt] + 4 * Y * pt[u_xt] - 4 * X * pt[u_yt] + fu);

    auto ev = [&pt](const Poly& e) { return eval_const(e, pt); };
    Rat eta = ev(G.alpha) * pt[u] + ev(G.beta);
    Rat value = ev(G.xi) * (8 * X * pt[u_tt] - 4 * pt[u_yt]) + ev(G.phi) * (8 * Y * pt[u_tt] + 4 * pt[u_xt]) +
                eta * fpu + ev(P[u_xx]) + ev(P[u_yy]) + 4 * rho * ev(P[u_tt]) + 4 * Y * ev(P[u_xt]) -
                4 * X * ev(P[u_yt]);
    if (value != 0) return false;
  }
  return true;
}

}  // namespace ks
