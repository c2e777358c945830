#include "ks/generators.hpp"

#include <stdexcept>

namespace ks::gen {

namespace {

const Poly x(var::x), y(var::y), t(var::t);

VField field(Poly xi, Poly phi, Poly tau, Poly alpha = {}, Poly beta = {}) {
  return VField{std::move(xi), std::move(phi), std::move(tau), std::move(alpha), std::move(beta)};
}

}  // namespace

VField T() { return field(0, 0, 1); }
VField R() { return field(y, -x, 0); }
VField Xt() { return field(1, 0, Rat(-2) * y); }
VField Yt() { return field(0, 1, Rat(2) * x); }
VField Z1() { return field(x, y, Rat(2) * t); }
VField Z2() { return field(0, 0, 0, 1); }
VField Z3() { return field(x, y, Rat(2) * t, 0, -2); }

VField Z(const Rat& p) {
  if (p == 1) throw std::invalid_argument("dilation needs p != 1");
  return field(x, y, Rat(2) * t, Poly(Rat(2) / (1 - p)));
}

VField Z_symbolic() {
  Poly s = Poly(1) - Poly(var::p);
  return field(s * x, s * y, Rat(2) * s * t, 2);
}

VField V1() {
  Poly rho = x * x + y * y;
  return field(x * t - x * x * y - pow(y, 3), y * t + pow(x, 3) + x * y * y, t * t - rho * rho, -t);
}

VField V2() {
  return field(t - Rat(4) * x * y, Rat(3) * x * x - y * y,
               Rat(-2) * y * t - Rat(2) * pow(x, 3) - Rat(2) * x * y * y, Rat(2) * y);
}

VField V3() {
  return field(x * x - Rat(3) * y * y, t + Rat(4) * x * y,
               Rat(2) * x * t - Rat(2) * x * x * y - Rat(2) * pow(y, 3), Rat(-2) * x);
}

VField W(const Poly& beta) { return field(0, 0, 0, 0, beta); }

VField named(const std::string& name) {
  if (name == "T") return T();
  if (name == "R") return R();
  if (name == "Xt") return Xt();
  if (name == "Yt") return Yt();
  if (name == "Z1") return Z1();
  if (name == "Z2") return Z2();
  if (name == "Z3") return Z3();
  if (name == "V1") return V1();
  if (name == "V2") return V2();
  if (name == "V3") return V3();
  if (name.rfind("Z:", 0) == 0) {
    std::string arg = name.substr(2);
    if (arg == "p") return Z_symbolic();
    return Z(parse_rat(arg));
  }
  throw std::invalid_argument("unknown generator '" + name + "'");
}

VField shift_transport(const VField& S, const Rat& s) {
  // u = v + s x^2:  eta_u = eta_v + S(s x^2) = alpha (u - s x^2) + beta + 2 s x xi
  VField out = S;
  out.beta = S.beta - Rat(s) * S.alpha * x * x + Rat(2 * s) * x * S.xi;
  return out;
}

Family known_family(const FCase& fc) {
  Family fam{{"T", T()}, {"R", R()}, {"Xt", Xt()}, {"Yt", Yt()}};
  switch (fc.kind()) {
    case FCase::Kind::Arbitrary: break;
    case FCase::Kind::Zero:
      for (const char* n : {"Z1", "Z2", "V1", "V2", "V3"}) fam.emplace_back(n, named(n));
      break;
    case FCase::Kind::Const: {
      Rat s = -fc.k().constant_term() / 2;
      fam.clear();
      for (auto& [n, g] : known_family(FCase::zero())) fam.emplace_back(n, shift_transport(g, s));
      break;
    }
    case FCase::Kind::Linear: fam.emplace_back("Z2", Z2()); break;
    case FCase::Kind::Power:
      if (auto p = fc.p_value()) {
        fam.emplace_back("Z", Z(*p));
        if (*p == 3)
          for (const char* n : {"V1", "V2", "V3"}) fam.emplace_back(n, named(n));
      } else {
        fam.emplace_back("Z", Z_symbolic());
      }
      break;
    case FCase::Kind::Exp: fam.emplace_back("Z3", Z3()); break;
  }
  return fam;
}

}  // namespace ks::gen
