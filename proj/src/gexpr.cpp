#include "ks/gexpr.hpp"

#include <stdexcept>

namespace ks {

std::string to_string(const BasisTag& tag) {
  switch (tag.kind) {
    case BasisTag::Kind::Plain: return "1";
    case BasisTag::Kind::F: return "f(u)";
    case BasisTag::Kind::FPrime: return "f'(u)";
    case BasisTag::Kind::ExpU: return "exp(u)";
    case BasisTag::Kind::UPow:
      if (tag.offset == 0) return "u^p";
      return "u^(p" + std::string(tag.offset > 0 ? "+" : "-") + std::to_string(std::abs(tag.offset)) + ")";
  }
  return "?";
}

GExpr::GExpr(const Poly& plain) { add(BasisTag::plain(), plain); }

GExpr::GExpr(BasisTag tag, const Poly& coeff) { add(tag, coeff); }

Poly GExpr::component(BasisTag tag) const {
  auto it = comps_.find(tag);
  return it == comps_.end() ? Poly() : it->second;
}

void GExpr::add(BasisTag tag, const Poly& coeff) {
  if (coeff.is_zero()) return;
  if (tag.kind == BasisTag::Kind::UPow && coeff.depends_on(var::u)) {
    for (const auto& [m, c] : coeff.terms()) {
      int n = static_cast<int>(m.degree(var::u));
      add(BasisTag::upow(tag.offset + n), Poly(m.without(var::u), c));
    }
    return;
  }
  auto [it, inserted] = comps_.try_emplace(tag, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

GExpr& GExpr::operator+=(const GExpr& o) {
  for (const auto& [tag, c] : o.comps_) add(tag, c);
  return *this;
}

GExpr& GExpr::operator-=(const GExpr& o) {
  for (const auto& [tag, c] : o.comps_) add(tag, -c);
  return *this;
}

GExpr GExpr::operator-() const {
  GExpr out;
  for (const auto& [tag, c] : comps_) out.comps_.emplace(tag, -c);
  return out;
}

GExpr operator*(const Poly& c, const GExpr& e) {
  GExpr out;
  if (c.is_zero()) return out;
  for (const auto& [tag, coeff] : e.comps_) out.add(tag, c * coeff);
  return out;
}

GExpr mul_u(const GExpr& e) { return Poly(var::u) * e; }

GExpr d_du(const GExpr& e, const Poly& p) {
  GExpr out;
  for (const auto& [tag, c] : e.components()) {
    Poly dc = partial(c, var::u);
    switch (tag.kind) {
      case BasisTag::Kind::Plain:
        out.add(tag, dc);
        break;
      case BasisTag::Kind::F:
        out.add(tag, dc);
        out.add(BasisTag::f_prime(), c);
        break;
      case BasisTag::Kind::FPrime:
        throw std::domain_error("second derivative of f is not representable");
      case BasisTag::Kind::UPow:
        // coefficient is u-free by the class invariant
        out.add(BasisTag::upow(tag.offset - 1), (p + Poly(tag.offset)) * c);
        break;
      case BasisTag::Kind::ExpU:
        out.add(tag, dc + c);
        break;
    }
  }
  return out;
}

GExpr fold_powers(const GExpr& e, const Rat& p) {
  GExpr out;
  for (const auto& [tag, c] : e.components()) {
    if (tag.kind == BasisTag::Kind::UPow) {
      Rat power = p + tag.offset;
      if (power == 0) {
        out.add(BasisTag::plain(), c);
        continue;
      }
      if (power == 1) {
        out.add(BasisTag::plain(), Poly(var::u) * c);
        continue;
      }
    }
    out.add(tag, c);
  }
  return out;
}

GExpr substitute_linear(const GExpr& e, Var v, const GExpr& r) {
  GExpr out;
  for (const auto& [tag, c] : e.components()) {
    auto d = c.degree(v);
    if (d == 0) {
      out.add(tag, c);
      continue;
    }
    if (d > 1 || tag.kind != BasisTag::Kind::Plain)
      throw std::logic_error("substitute_linear: " + v.name() + " is not linear in the plain part");
    auto parts = collect(c, [v](Var w) { return w == v; });
    out.add(tag, parts[Mono()]);
    out += parts[Mono(v)] * r;
  }
  return out;
}

std::string canonical_string(const GExpr& e) {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [tag, c] : e.components()) {
    if (!s.empty()) s += " + ";
    if (tag.kind == BasisTag::Kind::Plain)
      s += canonical_string(c);
    else if (c == Poly(1))
      s += to_string(tag);
    else
      s += "(" + canonical_string(c) + ")*" + to_string(tag);
  }
  return s;
}

}  // namespace ks
