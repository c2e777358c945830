#include "ks/fcase.hpp"

#include <stdexcept>

namespace ks {

namespace {

void require_param(const Poly& v, Var symbol, const char* what) {
  if (v.is_constant() || v == Poly(symbol)) return;
  throw std::invalid_argument(std::string(what) + " must be a rational or the symbol " + symbol.name());
}

std::string param_string(const Poly& v) {
  return v.is_constant() ? to_string(v.constant_term()) : canonical_string(v);
}

}  // namespace

FCase FCase::arbitrary() { return FCase(); }

FCase FCase::zero() {
  FCase c;
  c.kind_ = Kind::Zero;
  return c;
}

FCase FCase::constant(const Rat& value) {
  if (value == 0) return zero();
  FCase c;
  c.kind_ = Kind::Const;
  c.k_ = Poly(value);
  return c;
}

FCase FCase::linear(const Poly& k) {
  require_param(k, var::k, "k");
  if (k.is_zero()) return zero();
  FCase c;
  c.kind_ = Kind::Linear;
  c.k_ = k;
  return c;
}

FCase FCase::power(const Poly& k, const Poly& p) {
  require_param(k, var::k, "k");
  require_param(p, var::p, "p");
  if (k.is_zero()) return zero();
  if (p.is_constant() && p.constant_term() == 1) return linear(k);
  if (p.is_constant() && p.constant_term() == 0) {
    if (!k.is_constant()) throw std::invalid_argument("power with p = 0 needs a rational k");
    return constant(k.constant_term());
  }
  FCase c;
  c.kind_ = Kind::Power;
  c.k_ = k;
  c.p_ = p;
  return c;
}

FCase FCase::exponential(const Poly& k) {
  require_param(k, var::k, "k");
  if (k.is_zero()) return zero();
  FCase c;
  c.kind_ = Kind::Exp;
  c.k_ = k;
  return c;
}

std::optional<Rat> FCase::p_value() const {
  if (kind_ != Kind::Power || !p_.is_constant()) return std::nullopt;
  return p_.constant_term();
}

std::optional<Rat> FCase::k_value() const {
  if (!k_.is_constant()) return std::nullopt;
  return k_.constant_term();
}

bool FCase::symbolic() const { return !k_.is_constant() || !p_.is_constant(); }

bool FCase::critical() const { return p_value() == Rat(3); }

GExpr FCase::f() const {
  switch (kind_) {
    case Kind::Arbitrary: return GExpr(BasisTag::f(), Poly(1));
    case Kind::Zero: return GExpr();
    case Kind::Const: return GExpr(k_);
    case Kind::Linear: return GExpr(k_ * Poly(var::u));
    case Kind::Power: return GExpr(BasisTag::upow(0), k_);
    case Kind::Exp: return GExpr(BasisTag::exp_u(), k_);
  }
  return GExpr();
}

GExpr FCase::f_prime() const {
  switch (kind_) {
    case Kind::Arbitrary: return GExpr(BasisTag::f_prime(), Poly(1));
    case Kind::Zero:
    case Kind::Const: return GExpr();
    case Kind::Linear: return GExpr(k_);
    case Kind::Power: return GExpr(BasisTag::upow(-1), k_ * p_);
    case Kind::Exp: return GExpr(BasisTag::exp_u(), k_);
  }
  return GExpr();
}

std::string FCase::to_string() const {
  switch (kind_) {
    case Kind::Arbitrary: return "arbitrary";
    case Kind::Zero: return "zero";
    case Kind::Const: return "const:" + param_string(k_);
    case Kind::Linear: return "linear:" + param_string(k_);
    case Kind::Power: return "power:" + param_string(k_) + ":" + param_string(p_);
    case Kind::Exp: return "exp:" + param_string(k_);
  }
  return "?";
}

}  // namespace ks
