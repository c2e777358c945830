#pragma once

#include <map>
#include <string>

#include "ks/poly.hpp"

namespace ks {

// Independent function factor multiplying a polynomial coefficient.
struct BasisTag {
  enum class Kind : std::uint8_t { Plain, F, FPrime, UPow, ExpU };

  Kind kind = Kind::Plain;
  int offset = 0;  // UPow only: the factor is u^(p + offset)

  static BasisTag plain() { return {}; }
  static BasisTag f() { return {Kind::F, 0}; }
  static BasisTag f_prime() { return {Kind::FPrime, 0}; }
  static BasisTag upow(int j) { return {Kind::UPow, j}; }
  static BasisTag exp_u() { return {Kind::ExpU, 0}; }

  auto operator<=>(const BasisTag&) const = default;
};

// "1", "f(u)", "f'(u)", "u^p", "u^(p-1)", "exp(u)".
std::string to_string(const BasisTag& tag);

// Graded expression sum_tag coeff_tag * tag. UPow coefficients never contain
// u: a factor u^n is absorbed into the tag as u^(p + j + n).
class GExpr {
 public:
  using ComponentMap = std::map<BasisTag, Poly>;

  GExpr() = default;
  GExpr(const Poly& plain);  // NOLINT
  GExpr(BasisTag tag, const Poly& coeff);

  const ComponentMap& components() const { return comps_; }
  Poly component(BasisTag tag) const;
  bool is_zero() const { return comps_.empty(); }

  void add(BasisTag tag, const Poly& coeff);

  GExpr& operator+=(const GExpr& o);
  GExpr& operator-=(const GExpr& o);
  GExpr operator-() const;
  friend GExpr operator+(GExpr a, const GExpr& b) { return a += b; }
  friend GExpr operator-(GExpr a, const GExpr& b) { return a -= b; }
  friend GExpr operator*(const Poly& c, const GExpr& e);

  bool operator==(const GExpr& o) const { return comps_ == o.comps_; }

 private:
  ComponentMap comps_;
};

GExpr mul_u(const GExpr& e);

// d/du with f' for F, p*u^(p-1) rules for UPow and e^u for ExpU. `p` may be
// a rational constant or the symbol p. Throws std::domain_error on FPrime,
// since f'' is outside the tag set.
GExpr d_du(const GExpr& e, const Poly& p);

// With a concrete exponent, u^(p+j) for p + j in {0, 1} is an ordinary
// polynomial and moves into the Plain component.
GExpr fold_powers(const GExpr& e, const Rat& p);

// Replaces every occurrence of v (which must appear at most linearly, and
// only in the Plain component) by the graded expression r.
GExpr substitute_linear(const GExpr& e, Var v, const GExpr& r);

// Applies a Poly -> Poly map to each component.
template <class F>
GExpr map_components(const GExpr& e, F&& f) {
  GExpr out;
  for (const auto& [tag, c] : e.components()) out.add(tag, f(c));
  return out;
}

std::string canonical_string(const GExpr& e);

}  // namespace ks
