#pragma once

#include <string>
#include <vector>

#include "ks/poly.hpp"

namespace ks {

// Dense univariate polynomial over Q in one parameter symbol, used as the
// coefficient ring when the exponent p stays symbolic.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(const Rat& c);  // NOLINT
  static UniPoly monomial(const Rat& c, std::size_t deg);
  // Throws std::invalid_argument if e involves any variable other than v.
  static UniPoly from_poly(const Poly& e, Var v);
  Poly to_poly(Var v) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat eval(const Rat& at) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const;
  bool operator==(const UniPoly&) const = default;

  // Quotient and remainder; divisor must be nonzero.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  // Exact division; throws std::domain_error on a nonzero remainder.
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b);

  // Rational roots, ascending.
  std::vector<Rat> rational_roots() const;

 private:
  void trim();
  std::vector<Rat> c_;  // low to high
};

// Monic gcd (zero only if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace ks
