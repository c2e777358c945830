#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ks/rational.hpp"
#include "ks/var.hpp"

namespace ks {

// Power product. Exponents are kept sorted by variable with no zero entries.
class Mono {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Mono() = default;
  explicit Mono(Var v, std::uint32_t e = 1);
  static Mono from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t degree(Var v) const;

  Mono operator*(const Mono& other) const;
  // Drops v from the product.
  Mono without(Var v) const;
  // Splits into (factors satisfying pred, remaining factors).
  std::pair<Mono, Mono> partition(const std::function<bool(Var)>& pred) const;

  // "1" for the empty product, otherwise "x^2*y".
  std::string to_string() const;

  auto operator<=>(const Mono&) const = default;

 private:
  std::vector<Factor> factors_;
};

// Display order: total degree ascending, then the larger exponent on the
// earlier variable first (so x^2*y precedes y^3).
bool display_before(const Mono& a, const Mono& b);

// Sparse multivariate polynomial with rational coefficients, canonical by
// construction: no stored zero coefficients.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat>;

  Poly() = default;
  Poly(const Rat& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT
  Poly(Var v);  // NOLINT
  Poly(const Mono& m, const Rat& c = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero when absent).
  Rat constant_term() const;
  Rat coefficient(const Mono& m) const;
  std::size_t size() const { return terms_.size(); }

  std::uint32_t degree() const;
  std::uint32_t degree(Var v) const;
  bool depends_on(Var v) const;
  bool any_var(const std::function<bool(Var)>& pred) const;

  void add_term(const Mono& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator*(long c, Poly a) { return a *= Rat(c); }
  friend Poly operator*(Poly a, long c) { return a *= Rat(c); }

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

 private:
  TermMap terms_;
};

Poly pow(const Poly& base, unsigned n);

// Formal partial derivative; every variable is independent.
Poly partial(const Poly& e, Var v);

Poly substitute(const Poly& e, Var v, const Poly& replacement);

// Simultaneous substitution of several variables.
Poly substitute(const Poly& e, const std::map<Var, Poly>& replacements);

// Substitutes the given values; unassigned variables stay symbolic.
Poly evaluate(const Poly& e, const std::map<Var, Rat>& values);

// Groups terms by the part of each monomial selected by pred:
// e = sum_k key_k * result[key_k].
std::map<Mono, Poly> collect(const Poly& e, const std::function<bool(Var)>& pred);

// Monomials in (x, y, t) of total degree <= d, by degree and then with the
// larger exponent on the earlier variable first.
std::vector<Mono> coordinate_monomials(int d);

std::string canonical_string(const Poly& e);

}  // namespace ks
