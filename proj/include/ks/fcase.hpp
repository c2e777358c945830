#pragma once

#include <optional>
#include <string>

#include "ks/gexpr.hpp"

namespace ks {

// Nonlinearity class of  Δ_H1 u + f(u) = 0. The constants k and p are either
// rational or the symbols var::k / var::p.
class FCase {
 public:
  enum class Kind { Arbitrary, Zero, Const, Linear, Power, Exp };

  static FCase arbitrary();
  static FCase zero();
  // const:0 normalises to zero.
  static FCase constant(const Rat& c);
  // A zero k normalises to zero.
  static FCase linear(const Poly& k);
  // p = 0 becomes constant(k), p = 1 becomes linear(k).
  static FCase power(const Poly& k, const Poly& p);
  static FCase exponential(const Poly& k);

  Kind kind() const { return kind_; }
  // Multiplier k (also the constant c for Const).
  const Poly& k() const { return k_; }
  const Poly& p() const { return p_; }
  std::optional<Rat> p_value() const;
  std::optional<Rat> k_value() const;

  bool symbolic() const;
  bool critical() const;  // power with p = 3

  // The f(u) and f'(u) graded expressions.
  GExpr f() const;
  GExpr f_prime() const;

  // Textual form accepted by the command line ("power:1:3", "linear:k", ...).
  std::string to_string() const;

  bool operator==(const FCase&) const = default;

 private:
  Kind kind_ = Kind::Arbitrary;
  Poly k_, p_;
};

}  // namespace ks
