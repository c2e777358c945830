#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ks/fcase.hpp"
#include "ks/gexpr.hpp"
#include "ks/prolongation.hpp"

namespace ks {

using UnknownFn = Fn;

// A derivative of one of the unknown functions, e.g. xi_xt.
struct DerivTerm {
  UnknownFn fn;
  MultiIndex index;
  bool operator==(const DerivTerm&) const = default;
  // By function, then derivative order, then x before y before t.
  std::strong_ordering operator<=>(const DerivTerm& o) const {
    if (auto c = fn <=> o.fn; c != 0) return c;
    if (auto c = order(index) <=> order(o.index); c != 0) return c;
    return o.index <=> index;
  }
};

std::string to_string(const DerivTerm& d);

// Linear differential expression in (xi, phi, tau, alpha, beta). The Plain
// part is the ordinary term map; the F and FPrime parts hold what multiplies
// f(u) and f'(u). Coefficients are polynomials in (x, y, t), plus u in the
// free-term equation.
class LinDet {
 public:
  using TermMap = std::map<DerivTerm, Poly>;

  LinDet() = default;
  static LinDet term(UnknownFn fn, MultiIndex idx, const Poly& coeff, BasisTag tag = BasisTag::plain());
  // Reads a polynomial that is linear in unknown-function symbols.
  static LinDet from_poly(const Poly& e, BasisTag tag = BasisTag::plain());

  const std::map<BasisTag, TermMap>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }
  int max_order() const;

  void add(BasisTag tag, const DerivTerm& d, const Poly& coeff);
  LinDet& operator+=(const LinDet& o);
  LinDet& operator-=(const LinDet& o);
  friend LinDet operator+(LinDet a, const LinDet& b) { return a += b; }
  friend LinDet operator-(LinDet a, const LinDet& b) { return a -= b; }
  friend LinDet operator*(const Poly& c, const LinDet& e);
  bool operator==(const LinDet&) const = default;

  // Total derivative along a coordinate (product rule on coefficients).
  LinDet differentiate(Axis a) const;

  // Substitutes a concrete generator; f and f' come from the case.
  GExpr apply(const VField& S, const FCase& fc) const;

  std::string to_string() const;

 private:
  std::map<BasisTag, TermMap> parts_;
};

// Operator builders on a single unknown function.
namespace op {
LinDet d(UnknownFn f, MultiIndex idx, const Poly& coeff = Poly(1));
LinDet X(UnknownFn f, const Poly& coeff = Poly(1));
LinDet Y(UnknownFn f, const Poly& coeff = Poly(1));
LinDet laplace(UnknownFn f, const Poly& coeff = Poly(1));
}  // namespace op

struct DetSystem {
  std::vector<std::pair<std::string, LinDet>> equations;

  // Throws std::invalid_argument on a duplicate label.
  void add(std::string label, LinDet eq);
  const LinDet& at(const std::string& label) const;
  bool contains(const std::string& label) const;
};

// Normalisation applied to collected coefficients: label and the divisor
// taken out of each jet coefficient (u_yy/2 -> E1, u_xy/-2 -> E2,
// u_x/-1 -> E3, u_y/-1 -> E4, u_t/-1 -> E5, free/1 -> E6,
// u_xt/2 -> E7, u_yt/-2 -> E8, u_tt/4 -> E9).
struct Normalization {
  std::string label;
  Mono jet;
  Rat divisor;
};
const std::vector<Normalization>& determining_normalization();

// Generates the nine determining equations from the on-shell symmetry
// condition of a fully symbolic generator.
DetSystem derive_determining();

// The nine equations entered by hand, term by term.
DetSystem transcribed_determining();

// The seven-equation system written with X and Y (R1 ... R7).
DetSystem reduced_system();

// A linear combination  sum_g sum_D  c_{g,D}(x,y,t) * D(eq_g)  where D runs
// over derivative operators of bounded order.
struct Combination {
  struct Term {
    std::string label;
    MultiIndex op;  // {0,0,0} is the identity
    Poly multiplier;
  };
  std::vector<Term> terms;

  LinDet evaluate(const DetSystem& sys) const;
  std::string to_string() const;
};

// Searches for target as a combination of the labelled equations, with
// operators of order <= op_order and multipliers of degree <= max_degree in
// (x, y, t). Returns the first solution found by the exact solver.
std::optional<Combination> find_combination(const LinDet& target, const DetSystem& sys,
                                            const std::vector<std::string>& labels, int op_order,
                                            int max_degree);

struct DependencyReport {
  // E9 - (y E7 + x E8 - x E1 - y E2)
  LinDet relation_residual;
  // E9 as a combination of E1, E2, E7, E8 found by search.
  std::optional<Combination> e9_combination;
  // E5 as a combination of E1 ... E4, E7, E8 (order-1 operators).
  std::optional<Combination> e5_combination;
  // E5 restricted to E1, E2, E7, E8 (which cannot contain alpha).
  bool e5_from_first_order_only = false;

  bool literal_relation_holds() const { return relation_residual.is_zero(); }
  // Both equations are consequences of the others.
  bool dependencies_hold() const { return e9_combination.has_value() && e5_combination.has_value(); }
};

DependencyReport check_dependencies(const DetSystem& sys);

// Each reduced equation expressed through the nine (order-0 multipliers).
std::vector<std::pair<std::string, std::optional<Combination>>> reduced_from_nine(const DetSystem& nine);

struct ConsequenceReport {
  std::vector<std::pair<std::string, bool>> checks;  // identity, holds
  bool all() const;
};

// Evaluates the identities that follow from the reduced system on a concrete
// generator.
ConsequenceReport check_consequences(const VField& S);

}  // namespace ks
