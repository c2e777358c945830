#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ks/algebra.hpp"
#include "ks/fcase.hpp"
#include "ks/linalg.hpp"

namespace ks {

// Polynomial infinitesimals of degree <= d. Unknown c_i multiplies
// monomial i % n of component i / n (n = C(d+3, 3)).
struct Ansatz {
  int degree = 0;
  std::vector<Mono> monomials;

  explicit Ansatz(int d);
  std::size_t per_component() const { return monomials.size(); }
  std::size_t size() const { return 5 * monomials.size(); }
  std::size_t column(Fn f, std::size_t mono) const { return static_cast<std::size_t>(f) * per_component() + mono; }

  // The generic field with c_i symbols.
  VField generic() const;
  VField field(const std::vector<Poly>& coeffs) const;
  // Coefficient vector of S, or nullopt if S exceeds the degree bound.
  std::optional<std::vector<Poly>> encode(const VField& S) const;
};

// Case actually handed to the solver: a symbolic k becomes 1.
FCase solver_case(const FCase& fc);

// By default beta is an unknown except for Zero and Linear, where it
// decouples into beta_kernel.
bool beta_in_algebra(const FCase& fc);

// One homogeneous row per (reduced equation, tag, monomial in x, y, t, u)
// with the ansatz substituted. Beta columns outside the algebra get a unit
// row each. Entries are rational, or polynomials in p when p is symbolic.
ExactMatrix assemble(const FCase& fc, int d);
ExactMatrix assemble(const FCase& fc, int d, bool include_beta);

struct Classification {
  FCase fc;  // as given
  int degree = 0;
  std::size_t dimension = 0;
  AlgebraBasis basis;  // named family when the spans agree, else kernel vectors
  std::vector<bool> verified;
  bool matches_family = false;
  // Kernel directions with only beta nonzero (Const: harmonic beta); they
  // are not counted in the dimension.
  std::size_t pure_beta = 0;
  // Symbolic p: rational roots of the echelon pivots, with the dimension of
  // the concrete case at each root (nullopt for p = 0, 1, which change the case).
  std::vector<std::pair<Rat, std::optional<std::size_t>>> branch_points;
  // p = 2: solvable, but flagged as a special exponent.
  bool excluded_exponent = false;
};

Classification classify(const FCase& fc, int d = 4);

// Polynomial beta of degree <= d with Δ_H1 beta + k beta = 0 (k = 0 for
// Zero). Throws std::invalid_argument for other cases.
std::vector<Poly> beta_kernel(const FCase& fc, int d);

struct ShiftResult {
  Poly shift;  // u = v + shift turns Δ_H1 u + c = 0 into Δ_H1 v = 0
  Rat residual_constant;
  // Whether shift equals +c x^2 / 2, the sign usually quoted for this reduction.
  bool matches_stated_sign = false;
};

ShiftResult constant_shift(const Rat& c);

struct StabilityScan {
  std::vector<std::pair<int, std::size_t>> dimensions;
  bool stable = false;  // non-decreasing and constant from the first occurrence of the last value
};

StabilityScan stability_scan(const FCase& fc, int d_from, int d_to);

}  // namespace ks
