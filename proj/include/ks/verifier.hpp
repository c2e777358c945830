#pragma once

#include <cstdint>
#include <vector>

#include "ks/fcase.hpp"
#include "ks/gexpr.hpp"
#include "ks/prolongation.hpp"

namespace ks {

// H = Δ_H1 u + f(u) written in jets, with f in its graded tag.
GExpr equation_rhs(const FCase& fc);

// S^(2) H with u_xx eliminated through H = 0. Zero exactly when S is a point
// symmetry of the equation for this class of f, reading the tags as
// independent functions.
GExpr symmetry_defect(const VField& S, const FCase& fc);

struct CertificateEntry {
  BasisTag tag;
  Mono monomial;
  Rat coeff;
};

struct Verdict {
  bool is_symmetry = false;
  // Every nonzero coefficient of the defect, in component order.
  std::vector<CertificateEntry> certificate;
};

Verdict verify_generator(const VField& S, const FCase& fc);

// Independent check: evaluates S^(2) H at random rational points of the
// equation manifold (u_xx solved from the equation) using the closed-form
// prolongation. Needs a polynomial f with rational constants (integer p);
// throws std::invalid_argument otherwise.
bool numeric_spot_check(const VField& S, const FCase& fc, int trials, std::uint64_t seed = 0);

}  // namespace ks
