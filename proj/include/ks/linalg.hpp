#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ks/poly.hpp"

namespace ks {

// Sparse exact matrix. Entries are rational constants, or polynomials in the
// single symbol var::p when the exponent is kept symbolic.
struct ExactMatrix {
  using Row = std::vector<std::pair<std::size_t, Poly>>;  // sorted by column

  std::size_t cols = 0;
  std::vector<Row> rows;

  bool symbolic() const;
  // Appends a row given as (column, value) pairs in any order; duplicate
  // columns are summed and zeros dropped.
  void add_row(Row row);
};

struct Kernel {
  std::size_t rank = 0;
  // Basis of the kernel, one vector of length cols each. Over Q the basis is
  // the one read off the reduced row echelon form (unit entry at each free
  // column); over Q[p] each such vector is scaled to be polynomial and
  // primitive.
  std::vector<std::vector<Poly>> basis;
  // Symbolic case only: leading entries of the echelon rows. The rank can
  // only drop at roots of these.
  std::vector<Poly> pivots;
  // Symbolic case only: every nonconstant multiplier or content divided out
  // during elimination (monic). Together with the pivots these contain all
  // values of p where the rank can differ from the generic one.
  std::vector<Poly> critical;
};

// Pivoting is leftmost column first with rows taken in input order, so the
// result is deterministic.
Kernel nullspace(const ExactMatrix& M);

std::size_t rank(const ExactMatrix& M);

// Some solution of M x = b over Q (free columns set to zero), or nullopt if
// the system is inconsistent. M must not be symbolic.
std::optional<std::vector<Rat>> solve(const ExactMatrix& M, const std::vector<Rat>& b);

}  // namespace ks
