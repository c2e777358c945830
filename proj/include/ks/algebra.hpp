#pragma once

#include <string>
#include <optional>
#include <tuple>
#include <vector>

#include "ks/prolongation.hpp"

namespace ks {

// Commutator of two point generators on (x, y, t, u). Throws
// std::logic_error if the u-component of the result is not affine in u.
VField bracket(const VField& a, const VField& b);

struct AlgebraBasis {
  std::vector<std::string> names;
  std::vector<VField> fields;

  std::size_t size() const { return fields.size(); }
  void add(std::string name, VField f) {
    names.push_back(std::move(name));
    fields.push_back(std::move(f));
  }
};

// Exact coordinates of S in the span of the basis, or nullopt. The fields
// must be free of the parameters k and p (std::invalid_argument otherwise).
std::optional<std::vector<Rat>> coordinates(const AlgebraBasis& B, const VField& S);

bool linearly_independent(const AlgebraBasis& B);

struct StructureConstants {
  struct Entry {
    std::size_t i, j, k;
    Rat value;  // [S_i, S_j] = sum_k value * S_k
  };
  struct Leak {
    std::size_t i, j;
    VField bracket;  // outside the span
  };
  bool independent = false;
  bool closed = false;
  std::vector<Entry> entries;  // i < j, nonzero values only, sorted
  std::vector<Leak> leaks;

  Rat at(std::size_t i, std::size_t j, std::size_t k) const;
};

StructureConstants structure_constants(const AlgebraBasis& B);

// Sum over cyclic permutations of [[S_i, S_j], S_k] vanishes for every triple.
bool jacobi_check(const AlgebraBasis& B);

}  // namespace ks
