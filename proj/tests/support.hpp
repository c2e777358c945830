#pragma once

#include <random>

#include "ks/prolongation.hpp"

namespace ks::test {

inline Rat small_rat(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 21) - 10;
  long den = static_cast<long>(rng() % 5) + 1;
  return make_rat(num, den);
}

// Random polynomial in (x, y, t) of degree <= d with a handful of terms.
inline Poly random_poly(std::mt19937_64& rng, int d, int terms = 4) {
  const auto monos = coordinate_monomials(d);
  Poly out;
  for (int i = 0; i < terms; ++i) out.add_term(monos[rng() % monos.size()], small_rat(rng));
  return out;
}

inline VField random_field(std::mt19937_64& rng, int d) {
  VField S;
  for (Fn f : kFns) S[f] = random_poly(rng, d);
  return S;
}

}  // namespace ks::test
