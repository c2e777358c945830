#include "ks/algebra.hpp"

#include <map>
#include <stdexcept>

#include "ks/linalg.hpp"

namespace ks {

namespace {

// S acting on a function of (x, y, t, u).
Poly act(const VField& S, const Poly& e) {
  return S.xi * partial(e, var::x) + S.phi * partial(e, var::y) + S.tau * partial(e, var::t) +
         S.eta() * partial(e, var::u);
}

void require_concrete(const VField& S) {
  for (Fn f : kFns)
    if (S[f].depends_on(var::k) || S[f].depends_on(var::p))
      throw std::invalid_argument("algebra: generator depends on a symbolic parameter");
}

using Key = std::pair<Fn, Mono>;

void encode(const VField& S, std::map<Key, std::size_t>& dict) {
  for (Fn f : kFns)
    for (const auto& [m, c] : S[f].terms()) dict.emplace(Key{f, m}, dict.size());
}

ExactMatrix basis_matrix(const AlgebraBasis& B, std::map<Key, std::size_t>& dict, std::vector<ExactMatrix::Row>& rows) {
  rows.assign(dict.size(), {});
  for (std::size_t j = 0; j < B.size(); ++j)
    for (Fn f : kFns)
      for (const auto& [m, c] : B.fields[j][f].terms()) rows[dict.at({f, m})].push_back({j, Poly(c)});
  ExactMatrix M;
  M.cols = B.size();
  for (auto& r : rows) M.add_row(r);
  return M;
}

}  // namespace

VField bracket(const VField& a, const VField& b) {
  VField out;
  out.xi = act(a, b.xi) - act(b, a.xi);
  out.phi = act(a, b.phi) - act(b, a.phi);
  out.tau = act(a, b.tau) - act(b, a.tau);
  const Poly eta = act(a, b.eta()) - act(b, a.eta());
  if (eta.degree(var::u) > 1) throw std::logic_error("bracket: u-component is not affine in u");
  out.alpha = partial(eta, var::u);
  out.beta = substitute(eta, var::u, Poly());
  return out;
}

std::optional<std::vector<Rat>> coordinates(const AlgebraBasis& B, const VField& S) {
  for (const auto& f : B.fields) require_concrete(f);
  require_concrete(S);
  std::map<Key, std::size_t> dict;
  for (const auto& f : B.fields) encode(f, dict);
  encode(S, dict);
  std::vector<ExactMatrix::Row> rows;
  ExactMatrix M = basis_matrix(B, dict, rows);
  std::vector<Rat> rhs(dict.size());
  for (Fn f : kFns)
    for (const auto& [m, c] : S[f].terms()) rhs[dict.at({f, m})] = c;
  return solve(M, rhs);
}

bool linearly_independent(const AlgebraBasis& B) {
  for (const auto& f : B.fields) require_concrete(f);
  std::map<Key, std::size_t> dict;
  for (const auto& f : B.fields) encode(f, dict);
  std::vector<ExactMatrix::Row> rows;
  return rank(basis_matrix(B, dict, rows)) == B.size();
}

Rat StructureConstants::at(std::size_t i, std::size_t j, std::size_t k) const {
  Rat sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -1;
  }
  for (const auto& e : entries)
    if (e.i == i && e.j == j && e.k == k) return sign * e.value;
  return 0;
}

StructureConstants structure_constants(const AlgebraBasis& B) {
  StructureConstants out;
  out.independent = linearly_independent(B);
  out.closed = true;
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      VField c = bracket(B.fields[i], B.fields[j]);
      auto coords = coordinates(B, c);
      if (!coords) {
        out.closed = false;
        out.leaks.push_back({i, j, c});
        continue;
      }
      for (std::size_t k = 0; k < B.size(); ++k)
        if ((*coords)[k] != 0) out.entries.push_back({i, j, k, (*coords)[k]});
    }
  return out;
}

bool jacobi_check(const AlgebraBasis& B) {
  const auto& F = B.fields;
  for (std::size_t i = 0; i < F.size(); ++i)
    for (std::size_t j = i + 1; j < F.size(); ++j)
      for (std::size_t k = j + 1; k < F.size(); ++k) {
        VField s = bracket(bracket(F[i], F[j]), F[k]) + bracket(bracket(F[j], F[k]), F[i]) +
                   bracket(bracket(F[k], F[i]), F[j]);
        if (!s.is_zero()) return false;
      }
  return true;
}

}  // namespace ks
