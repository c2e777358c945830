#include "ks/ansatz.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ks/determining.hpp"
#include "ks/generators.hpp"
#include "ks/geometry.hpp"
#include "ks/unipoly.hpp"
#include "ks/verifier.hpp"

namespace ks {

Ansatz::Ansatz(int d) : degree(d), monomials(coordinate_monomials(d)) {
  if (d < 0) throw std::invalid_argument("ansatz degree must be non-negative");
}

VField Ansatz::generic() const {
  VField S;
  for (Fn f : kFns)
    for (std::size_t i = 0; i < per_component(); ++i) S[f] += Poly(monomials[i]) * Poly(var::unknown(column(f, i)));
  return S;
}

VField Ansatz::field(const std::vector<Poly>& coeffs) const {
  if (coeffs.size() != size()) throw std::invalid_argument("ansatz: coefficient vector has the wrong length");
  VField S;
  for (Fn f : kFns)
    for (std::size_t i = 0; i < per_component(); ++i) S[f] += coeffs[column(f, i)] * Poly(monomials[i]);
  return S;
}

std::optional<std::vector<Poly>> Ansatz::encode(const VField& S) const {
  std::map<Mono, std::size_t> index;
  for (std::size_t i = 0; i < per_component(); ++i) index[monomials[i]] = i;
  std::vector<Poly> out(size());
  for (Fn f : kFns) {
    // coefficients may carry the parameter p
    for (const auto& [m, c] : collect(S[f], [](Var v) { return v.kind() == Var::Kind::Coordinate; })) {
      auto it = index.find(m);
      if (it == index.end()) return std::nullopt;
      out[column(f, it->second)] = c;
    }
  }
  return out;
}

FCase solver_case(const FCase& fc) {
  if (fc.k_value() || fc.kind() == FCase::Kind::Arbitrary || fc.kind() == FCase::Kind::Zero) return fc;
  switch (fc.kind()) {
    case FCase::Kind::Linear: return FCase::linear(Poly(1));
    case FCase::Kind::Power: return FCase::power(Poly(1), fc.p());
    case FCase::Kind::Exp: return FCase::exponential(Poly(1));
    default: throw std::invalid_argument("solver: constant case needs a rational constant");
  }
}

bool beta_in_algebra(const FCase& fc) {
  return fc.kind() != FCase::Kind::Zero && fc.kind() != FCase::Kind::Linear;
}

ExactMatrix assemble(const FCase& fc, int d) { return assemble(fc, d, beta_in_algebra(fc)); }

ExactMatrix assemble(const FCase& fc_in, int d, bool include_beta) {
  const FCase fc = solver_case(fc_in);
  const Ansatz A(d);
  const DetSystem sys = reduced_system();
  using Key = std::tuple<std::size_t, BasisTag, Mono>;
  std::map<Key, ExactMatrix::Row> rows;
  const auto not_p = [](Var v) { return v != var::p; };
  for (Fn f : kFns) {
    if (f == Fn::Beta && !include_beta) continue;
    for (std::size_t i = 0; i < A.per_component(); ++i) {
      VField S;
      S[f] = Poly(A.monomials[i]);
      const std::size_t col = A.column(f, i);
      for (std::size_t r = 0; r < sys.equations.size(); ++r) {
        const GExpr g = sys.equations[r].second.apply(S, fc);
        for (const auto& [tag, c] : g.components())
          for (const auto& [key, coeff] : collect(c, not_p)) rows[{r, tag, key}].push_back({col, coeff});
      }
    }
  }
  ExactMatrix M;
  M.cols = A.size();
  for (auto& [key, row] : rows) M.add_row(std::move(row));
  if (!include_beta)
    for (std::size_t i = 0; i < A.per_component(); ++i) M.add_row({{A.column(Fn::Beta, i), Poly(1)}});
  return M;
}

namespace {

std::vector<Poly> times(const ExactMatrix& M, const std::vector<Poly>& v) {
  std::vector<Poly> out;
  out.reserve(M.rows.size());
  for (const auto& row : M.rows) {
    Poly s;
    for (const auto& [c, e] : row)
      if (!v[c].is_zero()) s += e * v[c];
    out.push_back(std::move(s));
  }
  return out;
}

bool all_zero(const std::vector<Poly>& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& e) { return e.is_zero(); });
}

std::size_t rank_of_vectors(const std::vector<std::vector<Poly>>& vs, std::size_t cols) {
  ExactMatrix M;
  M.cols = cols;
  for (const auto& v : vs) {
    ExactMatrix::Row row;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!v[c].is_zero()) row.push_back({c, v[c]});
    M.add_row(std::move(row));
  }
  return rank(M);
}

}  // namespace

Classification classify(const FCase& fc, int d) {
  Classification out;
  out.fc = fc;
  out.degree = d;
  const FCase sc = solver_case(fc);
  const bool with_beta = beta_in_algebra(fc);
  const Ansatz A(d);
  const ExactMatrix M = assemble(sc, d, with_beta);
  const Kernel K = nullspace(M);

  std::vector<std::vector<Poly>> pure;
  if (with_beta) {
    ExactMatrix M2 = M;
    for (Fn f : {Fn::Xi, Fn::Phi, Fn::Tau, Fn::Alpha})
      for (std::size_t i = 0; i < A.per_component(); ++i) M2.add_row({{A.column(f, i), Poly(1)}});
    pure = nullspace(M2).basis;
  }
  out.pure_beta = pure.size();
  out.dimension = K.basis.size() - pure.size();

  // span comparison with the listed generators
  const gen::Family fam = gen::known_family(sc);
  std::vector<std::vector<Poly>> fam_vecs;
  bool fits = true;
  for (const auto& [name, S] : fam) {
    auto v = A.encode(S);
    if (!v || !all_zero(times(M, *v))) {
      fits = false;
      break;
    }
    fam_vecs.push_back(*v);
  }
  if (fits && fam_vecs.size() == out.dimension) {
    auto all = fam_vecs;
    all.insert(all.end(), pure.begin(), pure.end());
    out.matches_family = rank_of_vectors(all, A.size()) == K.basis.size();
  }
  if (out.matches_family) {
    for (const auto& [name, S] : fam) out.basis.add(name, S);
  } else {
    for (std::size_t i = 0; i < K.basis.size(); ++i) out.basis.add("K" + std::to_string(i + 1), A.field(K.basis[i]));
  }
  for (const auto& S : out.basis.fields) out.verified.push_back(verify_generator(S, sc).is_symmetry);

  if (sc.kind() == FCase::Kind::Power && !sc.p_value()) {
    std::set<Rat> roots;
    std::vector<Poly> candidates = K.pivots;
    candidates.insert(candidates.end(), K.critical.begin(), K.critical.end());
    for (const auto& piv : candidates)
      for (const Rat& r : UniPoly::from_poly(piv, var::p).rational_roots()) roots.insert(r);
    for (const Rat& r : roots) {
      if (r == 0 || r == 1) out.branch_points.emplace_back(r, std::nullopt);
      else out.branch_points.emplace_back(r, classify(FCase::power(sc.k(), Poly(r)), d).dimension);
    }
  }
  out.excluded_exponent = sc.kind() == FCase::Kind::Power && sc.p_value() && *sc.p_value() == 2;
  return out;
}

std::vector<Poly> beta_kernel(const FCase& fc, int d) {
  Rat k;
  if (fc.kind() == FCase::Kind::Linear) {
    auto kv = solver_case(fc).k_value();
    k = *kv;
  } else if (fc.kind() != FCase::Kind::Zero) {
    throw std::invalid_argument("beta_kernel: needs the zero or linear case");
  }
  const auto monos = coordinate_monomials(d);
  std::map<Mono, ExactMatrix::Row> rows;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const Poly m(monos[j]);
    const Poly image = kohn_laplace(m) + k * m;
    for (const auto& [key, c] : image.terms()) rows[key].push_back({j, Poly(c)});
  }
  ExactMatrix M;
  M.cols = monos.size();
  for (auto& [key, row] : rows) M.add_row(std::move(row));
  std::vector<Poly> out;
  for (const auto& v : nullspace(M).basis) {
    Poly b;
    for (std::size_t j = 0; j < monos.size(); ++j) b += v[j] * Poly(monos[j]);
    out.push_back(b);
  }
  return out;
}

ShiftResult constant_shift(const Rat& c) {
  const Poly x2 = Poly(var::x) * Poly(var::x);
  const Rat lap = kohn_laplace(x2).constant_term();  // Δ_H1 x^2 = 2
  ShiftResult r;
  const Rat s = -c / lap;
  r.shift = s * x2;
  // Δ_H1 (v + s x^2) + c = Δ_H1 v + (s * lap + c)
  r.residual_constant = (kohn_laplace(r.shift) + Poly(c)).constant_term();
  r.matches_stated_sign = r.shift == Rat(c / 2) * x2;
  return r;
}

StabilityScan stability_scan(const FCase& fc, int d_from, int d_to) {
  if (d_from > d_to) throw std::invalid_argument("stability_scan: empty degree range");
  StabilityScan s;
  for (int d = d_from; d <= d_to; ++d) s.dimensions.emplace_back(d, classify(fc, d).dimension);
  s.stable = true;
  const std::size_t last = s.dimensions.back().second;
  bool saturated = false;
  for (std::size_t i = 0; i < s.dimensions.size(); ++i) {
    const std::size_t v = s.dimensions[i].second;
    if (i && v < s.dimensions[i - 1].second) s.stable = false;
    if (v == last) saturated = true;
    else if (saturated) s.stable = false;
  }
  return s;
}

}  // namespace ks
