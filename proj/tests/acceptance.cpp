#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "ks/algebra.hpp"
#include "ks/ansatz.hpp"
#include "ks/determining.hpp"
#include "ks/generators.hpp"
#include "ks/geometry.hpp"
#include "ks/verifier.hpp"
#include "support.hpp"

using namespace ks;

namespace {

const Poly K(var::k), P(var::p);

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(int n, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note << " [exception: " << e.what() << "]";
  }
  const double s = seconds_since(t0);
  if (budget > 0 && s > budget) o.require(false, "over time budget");
  if (!o.ok) ++failures;
  std::cout << (o.ok ? "PASS " : "FAIL ") << n << " " << title << " (" << static_cast<long>(s * 1000) << " ms)"
            << o.note.str() << std::endl;
}

const std::vector<std::pair<FCase, std::size_t>>& expected_dimensions() {
  static const std::vector<std::pair<FCase, std::size_t>> v{
      {FCase::arbitrary(), 4},
      {FCase::exponential(K), 5},
      {FCase::power(K, Poly(5)), 5},
      {FCase::power(K, Poly(7)), 5},
      {FCase::power(K, Poly(-1)), 5},
      {FCase::power(K, Poly(3)), 8},
      {FCase::zero(), 9},
      {FCase::linear(Poly(1)), 5},
  };
  return v;
}

}  // namespace

int main() {
  criterion(1, "listed generators have zero defect", 5, [](Outcome& o) {
    const std::vector<FCase> cases{FCase::arbitrary(), FCase::zero(),       FCase::constant(1),
                                   FCase::linear(K),   FCase::power(K, P), FCase::exponential(K)};
    for (const auto& fc : cases)
      for (const char* n : {"T", "R", "Xt", "Yt"})
        o.require(verify_generator(gen::named(n), fc).is_symmetry, std::string(n) + " " + fc.to_string());
    for (const char* n : {"Z1", "Z2", "V1", "V2", "V3"})
      o.require(verify_generator(gen::named(n), FCase::zero()).is_symmetry, std::string(n) + " zero");
    o.require(verify_generator(gen::Z2(), FCase::linear(K)).is_symmetry, "Z2 linear:k");
    o.require(verify_generator(gen::Z_symbolic(), FCase::power(K, P)).is_symmetry, "Z power:k:p");
    for (const char* n : {"Z:3", "V1", "V2", "V3"})
      o.require(verify_generator(gen::named(n), FCase::power(K, Poly(3))).is_symmetry, std::string(n) + " power:k:3");
    o.require(verify_generator(gen::Z3(), FCase::exponential(K)).is_symmetry, "Z3 exp:k");
  });

  criterion(2, "classification dimensions at degree 4 with span equality", 60, [](Outcome& o) {
    for (const auto& [fc, dim] : expected_dimensions()) {
      const Classification c = classify(fc, 4);
      o.require(c.dimension == dim, fc.to_string() + " dimension " + std::to_string(c.dimension));
      o.require(c.matches_family, fc.to_string() + " span");
      for (bool v : c.verified) o.require(v, fc.to_string() + " unverified vector");
    }
  });

  criterion(3, "determining equations and their dependencies", 0, [](Outcome& o) {
    const DetSystem derived = derive_determining();
    const DetSystem written = transcribed_determining();
    for (const auto& [label, eq] : written.equations) o.require(derived.at(label) == eq, label + " differs");
    const DependencyReport r = check_dependencies(derived);
    o.require(r.literal_relation_holds(),
              "E9 - (y*E7 + x*E8 - x*E1 - y*E2) = " + r.relation_residual.to_string() +
                  "; found instead E9 = " + (r.e9_combination ? r.e9_combination->to_string() : "none"));
    o.require(r.e5_combination && r.e5_combination->evaluate(derived) == derived.at("E5"), "E5 multipliers");
  });

  criterion(4, "prolongation equals the closed form on 100 random fields", 10, [](Outcome& o) {
    std::mt19937_64 rng(0);
    for (int i = 0; i < 100; ++i) {
      const VField S = test::random_field(rng, 3);
      o.require(prolong2(S) == closed_form_eta(S), "field " + std::to_string(i));
    }
  });

  criterion(5, "consequence identities on every classified generator", 0, [](Outcome& o) {
    auto cases = expected_dimensions();
    cases.emplace_back(FCase::constant(2), 9);
    for (const auto& [fc, dim] : cases) {
      const Classification c = classify(fc, 4);
      for (std::size_t i = 0; i < c.basis.size(); ++i)
        for (const auto& [name, ok] : check_consequences(c.basis.fields[i]).checks)
          o.require(ok, fc.to_string() + " " + c.basis.names[i] + " " + name);
    }
  });

  criterion(6, "frame commutators, left invariance, associativity", 0, [](Outcome& o) {
    using namespace h1;
    auto scaled = [](Rat c, FirstOrderOp F) {
      F.a *= c;
      F.b *= c;
      F.c *= c;
      return F;
    };
    const FirstOrderOp zero{};
    o.require(commutator(X(), Y()) == scaled(-4, T()), "[X,Y]");
    o.require(commutator(X(), T()) == zero && commutator(Y(), T()) == zero, "[X,T], [Y,T]");
    o.require(commutator(Xt(), Yt()) == scaled(4, T()), "[Xt,Yt]");
    for (const auto& F : {X(), Y()})
      for (const auto& G : {Xt(), Yt()}) o.require(commutator(F, G) == zero, "left/right commute");
    std::mt19937_64 rng(1);
    auto point = [&rng] { return H1Point{test::small_rat(rng), test::small_rat(rng), test::small_rat(rng)}; };
    for (int i = 0; i < 20; ++i) {
      const H1Point a = point();
      const Poly e = test::random_poly(rng, 4, 6);
      for (const auto& F : {X(), Y()})
        o.require(apply_field(F, left_translate(e, a)) == left_translate(apply_field(F, e), a), "left invariance");
    }
    for (int i = 0; i < 100; ++i) {
      const H1Point a = point(), b = point(), c = point();
      o.require(group_mul(group_mul(a, b), c) == group_mul(a, group_mul(b, c)), "associativity");
    }
  });

  criterion(7, "beta kernels", 0, [](Outcome& o) {
    const auto b1 = beta_kernel(FCase::zero(), 1);
    o.require(b1.size() == 4, "dim at degree 1");
    for (const auto& b : b1) o.require(b.degree() <= 1, "affine");
    o.require(beta_kernel(FCase::zero(), 2).size() == 6, "dim at degree 2");
    for (int d = 0; d <= 4; ++d) {
      for (const auto& b : beta_kernel(FCase::zero(), d)) {
        o.require(kohn_laplace(b).is_zero(), "harmonic");
        o.require(verify_generator(gen::W(b), FCase::zero()).is_symmetry, "W zero");
      }
      for (const auto& b : beta_kernel(FCase::linear(Poly(1)), d)) {
        o.require((kohn_laplace(b) + b).is_zero(), "linear equation");
        o.require(verify_generator(gen::W(b), FCase::linear(Poly(1))).is_symmetry, "W linear");
      }
    }
  });

  criterion(8, "numeric spot check agrees with the symbolic verdict", 0, [](Outcome& o) {
    const FCase cubic = FCase::power(Poly(1), Poly(3));
    o.require(numeric_spot_check(gen::V2(), cubic, 50, 0) && verify_generator(gen::V2(), cubic).is_symmetry, "V2 cubic");
    o.require(numeric_spot_check(gen::T(), FCase::zero(), 10, 0), "T zero");
    VField bad = gen::V2();
    bad.tau += Poly(var::x);
    o.require(!numeric_spot_check(bad, cubic, 10, 0) && !verify_generator(bad, cubic).is_symmetry, "perturbed");
  });

  criterion(9, "constant case shift", 0, [](Outcome& o) {
    for (int c : {1, 2, -3}) {
      const ShiftResult r = constant_shift(c);
      o.require(r.shift == Rat(make_rat(-c, 2)) * Poly(var::x) * Poly(var::x), "shift");
      o.require(r.residual_constant == 0, "residual");
      o.require(!r.matches_stated_sign, "sign discrepancy not reported");
    }
    std::cout << "  note: u = v - c*x^2/2 is required; u = v + c*x^2/2 leaves Δ_H1 v + 2c = 0" << std::endl;
  });

  criterion(10, "dimensions stable at degrees 5 and 6", 300, [](Outcome& o) {
    const std::vector<std::pair<FCase, std::size_t>> cases{{FCase::arbitrary(), 4},
                                                           {FCase::exponential(K), 5},
                                                           {FCase::power(K, Poly(5)), 5},
                                                           {FCase::power(K, Poly(3)), 8}};
    for (const auto& [fc, dim] : cases) {
      const StabilityScan s = stability_scan(fc, 4, 6);
      for (const auto& [d, n] : s.dimensions)
        o.require(n == dim, fc.to_string() + " degree " + std::to_string(d) + ": " + std::to_string(n));
    }
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << std::endl;
  return failures ? 1 : 0;
}
