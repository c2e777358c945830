#include "ks/determining.hpp"

#include <sstream>
#include <stdexcept>

#include "ks/geometry.hpp"
#include "ks/linalg.hpp"
#include "ks/verifier.hpp"

namespace ks {

namespace {

constexpr MultiIndex I0{0, 0, 0}, Ix{1, 0, 0}, Iy{0, 1, 0}, It{0, 0, 1};
constexpr MultiIndex Ixx{2, 0, 0}, Iyy{0, 2, 0}, Itt{0, 0, 2}, Ixt{1, 0, 1}, Iyt{0, 1, 1};

const Poly X_(var::x), Y_(var::y), U_(var::u);
const Poly RHO = X_ * X_ + Y_ * Y_;

LinDet op_X(const LinDet& e) { return e.differentiate(Axis::X) + Rat(2) * Y_ * e.differentiate(Axis::T); }
LinDet op_Y(const LinDet& e) { return e.differentiate(Axis::Y) - Rat(2) * X_ * e.differentiate(Axis::T); }

LinDet apply_op(const LinDet& e, const MultiIndex& op) {
  LinDet out = e;
  for (Axis a : kAxes)
    for (int i = 0; i < op[static_cast<int>(a)]; ++i) out = out.differentiate(a);
  return out;
}

std::vector<MultiIndex> operators_up_to(int order) {
  std::vector<MultiIndex> out;
  for (int n = 0; n <= order; ++n)
    for (int a = n; a >= 0; --a)
      for (int b = n - a; b >= 0; --b) out.push_back({std::uint8_t(a), std::uint8_t(b), std::uint8_t(n - a - b)});
  return out;
}

std::string paren(const Poly& c) {
  std::string s = canonical_string(c);
  return c.size() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string to_string(const DerivTerm& d) {
  return order(d.index) ? fn_name(d.fn) + "_" + index_suffix(d.index) : fn_name(d.fn);
}

LinDet LinDet::term(UnknownFn fn, MultiIndex idx, const Poly& coeff, BasisTag tag) {
  LinDet out;
  out.add(tag, {fn, idx}, coeff);
  return out;
}

LinDet LinDet::from_poly(const Poly& e, BasisTag tag) {
  LinDet out;
  for (const auto& [m, c] : e.terms()) {
    auto [fpart, rest] = m.partition([](Var v) { return v.kind() == Var::Kind::FnDeriv; });
    if (fpart.factors().size() != 1 || fpart.factors()[0].second != 1)
      throw std::invalid_argument("LinDet: expression is not linear in the unknown functions");
    auto [fn, idx] = *fpart.factors()[0].first.fn_deriv();
    out.add(tag, {fn, idx}, Poly(rest, c));
  }
  return out;
}

int LinDet::max_order() const {
  int out = 0;
  for (const auto& [tag, terms] : parts_)
    for (const auto& [d, c] : terms) out = std::max(out, order(d.index));
  return out;
}

void LinDet::add(BasisTag tag, const DerivTerm& d, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto& terms = parts_[tag];
  Poly& slot = terms[d];
  slot += coeff;
  if (slot.is_zero()) terms.erase(d);
  if (terms.empty()) parts_.erase(tag);
}

LinDet& LinDet::operator+=(const LinDet& o) {
  for (const auto& [tag, terms] : o.parts_)
    for (const auto& [d, c] : terms) add(tag, d, c);
  return *this;
}

LinDet& LinDet::operator-=(const LinDet& o) {
  for (const auto& [tag, terms] : o.parts_)
    for (const auto& [d, c] : terms) add(tag, d, -c);
  return *this;
}

LinDet operator*(const Poly& c, const LinDet& e) {
  LinDet out;
  for (const auto& [tag, terms] : e.parts_)
    for (const auto& [d, coeff] : terms) out.add(tag, d, c * coeff);
  return out;
}

LinDet LinDet::differentiate(Axis a) const {
  LinDet out;
  const Var v = var::coordinate(a);
  for (const auto& [tag, terms] : parts_)
    for (const auto& [d, c] : terms) {
      out.add(tag, d, partial(c, v));
      out.add(tag, {d.fn, bump(d.index, a)}, c);
    }
  return out;
}

GExpr LinDet::apply(const VField& S, const FCase& fc) const {
  GExpr out;
  for (const auto& [tag, terms] : parts_) {
    Poly sum;
    for (const auto& [d, c] : terms) {
      Poly g = S[d.fn];
      for (Axis a : kAxes)
        for (int i = 0; i < d.index[static_cast<int>(a)]; ++i) g = partial(g, var::coordinate(a));
      sum += c * g;
    }
    switch (tag.kind) {
      case BasisTag::Kind::Plain: out += GExpr(sum); break;
      case BasisTag::Kind::F: out += sum * fc.f(); break;
      case BasisTag::Kind::FPrime: out += sum * fc.f_prime(); break;
      default: throw std::logic_error("LinDet: unexpected tag");
    }
  }
  if (auto p = fc.p_value(); p && fc.kind() == FCase::Kind::Power) out = fold_powers(out, *p);
  return out;
}

std::string LinDet::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  bool first_part = true;
  for (const auto& [tag, terms] : parts_) {
    std::ostringstream part;
    bool first = true;
    for (const auto& [d, c] : terms) {
      std::string name = ks::to_string(d);
      std::string coeff;
      bool neg = false;
      if (c.size() == 1 && c.terms().begin()->first.is_one()) {
        Rat r = c.constant_term();
        neg = r < 0;
        if (neg) r = -r;
        if (r != 1) coeff = ks::to_string(r) + "*";
      } else if (c.size() == 1) {
        Rat r = c.terms().begin()->second;
        neg = r < 0;
        coeff = canonical_string(neg ? -c : c) + "*";
      } else {
        coeff = paren(c) + "*";
      }
      if (first) part << (neg ? "-" : "");
      else part << (neg ? " - " : " + ");
      part << coeff << name;
      first = false;
    }
    if (!first_part) os << " + ";
    if (tag.kind == BasisTag::Kind::Plain) os << part.str();
    else os << "(" << part.str() << ")*" << ks::to_string(tag);
    first_part = false;
  }
  return os.str();
}

namespace op {
LinDet d(UnknownFn f, MultiIndex idx, const Poly& coeff) { return LinDet::term(f, idx, coeff); }
LinDet X(UnknownFn f, const Poly& coeff) { return coeff * op_X(d(f, I0)); }
LinDet Y(UnknownFn f, const Poly& coeff) { return coeff * op_Y(d(f, I0)); }
LinDet laplace(UnknownFn f, const Poly& coeff) {
  return d(f, Ixx, coeff) + d(f, Iyy, coeff) + d(f, Itt, Rat(4) * RHO * coeff) + d(f, Ixt, Rat(4) * Y_ * coeff) -
         d(f, Iyt, Rat(4) * X_ * coeff);
}
}  // namespace op

void DetSystem::add(std::string label, LinDet eq) {
  if (contains(label)) throw std::invalid_argument("duplicate equation label " + label);
  equations.emplace_back(std::move(label), std::move(eq));
}

const LinDet& DetSystem::at(const std::string& label) const {
  for (const auto& [l, e] : equations)
    if (l == label) return e;
  throw std::out_of_range("no equation " + label);
}

bool DetSystem::contains(const std::string& label) const {
  for (const auto& [l, e] : equations)
    if (l == label) return true;
  return false;
}

const std::vector<Normalization>& determining_normalization() {
  static const std::vector<Normalization> table{
      {"E1", Mono(var::u_yy), Rat(2)},  {"E2", Mono(var::u_xy), Rat(-2)}, {"E3", Mono(var::u_x), Rat(-1)},
      {"E4", Mono(var::u_y), Rat(-1)},  {"E5", Mono(var::u_t), Rat(-1)},  {"E6", Mono(), Rat(1)},
      {"E7", Mono(var::u_xt), Rat(2)},  {"E8", Mono(var::u_yt), Rat(-2)}, {"E9", Mono(var::u_tt), Rat(4)},
  };
  return table;
}

DetSystem derive_determining() {
  const GExpr defect = symmetry_defect(symbolic_vfield(), FCase::arbitrary());
  const auto& table = determining_normalization();
  std::vector<LinDet> eqs(table.size());
  for (const auto& [tag, c] : defect.components()) {
    for (const auto& [key, rest] : collect(c, [](Var v) { return v.kind() == Var::Kind::Jet; })) {
      std::size_t i = 0;
      while (i < table.size() && table[i].jet != key) ++i;
      if (i == table.size()) throw std::logic_error("unexpected jet monomial " + key.to_string());
      eqs[i] += LinDet::from_poly(rest * Rat(1 / table[i].divisor), tag);
    }
  }
  DetSystem out;
  for (std::size_t i = 0; i < table.size(); ++i) out.add(table[i].label, eqs[i]);
  return out;
}

DetSystem transcribed_determining() {
  using op::d;
  const Fn xi = Fn::Xi, phi = Fn::Phi, tau = Fn::Tau, al = Fn::Alpha, be = Fn::Beta;
  DetSystem s;
  s.add("E1", d(xi, Ix) + d(xi, It, 2 * Y_) - d(phi, Iy) + d(phi, It, 2 * X_));
  s.add("E2", d(xi, Iy) - d(xi, It, 2 * X_) + d(phi, Ix) + d(phi, It, 2 * Y_));
  s.add("E3", op::laplace(xi) - op::X(al, 2));
  s.add("E4", op::laplace(phi) - op::Y(al, 2));
  s.add("E5", op::laplace(tau) - op::X(al, 4 * Y_) + op::Y(al, 4 * X_));
  LinDet e23 = op::laplace(al, U_) + op::laplace(be);
  e23.add(BasisTag::f_prime(), {al, I0}, U_);
  e23.add(BasisTag::f_prime(), {be, I0}, 1);
  e23.add(BasisTag::f(), {xi, It}, 4 * Y_);
  e23.add(BasisTag::f(), {xi, Ix}, 2);
  e23.add(BasisTag::f(), {al, I0}, -1);
  s.add("E6", e23);
  s.add("E7", d(xi, Ix, 2 * Y_) + d(xi, Iy, 2 * X_) + d(xi, It, 4 * (Y_ * Y_ - X_ * X_)) + d(phi, I0, 2) -
                    d(tau, Ix) - d(tau, It, 2 * Y_));
  s.add("E8", d(xi, Ix, 4 * X_) + d(xi, It, 8 * X_ * Y_) + d(xi, I0, 2) + d(phi, Ix, 2 * Y_) -
                    d(phi, Iy, 2 * X_) + d(phi, It, 4 * RHO) + d(tau, Iy) - d(tau, It, 2 * X_));
  s.add("E9", d(xi, Ix, 2 * RHO) + d(xi, It, 4 * Y_ * RHO) + d(xi, I0, 2 * X_) + d(phi, I0, 2 * Y_) -
                    d(tau, Ix, Y_) + d(tau, Iy, X_) - d(tau, It, 2 * RHO));
  return s;
}

DetSystem reduced_system() {
  using op::d;
  const Fn xi = Fn::Xi, phi = Fn::Phi, tau = Fn::Tau, al = Fn::Alpha, be = Fn::Beta;
  DetSystem s;
  s.add("R1", op::X(xi) - op::Y(phi));
  s.add("R2", op::Y(xi) + op::X(phi));
  s.add("R3", op::laplace(xi) - op::X(al, 2));
  s.add("R4", op::laplace(phi) - op::Y(al, 2));
  LinDet e31 = op::laplace(al, U_) + op::laplace(be);
  e31.add(BasisTag::f_prime(), {al, I0}, U_);
  e31.add(BasisTag::f_prime(), {be, I0}, 1);
  LinDet coupled = op::X(xi, 2) - d(al, I0);
  for (const auto& [tag, terms] : coupled.parts())
    for (const auto& [dt, c] : terms) e31.add(BasisTag::f(), dt, c);
  s.add("R5", e31);
  s.add("R6", op::X(tau) - op::X(xi, 2 * Y_) - op::Y(xi, 2 * X_) - d(phi, I0, 2));
  s.add("R7", op::Y(tau) + op::X(xi, 2 * X_) - op::Y(xi, 2 * Y_) + d(xi, I0, 2));
  return s;
}

LinDet Combination::evaluate(const DetSystem& sys) const {
  LinDet out;
  for (const auto& t : terms) out += t.multiplier * apply_op(sys.at(t.label), t.op);
  return out;
}

std::string Combination::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    Poly m = t.multiplier;
    bool neg = m.size() == 1 && m.terms().begin()->second < 0;
    if (neg) m = -m;
    if (i) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (m != Poly(1)) os << paren(m) << "*";
    if (order(t.op) > 0) os << "d" << index_suffix(t.op) << "(" << t.label << ")";
    else os << t.label;
  }
  return os.str();
}

std::optional<Combination> find_combination(const LinDet& target, const DetSystem& sys,
                                            const std::vector<std::string>& labels, int op_order,
                                            int max_degree) {
  struct Column {
    std::string label;
    MultiIndex op;
    Mono mono;
  };
  using RowKey = std::tuple<BasisTag, DerivTerm, Mono>;
  std::vector<Column> columns;
  std::map<RowKey, ExactMatrix::Row> rows;
  const auto monos = coordinate_monomials(max_degree);
  for (const auto& label : labels)
    for (const auto& opi : operators_up_to(op_order)) {
      const LinDet base = apply_op(sys.at(label), opi);
      for (const auto& m : monos) {
        const std::size_t col = columns.size();
        columns.push_back({label, opi, m});
        for (const auto& [tag, terms] : base.parts())
          for (const auto& [d, c] : terms)
            for (const auto& [cm, cv] : c.terms()) rows[{tag, d, cm * m}].push_back({col, cv});
      }
    }
  std::map<RowKey, Rat> rhs;
  for (const auto& [tag, terms] : target.parts())
    for (const auto& [d, c] : terms)
      for (const auto& [cm, cv] : c.terms()) {
        rhs[{tag, d, cm}] = cv;
        rows[{tag, d, cm}];
      }
  ExactMatrix M;
  M.cols = columns.size();
  std::vector<Rat> b;
  for (auto& [key, row] : rows) {
    M.add_row(std::move(row));
    auto it = rhs.find(key);
    b.push_back(it == rhs.end() ? Rat(0) : it->second);
  }
  auto sol = solve(M, b);
  if (!sol) return std::nullopt;
  Combination out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if ((*sol)[j] == 0) continue;
    const auto& c = columns[j];
    if (out.terms.empty() || out.terms.back().label != c.label || out.terms.back().op != c.op)
      out.terms.push_back({c.label, c.op, Poly()});
    out.terms.back().multiplier += Poly(c.mono, (*sol)[j]);
  }
  return out;
}

DependencyReport check_dependencies(const DetSystem& sys) {
  DependencyReport r;
  r.relation_residual = sys.at("E9") - (Y_ * sys.at("E7") + X_ * sys.at("E8") - X_ * sys.at("E1") -
                                              Y_ * sys.at("E2"));
  const std::vector<std::string> first{"E1", "E2", "E7", "E8"};
  for (int deg = 1; deg <= 2 && !r.e9_combination; ++deg)
    r.e9_combination = find_combination(sys.at("E9"), sys, first, 0, deg);
  r.e5_from_first_order_only = find_combination(sys.at("E5"), sys, first, 1, 1).has_value();
  const std::vector<std::string> wider{"E1", "E2", "E3", "E4", "E7", "E8"};
  for (int deg = 1; deg <= 3 && !r.e5_combination; ++deg)
    r.e5_combination = find_combination(sys.at("E5"), sys, wider, 1, deg);
  return r;
}

std::vector<std::pair<std::string, std::optional<Combination>>> reduced_from_nine(const DetSystem& nine) {
  std::vector<std::string> labels;
  for (const auto& [l, e] : nine.equations) labels.push_back(l);
  std::vector<std::pair<std::string, std::optional<Combination>>> out;
  for (const auto& [l, e] : reduced_system().equations) out.emplace_back(l, find_combination(e, nine, labels, 0, 1));
  return out;
}

bool ConsequenceReport::all() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

ConsequenceReport check_consequences(const VField& S) {
  const auto X = [](const Poly& e) { return apply_field(h1::X(), e); };
  const auto Y = [](const Poly& e) { return apply_field(h1::Y(), e); };
  const auto dt = [](const Poly& e) { return partial(e, var::t); };
  ConsequenceReport r;
  r.checks.emplace_back("lap phi = 4 xi_t", (kohn_laplace(S.phi) - Rat(4) * dt(S.xi)).is_zero());
  r.checks.emplace_back("lap xi = -4 phi_t", (kohn_laplace(S.xi) + Rat(4) * dt(S.phi)).is_zero());
  r.checks.emplace_back("X alpha = -2 phi_t", (X(S.alpha) + Rat(2) * dt(S.phi)).is_zero());
  r.checks.emplace_back("Y alpha = 2 xi_t", (Y(S.alpha) - Rat(2) * dt(S.xi)).is_zero());
  r.checks.emplace_back(
      "tau_t = 2y xi_t - 2x phi_t + 2 X xi", (dt(S.tau) - Rat(2) * Y_ * dt(S.xi) + Rat(2) * X_ * dt(S.phi) - Rat(2) * X(S.xi)).is_zero());
  r.checks.emplace_back("alpha_t = -(X xi)_t", (dt(S.alpha) + dt(X(S.xi))).is_zero());
  return r;
}

}  // namespace ks
