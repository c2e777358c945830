#include "ks/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ks {

Mono::Mono(Var v, std::uint32_t e) {
  if (e > 0) factors_.emplace_back(v, e);
}

Mono Mono::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Mono m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  return m;
}

std::uint32_t Mono::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Mono::degree(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Mono Mono::operator*(const Mono& other) const {
  Mono out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Mono Mono::without(Var v) const {
  Mono out;
  for (const auto& f : factors_)
    if (f.first != v) out.factors_.push_back(f);
  return out;
}

std::pair<Mono, Mono> Mono::partition(const std::function<bool(Var)>& pred) const {
  std::pair<Mono, Mono> out;
  for (const auto& f : factors_) (pred(f.first) ? out.first : out.second).factors_.push_back(f);
  return out;
}

std::string Mono::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool display_before(const Mono& a, const Mono& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size()) return true;
    if (i == fa.size()) return false;
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i;
    ++j;
  }
  return false;
}

Poly::Poly(const Rat& c) {
  if (c != 0) terms_.emplace(Mono(), c);
}

Poly::Poly(Var v) { terms_.emplace(Mono(v), Rat(1)); }

Poly::Poly(const Mono& m, const Rat& c) {
  if (c != 0) terms_.emplace(m, c);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::constant_term() const { return coefficient(Mono()); }

Rat Poly::coefficient(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t Poly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::uint32_t Poly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

bool Poly::depends_on(Var v) const { return degree(v) > 0; }

bool Poly::any_var(const std::function<bool(Var)>& pred) const {
  for (const auto& [m, c] : terms_)
    for (const auto& f : m.factors())
      if (pred(f.first)) return true;
  return false;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly pow(const Poly& base, unsigned n) {
  Poly out(1);
  Poly b = base;
  while (n > 0) {
    if (n & 1u) out *= b;
    n >>= 1u;
    if (n > 0) b = b * b;
  }
  return out;
}

Poly partial(const Poly& e, Var v) {
  Poly out;
  for (const auto& [m, c] : e.terms()) {
    auto d = m.degree(v);
    if (d == 0) continue;
    std::vector<Mono::Factor> f = m.without(v).factors();
    if (d > 1) f.emplace_back(v, d - 1);
    out.add_term(Mono::from_factors(std::move(f)), c * d);
  }
  return out;
}

Poly substitute(const Poly& e, Var v, const Poly& replacement) {
  Poly out;
  std::map<std::uint32_t, Poly> powers;
  for (const auto& [m, c] : e.terms()) {
    auto d = m.degree(v);
    if (d == 0) {
      out.add_term(m, c);
      continue;
    }
    auto it = powers.find(d);
    if (it == powers.end()) it = powers.emplace(d, pow(replacement, d)).first;
    out += Poly(m.without(v), c) * it->second;
  }
  return out;
}

Poly substitute(const Poly& e, const std::map<Var, Poly>& replacements) {
  Poly out;
  for (const auto& [m, c] : e.terms()) {
    Poly term(1);
    std::vector<Mono::Factor> kept;
    for (const auto& [v, d] : m.factors()) {
      auto it = replacements.find(v);
      if (it == replacements.end())
        kept.emplace_back(v, d);
      else
        term *= pow(it->second, d);
    }
    out += Poly(Mono::from_factors(std::move(kept)), c) * term;
  }
  return out;
}

Poly evaluate(const Poly& e, const std::map<Var, Rat>& values) {
  Poly out;
  for (const auto& [m, c] : e.terms()) {
    Rat coeff = c;
    std::vector<Mono::Factor> rest;
    for (const auto& [v, d] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest.emplace_back(v, d);
        continue;
      }
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), d);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), d);
      coeff *= p;
    }
    out.add_term(Mono::from_factors(std::move(rest)), coeff);
  }
  return out;
}

std::map<Mono, Poly> collect(const Poly& e, const std::function<bool(Var)>& pred) {
  std::map<Mono, Poly> out;
  for (const auto& [m, c] : e.terms()) {
    auto [key, rest] = m.partition(pred);
    out[key].add_term(rest, c);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::string canonical_string(const Poly& e) {
  if (e.is_zero()) return "0";
  std::vector<const Poly::TermMap::value_type*> terms;
  for (const auto& kv : e.terms()) terms.push_back(&kv);
  std::sort(terms.begin(), terms.end(),
            [](auto* a, auto* b) { return display_before(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (const auto* term : terms) {
    const Mono& m = term->first;
    Rat c = term->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (m.is_one())
      os << to_string(c);
    else if (c == 1)
      os << m.to_string();
    else
      os << to_string(c) << '*' << m.to_string();
  }
  return os.str();
}

std::vector<Mono> coordinate_monomials(int degree) {
  std::vector<Mono> out;
  for (int n = 0; n <= degree; ++n)
    for (int a = n; a >= 0; --a)
      for (int b = n - a; b >= 0; --b) {
        std::vector<Mono::Factor> f;
        if (a) f.push_back({var::x, std::uint32_t(a)});
        if (b) f.push_back({var::y, std::uint32_t(b)});
        if (n - a - b) f.push_back({var::t, std::uint32_t(n - a - b)});
        out.push_back(Mono::from_factors(f));
      }
  return out;
}

}  // namespace ks
