#include "ks/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ks {

UniPoly::UniPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UniPoly UniPoly::monomial(const Rat& c, std::size_t deg) {
  UniPoly out;
  if (c == 0) return out;
  out.c_.assign(deg + 1, Rat(0));
  out.c_[deg] = c;
  return out;
}

UniPoly UniPoly::from_poly(const Poly& e, Var v) {
  UniPoly out;
  for (const auto& [m, c] : e.terms()) {
    if (m.degree() != m.degree(v)) throw std::invalid_argument("UniPoly: expression has other variables");
    out += monomial(c, m.degree(v));
  }
  return out;
}

Poly UniPoly::to_poly(Var v) const {
  Poly out;
  for (std::size_t i = 0; i < c_.size(); ++i) out.add_term(Mono(v, static_cast<std::uint32_t>(i)), c_[i]);
  return out;
}

Rat UniPoly::eval(const Rat& at) const {
  Rat r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
  UniPoly q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    UniPoly step = monomial(r.lead() / b.lead(), static_cast<std::size_t>(r.degree() - b.degree()));
    q += step;
    r -= step * b;
  }
  return {q, r};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = UniPoly::divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("UniPoly: inexact division");
  return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = UniPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  Rat inv = 1 / x.lead();
  return x * UniPoly(inv);
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  std::vector<mpz_class> out;
  n = abs(n);
  if (n == 0) return out;
  // Exponents here come from small assembled systems; cap the search.
  if (n > 1000000) return out;
  long v = n.get_si();
  for (long d = 1; d <= v; ++d)
    if (v % d == 0) out.emplace_back(d);
  return out;
}

}  // namespace

std::vector<Rat> UniPoly::rational_roots() const {
  std::vector<Rat> roots;
  if (degree() < 1) return roots;
  UniPoly f = *this;
  // zero roots
  std::size_t shift = 0;
  while (shift < f.c_.size() && f.c_[shift] == 0) ++shift;
  if (shift > 0) {
    roots.emplace_back(0);
    f.c_.erase(f.c_.begin(), f.c_.begin() + static_cast<long>(shift));
  }
  if (f.degree() >= 1) {
    mpz_class lcm_den = 1;
    for (const auto& c : f.c_) lcm_den = lcm(lcm_den, mpz_class(c.get_den()));
    std::vector<mpz_class> ints;
    for (const auto& c : f.c_) ints.push_back(mpz_class(c * lcm_den));
    for (const auto& a : divisors(ints.front()))
      for (const auto& b : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Rat cand(a * sign, b);
          cand.canonicalize();
          if (f.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
            roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ks
