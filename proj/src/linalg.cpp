#include "ks/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ks/unipoly.hpp"

namespace ks {

bool ExactMatrix::symbolic() const {
  for (const auto& r : rows)
    for (const auto& [c, v] : r)
      if (!v.is_constant()) return true;
  return false;
}

void ExactMatrix::add_row(Row row) {
  std::map<std::size_t, Poly> merged;
  for (auto& [c, v] : row) {
    if (c >= cols) throw std::out_of_range("ExactMatrix: column out of range");
    merged[c] += v;
  }
  Row out;
  for (auto& [c, v] : merged)
    if (!v.is_zero()) out.emplace_back(c, std::move(v));
  rows.push_back(std::move(out));
}

namespace {

// Field arithmetic over Q: pivot rows are kept monic.
struct RatRing {
  using T = Rat;
  static bool zero(const T& a) { return a == 0; }
  static T from(const Poly& e) { return e.constant_term(); }
  static Poly to(const T& a) { return Poly(a); }
  static T one() { return T(1); }
  static T gcd(const T& a, const T& b) { return (a == 0 && b == 0) ? T(0) : T(1); }
  static T div(const T& a, const T& b) { return a / b; }
};

// Fraction-free arithmetic over Q[p].
struct PolyRing {
  using T = UniPoly;
  static bool zero(const T& a) { return a.is_zero(); }
  static T from(const Poly& e) { return UniPoly::from_poly(e, var::p); }
  static Poly to(const T& a) { return a.to_poly(var::p); }
  static T one() { return T(Rat(1)); }
  static T gcd(const T& a, const T& b) { return ks::gcd(a, b); }
  static T div(const T& a, const T& b) { return a / b; }
};

template <class Ring>
class Echelon {
 public:
  using T = typename Ring::T;
  using Row = std::vector<std::pair<std::size_t, T>>;

  // Reduces row against the current pivots; keeps it as a new pivot row if
  // anything survives. Returns true when the rank grew.
  bool insert(Row row) {
    reduce(row, 0);
    if (row.empty()) return false;
    normalize(row);
    std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }
  const std::map<std::size_t, Row>& pivots() const { return pivots_; }
  // Monic nonconstant multipliers and divisors used so far (Q[p] only).
  const std::set<std::vector<Rat>>& critical() const { return critical_; }

  // Clears every entry above each pivot, giving the reduced form.
  void back_substitute() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) reduce(it->second, it->first + 1);
  }

 private:
  // row <- lead(piv) * row - row[c] * piv, for every pivot column c >= from.
  void reduce(Row& row, std::size_t from) {
    std::size_t pos = 0;
    while (pos < row.size()) {
      std::size_t col = row[pos].first;
      auto pit = col >= from ? pivots_.find(col) : pivots_.end();
      if (pit == pivots_.end() || &pit->second == &row) {
        ++pos;
        continue;
      }
      const Row& piv = pit->second;
      T factor = row[pos].second;
      const T& lead = piv.front().second;
      note(lead);
      Row out;
      out.reserve(row.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < row.size() || b < piv.size()) {
        if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
          T v = lead * row[a].second;
          if (!Ring::zero(v)) out.emplace_back(row[a].first, std::move(v));
          ++a;
        } else if (a == row.size() || piv[b].first < row[a].first) {
          T v = T() - factor * piv[b].second;
          if (!Ring::zero(v)) out.emplace_back(piv[b].first, std::move(v));
          ++b;
        } else {
          T v = lead * row[a].second - factor * piv[b].second;
          if (!Ring::zero(v)) out.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      row = std::move(out);
      normalize_content(row);
      // entries left of col are untouched, so resume from the same position
      while (pos < row.size() && row[pos].first <= col) ++pos;
    }
  }

  void note(const T& a) {
    if constexpr (!std::is_same_v<T, Rat>) {
      if (a.degree() < 1) return;
      std::vector<Rat> c = a.coeffs();
      Rat s = 1 / a.lead();
      for (auto& e : c) e *= s;
      critical_.insert(std::move(c));
    }
  }

  // Divides out the common factor of the entries.
  void normalize_content(Row& row) {
    if (row.empty()) return;
    T g = row.front().second;
    for (std::size_t i = 1; i < row.size(); ++i) g = Ring::gcd(g, row[i].second);
    if (Ring::zero(g) || g == Ring::one()) return;
    note(g);
    for (auto& e : row) e.second = Ring::div(e.second, g);
  }

  void normalize(Row& row) {
    normalize_content(row);
    T lead = row.front().second;
    if constexpr (std::is_same_v<T, Rat>) {
      for (auto& e : row) e.second /= lead;
    } else {
      Rat s = 1 / lead.lead();
      for (auto& e : row) e.second = e.second * UniPoly(s);
    }
  }

  std::map<std::size_t, Row> pivots_;
  std::set<std::vector<Rat>> critical_;
};

template <class Ring>
typename Echelon<Ring>::Row convert(const ExactMatrix::Row& r) {
  typename Echelon<Ring>::Row out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) out.emplace_back(c, Ring::from(v));
  return out;
}

template <class Ring>
Kernel kernel_of(const ExactMatrix& M) {
  using T = typename Ring::T;
  Echelon<Ring> E;
  for (const auto& r : M.rows) E.insert(convert<Ring>(r));
  E.back_substitute();

  Kernel K;
  K.rank = E.rank();
  for (const auto& [col, row] : E.pivots()) K.pivots.push_back(Ring::to(row.front().second));
  if constexpr (!std::is_same_v<T, Rat>) {
    for (const auto& c : E.critical()) {
      UniPoly q;
      for (std::size_t i = 0; i < c.size(); ++i) q += UniPoly::monomial(c[i], i);
      K.critical.push_back(q.to_poly(var::p));
    }
  }

  std::vector<bool> is_pivot(M.cols, false);
  for (const auto& [col, row] : E.pivots()) is_pivot[col] = true;

  for (std::size_t free = 0; free < M.cols; ++free) {
    if (is_pivot[free]) continue;
    // lead_i * v[c_i] + a_i * v[free] = 0 for every pivot row i
    std::vector<std::pair<std::size_t, std::pair<T, T>>> deps;  // (c_i, (lead_i, a_i))
    T scale = Ring::one();
    for (const auto& [col, row] : E.pivots()) {
      auto it = std::find_if(row.begin(), row.end(), [free](const auto& e) { return e.first == free; });
      if (it == row.end()) continue;
      const T& lead = row.front().second;
      deps.emplace_back(col, std::make_pair(lead, it->second));
      T g = Ring::gcd(scale, lead);
      scale = Ring::div(scale * lead, g);
    }
    std::vector<T> v(M.cols);
    v[free] = scale;
    for (const auto& [col, la] : deps) v[col] = T() - Ring::div(la.second * scale, la.first);
    T g = T();
    for (const auto& e : v)
      if (!Ring::zero(e)) g = Ring::zero(g) ? e : Ring::gcd(g, e);
    std::vector<Poly> out;
    out.reserve(M.cols);
    for (auto& e : v) {
      if constexpr (std::is_same_v<T, Rat>) {
        out.push_back(Ring::to(e));
      } else {
        T r = Ring::zero(e) ? e : Ring::div(e, g);
        out.push_back(Ring::to(r));
      }
    }
    if constexpr (!std::is_same_v<T, Rat>) {
      // make the free entry's leading coefficient 1
      Rat s = 1 / UniPoly::from_poly(out[free], var::p).lead();
      for (auto& e : out) e *= s;
    }
    K.basis.push_back(std::move(out));
  }
  return K;
}

}  // namespace

Kernel nullspace(const ExactMatrix& M) {
  return M.symbolic() ? kernel_of<PolyRing>(M) : kernel_of<RatRing>(M);
}

std::size_t rank(const ExactMatrix& M) {
  if (M.symbolic()) {
    Echelon<PolyRing> E;
    for (const auto& r : M.rows) E.insert(convert<PolyRing>(r));
    return E.rank();
  }
  Echelon<RatRing> E;
  for (const auto& r : M.rows) E.insert(convert<RatRing>(r));
  return E.rank();
}

std::optional<std::vector<Rat>> solve(const ExactMatrix& M, const std::vector<Rat>& b) {
  if (M.symbolic()) throw std::invalid_argument("solve: symbolic matrix");
  if (b.size() != M.rows.size()) throw std::invalid_argument("solve: right-hand side size mismatch");
  const std::size_t n = M.cols;
  Echelon<RatRing> E;
  for (std::size_t i = 0; i < M.rows.size(); ++i) {
    auto row = convert<RatRing>(M.rows[i]);
    if (b[i] != 0) row.emplace_back(n, b[i]);
    E.insert(std::move(row));
  }
  E.back_substitute();
  std::vector<Rat> x(n, Rat(0));
  for (const auto& [col, row] : E.pivots()) {
    if (col == n) return std::nullopt;
    if (row.back().first == n) x[col] = row.back().second;
  }
  return x;
}

}  // namespace ks
