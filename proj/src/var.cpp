#include "ks/var.hpp"

#include <stdexcept>
#include <vector>

namespace ks {

std::string fn_name(Fn f) {
  switch (f) {
    case Fn::Xi: return "xi";
    case Fn::Phi: return "phi";
    case Fn::Tau: return "tau";
    case Fn::Alpha: return "alpha";
    case Fn::Beta: return "beta";
  }
  return "?";
}

std::string index_suffix(const MultiIndex& m) {
  std::string s;
  s.append(m[0], 'x');
  s.append(m[1], 'y');
  s.append(m[2], 't');
  return s;
}

namespace {

// Graded enumeration of multi-indices with order <= kMaxFnOrder.
const std::vector<MultiIndex>& index_table() {
  static const std::vector<MultiIndex> table = [] {
    std::vector<MultiIndex> out;
    for (int n = 0; n <= var::kMaxFnOrder; ++n)
      for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b)
          out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                         static_cast<std::uint8_t>(n - a - b)});
    return out;
  }();
  return table;
}

const std::array<const char*, 15> kFixedNames{"x",    "y",    "t",    "u",    "u_x",
                                              "u_y",  "u_t",  "u_xx", "u_xy", "u_xt",
                                              "u_yy", "u_yt", "u_tt", "k",    "p"};

}  // namespace

Var::Kind Var::kind() const {
  if (id_ <= 2) return Kind::Coordinate;
  if (id_ == 3) return Kind::Dependent;
  if (id_ <= 12) return Kind::Jet;
  if (id_ <= 14) return Kind::Parameter;
  if (id_ < var::kUnknownBase) return Kind::FnDeriv;
  return Kind::Unknown;
}

std::string Var::name() const {
  if (id_ < kFixedNames.size()) return kFixedNames[id_];
  if (auto d = fn_deriv()) {
    std::string s = fn_name(d->first);
    if (order(d->second) > 0) s += "_" + index_suffix(d->second);
    return s;
  }
  return "c" + std::to_string(id_ - var::kUnknownBase);
}

std::optional<std::pair<Fn, MultiIndex>> Var::fn_deriv() const {
  if (kind() != Kind::FnDeriv) return std::nullopt;
  int off = id_ - var::kFnDerivBase;
  return std::make_pair(static_cast<Fn>(off / var::kIndicesPerFn),
                        index_table()[off % var::kIndicesPerFn]);
}

std::optional<MultiIndex> Var::jet_index() const {
  static const std::array<MultiIndex, 9> idx{{{1, 0, 0},
                                              {0, 1, 0},
                                              {0, 0, 1},
                                              {2, 0, 0},
                                              {1, 1, 0},
                                              {1, 0, 1},
                                              {0, 2, 0},
                                              {0, 1, 1},
                                              {0, 0, 2}}};
  if (kind() != Kind::Jet) return std::nullopt;
  return idx[id_ - 4];
}

namespace var {

Var coordinate(Axis a) { return Var(static_cast<std::uint16_t>(a)); }

Var jet(Axis a) { return Var(static_cast<std::uint16_t>(4 + static_cast<int>(a))); }

Var jet(Axis a, Axis b) {
  int i = static_cast<int>(a), j = static_cast<int>(b);
  if (i > j) std::swap(i, j);
  // (0,0)xx (0,1)xy (0,2)xt (1,1)yy (1,2)yt (2,2)tt
  static constexpr int slot[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return Var(static_cast<std::uint16_t>(7 + slot[i][j]));
}

Var fn(Fn f, MultiIndex idx) {
  if (order(idx) > kMaxFnOrder) throw std::out_of_range("derivative order exceeds symbol table");
  const auto& table = index_table();
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == idx)
      return Var(static_cast<std::uint16_t>(kFnDerivBase + static_cast<int>(f) * kIndicesPerFn + i));
  throw std::logic_error("multi-index missing from table");
}

Var unknown(std::uint32_t i) {
  if (i + kUnknownBase > 0xFFFF) throw std::out_of_range("too many ansatz unknowns");
  return Var(static_cast<std::uint16_t>(kUnknownBase + i));
}

std::optional<Var> from_name(const std::string& name) {
  for (std::size_t i = 0; i < kFixedNames.size(); ++i)
    if (name == kFixedNames[i]) return Var(static_cast<std::uint16_t>(i));
  return std::nullopt;
}

}  // namespace var
}  // namespace ks
