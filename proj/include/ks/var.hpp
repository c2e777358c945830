#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ks {

enum class Axis : std::uint8_t { X = 0, Y = 1, T = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::T};

// The five infinitesimals of a point generator: xi, phi, tau along the
// coordinates and the two pieces of eta = alpha*u + beta.
enum class Fn : std::uint8_t { Xi = 0, Phi = 1, Tau = 2, Alpha = 3, Beta = 4 };

inline constexpr std::array<Fn, 5> kFns{Fn::Xi, Fn::Phi, Fn::Tau, Fn::Alpha, Fn::Beta};

std::string fn_name(Fn f);

// Derivative multi-index over (x, y, t).
using MultiIndex = std::array<std::uint8_t, 3>;

// Variable universe. The numeric order doubles as the precedence used by the
// monomial order: coordinates < u < jets < parameters < unknown-function
// symbols < ansatz unknowns.
class Var {
 public:
  enum class Kind { Coordinate, Dependent, Jet, Parameter, FnDeriv, Unknown };

  constexpr Var() = default;
  constexpr explicit Var(std::uint16_t id) : id_(id) {}

  constexpr std::uint16_t id() const { return id_; }
  Kind kind() const;
  std::string name() const;

  // Set for FnDeriv symbols: the function and derivative multi-index.
  std::optional<std::pair<Fn, MultiIndex>> fn_deriv() const;
  // Set for jets: the derivative multi-index (order 1 or 2).
  std::optional<MultiIndex> jet_index() const;

  constexpr auto operator<=>(const Var&) const = default;

 private:
  std::uint16_t id_ = 0;
};

namespace var {

inline constexpr Var x{0}, y{1}, t{2}, u{3};
inline constexpr Var u_x{4}, u_y{5}, u_t{6};
inline constexpr Var u_xx{7}, u_xy{8}, u_xt{9}, u_yy{10}, u_yt{11}, u_tt{12};
inline constexpr Var k{13}, p{14};

inline constexpr std::uint16_t kFnDerivBase = 15;
// Unknown-function derivatives are tracked up to this total order.
inline constexpr int kMaxFnOrder = 4;
inline constexpr std::uint16_t kIndicesPerFn = 35;  // C(4+3, 3)
inline constexpr std::uint16_t kUnknownBase = kFnDerivBase + 5 * kIndicesPerFn;

Var coordinate(Axis a);
Var jet(Axis a);
Var jet(Axis a, Axis b);
// Symbol for d^idx f / dx^a dy^b dt^c; throws std::out_of_range past kMaxFnOrder.
Var fn(Fn f, MultiIndex idx = {0, 0, 0});
Var unknown(std::uint32_t i);

// Looks up a name as printed by Var::name() among coordinates, u, jets and
// parameters.
std::optional<Var> from_name(const std::string& name);

}  // namespace var

inline MultiIndex bump(MultiIndex m, Axis a) {
  ++m[static_cast<int>(a)];
  return m;
}

inline int order(const MultiIndex& m) { return m[0] + m[1] + m[2]; }

std::string index_suffix(const MultiIndex& m);

}  // namespace ks
