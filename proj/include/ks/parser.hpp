#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ks/fcase.hpp"
#include "ks/prolongation.hpp"

namespace ks {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class ParseContext {
  Expression,  // u and jet names allowed
  Generator,   // only x, y, t, k, p
};

// Rationals (a or a/b), variables, + - * ^ with non-negative integer
// exponents, parentheses and unary minus. Accepts every canonical_string.
Poly parse_poly(std::string_view src, ParseContext ctx = ParseContext::Expression);

// arbitrary | zero | const:<rat> | linear:<rat|k> | power:<rat|k>:<rat|p> | exp:<rat|k>
FCase parse_fspec(std::string_view src);

// Either a named generator (T, R, Xt, Yt, Z1, Z2, Z3, Z:<rat>, Z:p, V1, V2,
// V3) or five comma-separated expressions xi,phi,tau,alpha,beta.
VField parse_generator(std::string_view src);

}  // namespace ks
