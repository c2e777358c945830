#include "ks/parser.hpp"

#include <cctype>
#include <vector>

#include "ks/generators.hpp"

namespace ks {

namespace {

class Parser {
 public:
  Parser(std::string_view src, ParseContext ctx) : s_(src), ctx_(ctx) {}

  Poly parse() {
    Poly e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly e = term();
    for (;;) {
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else return e;
    }
  }

  Poly term() {
    Poly e = unary();
    while (accept('*')) e = e * unary();
    return e;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail("exponent must be a non-negative integer");
    }
    std::string digits(s_.substr(start, pos_ - start));
    if (digits.size() > 4) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Poly number() {
    const std::size_t start = pos_;
    auto digits = [this] {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return b != pos_;
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      if (!digits()) fail("expected denominator");
    }
    std::string_view text = s_.substr(start, pos_ - start);
    try {
      return Poly(parse_rat(text));
    } catch (const std::invalid_argument& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  Poly variable() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    auto v = var::from_name(name);
    if (!v) {
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    const auto kind = v->kind();
    if (ctx_ == ParseContext::Generator && (kind == Var::Kind::Dependent || kind == Var::Kind::Jet)) {
      pos_ = start;
      fail("'" + name + "' is not allowed in a generator component");
    }
    return Poly(*v);
  }

  std::string_view s_;
  ParseContext ctx_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto i = s.find(sep, start);
    out.push_back(s.substr(start, i == std::string_view::npos ? std::string_view::npos : i - start));
    if (i == std::string_view::npos) return out;
    start = i + 1;
  }
}

Poly param(std::string_view text, Var symbol, std::size_t offset) {
  if (text == symbol.name()) return Poly(symbol);
  try {
    return Poly(parse_rat(text));
  } catch (const std::invalid_argument&) {
    throw ParseError("expected a rational or '" + symbol.name() + "', got '" + std::string(text) + "'", offset);
  }
}

}  // namespace

Poly parse_poly(std::string_view src, ParseContext ctx) { return Parser(src, ctx).parse(); }

FCase parse_fspec(std::string_view src) {
  const auto parts = split(src, ':');
  const std::string_view head = parts[0];
  auto offset = [&](std::size_t i) {
    std::size_t o = 0;
    for (std::size_t j = 0; j < i; ++j) o += parts[j].size() + 1;
    return o;
  };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1)
      throw ParseError("'" + std::string(head) + "' takes " + std::to_string(n) + " argument(s)", head.size());
  };
  try {
    if (head == "arbitrary") return arity(0), FCase::arbitrary();
    if (head == "zero") return arity(0), FCase::zero();
    if (head == "const") {
      arity(1);
      try {
        return FCase::constant(parse_rat(parts[1]));
      } catch (const std::invalid_argument&) {
        throw ParseError("expected a rational constant", offset(1));
      }
    }
    if (head == "linear") return arity(1), FCase::linear(param(parts[1], var::k, offset(1)));
    if (head == "power") return arity(2), FCase::power(param(parts[1], var::k, offset(1)), param(parts[2], var::p, offset(2)));
    if (head == "exp") return arity(1), FCase::exponential(param(parts[1], var::k, offset(1)));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  throw ParseError("unknown f-specification '" + std::string(head) + "'", 0);
}

VField parse_generator(std::string_view src) {
  if (src.find(',') == std::string_view::npos) {
    try {
      return gen::named(std::string(src));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  const auto parts = split(src, ',');
  if (parts.size() != 5) throw ParseError("a generator needs five components xi,phi,tau,alpha,beta", 0);
  VField S;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    try {
      S[kFns[i]] = parse_poly(parts[i], ParseContext::Generator);
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at position")) + " in " +
                           fn_name(kFns[i]),
                       offset + e.position());
    }
    offset += parts[i].size() + 1;
  }
  return S;
}

}  // namespace ks
