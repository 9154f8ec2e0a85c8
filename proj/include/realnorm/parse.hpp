#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "realnorm/mpoly.hpp"

namespace realnorm {

namespace detail {

// Recursive-descent parser for the polynomial grammar:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' INTEGER)?
//   atom  := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>* declared)
      : text_(text), declared_(declared) {}

  MPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    MPoly p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MPoly term() {
    MPoly acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  MPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_ws();
      auto start = pos_;
      auto digits = integer_digits();
      if (digits.empty()) throw ParseError(start, "exponent must be a non-negative integer");
      if (digits.size() > 9) throw Error(ErrorKind::unsupported_size, "exponent too large");
      return pow(base, std::stoull(digits));
    }
    return base;
  }

  std::string integer_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  MPoly atom() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = integer_digits();
      auto save = pos_;
      if (accept('/')) {
        skip_ws();
        auto dpos = pos_;
        std::string den = integer_digits();
        if (den.empty()) throw ParseError(dpos, "expected integer denominator");
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError(dpos, "zero denominator");
        return MPoly::constant(parse_rational(num + "/" + den));
      }
      pos_ = save;
      return MPoly::constant(parse_rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto start = pos_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        name += text_[pos_++];
      if (declared_ && std::find(declared_->begin(), declared_->end(), name) == declared_->end()) {
        throw Error(ErrorKind::unknown_variable,
                    "undeclared variable '" + name + "' at position " + std::to_string(start));
      }
      return MPoly::variable(name);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>* declared_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial. With `declared`, undeclared names are rejected and
/// the result lives over the declared variables.
inline MPoly parse_poly(std::string_view text, const std::vector<std::string>* declared = nullptr) {
  MPoly p = detail::PolyParser(text, declared).parse();
  if (declared) {
    auto vars = *declared;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return p.with_vars(union_vars(vars, p.vars()));
  }
  return p;
}

inline MPoly parse_poly(std::string_view text, const std::vector<std::string>& declared) {
  return parse_poly(text, &declared);
}

}  // namespace realnorm
