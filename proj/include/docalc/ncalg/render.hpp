#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "docalc/ncalg/expression.hpp"

namespace docalc::ncalg {

std::string render_atom(const Atom& a);
std::string render(const Expression& e);

struct ParseError : std::runtime_error {
  enum class Kind { Syntax, UnknownFamily, MalformedIndex };
  ParseError(Kind k, std::size_t off, const std::string& msg)
      : std::runtime_error(msg + " at offset " + std::to_string(off)), kind(k), offset(off) {}
  Kind kind;
  std::size_t offset;
};

/// Parse the expression grammar:
///
///   expr    := ["-"] term (("+"|"-") term)*
///   term    := power ("*"? power)*
///   power   := postfix ("^" INT)?
///   postfix := primary "'"*
///   primary := INT ["/" INT] | "i" | "J" | atom | "(" expr ")"
///            | "[" expr "," expr "]" | "D(" expr ")" | "d(" expr ")"
///   atom    := FAMILY DIGIT* "'"*
///
/// D(e) = [e, J] and d(e) = e' - e. The result is J-normal but no
/// commutation table is applied.
Expression parse(std::string_view text);

}  // namespace docalc::ncalg
