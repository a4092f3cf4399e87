#ifndef SUBOP_PARSER_HPP
#define SUBOP_PARSER_HPP

#include <stdexcept>
#include <string>

#include "subop/class_table.hpp"
#include "subop/types.hpp"

namespace subop {

/// Syntax or validation error in a program or type expression, with a
/// 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// Parses a program of class declarations into a validated ClassTable.
///
///   program := decl*
///   decl    := "class" IDENT ("<" IDENT ">")? "extends" IDENT "{" "}"
///
/// Whitespace-insensitive; "//" comments run to end of line. Rejects
/// duplicate names, unknown or generic superclasses, generic classes
/// extending anything but Object, and declaring Object/Null (or their
/// aliases O/N).
ClassTable parse_program(const std::string& source);

/// Parses a type expression over a validated table and canonicalizes it.
///
///   T   := IDENT | IDENT "<" ARG ">"
///   ARG := "?" | "?" ("extends"|"<:") T | "?" ("super"|":>") T | T
///
/// O and N alias Object and Null.
GroundType parse_type(const std::string& source, const ClassTable& table);

}  // namespace subop

#endif  // SUBOP_PARSER_HPP
