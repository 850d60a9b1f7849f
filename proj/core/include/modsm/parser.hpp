#ifndef MODSM_PARSER_HPP
#define MODSM_PARSER_HPP

#include <string>

#include <modsm/errors.hpp>
#include <modsm/modular.hpp>
#include <modsm/syntax.hpp>

namespace modsm {

// Text syntax.
//
//   rule        ::= head ":-" body "." | head "." | ":-" [body] "."
//   head        ::= atom { ";" atom } | "{" atom "}"
//   body        ::= literal { "," literal }
//   literal     ::= ["not" ["not"]] atom
//                 | ["not"] term "=" term
//                 | term "!=" term
//   atom        ::= predicate [ "(" term { "," term } ")" ]
//   term        ::= variable | constant | function "(" term { "," term } ")"
//
// Constants, predicates and function symbols match [a-z][A-Za-z0-9_]*, a
// number, or a quoted string (numbers and quoted strings only name
// constants).  Variables match [A-Z_][A-Za-z0-9_]*.  "%" starts a line
// comment.  "t1 != t2" is sugar for "not t1 = t2" and lands in the neg
// bucket.  A choice head "{a} :- B." desugars to "a :- B, not not a.".
//
// Modular files wrap rules in blocks:
//
//   #module <name> {p1, ..., pm}.
//     rules...
//   #end.

struct SourceSpan {
  std::string file;
  int line = 1;      // 1-based
  int column = 1;    // 1-based
  int length = 0;    // characters

  std::string to_string() const {
    return file + ":" + std::to_string(line) + ":" + std::to_string(column);
  }
};

struct SyntaxError : Error {
  SyntaxError(const SourceSpan& span, const std::string& message)
      : Error(span.to_string() + ": " + message), span(span) {}

  SourceSpan span;
};

// Parses a traditional program.  Arity consistency is checked while parsing;
// equality in a head or under double negation is rejected.
Program parse_program(const std::string& text,
                      const std::string& filename = "<input>");

// Parses a modular program: a sequence of #module ... #end. blocks.
ModularProgram parse_modular(const std::string& text,
                             const std::string& filename = "<input>");

// Canonical text.  parse(render(x)) equals x structurally; choice rules
// render in desugared form.
std::string render(const Program& p);
std::string render(const ModularProgram& mp);

}  // namespace modsm

#endif  // MODSM_PARSER_HPP
