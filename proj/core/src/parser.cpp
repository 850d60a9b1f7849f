#include <modsm/parser.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace modsm {

namespace {

enum class Tok {
  Ident,      // lowercase identifier or quoted string
  Variable,
  Number,
  Not,        // keyword "not"
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Dot,
  Semicolon,
  If,         // ":-"
  Eq,         // "="
  Neq,        // "!="
  Directive,  // "#module", "#end"
  End,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(const std::string& text, const std::string& filename)
      : text_(text), file_(filename) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, "", here(0)});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    SourceSpan start = here(1);
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word = word_from(pos_);
      start.length = static_cast<int>(word.size());
      return {word == "not" ? Tok::Not : Tok::Ident, word, start};
    }
    if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
      std::string word = word_from(pos_);
      start.length = static_cast<int>(word.size());
      return {Tok::Variable, word, start};
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        digits += text_[pos_];
        advance();
      }
      start.length = static_cast<int>(digits.size());
      return {Tok::Number, digits, start};
    }
    switch (c) {
      case '"': {
        std::string s(1, '"');
        advance();
        while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
          s += text_[pos_];
          advance();
        }
        if (pos_ >= text_.size() || text_[pos_] != '"')
          throw SyntaxError(start, "unterminated quoted string");
        s += '"';
        advance();
        start.length = static_cast<int>(s.size());
        return {Tok::Ident, s, start};
      }
      case '(': advance(); return {Tok::LParen, "(", start};
      case ')': advance(); return {Tok::RParen, ")", start};
      case '{': advance(); return {Tok::LBrace, "{", start};
      case '}': advance(); return {Tok::RBrace, "}", start};
      case ',': advance(); return {Tok::Comma, ",", start};
      case '.': advance(); return {Tok::Dot, ".", start};
      case ';': advance(); return {Tok::Semicolon, ";", start};
      case '=': advance(); return {Tok::Eq, "=", start};
      case ':':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
          advance(); advance();
          start.length = 2;
          return {Tok::If, ":-", start};
        }
        throw SyntaxError(start, "expected ':-'");
      case '!':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
          advance(); advance();
          start.length = 2;
          return {Tok::Neq, "!=", start};
        }
        throw SyntaxError(start, "expected '!='");
      case '#': {
        advance();
        if (pos_ >= text_.size() ||
            !std::islower(static_cast<unsigned char>(text_[pos_])))
          throw SyntaxError(start, "expected a directive name after '#'");
        std::string word = "#" + word_from(pos_);
        start.length = static_cast<int>(word.size());
        return {Tok::Directive, word, start};
      }
      default:
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
  }

  std::string word_from(std::size_t) {
    std::string word;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        word += c;
        advance();
      } else {
        break;
      }
    }
    return word;
  }

  SourceSpan here(int length) const { return {file_, line_, col_, length}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// A parsed body literal before bucketing.
struct Literal {
  Atom atom;
  int negations = 0;       // 0 = pos, 1 = neg, 2 = negneg
  SourceSpan span;
};

class Parser {
 public:
  Parser(const std::string& text, const std::string& filename)
      : tokens_(Lexer(text, filename).run()) {}

  Program program() {
    Program p;
    while (!at(Tok::End)) {
      if (at(Tok::Directive))
        throw SyntaxError(peek().span,
                          "directive '" + peek().text +
                              "' is only valid in a modular (.mlp) file");
      p.rules.push_back(rule());
    }
    return p;
  }

  ModularProgram modular() {
    ModularProgram mp;
    std::set<std::string> names;
    while (!at(Tok::End)) {
      if (!at(Tok::Directive))
        throw SyntaxError(peek().span, "rules must appear inside a #module block");
      Token directive = take();
      if (directive.text == "#end")
        throw SyntaxError(directive.span, "'#end.' without a matching '#module'");
      if (directive.text != "#module")
        throw SyntaxError(directive.span,
                          "unknown directive '" + directive.text + "'");
      std::string name = module_name();
      if (!names.insert(name).second)
        throw SyntaxError(directive.span, "duplicate module name '" + name + "'");
      std::vector<std::string> tuple = intensional_tuple();
      expect(Tok::Dot, "expected '.' after the module header");
      Program body;
      while (!at(Tok::Directive)) {
        if (at(Tok::End))
          throw SyntaxError(peek().span,
                            "unexpected end of file inside module '" + name +
                                "' (missing '#end.')");
        body.rules.push_back(rule());
      }
      Token closer = take();
      if (closer.text != "#end")
        throw SyntaxError(closer.span, "expected '#end.' to close module '" +
                                           name + "', found '" + closer.text + "'");
      expect(Tok::Dot, "expected '.' after '#end'");
      try {
        mp.modules.emplace_back(name, std::move(tuple), std::move(body));
      } catch (const SemanticError& e) {
        throw SyntaxError(directive.span, e.what());
      }
    }
    // arity agreement across modules
    sigma(mp);
    return mp;
  }

 private:
  std::string module_name() {
    if (at(Tok::Ident) || at(Tok::Variable)) return take().text;
    throw SyntaxError(peek().span, "expected a module name");
  }

  std::vector<std::string> intensional_tuple() {
    expect(Tok::LBrace, "expected '{' opening the intensional tuple");
    std::vector<std::string> tuple;
    if (!at(Tok::RBrace)) {
      while (true) {
        if (!at(Tok::Ident))
          throw SyntaxError(peek().span, "expected a predicate name in the tuple");
        tuple.push_back(take().text);
        if (!at(Tok::Comma)) break;
        take();
      }
    }
    expect(Tok::RBrace, "expected '}' closing the intensional tuple");
    return tuple;
  }

  Rule rule() {
    std::vector<Atom> head;
    std::vector<Atom> pos, neg, negneg;
    bool choice = false;
    Atom choice_atom;

    if (at(Tok::LBrace)) {
      Token brace = take();
      Literal lit = literal();
      if (lit.negations != 0 || lit.atom.equality)
        throw SyntaxError(brace.span, "a choice head holds a single predicate atom");
      choice_atom = lit.atom;
      expect(Tok::RBrace, "expected '}' closing the choice head");
      if (at(Tok::Semicolon))
        throw SyntaxError(peek().span,
                          "a choice head cannot be combined with disjunction");
      head.push_back(choice_atom);
      choice = true;
    } else if (!at(Tok::If)) {
      while (true) {
        Literal lit = literal();
        if (lit.negations != 0)
          throw SyntaxError(lit.span, "negation is not allowed in a rule head");
        if (lit.atom.equality)
          throw SyntaxError(lit.span, "equality atoms may not appear in a rule head");
        head.push_back(lit.atom);
        if (!at(Tok::Semicolon)) break;
        take();
      }
    }

    if (at(Tok::If)) {
      take();
      if (!at(Tok::Dot)) {
        while (true) {
          Literal lit = literal();
          switch (lit.negations) {
            case 0: pos.push_back(std::move(lit.atom)); break;
            case 1: neg.push_back(std::move(lit.atom)); break;
            default: negneg.push_back(std::move(lit.atom)); break;
          }
          if (!at(Tok::Comma)) break;
          take();
        }
      }
    }
    expect(Tok::Dot, "expected '.' at the end of the rule");

    if (choice) negneg.push_back(choice_atom);
    return Rule(std::move(head), std::move(pos), std::move(neg),
                std::move(negneg));
  }

  Literal literal() {
    SourceSpan span = peek().span;
    int negations = 0;
    while (at(Tok::Not)) {
      take();
      ++negations;
      if (negations > 2)
        throw SyntaxError(span, "at most two nested 'not' are allowed");
    }
    std::pair<Atom, bool> parsed = atom_or_equality();
    Atom atom = std::move(parsed.first);
    if (parsed.second) ++negations;  // "t1 != t2" is "not t1 = t2"
    if (atom.equality && negations >= 2)
      throw SyntaxError(span,
                        "equality atoms may not appear under double negation");
    if (negations > 2)
      throw SyntaxError(span, "at most two nested 'not' are allowed");
    return {std::move(atom), negations, span};
  }

  // Parses a term and reinterprets it as a predicate atom unless an equality
  // sign follows.  Second component: true when written with "!=".
  std::pair<Atom, bool> atom_or_equality() {
    SourceSpan span = peek().span;
    Term t = term();
    if (at(Tok::Eq) || at(Tok::Neq)) {
      bool negated = take().kind == Tok::Neq;
      Term rhs = term();
      return {Atom::eq(std::move(t), std::move(rhs)), negated};
    }
    if (t.kind == Term::Kind::Variable)
      throw SyntaxError(span, "a variable is not an atom");
    if (std::isdigit(static_cast<unsigned char>(t.name[0])))
      throw SyntaxError(span, "a number cannot be used as a predicate");
    Atom a = Atom::pred(t.name, std::move(t.args));
    record_predicate(a, span);
    return {std::move(a), false};
  }

  Term term() {
    if (at(Tok::Variable)) return Term::variable(take().text);
    if (at(Tok::Number)) return Term::constant(take().text);
    if (!at(Tok::Ident))
      throw SyntaxError(peek().span,
                        "expected a term, found '" + peek().text + "'");
    Token name = take();
    std::vector<Term> args;
    if (at(Tok::LParen)) {
      if (name.text[0] == '"')
        throw SyntaxError(name.span, "a quoted constant cannot take arguments");
      take();
      while (true) {
        args.push_back(term());
        if (!at(Tok::Comma)) break;
        take();
      }
      expect(Tok::RParen, "expected ')' closing the argument list");
    }
    record_function(name.text, static_cast<int>(args.size()), name.span);
    return Term::function(name.text, std::move(args));
  }

  void record_predicate(const Atom& a, const SourceSpan& span) {
    int arity = static_cast<int>(a.args.size());
    auto [it, inserted] = predicate_arity_.emplace(a.predicate, arity);
    if (!inserted && it->second != arity)
      throw SyntaxError(span, "arity conflict for predicate '" + a.predicate +
                                  "': used with arity " +
                                  std::to_string(it->second) + " and arity " +
                                  std::to_string(arity));
  }

  void record_function(const std::string& name, int arity,
                       const SourceSpan& span) {
    auto [it, inserted] = function_arity_.emplace(name, arity);
    if (!inserted && it->second != arity)
      throw SyntaxError(span, "arity conflict for function symbol '" + name +
                                  "': used with arity " +
                                  std::to_string(it->second) + " and arity " +
                                  std::to_string(arity));
  }

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  Token take() { return tokens_[pos_++]; }
  void expect(Tok kind, const std::string& message) {
    if (!at(kind))
      throw SyntaxError(peek().span, message + " (found '" +
                                         (at(Tok::End) ? "end of file" : peek().text) +
                                         "')");
    take();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::map<std::string, int> predicate_arity_;
  std::map<std::string, int> function_arity_;
};

}  // namespace

Program parse_program(const std::string& text, const std::string& filename) {
  return Parser(text, filename).program();
}

ModularProgram parse_modular(const std::string& text,
                             const std::string& filename) {
  return Parser(text, filename).modular();
}

std::string render(const Program& p) {
  std::string out;
  for (const Rule& r : p.rules) {
    out += to_string(r);
    out += '\n';
  }
  return out;
}

std::string render(const ModularProgram& mp) {
  std::string out;
  bool first = true;
  for (const DefModule& m : mp.modules) {
    if (!first) out += '\n';
    first = false;
    out += "#module " + m.name + " {";
    for (std::size_t i = 0; i < m.intensional.size(); ++i) {
      if (i > 0) out += ", ";
      out += m.intensional[i];
    }
    out += "}.\n";
    out += render(m.program);
    out += "#end.\n";
  }
  return out;
}

}  // namespace modsm
