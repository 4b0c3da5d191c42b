#include "tquery/dsl.hpp"

#include <cassert>
#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "tquery/errors.hpp"

namespace tquery {

namespace {

enum class TokenKind {
  End,
  Pipe,       // |>
  LBrace,
  RBrace,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Dot,
  Bang,
  Question,
  Colon,
  EqEq,
  AndAnd,
  OrOr,
  Ident,
  String,
  Int,
  Float,
  KwMatch,
  KwUnwind,
  KwProject,
  KwGroup,
  KwLookup,
  KwTrue,
  KwFalse,
  KwExists,
  KwIn,
  KwBy,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::int64_t int_value = 0;
  double float_value = 0.0;
  int line = 1;
  int column = 1;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    for (;;) {
      Token t = next();
      bool end = t.kind == TokenKind::End;
      tokens.push_back(std::move(t));
      if (end) return tokens;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& message, int line, int column) {
    throw ParseError(message, line, column);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_trivia() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token next() {
    skip_trivia();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;

    char c = peek();
    if (is_ident_start(c)) {
      std::string word;
      while (pos_ < src_.size() && is_ident_char(peek())) word += advance();
      t.text = word;
      if (word == "match") t.kind = TokenKind::KwMatch;
      else if (word == "unwind") t.kind = TokenKind::KwUnwind;
      else if (word == "project") t.kind = TokenKind::KwProject;
      else if (word == "group") t.kind = TokenKind::KwGroup;
      else if (word == "lookup") t.kind = TokenKind::KwLookup;
      else if (word == "true") t.kind = TokenKind::KwTrue;
      else if (word == "false") t.kind = TokenKind::KwFalse;
      else if (word == "exists") t.kind = TokenKind::KwExists;
      else if (word == "in") t.kind = TokenKind::KwIn;
      else if (word == "by") t.kind = TokenKind::KwBy;
      else t.kind = TokenKind::Ident;
      return t;
    }
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) return lex_number(t);
    if (c == '"') return lex_string(t);

    advance();
    switch (c) {
      case '{': t.kind = TokenKind::LBrace; return t;
      case '}': t.kind = TokenKind::RBrace; return t;
      case '(': t.kind = TokenKind::LParen; return t;
      case ')': t.kind = TokenKind::RParen; return t;
      case '[': t.kind = TokenKind::LBracket; return t;
      case ']': t.kind = TokenKind::RBracket; return t;
      case ',': t.kind = TokenKind::Comma; return t;
      case '.': t.kind = TokenKind::Dot; return t;
      case '!': t.kind = TokenKind::Bang; return t;
      case '?': t.kind = TokenKind::Question; return t;
      case ':': t.kind = TokenKind::Colon; return t;
      case '|':
        if (peek() == '>') {
          advance();
          t.kind = TokenKind::Pipe;
          return t;
        }
        if (peek() == '|') {
          advance();
          t.kind = TokenKind::OrOr;
          return t;
        }
        fail("expected '|>' or '||'", t.line, t.column);
      case '&':
        if (peek() == '&') {
          advance();
          t.kind = TokenKind::AndAnd;
          return t;
        }
        fail("expected '&&'", t.line, t.column);
      case '=':
        if (peek() == '=') {
          advance();
          t.kind = TokenKind::EqEq;
          return t;
        }
        fail("expected '=='", t.line, t.column);
      default:
        fail(std::string("unexpected character '") + c + "'", t.line, t.column);
    }
  }

  Token lex_number(Token t) {
    std::string text;
    if (peek() == '-') text += advance();
    while (is_digit(peek())) text += advance();
    bool is_float = false;
    if (peek() == '.' && is_digit(peek(1))) {
      is_float = true;
      text += advance();
      while (is_digit(peek())) text += advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      is_float = true;
      text += advance();
      if (peek() == '+' || peek() == '-') text += advance();
      if (!is_digit(peek())) fail("malformed exponent", line_, column_);
      while (is_digit(peek())) text += advance();
    }
    t.text = text;
    if (is_float) {
      t.kind = TokenKind::Float;
      t.float_value = std::strtod(text.c_str(), nullptr);
    } else {
      t.kind = TokenKind::Int;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), t.int_value);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        fail("integer literal out of range", t.line, t.column);
      }
    }
    return t;
  }

  Token lex_string(Token t) {
    advance();  // opening quote
    std::string value;
    for (;;) {
      if (pos_ >= src_.size()) fail("unterminated string", t.line, t.column);
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= src_.size()) fail("unterminated string", t.line, t.column);
        char esc = advance();
        switch (esc) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case '/': value += '/'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          default:
            fail(std::string("unsupported escape '\\") + esc + "'", line_, column_);
        }
      } else {
        value += c;
      }
    }
    t.kind = TokenKind::String;
    t.text = std::move(value);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(Lexer(src).tokenize()) {}

  Pipeline parse() {
    Pipeline p;
    p.stages.push_back(parse_stage());
    while (current().kind == TokenKind::Pipe) {
      advance();
      p.stages.push_back(parse_stage());
    }
    expect(TokenKind::End, "expected '|>' or end of query");
    return p;
  }

 private:
  const Token& current() const { return tokens_[index_]; }
  const Token& peek() const {
    return tokens_[index_ + 1 < tokens_.size() ? index_ + 1 : tokens_.size() - 1];
  }
  void advance() {
    if (index_ + 1 < tokens_.size()) ++index_;
  }

  [[noreturn]] void fail(const std::string& message) {
    throw ParseError(message, current().line, current().column);
  }

  void expect(TokenKind kind, const char* message) {
    if (current().kind != kind) fail(message);
  }

  void consume(TokenKind kind, const char* message) {
    expect(kind, message);
    advance();
  }

  bool at_path_start() const {
    return current().kind == TokenKind::Ident || current().kind == TokenKind::String;
  }

  Path parse_path() {
    std::vector<std::string> labels;
    for (;;) {
      if (!at_path_start()) fail("expected path segment");
      if (current().text.empty()) fail("path labels must be non-empty");
      labels.push_back(current().text);
      advance();
      if (current().kind != TokenKind::Dot) break;
      advance();
    }
    return Path(std::move(labels));
  }

  Scalar parse_literal() {
    Scalar value;
    switch (current().kind) {
      case TokenKind::Int: value = Scalar(current().int_value); break;
      case TokenKind::Float: value = Scalar(current().float_value); break;
      case TokenKind::String: value = Scalar(current().text); break;
      case TokenKind::KwTrue: value = Scalar(true); break;
      case TokenKind::KwFalse: value = Scalar(false); break;
      default: fail("expected literal");
    }
    advance();
    return value;
  }

  bool at_literal() const {
    switch (current().kind) {
      case TokenKind::Int:
      case TokenKind::Float:
      case TokenKind::String:
      case TokenKind::KwTrue:
      case TokenKind::KwFalse:
        return true;
      default:
        return false;
    }
  }

  // crit := or-expr; the optional seed is an already-parsed primary (used
  // when value-definition parsing discovers it is looking at a criterion).
  Criterion parse_criterion(std::optional<Criterion> seed = std::nullopt) {
    Criterion left = parse_and(std::move(seed));
    while (current().kind == TokenKind::OrOr) {
      advance();
      left = Criterion::disjunction(std::move(left), parse_and());
    }
    return left;
  }

  Criterion parse_and(std::optional<Criterion> seed = std::nullopt) {
    Criterion left = seed ? std::move(*seed) : parse_unary();
    while (current().kind == TokenKind::AndAnd) {
      advance();
      left = Criterion::conjunction(std::move(left), parse_unary());
    }
    return left;
  }

  Criterion parse_unary() {
    if (current().kind == TokenKind::Bang) {
      advance();
      return Criterion::negation(parse_unary());
    }
    return parse_crit_primary();
  }

  Criterion parse_crit_primary() {
    switch (current().kind) {
      case TokenKind::KwTrue:
        advance();
        return Criterion::truth();
      case TokenKind::KwExists:
        advance();
        return Criterion::exists(parse_path());
      case TokenKind::LParen: {
        advance();
        Criterion inner = parse_criterion();
        consume(TokenKind::RParen, "expected ')'");
        return inner;
      }
      case TokenKind::Ident:
      case TokenKind::String: {
        Path left = parse_path();
        consume(TokenKind::EqEq, "expected '==' after path");
        return parse_comparison_rhs(std::move(left));
      }
      default:
        fail("expected criterion");
    }
  }

  Criterion parse_comparison_rhs(Path left) {
    if (at_path_start()) return Criterion::paths_equal(std::move(left), parse_path());
    if (current().kind == TokenKind::LBracket) {
      advance();
      std::vector<Tree> elements;
      if (current().kind != TokenKind::RBracket) {
        elements.push_back(Tree::leaf(parse_literal()));
        while (current().kind == TokenKind::Comma) {
          advance();
          elements.push_back(Tree::leaf(parse_literal()));
        }
      }
      consume(TokenKind::RBracket, "expected ']'");
      return Criterion::path_equals(std::move(left), TreeArray(std::move(elements)));
    }
    // Scalar sugar: p == lit compares against the singleton array [lit{}].
    Tree element = Tree::leaf(parse_literal());
    return Criterion::path_equals(std::move(left), TreeArray(std::vector<Tree>{element}));
  }

  bool crit_follows() const {
    return peek().kind == TokenKind::Question || peek().kind == TokenKind::AndAnd ||
           peek().kind == TokenKind::OrOr;
  }

  ValueDef finish_criterion_def(Criterion c) {
    if (current().kind == TokenKind::Question) {
      advance();
      ValueDef then_def = parse_valuedef();
      consume(TokenKind::Colon, "expected ':' in ternary");
      ValueDef else_def = parse_valuedef();
      return ValueDef::ternary(std::move(c), std::move(then_def), std::move(else_def));
    }
    return ValueDef::criterion(std::move(c));
  }

  ValueDef parse_valuedef() {
    switch (current().kind) {
      case TokenKind::Int:
      case TokenKind::Float:
        return ValueDef::lit(parse_literal());
      case TokenKind::String: {
        // Quoted text is a string literal unless it opens a path (`"k".x`)
        // or a comparison (`"k" == ...`).
        if (peek().kind == TokenKind::Dot || peek().kind == TokenKind::EqEq) break;
        return ValueDef::lit(parse_literal());
      }
      case TokenKind::KwTrue:
        // Bare `true` is a boolean literal; as a criterion operand or a
        // ternary condition it is the truth criterion.
        if (crit_follows()) {
          advance();
          return finish_criterion_def(parse_criterion(Criterion::truth()));
        }
        advance();
        return ValueDef::lit(Scalar(true));
      case TokenKind::KwFalse:
        advance();
        return ValueDef::lit(Scalar(false));
      case TokenKind::Bang:
      case TokenKind::KwExists:
      case TokenKind::LParen:
        return finish_criterion_def(parse_criterion());
      case TokenKind::LBracket: {
        advance();
        std::vector<ValueDef> items;
        if (current().kind != TokenKind::RBracket) {
          items.push_back(parse_valuedef());
          while (current().kind == TokenKind::Comma) {
            advance();
            items.push_back(parse_valuedef());
          }
        }
        consume(TokenKind::RBracket, "expected ']'");
        return ValueDef::seq(std::move(items));
      }
      default:
        fail("expected value definition");
    }
    // Path-leading form: a reference, or the left side of a comparison.
    Path p = parse_path();
    if (current().kind == TokenKind::EqEq) {
      advance();
      Criterion first = parse_comparison_rhs(std::move(p));
      return finish_criterion_def(parse_criterion(std::move(first)));
    }
    return ValueDef::path_ref(std::move(p));
  }

  ProjectionItem parse_proj_item() {
    bool lone_string = current().kind == TokenKind::String && peek().kind != TokenKind::Dot &&
                       peek().kind != TokenKind::EqEq;
    std::string first_text = current().text;
    ValueDef def = parse_valuedef();
    if (current().kind == TokenKind::KwIn) {
      advance();
      return ProjectionItem::define(std::move(def), parse_nonempty_path("projection destination"));
    }
    if (def.kind == ValueDefKind::PathRef) return ProjectionItem::keep(std::move(def.path));
    // A quoted segment without `in` can only be a kept path.
    if (lone_string && !first_text.empty()) {
      return ProjectionItem::keep(Path(std::vector<std::string>{std::move(first_text)}));
    }
    fail("expected 'in' after value definition");
  }

  Path parse_nonempty_path(const char* what) {
    if (!at_path_start()) fail(std::string("expected ") + what);
    return parse_path();
  }

  PathPair parse_group_item() {
    PathPair pair;
    pair.source = parse_nonempty_path("grouping path");
    if (current().kind == TokenKind::KwIn) {
      advance();
      pair.dest = parse_nonempty_path("destination path");
    } else {
      pair.dest = pair.source;  // omission keeps the source structure
    }
    return pair;
  }

  Stage parse_stage() {
    switch (current().kind) {
      case TokenKind::KwMatch: {
        advance();
        consume(TokenKind::LBrace, "expected '{'");
        Criterion c = parse_criterion();
        consume(TokenKind::RBrace, "expected '}'");
        return stage::Match{std::move(c)};
      }
      case TokenKind::KwUnwind: {
        advance();
        consume(TokenKind::LBrace, "expected '{'");
        Path p = parse_nonempty_path("path");
        consume(TokenKind::RBrace, "expected '}'");
        return stage::Unwind{std::move(p)};
      }
      case TokenKind::KwProject: {
        advance();
        consume(TokenKind::LBrace, "expected '{'");
        ProjectionList items;
        items.push_back(parse_proj_item());
        while (current().kind == TokenKind::Comma) {
          advance();
          items.push_back(parse_proj_item());
        }
        consume(TokenKind::RBrace, "expected '}'");
        return stage::Project{std::move(items)};
      }
      case TokenKind::KwGroup: {
        advance();
        consume(TokenKind::LBrace, "expected '{'");
        GroupSpec spec;
        spec.aggregations.push_back(parse_group_item());
        while (current().kind == TokenKind::Comma) {
          advance();
          spec.aggregations.push_back(parse_group_item());
        }
        consume(TokenKind::KwBy, "expected 'by'");
        spec.groupings.push_back(parse_group_item());
        while (current().kind == TokenKind::Comma) {
          advance();
          spec.groupings.push_back(parse_group_item());
        }
        consume(TokenKind::RBrace, "expected '}'");
        return stage::Group{std::move(spec)};
      }
      case TokenKind::KwLookup: {
        advance();
        consume(TokenKind::LBrace, "expected '{'");
        LookupSpec spec;
        spec.local = parse_nonempty_path("path");
        consume(TokenKind::EqEq, "expected '=='");
        const Token& adjunct_tok = current();
        Path reference = parse_nonempty_path("adjunct dataset reference");
        if (reference.length() < 2) {
          throw ParseError("expected adjunct reference of the form name.path",
                           adjunct_tok.line, adjunct_tok.column);
        }
        spec.adjunct = reference.labels().front();
        spec.foreign = reference.tail();
        consume(TokenKind::KwIn, "expected 'in'");
        spec.dest = parse_nonempty_path("destination path");
        consume(TokenKind::RBrace, "expected '}'");
        return stage::Lookup{std::move(spec)};
      }
      default:
        fail("expected stage (match, unwind, project, group, lookup)");
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Pipeline parse_pipeline(std::string_view source) { return Parser(source).parse(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

bool plain_identifier(const std::string& label) {
  if (label.empty() || !is_ident_start(label[0])) return false;
  for (char c : label) {
    if (!is_ident_char(c)) return false;
  }
  static const char* keywords[] = {"match",  "unwind", "project", "group", "lookup",
                                   "true",   "false",  "exists",  "in",    "by"};
  for (const char* kw : keywords) {
    if (label == kw) return false;
  }
  return true;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string print_path(const Path& p) {
  std::string out;
  for (std::size_t i = 0; i < p.labels().size(); ++i) {
    if (i) out += '.';
    const std::string& label = p.labels()[i];
    out += plain_identifier(label) ? label : quote(label);
  }
  return out;
}

std::string print_scalar(const Scalar& v) {
  switch (v.kind()) {
    case Scalar::Kind::Bool:
      return v.as_bool() ? "true" : "false";
    case Scalar::Kind::Int:
      return std::to_string(v.as_int());
    case Scalar::Kind::Float:
      return float_repr(v.as_float());
    case Scalar::Kind::String:
      return quote(v.as_string());
    case Scalar::Kind::Null:
      throw std::invalid_argument("the null scalar has no query-text literal");
  }
  return {};
}

std::string print_leaf_array(const TreeArray& a) {
  std::string out = "[";
  for (std::int64_t i = 1; i <= a.size(); ++i) {
    Tree t = a.at(i);
    if (!t.branches().empty()) {
      throw std::invalid_argument("comparison arrays with non-leaf elements have no query-text form");
    }
    if (i > 1) out += ", ";
    out += print_scalar(t.root());
  }
  return out + "]";
}

// Precedence levels: || = 1, && = 2, ! = 3, primary = 4.
int precedence(const Criterion& c) {
  switch (c.kind) {
    case CriterionKind::Or: return 1;
    case CriterionKind::And: return 2;
    case CriterionKind::Not: return 3;
    default: return 4;
  }
}

std::string print_criterion(const Criterion& c, int parent_level) {
  std::string out;
  switch (c.kind) {
    case CriterionKind::True:
      out = "true";
      break;
    case CriterionKind::Exists:
      out = "exists " + print_path(c.path);
      break;
    case CriterionKind::PathEqArray: {
      out = print_path(c.path) + " == ";
      if (c.array.size() == 1 && c.array.at(1).branches().empty()) {
        out += print_scalar(c.array.at(1).root());  // singleton sugar
      } else {
        out += print_leaf_array(c.array);
      }
      break;
    }
    case CriterionKind::PathEqPath:
      out = print_path(c.path) + " == " + print_path(c.other_path);
      break;
    case CriterionKind::Not:
      out = "!" + print_criterion(c.operands[0], 3);
      break;
    case CriterionKind::And:
      out = print_criterion(c.operands[0], 2) + " && " + print_criterion(c.operands[1], 3);
      break;
    case CriterionKind::Or:
      out = print_criterion(c.operands[0], 1) + " || " + print_criterion(c.operands[1], 2);
      break;
  }
  if (precedence(c) < parent_level) return "(" + out + ")";
  return out;
}

std::string print_valuedef(const ValueDef& d) {
  switch (d.kind) {
    case ValueDefKind::ScalarLit:
      return print_scalar(d.scalar);
    case ValueDefKind::PathRef:
      return print_path(d.path);
    case ValueDefKind::Seq: {
      std::string out = "[";
      for (std::size_t i = 0; i < d.items.size(); ++i) {
        if (i) out += ", ";
        out += print_valuedef(d.items[i]);
      }
      return out + "]";
    }
    case ValueDefKind::Crit:
      // A bare truth criterion would re-parse as the boolean literal.
      if (d.condition[0].kind == CriterionKind::True) return "(true)";
      return print_criterion(d.condition[0], 0);
    case ValueDefKind::Ternary:
      return print_criterion(d.condition[0], 0) + " ? " + print_valuedef(d.items[0]) + " : " +
             print_valuedef(d.items[1]);
    case ValueDefKind::ArrayLit:
      throw std::invalid_argument("array-literal value definitions have no query-text form");
  }
  return {};
}

std::string print_group_item(const PathPair& pair) {
  if (pair.dest == pair.source) return print_path(pair.source);
  return print_path(pair.source) + " in " + print_path(pair.dest);
}

std::string print_stage(const Stage& s) {
  if (const auto* m = std::get_if<stage::Match>(&s)) {
    return "match { " + print_criterion(m->criterion, 0) + " }";
  }
  if (const auto* u = std::get_if<stage::Unwind>(&s)) {
    return "unwind { " + print_path(u->path) + " }";
  }
  if (const auto* p = std::get_if<stage::Project>(&s)) {
    std::string out = "project { ";
    for (std::size_t i = 0; i < p->items.size(); ++i) {
      if (i) out += ", ";
      const ProjectionItem& item = p->items[i];
      if (item.kind == ProjectionItem::Kind::KeepPath) {
        out += print_path(item.dest);
      } else {
        out += print_valuedef(item.def) + " in " + print_path(item.dest);
      }
    }
    return out + " }";
  }
  if (const auto* g = std::get_if<stage::Group>(&s)) {
    std::string out = "group { ";
    for (std::size_t i = 0; i < g->spec.aggregations.size(); ++i) {
      if (i) out += ", ";
      out += print_group_item(g->spec.aggregations[i]);
    }
    out += " by ";
    for (std::size_t i = 0; i < g->spec.groupings.size(); ++i) {
      if (i) out += ", ";
      out += print_group_item(g->spec.groupings[i]);
    }
    return out + " }";
  }
  const auto& l = std::get<stage::Lookup>(s);
  Path reference = Path(std::vector<std::string>{l.spec.adjunct}).joined(l.spec.foreign);
  return "lookup { " + print_path(l.spec.local) + " == " + print_path(reference) + " in " +
         print_path(l.spec.dest) + " }";
}

}  // namespace

std::string print_pipeline(const Pipeline& pipeline) {
  std::string out;
  for (std::size_t i = 0; i < pipeline.stages.size(); ++i) {
    if (i) out += "\n|> ";
    out += print_stage(pipeline.stages[i]);
  }
  return out;
}

}  // namespace tquery
