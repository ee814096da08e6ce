#include "ordlim/mso.hpp"

#include <cctype>
#include <cstdint>
#include <optional>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

enum class Tok { Ident, Dot, Less, Eq, And, Or, Arrow, Bang, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '.': kind = Tok::Dot; break;
      case '<': kind = Tok::Less; break;
      case '=': kind = Tok::Eq; break;
      case '&': kind = Tok::And; break;
      case '|': kind = Tok::Or; break;
      case '!': kind = Tok::Bang; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "exists" || s == "forall" || s == "existsS" || s == "forallS" || s == "in";
}

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : tokens_(tokenize(text)) {}

  FormulaPtr parse() {
    FormulaPtr phi = implication();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return phi;
  }

 private:
  struct Binding {
    std::string name;
    bool is_set;
  };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, peek().pos); }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    ++pos_;
  }

  static FormulaPtr binary(Formula::Kind kind, FormulaPtr lhs, FormulaPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->children = {std::move(lhs), std::move(rhs)};
    return f;
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (peek().kind != Tok::Arrow) return lhs;
    ++pos_;
    return binary(Formula::Kind::Implies, lhs, implication());
  }

  FormulaPtr disjunction() {
    FormulaPtr lhs = conjunction();
    while (peek().kind == Tok::Or) {
      ++pos_;
      lhs = binary(Formula::Kind::Or, lhs, conjunction());
    }
    return lhs;
  }

  FormulaPtr conjunction() {
    FormulaPtr lhs = unary();
    while (peek().kind == Tok::And) {
      ++pos_;
      lhs = binary(Formula::Kind::And, lhs, unary());
    }
    return lhs;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == Tok::Bang) {
      ++pos_;
      auto f = std::make_shared<Formula>();
      f->kind = Formula::Kind::Not;
      f->children = {unary()};
      return f;
    }
    if (t.kind == Tok::LParen) {
      ++pos_;
      FormulaPtr inner = implication();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall" || t.text == "existsS" || t.text == "forallS"))
      return quantifier();
    if (t.kind == Tok::Ident) return atom();
    fail(t.kind == Tok::End ? "unexpected end of formula" : "unexpected '" + t.text + "'");
  }

  FormulaPtr quantifier() {
    const std::string keyword = next().text;
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail("expected a variable");
    const std::string name = next().text;
    const bool upper = std::isupper(static_cast<unsigned char>(name[0])) != 0;
    const bool set_sort = keyword.back() == 'S' || upper;
    if (keyword.back() == 'S' && !upper) fail("set variable '" + name + "' must start with an uppercase letter");
    expect(Tok::Dot, "'.'");
    scope_.push_back({name, set_sort});
    auto f = std::make_shared<Formula>();
    f->kind = keyword.starts_with("exists") ? Formula::Kind::Exists : Formula::Kind::Forall;
    f->is_set = set_sort;
    f->name = name;
    f->children = {implication()};
    scope_.pop_back();
    return f;
  }

  std::pair<std::size_t, bool> lookup(const Token& t) const {
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i].name == t.text) return {i, scope_[i].is_set};
    throw ParseError("unbound variable '" + t.text + "'", t.pos);
  }

  FormulaPtr atom() {
    const Token lhs_tok = next();
    if (is_keyword(lhs_tok.text)) throw ParseError("unexpected '" + lhs_tok.text + "'", lhs_tok.pos);
    const auto [lhs, lhs_set] = lookup(lhs_tok);
    auto f = std::make_shared<Formula>();
    f->lhs = lhs;
    f->lhs_name = lhs_tok.text;
    const Token op = peek();
    if (op.kind == Tok::Less) f->kind = Formula::Kind::Less;
    else if (op.kind == Tok::Eq) f->kind = Formula::Kind::Equal;
    else if (op.kind == Tok::Ident && op.text == "in") f->kind = Formula::Kind::In;
    else fail("expected '<', '=' or 'in'");
    ++pos_;
    if (peek().kind != Tok::Ident || is_keyword(peek().text)) fail("expected a variable");
    const Token rhs_tok = next();
    const auto [rhs, rhs_set] = lookup(rhs_tok);
    f->rhs = rhs;
    f->rhs_name = rhs_tok.text;
    switch (f->kind) {
      case Formula::Kind::Less:
        if (lhs_set || rhs_set) throw ParseError("'<' needs element variables", op.pos);
        break;
      case Formula::Kind::Equal:
        if (lhs_set != rhs_set) throw ParseError("'=' between an element and a set", op.pos);
        f->is_set = lhs_set;
        break;
      default:
        if (lhs_set || !rhs_set) throw ParseError("'in' needs an element on the left and a set on the right", op.pos);
    }
    return f;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Binding> scope_;
};

// env[depth] is an element for element binders and a bitmask for set binders.
bool eval(const Formula& phi, std::size_t n, std::vector<std::uint32_t>& env) {
  switch (phi.kind) {
    case Formula::Kind::Less: return env[phi.lhs] < env[phi.rhs];
    case Formula::Kind::Equal: return env[phi.lhs] == env[phi.rhs];
    case Formula::Kind::In: return (env[phi.rhs] >> env[phi.lhs]) & 1u;
    case Formula::Kind::Not: return !eval(*phi.children[0], n, env);
    case Formula::Kind::And: return eval(*phi.children[0], n, env) && eval(*phi.children[1], n, env);
    case Formula::Kind::Or: return eval(*phi.children[0], n, env) || eval(*phi.children[1], n, env);
    case Formula::Kind::Implies: return !eval(*phi.children[0], n, env) || eval(*phi.children[1], n, env);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      const bool want = phi.kind == Formula::Kind::Exists;
      const std::uint32_t range = phi.is_set ? (1u << n) : static_cast<std::uint32_t>(n);
      env.push_back(0);
      bool result = !want;
      for (std::uint32_t v = 0; v < range; ++v) {
        env.back() = v;
        if (eval(*phi.children[0], n, env) == want) {
          result = want;
          break;
        }
      }
      env.pop_back();
      return result;
    }
  }
  return false;
}

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    default: return 4;
  }
}

std::string format_at(const Formula& phi, int context) {
  std::string s;
  switch (phi.kind) {
    case Formula::Kind::Less: return phi.lhs_name + " < " + phi.rhs_name;
    case Formula::Kind::Equal: return phi.lhs_name + " = " + phi.rhs_name;
    case Formula::Kind::In: return phi.lhs_name + " in " + phi.rhs_name;
    case Formula::Kind::Not: return "!" + format_at(*phi.children[0], 4);
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      s = phi.kind == Formula::Kind::Exists ? "exists" : "forall";
      if (phi.is_set) s += "S";
      s += " " + phi.name + ". " + format_at(*phi.children[0], 0);
      return context > 0 ? "(" + s + ")" : s;
    default: break;
  }
  const int p = precedence(phi.kind);
  const char* op = phi.kind == Formula::Kind::And ? " & " : phi.kind == Formula::Kind::Or ? " | " : " -> ";
  // '->' groups to the right, '&' and '|' to the left.
  const bool right_assoc = phi.kind == Formula::Kind::Implies;
  s = format_at(*phi.children[0], right_assoc ? p + 1 : p) + op + format_at(*phi.children[1], right_assoc ? p : p + 1);
  return context > p ? "(" + s + ")" : s;
}

Recognizer make_recognizer(std::size_t states, std::vector<State> accepting, std::vector<std::vector<State>> maps) {
  Recognizer rec;
  rec.states = states;
  rec.accepting.assign(states, false);
  for (State s : accepting) rec.accepting[s] = true;
  for (auto& m : maps) rec.maps.emplace_back(std::move(m));
  return rec;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) { return FormulaParser(text).parse(); }

std::string format_formula(const Formula& phi) { return format_at(phi, 0); }

bool eval_finite(const Formula& phi, std::size_t n, const Config& config) {
  if (n > config.mso_oracle_bound)
    throw CapExceeded("eval_finite: n = " + std::to_string(n) + " exceeds oracle bound " +
                      std::to_string(config.mso_oracle_bound));
  if (n > 30) throw CapExceeded("eval_finite: set variables are limited to 30 elements");
  std::vector<std::uint32_t> env;
  return eval(phi, n, env);
}

Recognizer empty_recognizer(std::size_t r) { return negate(tautology_recognizer(r)); }

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    const std::string has_max = "exists x. forall y. (y < x | y = x)";
    const std::string nonempty = "exists x. x = x";
    // y is a limit: nonzero, no immediate predecessor.
    const std::string limit_y =
        "((exists z. z < y) & !(exists w. (w < y & forall u. (u < y -> (u < w | u = w)))))";
    const std::string starts_block = "!(exists w. (w < x & !(exists z. (w < z & z < x))))";
    const std::string successor_xy = "(x < y & !(exists z. (x < z & z < y)))";

    std::vector<CatalogEntry> out;
    out.push_back({"zero", "alpha = 0", parse_formula("!(" + nonempty + ")"),
                   make_recognizer(2, {0}, {{1, 1}, {1, 1}})});
    out.push_back({"successor", "has a maximum (k_0 > 0)", parse_formula(has_max),
                   make_recognizer(2, {1}, {{1, 1}, {0, 0}})});
    out.push_back({"at-least-omega", "alpha >= omega",
                   parse_formula("existsS X. ((exists x. x in X) & (forall x. (x in X -> (exists y. (x < y & y in X)))))"),
                   make_recognizer(2, {1}, {{0, 1}, {1, 1}})});
    out.push_back({"even-last-coefficient", "k_0 is even",
                   parse_formula("existsS X. (forall x. (" + starts_block + " -> x in X))"
                                 " & (forall x. forall y. (" + successor_xy + " -> ((x in X -> !(y in X)) & (!(x in X) -> y in X))))"
                                 " & !(exists x. (x in X & forall y. (y < x | y = x)))"),
                   make_recognizer(2, {0}, {{1, 0}, {0, 0}})});
    out.push_back({"limit", "alpha > 0 and k_0 = 0",
                   parse_formula("(" + nonempty + ") & !(" + has_max + ")"),
                   make_recognizer(3, {1}, {{2, 2, 2}, {1, 1, 1}})});
    out.push_back({"divisible-by-omega2", "k_0 = 0 and k_1 = 0",
                   parse_formula("forall x. exists y. (x < y & " + limit_y + ")"),
                   make_recognizer(2, {0}, {{1, 1}, {1, 1}, {0, 1}})});
    return out;
  }();
  return catalog;
}

}  // namespace ordlim
