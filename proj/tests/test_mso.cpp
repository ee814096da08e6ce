#include <doctest.h>

#include "ordlim/errors.hpp"
#include "ordlim/mso.hpp"

using namespace ordlim;

namespace {

bool holds(const std::string& text, std::size_t n) { return eval_finite(*parse_formula(text), n); }

const std::string has_max = "exists x. forall y. (y < x | y = x)";

}  // namespace

TEST_CASE("parsing") {
  const FormulaPtr phi = parse_formula(has_max);
  CHECK(phi->kind == Formula::Kind::Exists);
  CHECK_FALSE(phi->is_set);
  CHECK(phi->children[0]->kind == Formula::Kind::Forall);
  CHECK(phi->children[0]->children[0]->kind == Formula::Kind::Or);

  const FormulaPtr t = parse_formula("forall X. X = X");
  CHECK(t->is_set);
  CHECK(t->children[0]->kind == Formula::Kind::Equal);

  CHECK(parse_formula("existsS Y. forallS Z. Y = Z")->is_set);
  CHECK(parse_formula("exists x. x = x -> x < x")->children[0]->kind == Formula::Kind::Implies);
  // '&' binds tighter than '|', which binds tighter than '->'.
  const FormulaPtr p = parse_formula("exists x. x < x | x = x & x < x -> x = x");
  CHECK(p->children[0]->kind == Formula::Kind::Implies);
  CHECK(p->children[0]->children[0]->kind == Formula::Kind::Or);
  CHECK(p->children[0]->children[0]->children[1]->kind == Formula::Kind::And);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_formula("exists x.");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_formula("exists x. x < y"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x. x in x"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists X. X < X"), ParseError);
  CHECK_THROWS_AS(parse_formula("existsS x. x = x"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x. x = x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x. (x = x"), ParseError);
  CHECK_THROWS_AS(parse_formula("exists x. x # x"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  try {
    parse_formula("forall x. x < q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 14);
    CHECK(std::string(e.what()).find("unbound") != std::string::npos);
  }
}

TEST_CASE("finite models") {
  CHECK_FALSE(holds(has_max, 0));
  CHECK(holds(has_max, 3));
  CHECK(holds("forall X. X = X", 4));
  CHECK(holds("forall x. !(x < x)", 5));
  CHECK(holds("forall x. forall y. forall z. (x < y & y < z -> x < z)", 5));
  CHECK(holds("existsS X. forall x. x in X", 3));
  CHECK_FALSE(holds("existsS X. existsS Y. !(X = Y) & forall x. (x in X -> x in Y) & forall x. (x in Y -> x in X)", 4));
  for (std::size_t n = 0; n <= 6; ++n) CHECK(holds("exists x. exists y. x < y", n) == (n >= 2));
  CHECK_THROWS_AS(holds(has_max, 13), CapExceeded);
  Config big;
  big.mso_oracle_bound = 14;
  CHECK(eval_finite(*parse_formula(has_max), 14, big));
}

TEST_CASE("evenness sentence tracks parity") {
  // X holds the even positions 0, 2, 4, ...; the maximum lies in X exactly when n is odd.
  const std::string succ = "(x < y & !(exists z. (x < z & z < y)))";
  const std::string odd_length =
      "existsS X. (forall x. (!(exists w. w < x) -> x in X))"
      " & (forall x. forall y. (" + succ + " -> ((x in X -> !(y in X)) & (!(x in X) -> y in X))))"
      " & (exists x. (x in X & forall y. (y < x | y = x)))";
  for (std::size_t n = 0; n <= 10; ++n) CHECK(holds(odd_length, n) == (n % 2 == 1));
}

TEST_CASE("catalog formulas agree with their recognizers on finite orders") {
  const auto& catalog = builtin_catalog();
  CHECK(catalog.size() >= 6);
  for (const auto& e : catalog) {
    CHECK_MESSAGE(validate_recognizer(e.recognizer).empty(), e.name);
    for (std::size_t n = 0; n <= 12; ++n)
      CHECK_MESSAGE(eval_finite(*e.formula, n) == eval_recognizer(e.recognizer, Ordinal::finite(n)), e.name, " n=", n);
  }
}

TEST_CASE("catalog recognizers on transfinite ordinals") {
  auto rec = [](const std::string& name) {
    for (const auto& e : builtin_catalog())
      if (e.name == name) return e.recognizer;
    throw std::runtime_error(name);
  };
  auto eval = [](const Recognizer& r, const char* x) { return eval_recognizer(r, parse_ordinal(x)); };
  CHECK(eval(rec("zero"), "0"));
  CHECK_FALSE(eval(rec("zero"), "w"));
  CHECK(eval(rec("limit"), "w*2"));
  CHECK_FALSE(eval(rec("limit"), "w+1"));
  CHECK_FALSE(eval(rec("limit"), "0"));
  CHECK(eval(rec("successor"), "w^w+1"));
  CHECK_FALSE(eval(rec("successor"), "w^w"));
  CHECK(eval(rec("at-least-omega"), "w"));
  CHECK_FALSE(eval(rec("at-least-omega"), "17"));
  CHECK(eval(rec("even-last-coefficient"), "w^3+w+8"));
  CHECK_FALSE(eval(rec("even-last-coefficient"), "w^3+w+7"));
  CHECK(eval(rec("divisible-by-omega2"), "w^5*2+w^2"));
  CHECK_FALSE(eval(rec("divisible-by-omega2"), "w^2+w"));
}

TEST_CASE("format and parse round trip") {
  for (const auto& e : builtin_catalog()) {
    const std::string text = format_formula(*e.formula);
    CHECK(format_formula(*parse_formula(text)) == text);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(eval_finite(*parse_formula(text), n) == eval_finite(*e.formula, n));
  }
  CHECK(format_formula(*parse_formula("exists x. (x = x -> x = x) -> x = x")) == "exists x. (x = x -> x = x) -> x = x");
  CHECK(format_formula(*parse_formula("forall x. !(x < x | x = x)")) == "forall x. !(x < x | x = x)");
}

TEST_CASE("empty recognizer") {
  const Recognizer none = empty_recognizer(2);
  CHECK(validate_recognizer(none).empty());
  CHECK(none.length() == 2);
  for (const char* x : {"0", "5", "w^w+3"}) CHECK_FALSE(eval_recognizer(none, parse_ordinal(x)));
}
