#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ordlim/config.hpp"
#include "ordlim/recognizer.hpp"

namespace ordlim {

/// Monadic second-order sentence over linear orders. Variables are resolved to
/// binder depths at parse time, so a parsed formula is always well scoped.
struct Formula {
  enum class Kind { Less, Equal, In, Not, And, Or, Implies, Exists, Forall };

  Kind kind = Kind::Equal;
  // Atoms: binder depths of the operands. Equal compares sets when is_set is true.
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  // Quantifiers: the bound variable; is_set selects the sort.
  bool is_set = false;
  std::string name;
  // Atoms also keep operand names for printing.
  std::string lhs_name;
  std::string rhs_name;
  std::vector<std::shared_ptr<const Formula>> children;
};

using FormulaPtr = std::shared_ptr<const Formula>;

/// Grammar, loosest first: '->' (right associative), '|', '&', then '!',
/// quantifiers (body extends as far right as possible), atoms and parentheses.
/// exists/forall bind a set variable when its name starts with an uppercase
/// letter; existsS/forallS always do. ParseError on syntax errors, unbound or
/// mis-sorted variables.
FormulaPtr parse_formula(const std::string& text);

std::string format_formula(const Formula& phi);

/// Truth in ({0..n-1}, <). CapExceeded if n > config.mso_oracle_bound.
bool eval_finite(const Formula& phi, std::size_t n, const Config& config = {});

struct CatalogEntry {
  std::string name;
  std::string description;
  FormulaPtr formula;
  Recognizer recognizer;
};

const std::vector<CatalogEntry>& builtin_catalog();

/// Accepts nothing, at length r.
Recognizer empty_recognizer(std::size_t r = 0);

}  // namespace ordlim
