#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/config.hpp"
#include "ordlim/counting.hpp"
#include "ordlim/semilinear.hpp"
#include "ordlim/series.hpp"

namespace ordlim {

/// A: omega <= beta < omega^omega (Cesaro limits, polynomial growth).
/// B: omega^omega <= beta < epsilon_0 (plain limits, rho = 1).
/// C: symbolic segments with rho < 1 (plain limits in Q(rho)).
enum class Regime { A, B, C };

Regime classify(const Segment& ambient);
std::string format_regime(Regime regime);

enum class LimitKind { Plain, Cesaro };

/// numerator(x) / denominator(x) with integer coefficients.
struct RationalFunction {
  Series numerator{BigInt(1)};
  Series denominator{BigInt(1)};

  double evaluate(double x) const;
  /// Power series expansion to degree n; the denominator's constant term must be +-1.
  Series expand(std::size_t n) const;

  RationalFunction operator+(const RationalFunction& other) const;
  RationalFunction scaled(std::int64_t factor) const;
  bool is_zero() const;
};

std::string format_polynomial(const Series& coeffs, const std::string& var = "x");

struct LimitValue {
  enum class Form { None, Zero, Exact, RhoExpression };

  Form form = Form::None;
  Rational exact;               // Zero and Exact
  RationalFunction expression;  // RhoExpression, in the variable rho
  double numeric = 0;           // value of the limit; rho substituted for RhoExpression

  static LimitValue zero();
  static LimitValue rational(const Rational& q);
};

struct DensityReport {
  Segment ambient = Ordinal::omega();
  std::vector<Rational> values;        // D(n); skipped indices hold 0
  std::vector<std::size_t> skipped;    // n with c(n) = 0
  std::vector<Rational> cesaro;        // running means of values
  LimitValue limit;
  LimitKind limit_kind = LimitKind::Plain;
  std::optional<Regime> regime;
  std::uint64_t d = 1;                 // support grid of the numerator (regime A)
  std::optional<RadiusEstimate> rho_used;
  std::optional<RationalFunction> schur_factor;  // S(x) for a single linear set (regimes B, C)
};

/// S(x) = prod_{b_i>0} (1 + ... + x^((i+1)(b_i-1))) * prod_{b_i=0} 1/(1 - x^(i+1)).
RationalFunction schur_factor(const LinearSet& set);

DensityReport density_series(const LinearSet& set, std::size_t n, const Config& config = {});
DensityReport density_series(const SemilinearSet& set, std::size_t n, const Config& config = {});

/// Limit fields only: regime, limit, limit_kind, d, rho_used, schur_factor.
DensityReport closed_form_limit(const LinearSet& set, const Config& config = {});
DensityReport semilinear_limit(const SemilinearSet& set, const Config& config = {});

/// density_series and semilinear_limit in one report.
DensityReport density_report(const SemilinearSet& set, std::size_t n, const Config& config = {});

}  // namespace ordlim
