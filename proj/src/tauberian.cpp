#include "ordlim/tauberian.hpp"

#include <algorithm>
#include <numeric>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

Series poly_mul(const Series& a, const Series& b) {
  if (a.empty() || b.empty()) return {};
  return multiply(a, b, a.size() + b.size() - 2);
}

void trim(Series& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_regime_c_segment(const Segment& ambient) {
  const auto* s = std::get_if<SymbolicSegment>(&ambient);
  return s && (*s == SymbolicSegment::E0 || *s == SymbolicSegment::G0);
}

std::optional<Regime> try_classify(const Segment& ambient) {
  if (std::holds_alternative<SymbolicSegment>(ambient)) return Regime::C;
  const Ordinal& beta = std::get<Ordinal>(ambient);
  if (beta < Ordinal::omega()) return std::nullopt;
  return beta.leading_exponent().is_finite() ? Regime::A : Regime::B;
}

// Limit of a single linear set relative to c_beta; Rational for regimes A/B.
struct PartLimit {
  Rational value = 0;
  bool cesaro = false;
  std::uint64_t d = 1;
};

PartLimit regime_a_omega_power(const LinearSet& set, std::uint64_t s) {
  const auto clipped = clip_to_finite_power(set, s);
  if (!clipped) return {};
  PartLimit out;
  std::uint64_t product = 1;
  std::uint64_t grid = 0;
  for (std::size_t i = 0; i <= clipped->length(); ++i) {
    if (clipped->period[i] == 0) return {};
    product *= clipped->period[i];
    grid = std::gcd<std::uint64_t>(grid, (i + 1) * clipped->period[i]);
  }
  out.value = Rational(1, product);
  out.cesaro = true;
  out.d = grid;
  return out;
}

// beta < omega^omega of degree s: c_beta(n) ~ c_s * c_{omega^s}(n); pieces below the top exponent vanish.
PartLimit regime_a_general(const LinearSet& set, const Ordinal& beta) {
  const std::uint64_t s = *beta.leading_exponent().as_finite();
  const std::uint64_t top = beta.summands()[0].coefficient;
  PartLimit out;
  std::uint64_t grid = 0;
  for (const auto& piece : segment_pieces(beta)) {
    if (!(piece.exponent == Ordinal::finite(s))) continue;
    const LinearSet p = piece_as_linear(piece, beta);
    const std::size_t r = std::max(p.length(), set.length());
    const auto both = intersect_linear(pad(set, r), pad(p, r));
    if (!both) continue;
    std::uint64_t product = 1;
    bool positive = true;
    for (std::size_t i = 0; i < s; ++i) {
      if (both->period[i] == 0) positive = false;
      product *= both->period[i];
      grid = std::gcd<std::uint64_t>(grid, (i + 1) * both->period[i]);
    }
    if (positive) {
      out.value += Rational(1, product);
      out.cesaro = true;
    }
  }
  out.value /= top;
  out.d = grid == 0 ? 1 : grid;
  return out;
}

PartLimit regime_a(const LinearSet& set) {
  const Ordinal& beta = std::get<Ordinal>(set.ambient);
  if (set.tail == TailMode::Positive) {
    LinearSet any = set, none = set;
    any.tail = TailMode::Any;
    none.tail = TailMode::None;
    PartLimit a = regime_a(any);
    const PartLimit b = regime_a(none);
    a.value -= b.value;
    a.cesaro = a.cesaro || b.cesaro;
    return a;
  }
  if (is_omega_power(set.ambient)) return regime_a_omega_power(set, *beta.leading_exponent().as_finite());
  return regime_a_general(set, beta);
}

PartLimit regime_b(const LinearSet& set) {
  if (!is_omega_power(set.ambient))
    throw DomainError("closed_form_limit: regime B needs an omega-power ambient, got " + format_segment(set.ambient));
  if (set.tail == TailMode::None) return {};
  std::uint64_t product = 1;
  for (const auto b : set.period) {
    if (b == 0) return {};
    product *= b;
  }
  return {Rational(1, product), false, 1};
}

// rho^(sum (i+1) a_i) / S(rho), with tail None contributing 0.
RationalFunction regime_c(const LinearSet& set) {
  if (set.tail == TailMode::None) return {Series{BigInt(0)}, Series{BigInt(1)}};
  const RationalFunction s = schur_factor(set);
  std::size_t shift = 0;
  for (std::size_t i = 0; i <= set.length(); ++i) shift += (i + 1) * set.offset[i];
  Series num(shift + 1, BigInt(0));
  num[shift] = 1;
  return {poly_mul(num, s.denominator), s.numerator};
}

void set_rational_limit(DensityReport& report, const Rational& value) {
  report.limit = value == 0 ? LimitValue::zero() : LimitValue::rational(value);
}

RadiusEstimate rho_for(const Segment& ambient, const Config& config) {
  Config widened = config;
  widened.truncation = std::max(config.truncation, config.rho_truncation);
  return radius_estimate(count_series(ambient, config.rho_truncation, widened), config);
}

void fill_series(DensityReport& report, const Series& numerator, const Series& denominator) {
  const std::size_t n = numerator.size() - 1;
  report.values.assign(n + 1, Rational(0));
  report.cesaro.assign(n + 1, Rational(0));
  Rational running = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    if (denominator[i] == 0) {
      report.skipped.push_back(i);
    } else {
      report.values[i] = Rational(numerator[i], denominator[i]);
      running += report.values[i];
    }
    report.cesaro[i] = running / (i + 1);
  }
}

}  // namespace

Regime classify(const Segment& ambient) {
  const auto regime = try_classify(ambient);
  if (!regime) throw DomainError("no regime for finite segment " + format_segment(ambient));
  return *regime;
}

std::string format_regime(Regime regime) {
  switch (regime) {
    case Regime::A: return "A";
    case Regime::B: return "B";
    case Regime::C: return "C";
  }
  return "?";
}

double RationalFunction::evaluate(double x) const {
  auto horner = [x](const Series& p) {
    double acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].convert_to<double>();
    return acc;
  };
  return horner(numerator) / horner(denominator);
}

Series RationalFunction::expand(std::size_t n) const {
  if (denominator.empty() || (denominator[0] != 1 && denominator[0] != -1))
    throw DomainError("expand: denominator constant term must be +-1");
  Series out(n + 1, BigInt(0));
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt acc = k < numerator.size() ? numerator[k] : BigInt(0);
    for (std::size_t j = 1; j <= k && j < denominator.size(); ++j) acc -= denominator[j] * out[k - j];
    out[k] = denominator[0] == 1 ? acc : BigInt(-acc);
  }
  return out;
}

RationalFunction RationalFunction::operator+(const RationalFunction& other) const {
  RationalFunction out;
  if (denominator == other.denominator) {
    out.numerator = numerator;
    out.numerator.resize(std::max(numerator.size(), other.numerator.size()), BigInt(0));
    for (std::size_t i = 0; i < other.numerator.size(); ++i) out.numerator[i] += other.numerator[i];
    out.denominator = denominator;
  } else {
    out.numerator = poly_mul(numerator, other.denominator);
    const Series cross = poly_mul(other.numerator, denominator);
    out.numerator.resize(std::max(out.numerator.size(), cross.size()), BigInt(0));
    for (std::size_t i = 0; i < cross.size(); ++i) out.numerator[i] += cross[i];
    out.denominator = poly_mul(denominator, other.denominator);
  }
  trim(out.numerator);
  trim(out.denominator);
  return out;
}

RationalFunction RationalFunction::scaled(std::int64_t factor) const {
  RationalFunction out = *this;
  for (auto& c : out.numerator) c *= factor;
  trim(out.numerator);
  return out;
}

bool RationalFunction::is_zero() const {
  return std::all_of(numerator.begin(), numerator.end(), [](const BigInt& c) { return c == 0; });
}

std::string format_polynomial(const Series& coeffs, const std::string& var) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const bool negative = coeffs[i] < 0;
    const BigInt magnitude = negative ? BigInt(-coeffs[i]) : coeffs[i];
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0 || magnitude != 1) out += magnitude.str();
    if (i > 0) {
      if (magnitude != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

LimitValue LimitValue::zero() {
  LimitValue v;
  v.form = Form::Zero;
  v.exact = 0;
  v.expression = {Series{BigInt(0)}, Series{BigInt(1)}};
  return v;
}

LimitValue LimitValue::rational(const Rational& q) {
  LimitValue v;
  v.form = Form::Exact;
  v.exact = q;
  v.numeric = q.convert_to<double>();
  return v;
}

RationalFunction schur_factor(const LinearSet& set) {
  set.validate();
  RationalFunction s;
  for (std::size_t i = 0; i <= set.length(); ++i) {
    const std::size_t weight = i + 1;
    if (set.period[i] > 0) {
      Series block((weight * (set.period[i] - 1)) + 1, BigInt(0));
      for (std::size_t k = 0; k < set.period[i]; ++k) block[k * weight] = 1;
      s.numerator = poly_mul(s.numerator, block);
    } else {
      Series factor(weight + 1, BigInt(0));
      factor[0] = 1;
      factor[weight] = -1;
      s.denominator = poly_mul(s.denominator, factor);
    }
  }
  return s;
}

DensityReport density_series(const LinearSet& set, std::size_t n, const Config& config) {
  DensityReport report;
  report.ambient = set.ambient;
  report.regime = try_classify(set.ambient);
  fill_series(report, linear_count_series(set, n, config).values, count_series(set.ambient, n, config).values);
  return report;
}

DensityReport density_series(const SemilinearSet& set, std::size_t n, const Config& config) {
  DensityReport report;
  report.ambient = set.ambient;
  report.regime = try_classify(set.ambient);
  fill_series(report, semilinear_count_series(set, n, config), count_series(set.ambient, n, config).values);
  return report;
}

namespace {

DensityReport limit_of_terms(const Segment& ambient, const std::vector<SignedTerm>& terms, const Config& config) {
  DensityReport report;
  report.ambient = ambient;
  const Regime regime = classify(ambient);
  report.regime = regime;

  if (regime == Regime::C) {
    if (!is_regime_c_segment(ambient))
      throw DomainError("closed_form_limit: no linear-set limits over " + format_segment(ambient));
    report.limit_kind = LimitKind::Plain;
    RationalFunction total{Series{BigInt(0)}, Series{BigInt(1)}};
    for (const auto& term : terms) total = total + regime_c(term.set).scaled(term.coefficient);
    if (terms.size() == 1) report.schur_factor = schur_factor(terms[0].set);
    if (total.is_zero()) {
      report.limit = LimitValue::zero();
      return report;
    }
    report.rho_used = rho_for(ambient, config);
    report.limit.form = LimitValue::Form::RhoExpression;
    report.limit.expression = total;
    report.limit.numeric = total.evaluate(report.rho_used->rho);
    return report;
  }

  Rational total = 0;
  bool cesaro = false;
  std::uint64_t grid = 0;
  for (const auto& term : terms) {
    const PartLimit part = regime == Regime::A ? regime_a(term.set) : regime_b(term.set);
    total += part.value * term.coefficient;
    cesaro = cesaro || part.cesaro;
    grid = std::gcd(grid, part.d);
  }
  set_rational_limit(report, total);
  report.limit_kind = regime == Regime::A && cesaro ? LimitKind::Cesaro : LimitKind::Plain;
  report.d = grid == 0 ? 1 : grid;
  if (regime == Regime::B && terms.size() == 1) report.schur_factor = schur_factor(terms[0].set);
  return report;
}

}  // namespace

DensityReport closed_form_limit(const LinearSet& set, const Config& config) {
  set.validate();
  return limit_of_terms(set.ambient, {SignedTerm{1, set}}, config);
}

DensityReport semilinear_limit(const SemilinearSet& set, const Config& config) {
  std::vector<SignedTerm> terms;
  if (pairwise_disjoint(set)) {
    for (const auto& part : set.parts) terms.push_back({1, part});
  } else {
    terms = signed_pieces(set, config).terms;
  }
  DensityReport report = limit_of_terms(set.ambient, terms, config);
  // Semilinear limits below omega^omega are always reported in the Cesaro sense.
  if (report.regime == Regime::A) report.limit_kind = LimitKind::Cesaro;
  return report;
}

DensityReport density_report(const SemilinearSet& set, std::size_t n, const Config& config) {
  DensityReport report = semilinear_limit(set, config);
  const DensityReport series = density_series(set, n, config);
  report.values = series.values;
  report.skipped = series.skipped;
  report.cesaro = series.cesaro;
  return report;
}

}  // namespace ordlim
