#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/tauberian.hpp"

using namespace ordlim;

namespace {

LinearSet make(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, TailMode tail, const char* ambient) {
  LinearSet set;
  set.offset = std::move(a);
  set.period = std::move(b);
  set.tail = tail;
  set.ambient = parse_segment(ambient);
  return set;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Config wide(std::size_t n) {
  Config c;
  c.truncation = n;
  return c;
}

}  // namespace

TEST_CASE("regimes") {
  CHECK(classify(parse_segment("w")) == Regime::A);
  CHECK(classify(parse_segment("w^3*2+w")) == Regime::A);
  CHECK(classify(parse_segment("w^w")) == Regime::B);
  CHECK(classify(parse_segment("w^(w^w)+1")) == Regime::B);
  CHECK(classify(parse_segment("e0")) == Regime::C);
  CHECK(classify(parse_segment("G0")) == Regime::C);
  CHECK_THROWS_AS(classify(parse_segment("7")), DomainError);
}

TEST_CASE("even numbers below omega alternate") {
  const LinearSet even = make({0}, {2}, TailMode::None, "w");
  const DensityReport d = density_series(even, 41);
  for (std::size_t n = 0; n <= 41; ++n) CHECK(d.values[n] == (n % 2 == 0 ? 1 : 0));
  CHECK(d.cesaro[41] == Rational(1, 2));
  CHECK(d.cesaro[40] == Rational(21, 41));

  const DensityReport lim = closed_form_limit(even);
  CHECK(lim.limit.form == LimitValue::Form::Exact);
  CHECK(lim.limit.exact == Rational(1, 2));
  CHECK(lim.limit_kind == LimitKind::Cesaro);
  CHECK(lim.d == 2);
}

TEST_CASE("the whole segment has density one") {
  for (const char* b : {"w", "w^2", "w^3", "w^w", "e0", "G0"}) {
    const DensityReport d = density_series(whole_segment(parse_segment(b), 1), 60);
    for (std::size_t n = 0; n <= 60; ++n)
      if (std::find(d.skipped.begin(), d.skipped.end(), n) == d.skipped.end()) CHECK(d.values[n] == 1);
  }
  const DensityReport lim = closed_form_limit(whole_segment(parse_segment("w^w"), 2));
  CHECK(lim.limit.exact == 1);
}

TEST_CASE("densities agree with enumeration") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> small(0, 3);
  for (const char* b : {"w^2", "w^3", "w^w", "e0"}) {
    const Segment beta = parse_segment(b);
    for (int t = 0; t < 10; ++t) {
      const std::size_t r = t % 3;
      std::vector<std::uint64_t> a, p;
      for (std::size_t i = 0; i <= r; ++i) {
        a.push_back(small(rng));
        p.push_back(small(rng));
      }
      const LinearSet set = make(a, p, t % 2 ? TailMode::Any : TailMode::None, b);
      const DensityReport d = density_series(set, 12);
      for (std::size_t n = 0; n <= 12; ++n) {
        const auto level = enumerate_by_norm(beta, n);
        std::size_t hits = 0;
        for (const auto& x : level) hits += member(set, x);
        CHECK(d.values[n] == Rational(hits, level.size()));
      }
    }
  }
}

TEST_CASE("regime A: product of periods, grid from the gcd") {
  // b_1 = 2, b_0 = 3.
  const LinearSet l = make({0, 0}, {3, 2}, TailMode::None, "w^2");
  const DensityReport lim = closed_form_limit(l);
  CHECK(lim.limit.exact == Rational(1, 6));
  CHECK(lim.limit_kind == LimitKind::Cesaro);
  CHECK(lim.d == 1);
  const DensityReport d = density_series(l, 2000, wide(2000));
  CHECK(std::abs(to_double(d.cesaro[2000]) - 1.0 / 6) <= 0.05 / 6);

  // b_1 = 1, b_0 = 2: steps 2 and 2.
  const LinearSet m = make({0, 0}, {2, 1}, TailMode::None, "w^2");
  CHECK(closed_form_limit(m).d == 2);
  const DensityReport dm = density_series(m, 200);
  for (std::size_t n = 1; n <= 200; n += 2) CHECK(dm.values[n] == 0);

  CHECK(closed_form_limit(make({0, 1}, {2, 0}, TailMode::None, "w^2")).limit.form == LimitValue::Form::Zero);
}

TEST_CASE("regime A limits match Cesaro averages") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> period(1, 3);
  std::uniform_int_distribution<int> offset(0, 2);
  for (int t = 0; t < 8; ++t) {
    const LinearSet l = make({std::uint64_t(offset(rng)), std::uint64_t(offset(rng))},
                             {std::uint64_t(period(rng)), std::uint64_t(period(rng))}, TailMode::None, "w^2");
    const double expected = to_double(closed_form_limit(l).limit.exact);
    CHECK(std::abs(to_double(density_series(l, 1500, wide(1500)).cesaro[1500]) - expected) <= 0.05);
  }
  // A general ambient: only the top pieces contribute.
  const LinearSet g = make({0, 0, 0}, {1, 2, 1}, TailMode::None, "w^2*2+w");
  const DensityReport lim = closed_form_limit(g);
  CHECK(lim.limit.exact == Rational(1, 2));
  CHECK(std::abs(to_double(density_series(g, 1500, wide(1500)).cesaro[1500]) - 0.5) <= 0.05);
}

TEST_CASE("shifted offsets shift the series") {
  for (const char* b : {"w^3", "w^w", "e0"}) {
    const LinearSet zero = make({0, 0}, {2, 3}, TailMode::Any, b);
    const LinearSet moved = make({3, 1}, {2, 3}, TailMode::Any, b);
    const Series base = linear_count_series(zero, 80).values;
    CHECK(linear_count_series(moved, 80).values == shift(base, 3 + 2 * 1, 80));
  }
}

TEST_CASE("regime B: plain limit 1/prod b") {
  const LinearSet l = make({0}, {2}, TailMode::Any, "w^w");
  const DensityReport lim = closed_form_limit(l);
  CHECK(lim.limit.exact == Rational(1, 2));
  CHECK(lim.limit_kind == LimitKind::Plain);
  // D(n) = 1/2 + O(n^(-1/2)): still 0.5214 at n = 200, inside 0.02 from n = 250 on.
  const DensityReport d = density_series(l, 260);
  const Series p = oracle::partitions(260);
  BigInt hits = 0;
  for (std::size_t j = 0; j < 100; ++j) hits += p[200 - 2 * j] - p[199 - 2 * j];
  CHECK(d.values[200] == Rational(hits + p[0], p[200]));
  CHECK(std::abs(to_double(d.values[200]) - 0.5) <= 0.025);
  CHECK(std::abs(to_double(d.values[260]) - 0.5) <= 0.02);
  for (std::size_t n = 100; n < 260; n += 2) CHECK(d.values[n + 2] < d.values[n]);

  CHECK(closed_form_limit(make({0}, {2}, TailMode::None, "w^w")).limit.form == LimitValue::Form::Zero);
  CHECK(closed_form_limit(make({1, 0}, {0, 2}, TailMode::Any, "w^w")).limit.form == LimitValue::Form::Zero);
  CHECK(closed_form_limit(make({1, 2}, {3, 2}, TailMode::Positive, "w^(w+1)")).limit.exact == Rational(1, 6));
  CHECK_THROWS_AS(closed_form_limit(make({0}, {2}, TailMode::Any, "w^w+w")), DomainError);
}

TEST_CASE("telescoping: S times the linear series is c_beta") {
  const std::size_t n = 200;
  for (const char* b : {"w^w", "w^(w+2)", "e0", "G0"}) {
    for (const auto& l : {make({0}, {2}, TailMode::Any, b), make({0, 0, 0}, {3, 0, 2}, TailMode::Any, b)}) {
      const Series t = linear_count_series(l, n).values;
      const Series s = schur_factor(l).expand(n);
      CHECK(multiply(s, t, n) == count_series(l.ambient, n).values);
    }
  }
}

TEST_CASE("regime C: limit in rho") {
  const LinearSet l = make({0}, {2}, TailMode::Any, "e0");
  const DensityReport lim = closed_form_limit(l);
  REQUIRE(lim.limit.form == LimitValue::Form::RhoExpression);
  REQUIRE(lim.rho_used);
  const double rho = lim.rho_used->rho;
  CHECK(rho == doctest::Approx(0.338).epsilon(0.03));
  CHECK(lim.limit.numeric == doctest::Approx(1 / (1 + rho)));
  CHECK(lim.limit.expression.numerator == Series{1});
  CHECK(lim.limit.expression.denominator == Series{1, 1});
  CHECK(lim.limit.numeric > 0);
  CHECK(lim.limit.numeric < 1);
  const DensityReport d = density_series(l, 120);
  CHECK(std::abs(to_double(d.values[120]) - lim.limit.numeric) <= 0.03);
  CHECK(closed_form_limit(make({0}, {2}, TailMode::None, "e0")).limit.form == LimitValue::Form::Zero);
}

TEST_CASE("regime C: offsets contribute rho^shift") {
  // Odd last coefficient: rho / (1 + rho), not 1 / (rho (1 + rho)).
  const LinearSet l = make({1}, {2}, TailMode::Any, "e0");
  const DensityReport lim = closed_form_limit(l);
  const double rho = lim.rho_used->rho;
  CHECK(lim.limit.numeric == doctest::Approx(rho / (1 + rho)));
  const DensityReport d = density_series(l, 120);
  CHECK(std::abs(to_double(d.values[120]) - lim.limit.numeric) <= 0.03);

  const LinearSet g = make({1, 0}, {1, 0}, TailMode::Any, "G0");
  const DensityReport lg = closed_form_limit(g);
  const DensityReport dg = density_series(g, 120);
  CHECK(std::abs(to_double(dg.values[120]) - lg.limit.numeric) <= 0.03);
}

TEST_CASE("semilinear limits") {
  const Segment w = Ordinal::omega();
  const auto residue = [](std::uint64_t a, std::uint64_t b) { return make({a}, {b}, TailMode::None, "w"); };

  DensityReport r = semilinear_limit(SemilinearSet{w, {residue(0, 2), residue(1, 2)}});
  CHECK(r.limit.exact == 1);
  CHECK(r.limit_kind == LimitKind::Cesaro);

  r = semilinear_limit(SemilinearSet{w, {residue(0, 3), residue(1, 3)}});
  CHECK(r.limit.exact == Rational(2, 3));

  const SemilinearSet both{w, {residue(0, 2), residue(0, 3)}};
  r = density_report(both, 600, wide(600));
  CHECK(r.limit.exact == Rational(2, 3));
  CHECK(std::abs(to_double(r.cesaro[600]) - 2.0 / 3) < 0.01);

  const SemilinearSet ww{parse_segment("w^w"), {make({0}, {2}, TailMode::Any, "w^w"), make({0}, {3}, TailMode::Any, "w^w")}};
  CHECK(semilinear_limit(ww).limit.exact == Rational(2, 3));

  const SemilinearSet empty{w, {}};
  CHECK(semilinear_limit(empty).limit.form == LimitValue::Form::Zero);
  const DensityReport ed = density_series(empty, 10);
  for (const auto& v : ed.values) CHECK(v == 0);
}

TEST_CASE("densities and limits stay in [0, 1]") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> small(0, 3);
  for (const char* b : {"w", "w^2", "w^w", "e0"}) {
    for (int t = 0; t < 10; ++t) {
      SemilinearSet set{parse_segment(b), {}};
      for (int k = 0; k < 2; ++k) {
        std::vector<std::uint64_t> a, p;
        for (std::size_t i = 0; i <= std::size_t(t % 2); ++i) {
          a.push_back(small(rng));
          p.push_back(small(rng));
        }
        set.parts.push_back(make(a, p, k ? TailMode::Any : TailMode::None, b));
      }
      const DensityReport d = density_report(set, 40);
      for (std::size_t n = 0; n <= 40; ++n) {
        CHECK(d.values[n] >= 0);
        CHECK(d.values[n] <= 1);
        CHECK(d.cesaro[n] >= 0);
        CHECK(d.cesaro[n] <= 1);
      }
      if (d.limit.form == LimitValue::Form::Exact) {
        CHECK(d.limit.exact >= 0);
        CHECK(d.limit.exact <= 1);
      }
      if (d.limit.form == LimitValue::Form::RhoExpression) {
        CHECK(d.limit.numeric >= 0);
        CHECK(d.limit.numeric <= 1);
      }
    }
  }
}

TEST_CASE("rational functions") {
  const RationalFunction geometric{Series{1}, Series{1, -1}};
  CHECK(geometric.expand(5) == Series(6, 1));
  CHECK(geometric.evaluate(0.5) == doctest::Approx(2.0));
  const RationalFunction sum = geometric + geometric.scaled(-1);
  CHECK(sum.is_zero());
  CHECK(format_polynomial(Series{1, 0, -2}) == "1 - 2*x^2");
  const RationalFunction s = schur_factor(make({0, 0}, {2, 0}, TailMode::Any, "w^w"));
  CHECK(s.numerator == Series{1, 1});
  CHECK(s.denominator == Series{1, 0, -1});
}
