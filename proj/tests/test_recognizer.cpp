#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/mso.hpp"
#include "ordlim/recognizer.hpp"

using namespace ordlim;

namespace {

Recognizer make(std::size_t states, State start, std::vector<bool> accepting, std::vector<std::vector<State>> maps) {
  Recognizer rec;
  rec.states = states;
  rec.start = start;
  rec.accepting = std::move(accepting);
  for (auto& m : maps) rec.maps.emplace_back(std::move(m));
  return rec;
}

Recognizer even() { return make(2, 0, {true, false}, {{1, 0}, {0, 0}}); }

std::vector<Ordinal> all_below(const Segment& beta, std::size_t max_norm) {
  std::vector<Ordinal> out;
  for (std::size_t k = 0; k <= max_norm; ++k) {
    auto level = enumerate_by_norm(beta, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace

TEST_CASE("lassos") {
  auto lasso = [](std::vector<State> f) { return transformation_lasso(Transformation(std::move(f))); };
  CHECK(lasso({0, 1, 2}).preperiod == 0);
  CHECK(lasso({0, 1, 2}).period == 1);
  CHECK(lasso({1, 0}).preperiod == 0);
  CHECK(lasso({1, 0}).period == 2);
  CHECK(lasso({0, 0}).preperiod == 1);
  CHECK(lasso({0, 0}).period == 1);
  // A 3-cycle fed by a tail of length 2.
  const Lasso t = lasso({1, 2, 3, 4, 2});
  CHECK(t.preperiod == 2);
  CHECK(t.period == 3);
  CHECK(t.reduce(100) == 2 + (98 % 3));
  CHECK_THROWS_AS(transformation_lasso(Transformation::identity(11)), CapExceeded);

  std::mt19937_64 rng(53);
  for (int k = 0; k < 200; ++k) {
    const Transformation f = gen::map(rng, 1 + k % 6);
    const Lasso l = transformation_lasso(f);
    CHECK(f.power(l.preperiod) == f.power(l.preperiod + l.period));
    if (l.preperiod > 0) CHECK_FALSE(f.power(l.preperiod - 1) == f.power(l.preperiod - 1 + l.period));
    for (std::uint64_t d = 1; d < l.period; ++d) CHECK_FALSE(f.power(l.preperiod) == f.power(l.preperiod + d));
  }
}

TEST_CASE("composition applies the right map first") {
  const Transformation f({1, 1, 2});
  const Transformation g({2, 0, 1});
  CHECK(compose(f, g) == Transformation({2, 1, 1}));
  CHECK(f.power(0) == Transformation::identity(3));
  CHECK(Transformation::constant(3, 2) == Transformation({2, 2, 2}));
}

TEST_CASE("validation") {
  CHECK(validate_recognizer(even()).empty());
  for (const auto& e : builtin_catalog()) CHECK_MESSAGE(validate_recognizer(e.recognizer).empty(), e.name);

  const auto swap_top = validate_recognizer(make(2, 0, {true, false}, {{0, 1}, {1, 0}}));
  REQUIRE(swap_top.size() == 1);
  CHECK(swap_top[0].kind == Violation::Kind::NotIdempotent);
  CHECK(swap_top[0].i == 1);

  // F_1 = identity does not absorb F_0 = swap.
  const auto pair = validate_recognizer(make(2, 0, {true, false}, {{1, 0}, {0, 1}, {0, 0}}));
  REQUIRE(pair.size() == 1);
  CHECK(pair[0].kind == Violation::Kind::NotAbsorbing);
  CHECK(pair[0].i == 0);
  CHECK(pair[0].j == 1);

  CHECK(validate_recognizer(make(2, 5, {true, false}, {{1, 0}, {0, 0}}))[0].kind == Violation::Kind::Shape);
  CHECK(validate_recognizer(make(2, 0, {true}, {{1, 0}, {0, 0}}))[0].kind == Violation::Kind::Shape);
  CHECK(validate_recognizer(make(2, 0, {true, false}, {{1, 0}}))[0].kind == Violation::Kind::Shape);
  CHECK(validate_recognizer(make(2, 0, {true, false}, {{1, 2}, {0, 0}}))[0].kind == Violation::Kind::Shape);
  CHECK_THROWS_AS(eval_recognizer(make(2, 0, {true, false}, {{0, 1}, {1, 0}}), Ordinal()), DomainError);
}

TEST_CASE("evaluation of the even recognizer") {
  CHECK_FALSE(eval_recognizer(even(), Ordinal::finite(5)));
  CHECK(eval_recognizer(even(), Ordinal::finite(6)));
  CHECK(eval_recognizer(even(), parse_ordinal("w*3+4")));
  CHECK_FALSE(eval_recognizer(even(), parse_ordinal("w^w+1")));
  CHECK(eval_recognizer(even(), Ordinal::finite(1'000'000'000'000)));
}

TEST_CASE("zero is accepted iff the start state is") {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) {
    const Recognizer rec = gen::recognizer(rng);
    CHECK(eval_recognizer(rec, Ordinal()) == rec.accepts(rec.start));
  }
}

TEST_CASE("lasso reduction agrees with naive iteration") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::uint64_t> coeff(0, 50);
  for (int t = 0; t < 40; ++t) {
    const Recognizer rec = gen::recognizer(rng);
    for (int s = 0; s < 25; ++s) {
      std::vector<std::uint64_t> k(rec.length() + 1);
      for (auto& v : k) v = coeff(rng);
      const Ordinal tail = s % 2 ? parse_ordinal("w+2") : Ordinal();
      const Ordinal x = cnf_join(tail, k);
      CHECK(eval_recognizer(rec, x) == eval_recognizer_naive(rec, x));
    }
  }
}

TEST_CASE("spectrum of the even recognizer") {
  const SemilinearSet s = spectrum(even(), Ordinal::omega());
  REQUIRE(s.parts.size() == 1);
  CHECK(s.parts[0].offset == std::vector<std::uint64_t>{0});
  CHECK(s.parts[0].period == std::vector<std::uint64_t>{2});
  CHECK(s.parts[0].tail == TailMode::None);
  for (std::uint64_t n = 0; n <= 30; ++n) CHECK(member(s, Ordinal::finite(n)) == (n % 2 == 0));
  CHECK_THROWS_AS(spectrum(even(), parse_segment("w^2+1")), DomainError);
  CHECK_THROWS_AS(spectrum(even(), parse_segment("BH-CT")), DomainError);
}

TEST_CASE("tautology spectrum is the whole segment") {
  const Segment ww = parse_segment("w^w");
  const SemilinearSet s = spectrum(tautology_recognizer(2), ww);
  for (const auto& x : all_below(ww, 10)) CHECK(member(s, x));
  CHECK(spectrum(empty_recognizer(1), ww).parts.empty());
}

TEST_CASE("spectrum membership equals evaluation") {
  std::vector<Recognizer> recs;
  for (const auto& e : builtin_catalog()) recs.push_back(e.recognizer);
  std::mt19937_64 rng(67);
  for (int t = 0; t < 20; ++t) recs.push_back(gen::recognizer(rng));
  for (const char* b : {"w", "w^2", "w^3", "w^w", "e0"}) {
    const Segment beta = parse_segment(b);
    const auto universe = all_below(beta, 12);
    for (const auto& rec : recs) {
      const SemilinearSet s = spectrum(rec, beta);
      for (const auto& x : universe) CHECK(member(s, x) == eval_recognizer(rec, x));
    }
  }
}

TEST_CASE("spectrum parts are disjoint") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) CHECK(pairwise_disjoint(spectrum(gen::recognizer(rng), parse_segment("w^w"))));
}

TEST_CASE("boolean combinations") {
  std::mt19937_64 rng(73);
  const auto universe = all_below(parse_segment("e0"), 10);
  for (int t = 0; t < 15; ++t) {
    const Recognizer r = gen::recognizer(rng);
    const Recognizer s = gen::recognizer(rng);
    const Recognizer nn = combine(combine(r, r, BoolOp::Not), r, BoolOp::Not);
    const Recognizer with_true = combine(r, tautology_recognizer(), BoolOp::And);
    const Recognizer excluded_middle = combine(r, negate(r), BoolOp::Or);
    const Recognizer both = combine(r, s, BoolOp::And);
    const Recognizer either = combine(r, s, BoolOp::Or);
    for (const auto* c : {&nn, &with_true, &excluded_middle, &both, &either}) CHECK(validate_recognizer(*c).empty());
    for (const auto& x : universe) {
      const bool a = eval_recognizer(r, x);
      const bool b = eval_recognizer(s, x);
      CHECK(eval_recognizer(nn, x) == a);
      CHECK(eval_recognizer(with_true, x) == a);
      CHECK(eval_recognizer(excluded_middle, x));
      CHECK(eval_recognizer(both, x) == (a && b));
      CHECK(eval_recognizer(either, x) == (a || b));
    }
  }
}

TEST_CASE("padding keeps the language") {
  std::mt19937_64 rng(79);
  const auto universe = all_below(parse_segment("e0"), 10);
  for (int t = 0; t < 15; ++t) {
    const Recognizer r = gen::recognizer(rng);
    const Recognizer p = pad_recognizer(r, r.length() + 2);
    CHECK(p.length() == r.length() + 2);
    CHECK(validate_recognizer(p).empty());
    for (const auto& x : universe) CHECK(eval_recognizer(p, x) == eval_recognizer(r, x));
  }
}

TEST_CASE("complement probabilities sum to one") {
  std::vector<Recognizer> recs;
  for (const auto& e : builtin_catalog()) recs.push_back(e.recognizer);
  std::mt19937_64 rng(83);
  for (int t = 0; t < 5; ++t) recs.push_back(gen::recognizer(rng));
  for (const char* b : {"w", "w^3", "w^w", "e0"}) {
    const Segment beta = parse_segment(b);
    for (const auto& rec : recs) {
      const DensityReport p = asymptotic_probability(rec, beta, 40);
      const DensityReport q = asymptotic_probability(negate(rec), beta, 40);
      for (std::size_t n = 0; n <= 40; ++n) CHECK(p.values[n] + q.values[n] == 1);
      if (p.limit.form != LimitValue::Form::RhoExpression && q.limit.form != LimitValue::Form::RhoExpression)
        CHECK(p.limit.exact + q.limit.exact == 1);
      else
        CHECK(p.limit.numeric + q.limit.numeric == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("asymptotic probability") {
  const DensityReport w = asymptotic_probability(even(), Ordinal::omega(), 100);
  CHECK(w.limit.exact == Rational(1, 2));
  CHECK(w.limit_kind == LimitKind::Cesaro);
  CHECK(w.cesaro[99] == Rational(1, 2));

  const DensityReport ww = asymptotic_probability(even(), parse_segment("w^w"), 200);
  CHECK(ww.limit.exact == Rational(1, 2));
  CHECK(ww.limit_kind == LimitKind::Plain);
  CHECK(std::abs(ww.values[200].convert_to<double>() - 0.5) < 0.025);

  for (const char* b : {"w", "w^w", "e0"}) {
    const DensityReport none = asymptotic_probability(empty_recognizer(1), parse_segment(b), 20);
    CHECK(none.limit.form == LimitValue::Form::Zero);
    for (const auto& v : none.values) CHECK(v == 0);
  }

  for (const auto& e : builtin_catalog()) {
    CHECK(asymptotic_probability(e.recognizer, Ordinal::omega(), 20).limit_kind == LimitKind::Cesaro);
    const DensityReport b = asymptotic_probability(e.recognizer, parse_segment("w^w"), 20);
    CHECK(b.limit_kind == LimitKind::Plain);
    CHECK(b.limit.form != LimitValue::Form::RhoExpression);
    const DensityReport c = asymptotic_probability(e.recognizer, parse_segment("e0"), 20);
    CHECK(c.limit_kind == LimitKind::Plain);
    CHECK(c.limit.form != LimitValue::Form::Exact);
  }
}
