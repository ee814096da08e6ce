#include "ordlim/recognizer.hpp"

#include <map>

#include "ordlim/errors.hpp"

namespace ordlim {

Transformation Transformation::identity(std::size_t size) {
  std::vector<State> image(size);
  for (std::size_t s = 0; s < size; ++s) image[s] = static_cast<State>(s);
  return Transformation(std::move(image));
}

Transformation Transformation::constant(std::size_t size, State value) {
  return Transformation(std::vector<State>(size, value));
}

Transformation Transformation::power(std::uint64_t k) const {
  Transformation result = identity(size());
  Transformation base = *this;
  while (k > 0) {
    if (k & 1) result = compose(base, result);
    base = compose(base, base);
    k >>= 1;
  }
  return result;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  std::vector<State> image(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) image[s] = f(g(static_cast<State>(s)));
  return Transformation(std::move(image));
}

namespace {

Lasso lasso_of(const Transformation& f) {
  std::map<std::vector<State>, std::uint64_t> seen;
  Transformation current = Transformation::identity(f.size());
  for (std::uint64_t k = 0;; ++k) {
    const auto [it, inserted] = seen.emplace(current.image(), k);
    if (!inserted) return {it->second, k - it->second};
    current = compose(f, current);
  }
}

State apply_power(const Transformation& f, std::uint64_t k, State s) {
  for (std::uint64_t i = 0; i < k; ++i) s = f(s);
  return s;
}

void require_valid(const Recognizer& rec) {
  const auto violations = validate_recognizer(rec);
  if (!violations.empty()) throw DomainError("invalid recognizer: " + violations.front().message);
}

}  // namespace

Lasso transformation_lasso(const Transformation& f, const Config& config) {
  if (f.size() > config.lasso_state_cap)
    throw CapExceeded("transformation_lasso: " + std::to_string(f.size()) + " states exceed cap " +
                      std::to_string(config.lasso_state_cap));
  return lasso_of(f);
}

std::vector<Violation> validate_recognizer(const Recognizer& rec) {
  std::vector<Violation> out;
  auto shape = [&out](std::string message) {
    out.push_back({Violation::Kind::Shape, 0, 0, 0, std::move(message)});
  };
  if (rec.states == 0) shape("state set is empty");
  if (rec.start >= rec.states) shape("start state out of range");
  if (rec.accepting.size() != rec.states) shape("accepting set has wrong size");
  if (rec.maps.size() < 2) shape("need at least the maps F_0 and F_{r+1}");
  for (std::size_t i = 0; i < rec.maps.size(); ++i) {
    if (rec.maps[i].size() != rec.states) shape("map F_" + std::to_string(i) + " has wrong domain size");
    for (State v : rec.maps[i].image())
      if (v >= rec.states) {
        shape("map F_" + std::to_string(i) + " leaves the state set");
        break;
      }
  }
  if (!out.empty()) return out;

  const std::size_t r = rec.length();
  const Transformation& last = rec.maps[r + 1];
  for (State s = 0; s < rec.states; ++s)
    if (last(last(s)) != last(s)) {
      out.push_back({Violation::Kind::NotIdempotent, r + 1, r + 1, s,
                     "F_" + std::to_string(r + 1) + " is not idempotent (state " + std::to_string(s) + ")"});
      break;
    }
  for (std::size_t j = 1; j <= r; ++j)
    for (std::size_t i = 0; i < j; ++i)
      for (State s = 0; s < rec.states; ++s)
        if (rec.maps[j](rec.maps[i](s)) != rec.maps[j](s)) {
          out.push_back({Violation::Kind::NotAbsorbing, i, j, s,
                         "F_" + std::to_string(j) + " o F_" + std::to_string(i) + " != F_" + std::to_string(j) +
                             " (state " + std::to_string(s) + ")"});
          break;
        }
  return out;
}

bool eval_recognizer(const Recognizer& rec, const Ordinal& x) {
  require_valid(rec);
  const std::size_t r = rec.length();
  const CnfSplit split = cnf_split(x, r);
  State s = rec.start;
  if (split.tail_positive()) s = rec.maps[r + 1](s);
  for (std::size_t i = r + 1; i-- > 0;) {
    const std::uint64_t k = split.coeffs[i];
    if (k == 0) continue;
    s = apply_power(rec.maps[i], lasso_of(rec.maps[i]).reduce(k), s);
  }
  return rec.accepts(s);
}

bool eval_recognizer_naive(const Recognizer& rec, const Ordinal& x) {
  require_valid(rec);
  const std::size_t r = rec.length();
  const CnfSplit split = cnf_split(x, r);
  State s = rec.start;
  if (split.tail_positive()) s = rec.maps[r + 1](s);
  for (std::size_t i = r + 1; i-- > 0;) s = apply_power(rec.maps[i], split.coeffs[i], s);
  return rec.accepts(s);
}

SemilinearSet spectrum(const Recognizer& rec, const Segment& beta, const Config& config) {
  require_valid(rec);
  const auto* ordinal = std::get_if<Ordinal>(&beta);
  if (ordinal && (!is_omega_power(beta) || ordinal->leading_exponent().is_zero()))
    throw DomainError("spectrum: ambient must be w^gamma with gamma >= 1, e0 or G0");
  if (const auto* s = std::get_if<SymbolicSegment>(&beta);
      s && *s != SymbolicSegment::E0 && *s != SymbolicSegment::G0)
    throw DomainError("spectrum: ambient must be w^gamma with gamma >= 1, e0 or G0");

  const std::size_t r = rec.length();
  std::vector<Lasso> lassos;
  std::uint64_t tuples = 2;
  for (std::size_t i = 0; i <= r; ++i) {
    lassos.push_back(transformation_lasso(rec.maps[i], config));
    tuples *= lassos.back().preperiod + lassos.back().period;
    if (tuples > config.spectrum_tuple_cap)
      throw CapExceeded("spectrum: more than " + std::to_string(config.spectrum_tuple_cap) + " coefficient tuples");
  }

  // omega^s with finite s has no room for a tail or for coordinates >= s.
  std::optional<std::uint64_t> finite_power;
  if (ordinal) finite_power = ordinal->leading_exponent().as_finite();

  SemilinearSet out{beta, {}};
  std::vector<std::uint64_t> k(r + 1, 0);
  for (int sgn = 0; sgn <= 1; ++sgn) {
    if (sgn == 1 && finite_power && *finite_power <= r + 1) continue;
    std::fill(k.begin(), k.end(), 0);
    while (true) {
      bool realizable = true;
      if (finite_power)
        for (std::size_t i = *finite_power; i <= r; ++i) realizable = realizable && k[i] == 0;

      if (realizable) {
        State s = rec.start;
        if (sgn == 1) s = rec.maps[r + 1](s);
        for (std::size_t i = r + 1; i-- > 0;) s = apply_power(rec.maps[i], k[i], s);
        if (rec.accepts(s)) {
          LinearSet part;
          part.ambient = beta;
          part.tail = sgn == 1 ? TailMode::Positive : TailMode::None;
          part.offset = k;
          part.period.resize(r + 1);
          for (std::size_t i = 0; i <= r; ++i) part.period[i] = k[i] < lassos[i].preperiod ? 0 : lassos[i].period;
          out.parts.push_back(std::move(part));
        }
      }

      std::size_t i = 0;
      while (i <= r && ++k[i] == lassos[i].preperiod + lassos[i].period) k[i++] = 0;
      if (i > r) break;
    }
  }
  return out;
}

DensityReport asymptotic_probability(const Recognizer& rec, const Segment& beta, std::size_t n_max,
                                     const Config& config) {
  return density_report(spectrum(rec, beta, config), n_max, config);
}

Recognizer negate(const Recognizer& rec) {
  Recognizer out = rec;
  out.accepting.flip();
  return out;
}

Recognizer pad_recognizer(const Recognizer& rec, std::size_t r) {
  require_valid(rec);
  if (r <= rec.length()) return rec;
  // F_{r+1} only ever acts on the start state, so a constant map reproduces it
  // and satisfies both axiom families at every new index.
  const Transformation fill = Transformation::constant(rec.states, rec.maps.back()(rec.start));
  Recognizer out = rec;
  out.maps.pop_back();
  while (out.maps.size() < r + 2) out.maps.push_back(fill);
  return out;
}

Recognizer combine(const Recognizer& lhs, const Recognizer& rhs, BoolOp op) {
  if (op == BoolOp::Not) return negate(lhs);
  const std::size_t r = std::max(lhs.length(), rhs.length());
  const Recognizer x = pad_recognizer(lhs, r);
  const Recognizer y = pad_recognizer(rhs, r);

  Recognizer out;
  out.states = x.states * y.states;
  auto pair = [&](State a, State b) { return static_cast<State>(a * y.states + b); };
  out.start = pair(x.start, y.start);
  out.accepting.resize(out.states);
  for (State a = 0; a < x.states; ++a)
    for (State b = 0; b < y.states; ++b)
      out.accepting[pair(a, b)] = op == BoolOp::And ? (x.accepts(a) && y.accepts(b)) : (x.accepts(a) || y.accepts(b));
  for (std::size_t i = 0; i < r + 2; ++i) {
    std::vector<State> image(out.states);
    for (State a = 0; a < x.states; ++a)
      for (State b = 0; b < y.states; ++b) image[pair(a, b)] = pair(x.maps[i](a), y.maps[i](b));
    out.maps.emplace_back(std::move(image));
  }
  const auto violations = validate_recognizer(out);
  if (!violations.empty()) throw DomainError("combine produced an invalid recognizer: " + violations.front().message);
  return out;
}

Recognizer tautology_recognizer(std::size_t r) {
  Recognizer out;
  out.states = 1;
  out.accepting = {true};
  out.maps.assign(r + 2, Transformation::identity(1));
  return out;
}

}  // namespace ordlim
