#include "ordlim/semilinear.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

using Wide = __int128;

struct Progression {
  std::uint64_t offset;
  std::uint64_t period;
};

// Returns (g, x, y) with a*x + b*y = g = gcd(a, b).
std::tuple<Wide, Wide, Wide> extended_euclid(Wide a, Wide b) {
  Wide old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Wide q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
    std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
    std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

std::uint64_t narrow(Wide v) {
  if (v < 0 || v > static_cast<Wide>(std::numeric_limits<std::uint64_t>::max()))
    throw DomainError("linear set coordinate overflow");
  return static_cast<std::uint64_t>(v);
}

bool in_progression(std::uint64_t v, const Progression& p) {
  if (p.period == 0) return v == p.offset;
  return v >= p.offset && (v - p.offset) % p.period == 0;
}

std::optional<Progression> intersect_progressions(const Progression& p, const Progression& q) {
  if (p.period == 0) return in_progression(p.offset, q) ? std::optional(p) : std::nullopt;
  if (q.period == 0) return in_progression(q.offset, p) ? std::optional(q) : std::nullopt;

  // a + b l = a' + b' l'  =>  b l = (a' - a) mod b'
  const Wide a = p.offset, b = p.period, a2 = q.offset, b2 = q.period;
  const auto [h, inv, unused] = extended_euclid(b, b2);
  (void)unused;
  const Wide diff = a2 - a;
  if (diff % h != 0) return std::nullopt;
  const Wide modulus = b2 / h;
  Wide l = ((diff / h) % modulus) * (inv % modulus) % modulus;
  if (l < 0) l += modulus;
  const Wide lcm = b / h * b2;
  Wide value = a + b * l;
  if (value < a2) value += (a2 - value + lcm - 1) / lcm * lcm;
  return Progression{narrow(value), narrow(lcm)};
}

std::optional<TailMode> intersect_tails(TailMode x, TailMode y) {
  if (x == TailMode::Any) return y;
  if (y == TailMode::Any) return x;
  if (x == y) return x;
  return std::nullopt;
}

void require_same_ambient(const Segment& x, const Segment& y) {
  if (!(x == y))
    throw DomainError("ambient mismatch: " + format_segment(x) + " vs " + format_segment(y));
}

bool tail_ok(TailMode tail, const Ordinal& alpha0) {
  switch (tail) {
    case TailMode::None: return alpha0.is_zero();
    case TailMode::Positive: return !alpha0.is_zero();
    case TailMode::Any: return true;
  }
  return false;
}

// Tail-None count ignoring the ambient: x^(sum (i+1) a_i) * prod_{b_i > 0} 1/(1 - x^((i+1) b_i)).
Series unrestricted_count(const LinearSet& set, std::size_t n) {
  Series out(n + 1, BigInt(0));
  std::uint64_t shift = 0;
  for (std::size_t i = 0; i <= set.length(); ++i) {
    shift += (i + 1) * set.offset[i];
    if (shift > n) return out;
  }
  out[shift] = 1;
  for (std::size_t i = 0; i <= set.length(); ++i)
    if (set.period[i] > 0) {
      const std::uint64_t step = (i + 1) * set.period[i];
      if (step <= n) divide_by_one_minus_power(out, step);
    }
  return out;
}

std::optional<std::uint64_t> finite_leading_exponent(const Ordinal& beta) {
  return beta.leading_exponent().as_finite();
}

}  // namespace

void LinearSet::validate() const {
  if (offset.empty() || offset.size() != period.size())
    throw DomainError("linear set needs equally many offsets and periods (at least one)");
}

Ordinal LinearSet::reconstruct(const Ordinal& tail_value, std::span<const std::uint64_t> steps) const {
  validate();
  if (steps.size() != offset.size()) throw DomainError("reconstruct: wrong number of steps");
  std::vector<std::uint64_t> coeffs(offset.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = offset[i] + period[i] * steps[i];
  return cnf_join(tail_value, coeffs);
}

bool member(const LinearSet& set, const Ordinal& x) {
  set.validate();
  if (!below(x, set.ambient))
    throw DomainError(format_ordinal(x) + " is not below the ambient " + format_segment(set.ambient));
  const CnfSplit split = cnf_split(x, set.length());
  if (!tail_ok(set.tail, split.tail)) return false;
  for (std::size_t i = 0; i <= set.length(); ++i)
    if (!in_progression(split.coeffs[i], {set.offset[i], set.period[i]})) return false;
  return true;
}

bool member(const SemilinearSet& set, const Ordinal& x) {
  if (!below(x, set.ambient))
    throw DomainError(format_ordinal(x) + " is not below the ambient " + format_segment(set.ambient));
  return std::any_of(set.parts.begin(), set.parts.end(), [&](const LinearSet& p) { return member(p, x); });
}

LinearSet pad(const LinearSet& set, std::size_t r) {
  set.validate();
  if (r <= set.length()) return set;
  if (set.tail == TailMode::Positive)
    throw DomainError("a linear set with a positive tail cannot be padded to a longer length");
  LinearSet out = set;
  const std::uint64_t period = set.tail == TailMode::Any ? 1 : 0;
  out.offset.resize(r + 1, 0);
  out.period.resize(r + 1, period);
  return out;
}

std::optional<LinearSet> intersect_linear(const LinearSet& lhs, const LinearSet& rhs) {
  require_same_ambient(lhs.ambient, rhs.ambient);
  const std::size_t r = std::max(lhs.length(), rhs.length());
  const LinearSet x = pad(lhs, r);
  const LinearSet y = pad(rhs, r);
  const auto tail = intersect_tails(x.tail, y.tail);
  if (!tail) return std::nullopt;

  LinearSet out;
  out.ambient = lhs.ambient;
  out.tail = *tail;
  out.offset.resize(r + 1);
  out.period.resize(r + 1);
  for (std::size_t j = 0; j <= r; ++j) {
    const auto p = intersect_progressions({x.offset[j], x.period[j]}, {y.offset[j], y.period[j]});
    if (!p) return std::nullopt;
    out.offset[j] = p->offset;
    out.period[j] = p->period;
  }
  return out;
}

SemilinearSet set_union(const SemilinearSet& lhs, const SemilinearSet& rhs) {
  require_same_ambient(lhs.ambient, rhs.ambient);
  SemilinearSet out = lhs;
  out.parts.insert(out.parts.end(), rhs.parts.begin(), rhs.parts.end());
  return out;
}

SemilinearSet intersect(const SemilinearSet& lhs, const SemilinearSet& rhs) {
  require_same_ambient(lhs.ambient, rhs.ambient);
  SemilinearSet out{lhs.ambient, {}};
  for (const auto& p : lhs.parts)
    for (const auto& q : rhs.parts)
      if (auto both = intersect_linear(p, q)) out.parts.push_back(std::move(*both));
  return out;
}

namespace {

void inclusion_exclusion(const std::vector<LinearSet>& parts, std::size_t start, const LinearSet* current,
                         std::size_t depth, SignedDecomposition& out) {
  for (std::size_t i = start; i < parts.size(); ++i) {
    std::optional<LinearSet> next = current ? intersect_linear(*current, parts[i]) : parts[i];
    // Every superset of an empty intersection is empty too.
    if (!next) continue;
    out.terms.push_back({depth % 2 == 0 ? 1 : -1, *next});
    inclusion_exclusion(parts, i + 1, &*next, depth + 1, out);
  }
}

}  // namespace

SignedDecomposition signed_pieces(const SemilinearSet& set, const Config& config) {
  if (set.parts.size() > config.piece_cap)
    throw CapExceeded("signed_pieces: " + std::to_string(set.parts.size()) + " parts exceed cap " +
                      std::to_string(config.piece_cap));
  for (const auto& p : set.parts) require_same_ambient(set.ambient, p.ambient);
  SignedDecomposition out;
  inclusion_exclusion(set.parts, 0, nullptr, 0, out);
  return out;
}

bool pairwise_disjoint(const SemilinearSet& set) {
  for (std::size_t i = 0; i < set.parts.size(); ++i)
    for (std::size_t j = i + 1; j < set.parts.size(); ++j)
      if (intersect_linear(set.parts[i], set.parts[j])) return false;
  return true;
}

std::vector<SegmentPiece> decompose_beta(const Ordinal& beta) {
  if (beta < Ordinal::omega()) throw DomainError("decompose_beta requires beta >= w");
  return segment_pieces(beta);
}

LinearSet piece_as_linear(const SegmentPiece& piece, const Ordinal& beta) {
  const auto degree = finite_leading_exponent(beta);
  const auto free_below = piece.exponent.as_finite();
  if (!degree || !free_below) throw DomainError("piece_as_linear requires beta < w^w");
  LinearSet out;
  out.ambient = beta;
  out.tail = TailMode::None;
  out.offset.assign(*degree + 1, 0);
  out.period.assign(*degree + 1, 0);
  for (std::size_t i = 0; i < *free_below; ++i) out.period[i] = 1;
  for (const auto& s : piece.prefix.summands()) out.offset[*s.exponent.as_finite()] = s.coefficient;
  return out;
}

LinearSet whole_segment(const Segment& ambient, std::size_t r) {
  LinearSet out;
  out.ambient = ambient;
  out.tail = TailMode::Any;
  out.offset.assign(r + 1, 0);
  out.period.assign(r + 1, 1);
  return out;
}

std::optional<LinearSet> clip_to_finite_power(const LinearSet& set, std::uint64_t s) {
  set.validate();
  if (s == 0) throw DomainError("clip_to_finite_power requires s >= 1");
  if (set.tail == TailMode::Positive) throw DomainError("clip_to_finite_power: split positive tails first");
  const std::size_t target = static_cast<std::size_t>(s - 1);
  if (target >= set.length()) {
    LinearSet out = pad(set, target);
    out.tail = TailMode::None;
    return out;
  }
  // Coordinates >= s must be zero inside omega^s, and so must the tail.
  for (std::size_t i = target + 1; i <= set.length(); ++i)
    if (set.offset[i] != 0) return std::nullopt;
  LinearSet out = set;
  out.offset.resize(target + 1);
  out.period.resize(target + 1);
  out.tail = TailMode::None;
  return out;
}

CountSeries linear_count_series(const LinearSet& set, std::size_t n, const Config& config) {
  set.validate();
  if (n > config.truncation)
    throw CapExceeded("series truncation " + std::to_string(n) + " exceeds cap " + std::to_string(config.truncation));

  if (set.tail == TailMode::Positive) {
    LinearSet any = set, none = set;
    any.tail = TailMode::Any;
    none.tail = TailMode::None;
    CountSeries out = linear_count_series(any, n, config);
    const CountSeries zero_tail = linear_count_series(none, n, config);
    for (std::size_t i = 0; i <= n; ++i) out.values[i] -= zero_tail.values[i];
    return out;
  }

  const Segment& ambient = set.ambient;
  const auto* beta = std::get_if<Ordinal>(&ambient);

  if (beta && is_omega_power(ambient) && !beta->leading_exponent().is_zero()) {
    if (const auto s = beta->leading_exponent().as_finite()) {
      const auto clipped = clip_to_finite_power(set, *s);
      if (!clipped) return {ambient, Series(n + 1, BigInt(0))};
      return {ambient, unrestricted_count(*clipped, n)};
    }
  }

  if ((beta && is_omega_power(ambient) && !beta->leading_exponent().is_zero()) ||
      (!beta && (std::get<SymbolicSegment>(ambient) == SymbolicSegment::E0 ||
                 std::get<SymbolicSegment>(ambient) == SymbolicSegment::G0))) {
    // Every omega^i with i <= r is a prime of the ambient.
    LinearSet finite_part = set;
    finite_part.tail = TailMode::None;
    Series out = unrestricted_count(finite_part, n);
    if (set.tail == TailMode::Any) out = multiply(out, tail_series(ambient, set.length(), n, config).values, n);
    return {ambient, std::move(out)};
  }

  if (beta && finite_leading_exponent(*beta)) {
    Series out(n + 1, BigInt(0));
    for (const auto& piece : segment_pieces(*beta)) {
      const LinearSet p = piece_as_linear(piece, *beta);
      const std::size_t r = std::max(p.length(), set.length());
      const auto both = intersect_linear(pad(set, r), pad(p, r));
      if (!both) continue;
      const Series part = unrestricted_count(*both, n);
      for (std::size_t i = 0; i <= n; ++i) out[i] += part[i];
    }
    return {ambient, std::move(out)};
  }

  throw DomainError("linear_count_series: unsupported ambient " + format_segment(ambient));
}

Series semilinear_count_series(const SemilinearSet& set, std::size_t n, const Config& config) {
  Series out(n + 1, BigInt(0));
  if (pairwise_disjoint(set)) {
    for (const auto& part : set.parts) {
      const CountSeries cs = linear_count_series(part, n, config);
      for (std::size_t i = 0; i <= n; ++i) out[i] += cs.values[i];
    }
    return out;
  }
  for (const auto& term : signed_pieces(set, config).terms) {
    const CountSeries cs = linear_count_series(term.set, n, config);
    for (std::size_t i = 0; i <= n; ++i) out[i] += cs.values[i] * term.coefficient;
  }
  return out;
}

}  // namespace ordlim
