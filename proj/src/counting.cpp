#include "ordlim/counting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "ordlim/errors.hpp"
#include "ordlim/matula.hpp"

namespace ordlim {

namespace {

void check_truncation(std::size_t n, const Config& config) {
  if (n > config.truncation)
    throw CapExceeded("series truncation " + std::to_string(n) + " exceeds cap " + std::to_string(config.truncation));
}

Series ordinal_series(const Ordinal& beta, std::size_t n);

// Ordinals below omega^gamma: Euler product over primes omega^xi, xi < gamma, of norm N(xi)+1.
Series omega_power_series(const Ordinal& gamma, std::size_t n) {
  if (gamma.is_zero()) {
    Series out(n + 1, BigInt(0));
    out[0] = 1;
    return out;
  }
  Series primes(n + 1, BigInt(0));
  if (n > 0) {
    const Series below_gamma = ordinal_series(gamma, n - 1);
    for (std::size_t m = 1; m <= n; ++m) primes[m] = below_gamma[m - 1];
  }
  return euler_transform(primes, n);
}

Series ordinal_series(const Ordinal& beta, std::size_t n) {
  // Pieces with a common exponent differ only by the norm of their prefix.
  std::map<Ordinal, Series> shifts;
  for (const auto& piece : segment_pieces(beta)) {
    const std::uint64_t offset = piece.prefix.norm();
    if (offset > n) continue;
    auto& s = shifts[piece.exponent];
    if (s.empty()) s.assign(n + 1, BigInt(0));
    s[offset] += 1;
  }
  Series out(n + 1, BigInt(0));
  for (const auto& [exponent, offsets] : shifts) {
    const Series part = multiply(offsets, omega_power_series(exponent, n), n);
    for (std::size_t i = 0; i <= n; ++i) out[i] += part[i];
  }
  return out;
}

Series e0_series(std::size_t n) {
  EulerProduct trees;
  while (trees.degree() < n) trees.extend(trees.coefficients()[trees.degree()]);
  return trees.coefficients();
}

// Principal terms phi(a, b) have norm 1 + N(a) + N(b).
BigInt principal_pairs(const Series& g, std::size_t m) {
  BigInt q = 0;
  for (std::size_t a = 0; a + 1 <= m; ++a) q += g[a] * g[m - 1 - a];
  return q;
}

Series g0_series(std::size_t n) {
  EulerProduct terms;
  while (terms.degree() < n) terms.extend(principal_pairs(terms.coefficients(), terms.degree() + 1));
  return terms.coefficients();
}

// OT(x) = exp(sum_i x^(2i) OT(x^i) / i): primes D_k(alpha) weigh N(alpha) + 2.
Series bh_ot_series(std::size_t n) {
  EulerProduct ot;
  while (ot.degree() < n) {
    const std::size_t m = ot.degree() + 1;
    ot.extend(m >= 2 ? ot.coefficients()[m - 2] : BigInt(0));
  }
  return ot.coefficients();
}

Series symbolic_primes(SymbolicSegment segment, std::size_t n) {
  Series primes(n + 1, BigInt(0));
  switch (segment) {
    case SymbolicSegment::E0: {
      const Series t = e0_series(n == 0 ? 0 : n - 1);
      for (std::size_t m = 1; m <= n; ++m) primes[m] = t[m - 1];
      break;
    }
    case SymbolicSegment::G0: {
      const Series g = g0_series(n == 0 ? 0 : n - 1);
      for (std::size_t m = 1; m <= n; ++m) primes[m] = principal_pairs(g, m);
      break;
    }
    case SymbolicSegment::BhOt: {
      const Series ot = bh_ot_series(n);
      for (std::size_t m = 2; m <= n; ++m) primes[m] = ot[m - 2];
      break;
    }
    case SymbolicSegment::BhCt: {
      const Series ot = bh_ot_series(n);
      for (std::size_t m = 1; m <= n; ++m) primes[m] = ot[m - 1];
      break;
    }
  }
  return primes;
}

}  // namespace

bool is_omega_power(const Segment& beta) {
  if (std::holds_alternative<SymbolicSegment>(beta)) return true;
  const auto terms = std::get<Ordinal>(beta).summands();
  return terms.size() == 1 && terms[0].coefficient == 1;
}

CountSeries count_series(const Segment& beta, std::size_t n, const Config& config) {
  check_truncation(n, config);
  if (const auto* ordinal = std::get_if<Ordinal>(&beta)) return {beta, ordinal_series(*ordinal, n)};
  switch (std::get<SymbolicSegment>(beta)) {
    case SymbolicSegment::E0: return {beta, e0_series(n)};
    case SymbolicSegment::G0: return {beta, g0_series(n)};
    case SymbolicSegment::BhOt: return {beta, bh_ot_series(n)};
    case SymbolicSegment::BhCt: return {beta, euler_transform(symbolic_primes(SymbolicSegment::BhCt, n), n)};
  }
  throw DomainError("unknown segment");
}

Series prime_counts(const Segment& beta, std::size_t n, const Config& config) {
  check_truncation(n, config);
  if (!is_omega_power(beta)) throw DomainError("prime_counts: " + format_segment(beta) + " is not an omega-power");
  if (const auto* s = std::get_if<SymbolicSegment>(&beta)) return symbolic_primes(*s, n);
  const Ordinal gamma = std::get<Ordinal>(beta).leading_exponent();
  Series primes(n + 1, BigInt(0));
  if (n > 0) {
    const Series below_gamma = ordinal_series(gamma, n - 1);
    for (std::size_t m = 1; m <= n; ++m) primes[m] = below_gamma[m - 1];
  }
  return primes;
}

CountSeries tail_series(const Segment& beta, std::size_t r, std::size_t n, const Config& config) {
  if (const auto* s = std::get_if<SymbolicSegment>(&beta); s && (*s == SymbolicSegment::BhOt || *s == SymbolicSegment::BhCt))
    throw DomainError("tail_series: Bachmann-Howard segments have no omega^i primes");
  Series primes = prime_counts(beta, n, config);
  const auto* ordinal = std::get_if<Ordinal>(&beta);
  for (std::size_t m = 1; m <= std::min(r + 1, n); ++m) {
    // prime omega^(m-1) exists iff m-1 < gamma
    if (ordinal && !(Ordinal::finite(m - 1) < ordinal->leading_exponent())) continue;
    primes[m] -= 1;
  }
  return {beta, euler_transform(primes, n)};
}

RadiusEstimate radius_estimate(const CountSeries& cs, const Config& config) {
  const std::size_t n = cs.truncation();
  if (n < 32) throw DomainError("radius_estimate needs truncation >= 32");
  std::size_t grid = 0;
  for (std::size_t i = 1; i <= n; ++i)
    if (cs.values[i] != 0) grid = std::gcd(grid, i);
  if (grid == 0) throw DomainError("radius_estimate: zero coefficients in window");

  const std::size_t window = config.ratio_window;
  const std::size_t top = n / grid * grid;
  if (top < grid * (window + 1)) throw DomainError("radius_estimate: window longer than series");

  RadiusEstimate est;
  est.grid = grid;
  // One extra ratio feeds the first extrapolation.
  std::vector<double> per_step;
  for (std::size_t k = window + 1; k >= 1; --k) {
    const std::size_t i = top - grid * k;
    if (cs.values[i] == 0 || cs.values[i + grid] == 0)
      throw DomainError("radius_estimate: zero coefficients in window");
    per_step.push_back(Rational(cs.values[i], cs.values[i + grid]).convert_to<double>());
  }
  const double root = 1.0 / static_cast<double>(grid);
  for (std::size_t k = 1; k < per_step.size(); ++k) {
    const auto m = static_cast<double>((top - grid * (window + 1 - k)) / grid);
    est.window.push_back(std::pow(per_step[k], root));
    est.extrapolated.push_back(std::pow(std::max(0.0, (m + 1) * per_step[k] - m * per_step[k - 1]), root));
  }
  const auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  const auto range = [](const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
  };
  est.raw_rho = mean(est.window);
  est.spread = range(est.window);
  est.extrapolated_spread = range(est.extrapolated);
  est.used_extrapolation = est.extrapolated_spread <= est.spread;
  est.rho = est.used_extrapolation ? std::min(1.0, mean(est.extrapolated)) : est.raw_rho;
  return est;
}

std::vector<CensusRow> matula_census(const Segment& beta, std::uint64_t n_max, const OrdinalPredicate& pred,
                                     const Config& config) {
  if (n_max > config.matula_cap)
    throw CapExceeded("matula census bound " + std::to_string(n_max) + " exceeds cap " +
                      std::to_string(config.matula_cap));
  if (const auto* s = std::get_if<SymbolicSegment>(&beta); s && *s != SymbolicSegment::E0)
    throw DomainError("matula census supports ordinals and e0 only");

  MatulaCoder coder;
  std::vector<CensusRow> rows(n_max + 1);
  CensusRow running;
  for (std::uint64_t m = 1; m <= n_max; ++m) {
    const Ordinal x = coder.decode(m);
    if (below(x, beta)) {
      ++running.total;
      if (pred && pred(x)) ++running.hits;
    }
    rows[m] = running;
  }
  return rows;
}

}  // namespace ordlim
