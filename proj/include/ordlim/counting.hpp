#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ordlim/config.hpp"
#include "ordlim/ordinal.hpp"
#include "ordlim/series.hpp"

namespace ordlim {

/// c(0..N) for a segment: c(n) = number of ordinals below the segment with norm n.
struct CountSeries {
  Segment segment;
  Series values;

  std::size_t truncation() const { return values.empty() ? 0 : values.size() - 1; }
};

CountSeries count_series(const Segment& beta, std::size_t n, const Config& config = {});

/// Multisets of primes omega^xi of the segment with xi > r, counted by norm.
/// The segment must be an omega-power ordinal, e0 or G0.
CountSeries tail_series(const Segment& beta, std::size_t r, std::size_t n, const Config& config = {});

/// p(m) for m = 0..n: number of additive primes of norm m in the segment (p(0) = 0).
/// The segment must be an omega-power ordinal or symbolic.
Series prime_counts(const Segment& beta, std::size_t n, const Config& config = {});

/// True for beta = omega^gamma (gamma >= 0) and every symbolic segment.
bool is_omega_power(const Segment& beta);

/// Estimate of the radius of convergence from trailing coefficient ratios.
///
/// Raw ratios q_m = c(m)/c(m+1) are also extrapolated linearly in 1/m as
/// (m+1) q_m - m q_(m-1). rho is the mean of the extrapolated window when that
/// window is tighter than the raw one, and the raw mean otherwise (oscillating
/// series).
struct RadiusEstimate {
  double rho = 0;
  double raw_rho = 0;
  std::vector<double> window;        // raw ratios, oldest first
  std::vector<double> extrapolated;  // extrapolated ratios, oldest first
  double spread = 0;                 // max - min over the raw window
  double extrapolated_spread = 0;
  bool used_extrapolation = false;
  std::size_t grid = 1;              // support lattice; ratios are c(n)/c(n+grid) to the 1/grid
};

RadiusEstimate radius_estimate(const CountSeries& cs, const Config& config = {});

/// One row of the multiplicative census: C(n) = #{m <= n : decode(m) < beta}.
struct CensusRow {
  std::uint64_t total = 0;
  std::uint64_t hits = 0;
};

using OrdinalPredicate = std::function<bool(const Ordinal&)>;

/// Rows for n = 0..n_max. beta must be an ordinal or e0.
std::vector<CensusRow> matula_census(const Segment& beta, std::uint64_t n_max, const OrdinalPredicate& pred = {},
                                     const Config& config = {});

}  // namespace ordlim
