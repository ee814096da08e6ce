#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ordlim/config.hpp"
#include "ordlim/counting.hpp"
#include "ordlim/ordinal.hpp"

namespace ordlim {

/// Constraint on alpha_0 in x = omega^(r+1) * alpha_0 + omega^r * k_r + ... + k_0.
enum class TailMode { None, Any, Positive };

/// {x < ambient : tail(alpha_0) and k_i in a_i + b_i * N for every i <= r}.
///
/// A period of 0 fixes the coordinate at its offset. Members are always taken
/// inside the ambient segment, so coordinates or tails the ambient cannot
/// realize simply contribute nothing.
struct LinearSet {
  std::vector<std::uint64_t> offset;  // a_i at index i
  std::vector<std::uint64_t> period;  // b_i at index i
  TailMode tail = TailMode::None;
  Segment ambient = Ordinal::omega();

  std::size_t length() const { return offset.size() - 1; }  // r

  /// Throws DomainError if offset/period sizes differ or are empty.
  void validate() const;

  /// The element with the given tail and coordinates k_i = a_i + b_i * l_i.
  Ordinal reconstruct(const Ordinal& tail_value, std::span<const std::uint64_t> steps) const;

  friend bool operator==(const LinearSet&, const LinearSet&) = default;
};

struct SemilinearSet {
  Segment ambient = Ordinal::omega();
  std::vector<LinearSet> parts;
};

struct SignedTerm {
  std::int64_t coefficient = 1;
  LinearSet set;
};

struct SignedDecomposition {
  std::vector<SignedTerm> terms;
};

/// Requires x below the ambient (DomainError otherwise).
bool member(const LinearSet& set, const Ordinal& x);
bool member(const SemilinearSet& set, const Ordinal& x);

/// Extends to length r by appending coordinates: fixed at 0 for tail None,
/// free (a = 0, b = 1) for tail Any. A Positive tail cannot be padded and raises DomainError.
LinearSet pad(const LinearSet& set, std::size_t r);

std::optional<LinearSet> intersect_linear(const LinearSet& lhs, const LinearSet& rhs);

SemilinearSet set_union(const SemilinearSet& lhs, const SemilinearSet& rhs);
SemilinearSet intersect(const SemilinearSet& lhs, const SemilinearSet& rhs);

/// Inclusion-exclusion terms with empty intersections omitted.
SignedDecomposition signed_pieces(const SemilinearSet& set, const Config& config = {});

/// True when no two parts intersect.
bool pairwise_disjoint(const SemilinearSet& set);

/// Disjoint pieces of [0, beta) for beta >= omega. See segment_pieces.
std::vector<SegmentPiece> decompose_beta(const Ordinal& beta);

/// A piece of beta < omega^omega as a tail-None linear set of length deg(beta).
LinearSet piece_as_linear(const SegmentPiece& piece, const Ordinal& beta);

/// The whole segment as a linear set (length r, all coordinates free).
LinearSet whole_segment(const Segment& ambient, std::size_t r = 0);

/// Coefficient n = #{x in set : N(x) = n}.
///
/// Supported ambients: omega-powers, e0, G0, and arbitrary beta < omega^omega.
CountSeries linear_count_series(const LinearSet& set, std::size_t n, const Config& config = {});

/// Exact counts of the union, via disjoint sums or inclusion-exclusion.
Series semilinear_count_series(const SemilinearSet& set, std::size_t n, const Config& config = {});

/// Normal form for ambients omega^s with finite s: length s-1 (0 when s<=1), tail None;
/// std::nullopt when the set is empty inside the ambient.
std::optional<LinearSet> clip_to_finite_power(const LinearSet& set, std::uint64_t s);

}  // namespace ordlim
