#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordlim/config.hpp"

namespace ordlim {

struct Summand;

/// An ordinal below epsilon_0 in Cantor normal form.
///
/// Stored as summands omega^e * c with strictly decreasing exponents and
/// positive coefficients; the empty sum is 0. Values are immutable and share
/// structure, so copies are cheap and safe across threads.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);

  /// Sorts by exponent (descending) and merges equal exponents; zero coefficients drop out.
  static Ordinal from_summands(std::vector<Summand> summands);

  std::span<const Summand> summands() const;

  bool is_zero() const { return node_ == nullptr; }
  bool is_finite() const;
  std::optional<std::uint64_t> as_finite() const;
  /// Largest exponent; 0 for the zero ordinal.
  Ordinal leading_exponent() const;
  /// Coefficient of omega^0 (k_0 in the split).
  std::uint64_t last_coefficient() const;
  bool is_successor() const { return last_coefficient() > 0; }
  bool is_limit() const { return !is_zero() && last_coefficient() == 0; }

  /// Number of occurrences of omega in the hereditary normal form.
  std::uint64_t norm() const;

  friend std::strong_ordering operator<=>(const Ordinal& lhs, const Ordinal& rhs);
  friend bool operator==(const Ordinal& lhs, const Ordinal& rhs);

 private:
  struct Node;
  explicit Ordinal(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Summand {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

/// Counting-only segments that have no term representation here.
enum class SymbolicSegment { E0, G0, BhOt, BhCt };

/// An ordinal segment [0, beta): either a concrete ordinal or a symbolic name.
using Segment = std::variant<Ordinal, SymbolicSegment>;

enum class Ordering { Less, Equal, Greater };

Ordering compare(const Ordinal& x, const Ordinal& y);

/// Hessenberg sum: merges the summand multisets.
Ordinal natural_sum(const Ordinal& x, const Ordinal& y);

/// Ordinary (non-commutative) ordinal addition x + y.
Ordinal ordinal_add(const Ordinal& x, const Ordinal& y);

/// omega^k * x, the only multiplication supported.
Ordinal omega_power_times(std::uint64_t k, const Ordinal& x);

inline std::uint64_t norm(const Ordinal& x) { return x.norm(); }

/// Result of writing x = omega^(r+1) * tail + omega^r * k_r + ... + k_0.
struct CnfSplit {
  Ordinal tail;
  std::vector<std::uint64_t> coeffs;  // index i holds k_i

  bool tail_positive() const { return !tail.is_zero(); }
};

CnfSplit cnf_split(const Ordinal& x, std::size_t r);

/// Inverse of cnf_split.
Ordinal cnf_join(const Ordinal& tail, std::span<const std::uint64_t> coeffs);

/// Parses the ASCII term grammar; '+' between terms is the commutative (sort-and-merge) sum.
Ordinal parse_ordinal(std::string_view text);
std::string format_ordinal(const Ordinal& x);

Segment parse_segment(std::string_view text);
std::string format_segment(const Segment& segment);
std::string format_segment(SymbolicSegment segment);

/// x < segment. Every term ordinal lies below the symbolic segments.
bool below(const Ordinal& x, const Segment& segment);

/// The set {prefix + delta : delta < omega^exponent}.
struct SegmentPiece {
  Ordinal prefix;
  Ordinal exponent;

  bool contains(const Ordinal& x) const;
};

/// Disjoint pieces covering [0, beta): one per CNF position j of beta and each
/// 1 <= k <= c_j, fixing the higher positions to beta and position j to c_j - k.
std::vector<SegmentPiece> segment_pieces(const Ordinal& beta);

/// All alpha < beta with N(alpha) = n in ascending order (brute-force oracle).
std::vector<Ordinal> enumerate_by_norm(const Segment& beta, std::size_t n, const Config& config = {});

}  // namespace ordlim
