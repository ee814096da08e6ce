#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace ordlim {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Truncated power series with exact integer coefficients; index = degree.
using Series = std::vector<BigInt>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Product truncated to degree n.
Series multiply(const Series& lhs, const Series& rhs, std::size_t n);

/// x^k * s truncated to degree n.
Series shift(const Series& s, std::size_t k, std::size_t n);

/// Multiplies s in place by 1/(1 - x^step).
void divide_by_one_minus_power(Series& s, std::size_t step);

/// Multiplies s in place by (1 - x^step).
void multiply_by_one_minus_power(Series& s, std::size_t step);

/// Coefficients of prod_{m>=1} (1 - x^m)^(-p(m)), fed one prime count at a time.
///
/// Feeding p(m) for m = 1, 2, ... yields a(m) right away, so prime counts may
/// depend on earlier coefficients (self-referential tree classes).
class EulerProduct {
 public:
  EulerProduct();

  /// Supplies p(m) for m = degree() + 1 and returns the new coefficient a(m).
  const BigInt& extend(const BigInt& prime_count);

  std::size_t degree() const { return coeffs_.size() - 1; }
  const Series& coefficients() const { return coeffs_; }

 private:
  std::vector<BigInt> primes_;   // p(0..m), p(0) unused
  std::vector<BigInt> weights_;  // sum_{d | m} d * p(d)
  Series coeffs_;
};

/// Euler transform of p(1..n); p[0] is ignored.
Series euler_transform(const Series& prime_counts, std::size_t n);

}  // namespace ordlim
