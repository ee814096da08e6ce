#include "ordlim/series.hpp"

#include <algorithm>

#include "ordlim/errors.hpp"

namespace ordlim {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'", 0);
  }
}

Series multiply(const Series& lhs, const Series& rhs, std::size_t n) {
  Series out(n + 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.size() && i <= n; ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size() && i + j <= n; ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

Series shift(const Series& s, std::size_t k, std::size_t n) {
  Series out(n + 1, BigInt(0));
  for (std::size_t i = 0; i < s.size() && i + k <= n; ++i) out[i + k] = s[i];
  return out;
}

void divide_by_one_minus_power(Series& s, std::size_t step) {
  for (std::size_t i = step; i < s.size(); ++i) s[i] += s[i - step];
}

void multiply_by_one_minus_power(Series& s, std::size_t step) {
  for (std::size_t i = s.size(); i-- > step;) s[i] -= s[i - step];
}

EulerProduct::EulerProduct() : primes_{BigInt(0)}, weights_{BigInt(0)}, coeffs_{BigInt(1)} {}

const BigInt& EulerProduct::extend(const BigInt& prime_count) {
  const std::size_t m = coeffs_.size();
  primes_.push_back(prime_count);
  BigInt weight = 0;
  for (std::size_t d = 1; d <= m; ++d)
    if (m % d == 0 && primes_[d] != 0) weight += primes_[d] * d;
  weights_.push_back(weight);

  BigInt acc = 0;
  for (std::size_t k = 1; k <= m; ++k)
    if (weights_[k] != 0) acc += weights_[k] * coeffs_[m - k];
  // a(m) = (1/m) sum_{k=1}^{m} b(k) a(m-k); the division is exact.
  acc /= m;
  coeffs_.push_back(std::move(acc));
  return coeffs_.back();
}

Series euler_transform(const Series& prime_counts, std::size_t n) {
  EulerProduct product;
  for (std::size_t m = 1; m <= n; ++m)
    product.extend(m < prime_counts.size() ? prime_counts[m] : BigInt(0));
  return product.coefficients();
}

}  // namespace ordlim
