#include "ordlim/matula.hpp"

#include <algorithm>
#include <limits>

#include "ordlim/errors.hpp"

namespace ordlim {

void MatulaCoder::sieve_to(std::uint64_t limit) {
  if (limit <= sieved_) return;
  if (limit > (std::uint64_t{1} << 32)) throw DomainError("matula: prime table limit exceeded");
  const std::uint64_t old = sieved_;
  composite_.resize(limit + 1, false);
  for (std::uint64_t p : primes_)
    for (std::uint64_t m = std::max(p * p, (old / p + 1) * p); m <= limit; m += p) composite_[m] = true;
  for (std::uint64_t i = old + 1; i <= limit; ++i) {
    if (composite_[i]) continue;
    primes_.push_back(i);
    for (std::uint64_t m = i * i; m <= limit; m += i) composite_[m] = true;
  }
  sieved_ = limit;
}

std::uint64_t MatulaCoder::nth_prime(std::uint64_t k) {
  if (k == 0) throw DomainError("matula: primes are indexed from 1");
  while (primes_.size() < k) sieve_to(std::max<std::uint64_t>(64, sieved_ * 2));
  return primes_[k - 1];
}

std::uint64_t MatulaCoder::prime_index(std::uint64_t p) {
  sieve_to(p);
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) throw DomainError("matula: " + std::to_string(p) + " is not prime");
  return static_cast<std::uint64_t>(it - primes_.begin()) + 1;
}

std::uint64_t MatulaCoder::encode(const Ordinal& x) {
  std::uint64_t code = 1;
  for (const auto& s : x.summands()) {
    const std::uint64_t p = nth_prime(encode(s.exponent));
    for (std::uint64_t c = 0; c < s.coefficient; ++c) {
      if (code > std::numeric_limits<std::uint64_t>::max() / p) throw DomainError("matula code exceeds 64 bits");
      code *= p;
    }
  }
  return code;
}

Ordinal MatulaCoder::decode(std::uint64_t n) {
  if (n == 0) throw DomainError("matula_decode requires n >= 1");
  if (n < decoded_.size() && !decoded_[n].is_zero()) return decoded_[n];
  if (n == 1) return Ordinal();

  std::vector<Summand> parts;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; ++d) {
    std::uint64_t mult = 0;
    while (rest % d == 0) {
      rest /= d;
      ++mult;
    }
    if (mult > 0) parts.push_back({decode(prime_index(d)), mult});
  }
  if (rest > 1) parts.push_back({decode(prime_index(rest)), 1});
  Ordinal out = Ordinal::from_summands(std::move(parts));

  if (n < (std::uint64_t{1} << 24)) {
    if (decoded_.size() <= n) decoded_.resize(n + 1);
    decoded_[n] = out;
  }
  return out;
}

std::uint64_t matula_encode(const Ordinal& x) { return MatulaCoder().encode(x); }

Ordinal matula_decode(std::uint64_t n) { return MatulaCoder().decode(n); }

}  // namespace ordlim
