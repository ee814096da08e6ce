#pragma once

#include <cstdint>
#include <vector>

#include "ordlim/ordinal.hpp"

namespace ordlim {

/// Prime-factorization coding of CNF term trees as positive integers.
///
/// M(0) = 1 and M(omega^a1 + ... + omega^an) = p_{M(a1)} * ... * p_{M(an)}, with
/// primes indexed from p_1 = 2. This indexing makes M a bijection onto the
/// positive integers. A coder caches its prime table and decoded values; it is
/// not meant to be shared between threads.
class MatulaCoder {
 public:
  /// Throws DomainError if the code does not fit in 64 bits.
  std::uint64_t encode(const Ordinal& x);
  /// Requires n >= 1.
  Ordinal decode(std::uint64_t n);

  /// The k-th prime, p_1 = 2.
  std::uint64_t nth_prime(std::uint64_t k);
  /// k with p_k = p; p must be prime.
  std::uint64_t prime_index(std::uint64_t p);

 private:
  void sieve_to(std::uint64_t limit);

  std::uint64_t sieved_ = 1;
  std::vector<bool> composite_{true, true};
  std::vector<std::uint64_t> primes_;
  std::vector<Ordinal> decoded_;  // decoded_[n] valid when n < decoded_.size()
};

std::uint64_t matula_encode(const Ordinal& x);
Ordinal matula_decode(std::uint64_t n);

}  // namespace ordlim
