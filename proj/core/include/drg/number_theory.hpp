#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace drg {

using BigInt = mpz_class;

/// Deterministic Miller-Rabin below 3.3e24 (first 13 prime bases); above
/// that GMP's BPSW test, i.e. a probable-prime answer.
bool is_prime(const BigInt &n);

/// Prime factorization with multiplicities, ascending. Trial division then
/// Pollard-Brent. Throws InputError for n < 1.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt &n);

/// Product of the distinct primes dividing n; radical(1) = 1.
BigInt radical(const BigInt &n);
/// Largest prime dividing n (n >= 2).
BigInt greatest_prime_factor(const BigInt &n);

/// Largest prime p > l dividing m(m-1)...(m-l+1). Requires l >= 1 and m-l+1 > l.
std::uint64_t sylvester_prime(std::uint64_t m, std::uint64_t l);

/// Smallest prime p with m/2 < p; throws InputError when m < 8 and
/// IntegrityError if p > m-3 (which would contradict the interval lemma).
std::uint64_t bertrand_mid_prime(std::uint64_t m);

/// Result of an exhaustive range scan: how many cases were checked and the
/// first failing case, if any.
struct ScanResult {
  std::uint64_t checked = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> first_failure;
  bool ok() const { return !first_failure; }
};

/// Every (m, l) with 2l <= m <= M has a prime > l dividing m...(m-l+1).
/// Uses a greatest-prime-factor sieve with a running maximum per m.
ScanResult sylvester_scan(std::uint64_t M);
/// Every 8 <= m <= M has a prime in (m/2, m-3]; failure pairs are (m, 0).
ScanResult bertrand_scan(std::uint64_t M);

/// All (m, l) with 5 <= m <= M, 1 <= l <= m-1 and l mod p <= m mod p for
/// every prime p >= 5. Primes p > m need no test: there l mod p = l < m = m mod p.
std::vector<std::pair<std::uint64_t, std::uint64_t>> mod_dominance_classify(std::uint64_t M);

/// Phi_n(q) exactly, from the Moebius product of q^d - 1 over d | n.
BigInt cyclotomic_value(std::uint64_t n, std::uint64_t q);
/// Largest divisor of Phi_n(q) coprime to q^i - 1 for every 1 <= i < n.
BigInt phi_star(std::uint64_t n, std::uint64_t q);
/// phi_star equals Phi_n(q), or Phi_n(q)/r when the largest prime r of n
/// divides Phi_n(q). Meaningful for n >= 3.
bool phi_star_dichotomy_holds(std::uint64_t n, std::uint64_t q);

struct PpdResult {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::vector<BigInt> primitive_divisors;  ///< sorted
  bool exceptional = false;                ///< no primitive divisor exists
};

/// Primes dividing q^t - 1 but no q^i - 1 with i < t (the prime factors of
/// phi_star(t, q)). Throws BudgetError when q^t exceeds 10^4 bits.
PpdResult primitive_prime_divisors(std::uint64_t q, std::uint64_t t);
/// Cheaper existence test: phi_star(t, q) > 1.
bool has_primitive_prime_divisor(std::uint64_t q, std::uint64_t t);
/// (t, q) = (1, 2), t = 2 with q + 1 a power of two, or (t, q) = (6, 2).
bool zsigmondy_exception(std::uint64_t q, std::uint64_t t);

/// (m/2)^m >= m!/2, evaluated exactly.
bool power_vs_factorial(std::uint64_t m);

} // namespace drg
