#include "drg/number_theory.hpp"

#include <algorithm>
#include <map>

#include "drg/error.hpp"

namespace drg {

namespace {

constexpr unsigned kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr std::uint64_t kMaxBits = 10000;

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = true;
  }
  return out;
}

bool miller_rabin(const BigInt &n, unsigned base) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  BigInt a = base, x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1)
    return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1)
      return true;
  }
  return false;
}

BigInt pollard_brent(const BigInt &n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  BigInt y = seed, c = seed + 1, g = 1, q = 1, x, ys, diff;
  const unsigned long m = 128;
  auto step = [&](BigInt &v) {
    mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
    mpz_add(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (unsigned long r = 1; g == 1; r *= 2) {
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      step(y);
    for (unsigned long k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        step(y);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      g = gcd(q, n);
    }
  }
  if (g == n) {
    do {
      step(ys);
      diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g;
}

void factor_into(const BigInt &n, std::map<BigInt, unsigned> &out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

BigInt pow_ui(std::uint64_t q, std::uint64_t e) {
  if (e * static_cast<std::uint64_t>(mpz_sizeinbase(BigInt(q).get_mpz_t(), 2)) > kMaxBits + 64)
    throw BudgetError("q^t exceeds the 10^4-bit arithmetic budget");
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  if (mpz_sizeinbase(r.get_mpz_t(), 2) > kMaxBits)
    throw BudgetError("q^t exceeds the 10^4-bit arithmetic budget");
  return r;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

std::uint64_t largest_prime_u64(std::uint64_t n) {
  std::uint64_t best = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      best = p;
      n /= p;
    }
  return n > 1 ? n : best;
}

} // namespace

bool is_prime(const BigInt &n) {
  if (n < 2)
    return false;
  for (unsigned p : kSmallPrimes) {
    if (n == p)
      return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p))
      return false;
  }
  static const BigInt deterministic_limit("3317044064679887385961981");
  if (n < deterministic_limit) {
    for (unsigned p : kSmallPrimes)
      if (!miller_rabin(n, p))
        return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt &n) {
  if (n < 1)
    throw InputError("factorize needs a positive integer");
  std::map<BigInt, unsigned> found;
  BigInt rest = n;
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      rest /= p;
    }
  }
  factor_into(rest, found);
  return {found.begin(), found.end()};
}

BigInt radical(const BigInt &n) {
  if (n <= 0)
    throw InputError("radical needs n >= 1");
  BigInt r = 1;
  for (const auto &[p, e] : factorize(n))
    r *= p;
  return r;
}

BigInt greatest_prime_factor(const BigInt &n) {
  if (n < 2)
    throw InputError("greatest_prime_factor needs n >= 2");
  return factorize(n).back().first;
}

std::uint64_t sylvester_prime(std::uint64_t m, std::uint64_t l) {
  if (l < 1 || m < 2 * l)
    throw InputError("sylvester_prime needs l >= 1 and m - l + 1 > l");
  std::uint64_t best = 0;
  for (std::uint64_t x = m - l + 1; x <= m; ++x)
    best = std::max(best, largest_prime_u64(x));
  if (best <= l)
    throw IntegrityError("no prime above l divides the product (Sylvester's theorem violated)");
  return best;
}

std::uint64_t bertrand_mid_prime(std::uint64_t m) {
  if (m < 8)
    throw InputError("bertrand_mid_prime needs m >= 8");
  for (std::uint64_t p = m / 2 + 1;; ++p) {
    if (!is_prime(BigInt(static_cast<unsigned long>(p))))
      continue;
    if (p > m - 3)
      throw IntegrityError("no prime in (m/2, m-3] for m = " + std::to_string(m));
    return p;
  }
}

ScanResult sylvester_scan(std::uint64_t M) {
  std::vector<std::uint32_t> gpf(M + 1, 1);
  for (std::uint64_t p = 2; p <= M; ++p)
    if (gpf[p] == 1)
      for (std::uint64_t j = p; j <= M; j += p)
        gpf[j] = static_cast<std::uint32_t>(p);
  ScanResult r;
  for (std::uint64_t m = 2; m <= M; ++m) {
    std::uint64_t best = 1;
    for (std::uint64_t l = 1; 2 * l <= m; ++l) {
      best = std::max<std::uint64_t>(best, gpf[m - l + 1]);
      ++r.checked;
      if (best <= l && !r.first_failure)
        r.first_failure = {m, l};
    }
  }
  return r;
}

ScanResult bertrand_scan(std::uint64_t M) {
  auto primes = sieve_primes(M);
  ScanResult r;
  std::size_t idx = 0;
  for (std::uint64_t m = 8; m <= M; ++m) {
    // smallest prime above m/2
    while (idx < primes.size() && 2 * primes[idx] <= m)
      ++idx;
    ++r.checked;
    if ((idx == primes.size() || primes[idx] > m - 3) && !r.first_failure)
      r.first_failure = {m, 0};
  }
  return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> mod_dominance_classify(std::uint64_t M) {
  if (M < 9)
    throw InputError("mod_dominance_classify needs M >= 9");
  auto primes = sieve_primes(M);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t m = 5; m <= M; ++m)
    for (std::uint64_t l = 1; l < m; ++l) {
      bool ok = true;
      for (auto p : primes) {
        if (p > m)
          break;
        if (p >= 5 && l % p > m % p) {
          ok = false;
          break;
        }
      }
      if (ok)
        out.emplace_back(m, l);
    }
  return out;
}

BigInt cyclotomic_value(std::uint64_t n, std::uint64_t q) {
  if (n == 0)
    throw InputError("cyclotomic_value needs n >= 1");
  if (q < 2)
    throw InputError("cyclotomic_value needs q >= 2");
  BigInt num = 1, den = 1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d)
      continue;
    int mu = moebius(n / d);
    if (mu == 1)
      num *= pow_ui(q, d) - 1;
    else if (mu == -1)
      den *= pow_ui(q, d) - 1;
  }
  if (num % den != 0)
    throw IntegrityError("cyclotomic quotient is not exact");
  return num / den;
}

BigInt phi_star(std::uint64_t n, std::uint64_t q) {
  BigInt x = cyclotomic_value(n, q);
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt g = gcd(x, pow_ui(q, i) - 1);
    while (g > 1) {
      x /= g;
      g = gcd(x, g);
    }
  }
  return x;
}

bool phi_star_dichotomy_holds(std::uint64_t n, std::uint64_t q) {
  BigInt phi = cyclotomic_value(n, q);
  BigInt star = phi_star(n, q);
  std::uint64_t r = largest_prime_u64(n);
  if (phi % r == 0)
    return star == phi / r;
  return star == phi;
}

PpdResult primitive_prime_divisors(std::uint64_t q, std::uint64_t t) {
  if (q < 2 || t < 1)
    throw InputError("primitive_prime_divisors needs q >= 2 and t >= 1");
  PpdResult r;
  r.q = q;
  r.t = t;
  BigInt qt1 = pow_ui(q, t) - 1;
  for (const auto &[p, e] : factorize(phi_star(t, q))) {
    // definition check, independent of how phi_star was reduced
    if (qt1 % p != 0)
      throw IntegrityError("primitive divisor does not divide q^t - 1");
    for (std::uint64_t i = 1; i < t; ++i)
      if ((pow_ui(q, i) - 1) % p == 0)
        throw IntegrityError("primitive divisor divides a smaller q^i - 1");
    r.primitive_divisors.push_back(p);
  }
  r.exceptional = r.primitive_divisors.empty();
  return r;
}

bool has_primitive_prime_divisor(std::uint64_t q, std::uint64_t t) { return phi_star(t, q) > 1; }

bool zsigmondy_exception(std::uint64_t q, std::uint64_t t) {
  if (t == 1 && q == 2)
    return true;
  if (t == 2 && ((q + 1) & q) == 0)
    return true;
  return t == 6 && q == 2;
}

bool power_vs_factorial(std::uint64_t m) {
  // (m/2)^m >= m!/2  <=>  2 m^m >= m! 2^m
  BigInt lhs, fact, two_m;
  mpz_ui_pow_ui(lhs.get_mpz_t(), m, m);
  lhs *= 2;
  mpz_fac_ui(fact.get_mpz_t(), m);
  mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
  return lhs >= fact * two_m;
}

} // namespace drg
