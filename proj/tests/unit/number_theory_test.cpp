#include <gtest/gtest.h>

#include <set>

#include "drg/error.hpp"
#include "drg/number_theory.hpp"

using namespace drg;

namespace {

// trial division, u64 only
std::vector<std::uint64_t> trial_primes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    out.push_back(p);
    while (n % p == 0)
      n /= p;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool trial_is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0)
      return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

// multiplicative order of q mod p (q coprime to p)
std::uint64_t mult_order(std::uint64_t q, std::uint64_t p) {
  std::uint64_t x = q % p, k = 1;
  while (x != 1) {
    x = mulmod(x, q, p);
    ++k;
  }
  return k;
}

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

} // namespace

TEST(Primality, MatchesTrialDivisionBelow200000) {
  for (std::uint64_t n = 0; n < 200000; ++n)
    ASSERT_EQ(is_prime(big(n)), trial_is_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesRejected) {
  // strong pseudoprimes to several small bases
  for (const char *s : {"3215031751", "2152302898747", "3474749660383", "341550071728321",
                        "3825123056546413051", "318665857834031151167461"})
    EXPECT_FALSE(is_prime(BigInt(s))) << s;
  EXPECT_TRUE(is_prime(BigInt("2305843009213693951")));           // 2^61 - 1
  EXPECT_TRUE(is_prime(BigInt("618970019642690137449562111")));   // 2^89 - 1, BPSW range
}

TEST(Factorize, MatchesTrialDivision) {
  for (std::uint64_t n : {2ull, 12ull, 720ull, 1023ull, 999999000001ull, 600851475143ull,
                          4294967297ull, 18446744073709551615ull}) {
    std::vector<std::uint64_t> got;
    BigInt prod = 1;
    for (const auto &[p, e] : factorize(big(n))) {
      got.push_back(p.get_ui());
      EXPECT_TRUE(trial_is_prime(p.get_ui()));
      for (unsigned i = 0; i < e; ++i)
        prod *= p;
    }
    EXPECT_EQ(got, trial_primes(n)) << n;
    EXPECT_EQ(prod, big(n));
  }
  EXPECT_THROW(factorize(0), InputError);
}

TEST(Factorize, LargeSemiprime) {
  BigInt p("1000000000039"), q("1000000000061");
  auto f = factorize(p * q);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].first, p);
  EXPECT_EQ(f[1].first, q);
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(24), 6);
  EXPECT_EQ(radical(1), 1);
  EXPECT_EQ(radical(360), 30);
  EXPECT_THROW(radical(0), InputError);
  EXPECT_THROW(radical(-4), InputError);
  for (std::uint64_t n = 2; n < 3000; ++n) {
    std::uint64_t r = 1;
    for (auto p : trial_primes(n))
      r *= p;
    ASSERT_EQ(radical(big(n)), big(r)) << n;
  }
}

TEST(GreatestPrimeFactor, Examples) {
  EXPECT_EQ(greatest_prime_factor(12), 3);
  EXPECT_EQ(greatest_prime_factor(1023), 31);
  EXPECT_EQ(greatest_prime_factor(7919), 7919);
  EXPECT_THROW(greatest_prime_factor(1), InputError);
  for (std::uint64_t n = 2; n < 3000; ++n)
    ASSERT_EQ(greatest_prime_factor(big(n)), big(trial_primes(n).back())) << n;
}

TEST(Sylvester, Examples) {
  EXPECT_EQ(sylvester_prime(10, 3), 5u);  // 720 = 2^4 3^2 5
  EXPECT_EQ(sylvester_prime(9, 2), 3u);   // 72 = 2^3 3^2
  for (std::uint64_t k : {2ull, 3ull, 5ull, 7ull, 97ull})
    EXPECT_GT(sylvester_prime(2 * k, 1), 1u);
  EXPECT_THROW(sylvester_prime(5, 3), InputError);
  EXPECT_THROW(sylvester_prime(5, 0), InputError);
}

TEST(Sylvester, AgreesWithTrialDivisionOnSmallRange) {
  for (std::uint64_t m = 2; m <= 120; ++m)
    for (std::uint64_t l = 1; 2 * l <= m; ++l) {
      std::uint64_t best = 0;
      for (std::uint64_t x = m - l + 1; x <= m; ++x)
        for (auto p : trial_primes(x))
          best = std::max(best, p);
      ASSERT_EQ(sylvester_prime(m, l), best) << m << "," << l;
      ASSERT_GT(best, l);
    }
}

TEST(Sylvester, ExhaustiveTo10000) {
  auto r = sylvester_scan(10000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 25000000u - 0u);  // sum over m of floor(m/2), m = 2..10000
}

TEST(Bertrand, Examples) {
  EXPECT_EQ(bertrand_mid_prime(8), 5u);
  EXPECT_EQ(bertrand_mid_prime(9), 5u);
  EXPECT_THROW(bertrand_mid_prime(7), InputError);
  for (std::uint64_t m = 8; m < 5000; ++m) {
    std::uint64_t p = bertrand_mid_prime(m);
    ASSERT_TRUE(trial_is_prime(p));
    ASSERT_GT(2 * p, m);
    ASSERT_LE(p, m - 3);
    for (std::uint64_t x = m / 2 + 1; x < p; ++x)
      ASSERT_FALSE(trial_is_prime(x));
  }
}

TEST(Bertrand, ExhaustiveTo1e6) {
  auto r = bertrand_scan(1000000);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checked, 1000000u - 7u);
}

TEST(ModDominance, Examples) {
  auto pairs = mod_dominance_classify(20);
  std::set<std::pair<std::uint64_t, std::uint64_t>> s(pairs.begin(), pairs.end());
  EXPECT_TRUE(s.count({9, 2}));
  EXPECT_TRUE(s.count({9, 7}));
  EXPECT_TRUE(s.count({12, 1}));
  EXPECT_FALSE(s.count({10, 1}));
  EXPECT_THROW(mod_dominance_classify(8), InputError);
}

TEST(ModDominance, MatchesPredictedSetTo300) {
  auto smooth = [](std::uint64_t m) {
    while (m % 2 == 0)
      m /= 2;
    while (m % 3 == 0)
      m /= 3;
    return m == 1;
  };
  std::set<std::pair<std::uint64_t, std::uint64_t>> predicted{{9, 2}, {9, 7}};
  for (std::uint64_t m = 5; m <= 300; ++m)
    if (smooth(m)) {
      predicted.insert({m, 1});
      predicted.insert({m, m - 1});
    }
  // brute force over every prime p >= 5 up to 2m, beyond the p <= m cutoff
  std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
  for (std::uint64_t m = 5; m <= 300; ++m)
    for (std::uint64_t l = 1; l < m; ++l) {
      bool ok = true;
      for (std::uint64_t p = 5; p <= 2 * m && ok; ++p)
        if (trial_is_prime(p) && l % p > m % p)
          ok = false;
      if (ok)
        brute.insert({m, l});
    }
  auto got = mod_dominance_classify(300);
  std::set<std::pair<std::uint64_t, std::uint64_t>> s(got.begin(), got.end());
  EXPECT_EQ(s, brute);
  EXPECT_EQ(s, predicted);
}

TEST(Cyclotomic, Examples) {
  for (std::uint64_t q = 2; q < 20; ++q)
    EXPECT_EQ(cyclotomic_value(1, q), big(q - 1));
  EXPECT_EQ(cyclotomic_value(6, 2), 3);
  EXPECT_EQ(phi_star(6, 2), 1);
  EXPECT_EQ(cyclotomic_value(4, 3), 10);
  EXPECT_EQ(phi_star(4, 3), 5);
  EXPECT_THROW(cyclotomic_value(0, 2), InputError);
}

TEST(Cyclotomic, ProductOverDivisorsIsQnMinusOne) {
  for (std::uint64_t q = 2; q <= 16; ++q)
    for (std::uint64_t n = 1; n <= 30; ++n) {
      BigInt prod = 1;
      for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0)
          prod *= cyclotomic_value(d, q);
      BigInt qn;
      mpz_ui_pow_ui(qn.get_mpz_t(), q, n);
      ASSERT_EQ(prod, qn - 1) << "q=" << q << " n=" << n;
    }
}

TEST(Cyclotomic, SmallValuesMatchPolynomialEvaluation) {
  // coefficients of Phi_n for n <= 12, evaluated by Horner
  const std::vector<std::vector<int>> coeffs = {
      {},           {-1, 1},          {1, 1},          {1, 1, 1},       {1, 0, 1},
      {1, 1, 1, 1, 1}, {1, -1, 1},    {1, 1, 1, 1, 1, 1, 1}, {1, 0, 0, 0, 1},
      {1, 0, 0, 1, 0, 0, 1}, {1, -1, 1, -1, 1}, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {1, 0, -1, 0, 1}};
  for (std::uint64_t n = 1; n <= 12; ++n)
    for (std::uint64_t q = 2; q <= 9; ++q) {
      BigInt v = 0;
      for (auto it = coeffs[n].rbegin(); it != coeffs[n].rend(); ++it)
        v = v * big(q) + *it;
      ASSERT_EQ(cyclotomic_value(n, q), v) << n << "," << q;
    }
}

TEST(PhiStar, DichotomyForNAtLeast3) {
  for (std::uint64_t q = 2; q <= 30; ++q)
    for (std::uint64_t n = 3; n <= 30; ++n)
      ASSERT_TRUE(phi_star_dichotomy_holds(n, q)) << n << "," << q;
}

TEST(PhiStar, DichotomyCanFailAtNEquals2) {
  // Phi_2(7) = 8, the 2-part is shared with 7 - 1
  EXPECT_EQ(phi_star(2, 7), 1);
  EXPECT_FALSE(phi_star_dichotomy_holds(2, 7));
}

TEST(Ppd, Examples) {
  auto r = primitive_prime_divisors(2, 6);
  EXPECT_TRUE(r.primitive_divisors.empty());
  EXPECT_TRUE(r.exceptional);
  r = primitive_prime_divisors(2, 10);
  EXPECT_EQ(r.primitive_divisors, std::vector<BigInt>{11});
  EXPECT_FALSE(r.exceptional);
  r = primitive_prime_divisors(7, 2);
  EXPECT_TRUE(r.primitive_divisors.empty());
  EXPECT_TRUE(r.exceptional);
  EXPECT_TRUE(primitive_prime_divisors(2, 1).exceptional);
  EXPECT_THROW(primitive_prime_divisors(2, 20000), BudgetError);
  EXPECT_THROW(primitive_prime_divisors(1, 3), InputError);
}

TEST(Ppd, DefinitionOracleWhereQtFitsTrialDivision) {
  for (std::uint64_t q = 2; q <= 64; ++q)
    for (std::uint64_t t = 1; t <= 20; ++t) {
      long double approx = 1;
      for (std::uint64_t i = 0; i < t; ++i)
        approx *= q;
      if (approx > 1e12L)
        break;
      std::uint64_t v = 1;
      for (std::uint64_t i = 0; i < t; ++i)
        v *= q;
      std::vector<BigInt> want;
      for (auto p : trial_primes(v - 1))
        if (q % p != 0 && mult_order(q, p) == t)
          want.push_back(big(p));
      ASSERT_EQ(primitive_prime_divisors(q, t).primitive_divisors, want) << q << "," << t;
    }
}

TEST(Ppd, EmptyExactlyOnZsigmondySet) {
  for (std::uint64_t q = 2; q <= 64; ++q)
    for (std::uint64_t t = 2; t <= 20; ++t) {
      auto r = primitive_prime_divisors(q, t);
      bool mersenne_t2 = false;
      for (std::uint64_t m = 1; m < 8; ++m)
        if (t == 2 && q == (1ull << m) - 1)
          mersenne_t2 = true;
      bool expected = mersenne_t2 || (t == 6 && q == 2);
      ASSERT_EQ(r.exceptional, expected) << q << "," << t;
      ASSERT_EQ(zsigmondy_exception(q, t), expected);
      ASSERT_EQ(has_primitive_prime_divisor(q, t), !expected);
      // each listed prime has multiplicative order exactly t
      for (const auto &p : r.primitive_divisors) {
        ASSERT_TRUE(is_prime(p));
        BigInt x;
        mpz_powm_ui(x.get_mpz_t(), big(q).get_mpz_t(), t, p.get_mpz_t());
        ASSERT_EQ(x, 1);
        for (std::uint64_t i = 1; i < t; ++i) {
          mpz_powm_ui(x.get_mpz_t(), big(q).get_mpz_t(), i, p.get_mpz_t());
          ASSERT_NE(x, 1);
        }
      }
    }
}

TEST(PowerVsFactorial, Examples) {
  EXPECT_TRUE(power_vs_factorial(1));
  EXPECT_TRUE(power_vs_factorial(4));
  EXPECT_TRUE(power_vs_factorial(10));
  for (std::uint64_t m = 1; m <= 400; ++m)
    ASSERT_TRUE(power_vs_factorial(m)) << m;
}
