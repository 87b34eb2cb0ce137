#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "drg/error.hpp"

namespace drg {

/// Three-valued outcome: a budget stop is "unknown", never "no".
enum class Verdict { yes, no, unknown };

inline const char *to_string(Verdict v) {
  switch (v) {
  case Verdict::yes: return "yes";
  case Verdict::no: return "no";
  case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

/// Nonnegative fraction in lowest terms.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational() = default;
  Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d == 0)
      throw InputError("rational with zero denominator");
    auto g = std::gcd(n, d);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational &, const Rational &) = default;
  friend bool operator<(const Rational &a, const Rational &b) {
    return static_cast<unsigned __int128>(a.num) * b.den < static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational &a, const Rational &b) { return !(b < a); }
};

} // namespace drg
