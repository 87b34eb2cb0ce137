#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "drg/number_theory.hpp"

namespace drg {

/*
 * GF(p^k) with at most 2^16 elements. An element is its integer code
 * sum c_i p^i, where c_0..c_{k-1} are the coefficients in the polynomial
 * basis modulo the defining polynomial. The defining polynomial is the
 * least monic irreducible of degree k (see least_irreducible); it is
 * re-verified irreducible at construction.
 */
class GaloisField {
public:
  using Elem = std::uint32_t;

  GaloisField(std::uint32_t p, std::uint32_t k);
  /// Field with q elements; throws InputError unless q is a prime power <= 2^16.
  static std::shared_ptr<const GaloisField> make(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  /// Defining polynomial over GF(p), coefficients low to high, monic.
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// Image of an integer in the prime field.
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws InputError for a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  std::uint64_t element_order(Elem a) const;
  /// Generator of the multiplicative group with the smallest code.
  Elem primitive_element() const { return primitive_; }

  std::vector<std::uint32_t> coefficients(Elem a) const;
  Elem from_coefficients(const std::vector<std::uint32_t> &c) const;

private:
  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 1;
  std::vector<std::uint32_t> log_, exp_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

/// Polynomial over a GaloisField, coefficients low to high, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<GaloisField::Elem>;

Poly poly_trim(Poly f);
Poly poly_add(const GaloisField &F, const Poly &a, const Poly &b);
Poly poly_sub(const GaloisField &F, const Poly &a, const Poly &b);
Poly poly_mul(const GaloisField &F, const Poly &a, const Poly &b);
/// Remainder of a modulo a nonzero b.
Poly poly_mod(const GaloisField &F, const Poly &a, const Poly &b);
/// Monic gcd.
Poly poly_gcd(const GaloisField &F, Poly a, Poly b);
Poly poly_powmod(const GaloisField &F, const Poly &base, const BigInt &e, const Poly &mod);
GaloisField::Elem poly_eval(const GaloisField &F, const Poly &f, GaloisField::Elem x);
/// No roots and gcd(x^{q^i} - x, f) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const GaloisField &F, const Poly &f);
/// Monic irreducible of the given degree whose lower coefficients
/// c_0 + c_1 q + ... + c_{d-1} q^{d-1} form the least integer.
Poly least_irreducible(const GaloisField &F, std::uint32_t degree);

class Matrix;

/*
 * GF(q^m) as F[x]/(f) for the least irreducible f of degree m over a base
 * field F = GF(q), so that elements are coordinate vectors over F in the
 * basis 1, x, ..., x^{m-1}. q^m is capped at 2^32.
 */
class ExtensionField {
public:
  using Vec = std::vector<GaloisField::Elem>;

  ExtensionField(FieldPtr base, std::uint32_t m);

  const FieldPtr &base() const { return base_; }
  std::uint32_t degree() const { return m_; }
  std::uint64_t order() const { return order_; }
  const Poly &modulus() const { return modulus_; }

  Vec zero() const { return Vec(m_, 0); }
  Vec one() const;
  Vec embed(GaloisField::Elem c) const;
  Vec add(const Vec &a, const Vec &b) const;
  Vec mul(const Vec &a, const Vec &b) const;
  Vec pow(const Vec &a, std::uint64_t e) const;
  bool is_zero(const Vec &a) const;
  /// The base-field value when a lies in F, else throws IntegrityError.
  GaloisField::Elem to_base(const Vec &a) const;

  /// Element with the given integer code (base-q digits are coordinates).
  Vec from_code(std::uint64_t code) const;
  std::uint64_t element_order(const Vec &a) const;
  /// Multiplicative generator with the least code.
  Vec primitive_element() const;
  /// Matrix of v -> v*a on column coordinate vectors.
  Matrix multiplication_matrix(const Vec &a) const;

private:
  FieldPtr base_;
  std::uint32_t m_;
  std::uint64_t order_;
  Poly modulus_;
  std::vector<std::pair<BigInt, unsigned>> group_order_factors_;
};

} // namespace drg
