#pragma once

#include <cstdint>
#include <vector>

#include "drg/matrix.hpp"

namespace drg {

/// [[0, I], [I, 0]] in dimension 2m.
Matrix hyperbolic_form(FieldPtr field, std::size_t m);
/// The 4x4 alternating form [[0,0,1,0],[0,0,0,1],[-1,0,0,0],[0,-1,0,0]].
Matrix alternating_form_4(FieldPtr field);

/// The q^2 matrices I + a E_{0,2} + b E_{0,3} over GF(q), ordered by the
/// codes of (a, b) with b varying fastest. Throws InputError when q is not
/// a prime power.
std::vector<Matrix> unipotent_rank_one_family(std::uint32_t q);

struct SymplecticPpdWitness {
  std::uint32_t m = 0, f = 0;
  std::uint64_t p = 0;     ///< largest primitive prime divisor of 2^{fm} - 1
  Matrix a;                ///< m x m, multiplication by an order-p field element
  Matrix g;                ///< diag(a, (a^-1)^T)
  Matrix form;             ///< hyperbolic_form(m)
};

/// Witness over GF(2^f) in dimension 2m. Throws InputError for
/// (f, m) in {(1,2), (3,2), (1,6)} and whenever 2^{fm} - 1 has no primitive
/// prime divisor.
SymplecticPpdWitness symplectic_ppd_witness(std::uint32_t m, std::uint32_t f);

struct MinusSingerElement {
  std::uint32_t m = 0, q = 0;
  std::uint64_t expected_order = 0;  ///< (q^{m/2} + 1) / gcd(2, q - 1)
  Matrix x;                          ///< multiplication by a field element of that order
  QuadraticForm form;                ///< v -> Tr(v^{q^{m/2}+1}) down to GF(q)
};

/// Throws InputError for odd m or m < 2.
MinusSingerElement minus_type_singer_element(std::uint32_t m, std::uint32_t q);

} // namespace drg
