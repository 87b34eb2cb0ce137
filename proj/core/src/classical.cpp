#include "drg/classical.hpp"

#include <numeric>

#include "drg/error.hpp"

namespace drg {

Matrix hyperbolic_form(FieldPtr field, std::size_t m) {
  Matrix j(std::move(field), 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    j.at(i, m + i) = 1;
    j.at(m + i, i) = 1;
  }
  return j;
}

Matrix alternating_form_4(FieldPtr field) {
  Matrix j(field, 4);
  auto minus_one = field->neg(1);
  j.at(0, 2) = 1;
  j.at(1, 3) = 1;
  j.at(2, 0) = minus_one;
  j.at(3, 1) = minus_one;
  return j;
}

std::vector<Matrix> unipotent_rank_one_family(std::uint32_t q) {
  auto F = GaloisField::make(q);
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(q) * q);
  for (GaloisField::Elem a = 0; a < q; ++a)
    for (GaloisField::Elem b = 0; b < q; ++b) {
      Matrix x = Matrix::identity(F, 4);
      x.at(0, 2) = a;
      x.at(0, 3) = b;
      out.push_back(std::move(x));
    }
  return out;
}

SymplecticPpdWitness symplectic_ppd_witness(std::uint32_t m, std::uint32_t f) {
  if (m < 1 || f < 1)
    throw InputError("symplectic_ppd_witness needs m >= 1 and f >= 1");
  if ((f == 1 && m == 2) || (f == 3 && m == 2) || (f == 1 && m == 6))
    throw InputError("(f, m) = (" + std::to_string(f) + ", " + std::to_string(m) +
                     ") is on the computer-checked exception list {(1,2), (3,2), (1,6)}");
  if (f > 16)
    throw InputError("field GF(2^f) needs f <= 16");
  auto ppd = primitive_prime_divisors(2, static_cast<std::uint64_t>(f) * m);
  if (ppd.primitive_divisors.empty())
    throw InputError("2^{fm} - 1 has no primitive prime divisor");

  auto F = GaloisField::make(1u << f);
  ExtensionField E(F, m);
  SymplecticPpdWitness w{m, f, ppd.primitive_divisors.back().get_ui(), Matrix(F, m), Matrix(F, 2 * m),
                         hyperbolic_form(F, m)};
  auto beta = E.primitive_element();
  auto alpha = E.pow(beta, (E.order() - 1) / w.p);
  if (E.element_order(alpha) != w.p)
    throw IntegrityError("field element of order p not found");
  w.a = E.multiplication_matrix(alpha);
  w.g = block_diagonal(w.a, transpose(inverse(w.a)));
  return w;
}

MinusSingerElement minus_type_singer_element(std::uint32_t m, std::uint32_t q) {
  if (m < 2 || m % 2)
    throw InputError("minus_type_singer_element needs an even m >= 2");
  auto F = GaloisField::make(q);
  ExtensionField E(F, m);
  std::uint64_t half = 1;
  for (std::uint32_t i = 0; i < m / 2; ++i)
    half *= q;
  MinusSingerElement s{m, q, (half + 1) / std::gcd<std::uint64_t>(2, q - 1), Matrix(F, m),
                       QuadraticForm{Matrix(F, m)}};
  auto beta = E.primitive_element();
  auto omega = E.pow(beta, (E.order() - 1) / s.expected_order);
  s.x = E.multiplication_matrix(omega);

  auto Q = [&](const ExtensionField::Vec &v) {
    auto y = E.pow(v, half + 1);  // lies in GF(q^{m/2})
    auto t = E.zero();
    auto term = y;
    for (std::uint32_t i = 0; i < m / 2; ++i) {
      t = E.add(t, term);
      term = E.pow(term, q);
    }
    return E.to_base(t);
  };
  auto basis = [&](std::size_t i) {
    ExtensionField::Vec v(m, 0);
    v[i] = 1;
    return v;
  };
  for (std::size_t i = 0; i < m; ++i) {
    s.form.upper.at(i, i) = Q(basis(i));
    for (std::size_t j = i + 1; j < m; ++j) {
      auto both = Q(E.add(basis(i), basis(j)));
      s.form.upper.at(i, j) = F->sub(F->sub(both, Q(basis(i))), Q(basis(j)));
    }
  }
  return s;
}

} // namespace drg
