#pragma once

#include <cstdint>
#include <vector>

#include "drg/finite_field.hpp"

namespace drg {

/// Square matrix over a GaloisField, row-major. Matrices act on column
/// vectors, so a form J is preserved by M when M^T J M = J.
class Matrix {
public:
  using Elem = GaloisField::Elem;

  Matrix(FieldPtr field, std::size_t dim);  ///< zero matrix
  static Matrix identity(FieldPtr field, std::size_t dim);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Elem>> &rows);

  const FieldPtr &field() const { return field_; }
  std::size_t dim() const { return dim_; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  Elem &at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }

  bool is_identity() const;
  std::vector<std::vector<Elem>> rows() const;

  friend bool operator==(const Matrix &x, const Matrix &y) {
    return x.dim_ == y.dim_ && x.a_ == y.a_ && x.field_->order() == y.field_->order();
  }

private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Elem> a_;
};

Matrix operator*(const Matrix &x, const Matrix &y);
Matrix operator+(const Matrix &x, const Matrix &y);
Matrix operator-(const Matrix &x, const Matrix &y);
Matrix transpose(const Matrix &x);
/// Throws InputError when x is singular.
Matrix inverse(const Matrix &x);
Matrix mat_power(const Matrix &x, std::uint64_t e);
std::size_t mat_rank(const Matrix &x);
Matrix::Elem determinant(const Matrix &x);
/// det(tI - x), monic, via Hessenberg reduction.
Poly characteristic_polynomial(const Matrix &x);
/// Multiplicative order, found by stripping primes from |GL_d(q)|.
/// Throws InputError when x is singular.
std::uint64_t mat_order(const Matrix &x);
/// True when x has an eigenvalue in its own field.
bool has_eigenvalue_in_field(const Matrix &x);

/// Block-diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix &a, const Matrix &b);

/// M^T J M == J.
bool preserves_bilinear(const Matrix &m, const Matrix &j);
/// Same test; named for alternating forms.
bool preserves_symplectic(const Matrix &m, const Matrix &j);

/// Q(v) = sum_{i <= j} U_ij v_i v_j, with U upper triangular.
struct QuadraticForm {
  Matrix upper;
  Matrix::Elem evaluate(const std::vector<Matrix::Elem> &v) const;
  /// Polar form B(u, v) = Q(u + v) - Q(u) - Q(v) as the matrix U + U^T.
  Matrix polar() const;
};

/// Q(Mv) = Q(v) for all v, checked on basis vectors and the polar form.
bool preserves_quadratic(const Matrix &m, const QuadraticForm &q);
/// Number of nonzero v with Q(v) = 0 (enumerates all q^d vectors).
std::uint64_t singular_vector_count(const QuadraticForm &q);

} // namespace drg
