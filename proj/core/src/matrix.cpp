#include "drg/matrix.hpp"

#include <map>

#include "drg/error.hpp"

namespace drg {

namespace {

void require_same(const Matrix &x, const Matrix &y) {
  if (x.dim() != y.dim() || x.field()->order() != y.field()->order())
    throw InputError("matrix dimension or field mismatch");
}

// row echelon in place; returns rank and accumulates det sign/pivots
std::size_t eliminate(Matrix &m, GaloisField::Elem *det) {
  const auto &F = *m.field();
  const std::size_t n = m.dim();
  std::size_t rank = 0;
  GaloisField::Elem d = 1;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && m.at(piv, col) == 0)
      ++piv;
    if (piv == n) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m.at(piv, j), m.at(rank, j));
      d = F.neg(d);
    }
    d = F.mul(d, m.at(rank, col));
    auto inv = F.inv(m.at(rank, col));
    for (std::size_t i = rank + 1; i < n; ++i) {
      auto c = F.mul(m.at(i, col), inv);
      if (c == 0)
        continue;
      for (std::size_t j = col; j < n; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(c, m.at(rank, j)));
    }
    ++rank;
  }
  if (rank < n)
    d = 0;
  if (det)
    *det = d;
  return rank;
}

Matrix power_big(const Matrix &x, const BigInt &e) {
  Matrix result = Matrix::identity(x.field(), x.dim());
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = result * x;
  }
  return result;
}

} // namespace

Matrix::Matrix(FieldPtr field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), a_(dim * dim, 0) {
  if (!field_)
    throw InputError("matrix needs a field");
}

Matrix Matrix::identity(FieldPtr field, std::size_t dim) {
  Matrix m(std::move(field), dim);
  for (std::size_t i = 0; i < dim; ++i)
    m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<Elem>> &rows) {
  Matrix m(std::move(field), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw InputError("matrix rows must form a square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] >= m.field_->order())
        throw InputError("matrix entry outside the field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

bool Matrix::is_identity() const { return *this == identity(field_, dim_); }

std::vector<std::vector<Matrix::Elem>> Matrix::rows() const {
  std::vector<std::vector<Elem>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * dim_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim_));
  return out;
}

Matrix operator*(const Matrix &x, const Matrix &y) {
  require_same(x, y);
  const auto &F = *x.field();
  const std::size_t n = x.dim();
  Matrix r(x.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      auto a = x.at(i, k);
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        r.at(i, j) = F.add(r.at(i, j), F.mul(a, y.at(k, j)));
    }
  return r;
}

Matrix operator+(const Matrix &x, const Matrix &y) {
  require_same(x, y);
  Matrix r(x.field(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      r.at(i, j) = x.field()->add(x.at(i, j), y.at(i, j));
  return r;
}

Matrix operator-(const Matrix &x, const Matrix &y) {
  require_same(x, y);
  Matrix r(x.field(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      r.at(i, j) = x.field()->sub(x.at(i, j), y.at(i, j));
  return r;
}

Matrix transpose(const Matrix &x) {
  Matrix r(x.field(), x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i)
    for (std::size_t j = 0; j < x.dim(); ++j)
      r.at(j, i) = x.at(i, j);
  return r;
}

Matrix inverse(const Matrix &x) {
  const auto &F = *x.field();
  const std::size_t n = x.dim();
  Matrix a = x, inv = Matrix::identity(x.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0)
      ++piv;
    if (piv == n)
      throw InputError("matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a.at(piv, j), a.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    auto s = F.inv(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = F.mul(a.at(col, j), s);
      inv.at(col, j) = F.mul(inv.at(col, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0)
        continue;
      auto c = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = F.sub(a.at(i, j), F.mul(c, a.at(col, j)));
        inv.at(i, j) = F.sub(inv.at(i, j), F.mul(c, inv.at(col, j)));
      }
    }
  }
  return inv;
}

Matrix mat_power(const Matrix &x, std::uint64_t e) {
  return power_big(x, BigInt(static_cast<unsigned long>(e)));
}

std::size_t mat_rank(const Matrix &x) {
  Matrix m = x;
  return eliminate(m, nullptr);
}

Matrix::Elem determinant(const Matrix &x) {
  Matrix m = x;
  GaloisField::Elem d = 0;
  eliminate(m, &d);
  return d;
}

Poly characteristic_polynomial(const Matrix &x) {
  const auto &F = *x.field();
  const std::size_t n = x.dim();
  Matrix h = x;
  // similarity transform to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h.at(piv, j) == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < n; ++c)
        std::swap(h.at(piv, c), h.at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r)
        std::swap(h.at(r, piv), h.at(r, j + 1));
    }
    auto inv = F.inv(h.at(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      auto u = F.mul(h.at(k, j), inv);
      if (u == 0)
        continue;
      for (std::size_t c = 0; c < n; ++c)
        h.at(k, c) = F.sub(h.at(k, c), F.mul(u, h.at(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r)
        h.at(r, j + 1) = F.add(h.at(r, j + 1), F.mul(u, h.at(r, k)));
    }
  }
  // p_m = (t - h_mm) p_{m-1} - sum_i h_{m-i,m} (h_{m,m-1} ... h_{m-i+1,m-i}) p_{m-i-1}
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly lin{F.neg(h.at(m - 1, m - 1)), 1};
    p[m] = poly_mul(F, lin, p[m - 1]);
    GaloisField::Elem prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = F.mul(prod, h.at(m - i, m - i - 1));
      auto c = F.mul(prod, h.at(m - i - 1, m - 1));
      if (c == 0)
        continue;
      p[m] = poly_sub(F, p[m], poly_mul(F, Poly{c}, p[m - i - 1]));
    }
  }
  return p[n];
}

std::uint64_t mat_order(const Matrix &x) {
  if (determinant(x) == 0)
    throw InputError("mat_order needs an invertible matrix");
  const auto &F = *x.field();
  const std::uint64_t q = F.order();
  const std::size_t d = x.dim();
  // |GL_d(q)| = q^{d(d-1)/2} prod_{i=1}^{d} (q^i - 1)
  std::map<BigInt, unsigned> factors;
  factors[BigInt(F.characteristic())] +=
      static_cast<unsigned>(F.degree() * d * (d - 1) / 2);
  BigInt N;
  mpz_ui_pow_ui(N.get_mpz_t(), q, d * (d - 1) / 2);
  for (std::size_t i = 1; i <= d; ++i) {
    BigInt qi;
    mpz_ui_pow_ui(qi.get_mpz_t(), q, i);
    qi -= 1;
    N *= qi;
    if (qi > 1)
      for (const auto &[p, e] : factorize(qi))
        factors[p] += e;
  }
  for (const auto &[p, e] : factors) {
    for (unsigned k = 0; k < e; ++k) {
      if (N % p != 0 || !power_big(x, N / p).is_identity())
        break;
      N /= p;
    }
  }
  if (!power_big(x, N).is_identity())
    throw IntegrityError("matrix order does not divide |GL_d(q)|");
  if (!mpz_fits_ulong_p(N.get_mpz_t()))
    throw BudgetError("matrix order exceeds 64 bits");
  return N.get_ui();
}

bool has_eigenvalue_in_field(const Matrix &x) {
  const auto &F = *x.field();
  Poly cp = characteristic_polynomial(x);
  for (GaloisField::Elem v = 0; v < F.order(); ++v)
    if (poly_eval(F, cp, v) == 0)
      return true;
  return false;
}

Matrix block_diagonal(const Matrix &a, const Matrix &b) {
  if (a.field()->order() != b.field()->order())
    throw InputError("block_diagonal: field mismatch");
  Matrix r(a.field(), a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      r.at(a.dim() + i, a.dim() + j) = b.at(i, j);
  return r;
}

bool preserves_bilinear(const Matrix &m, const Matrix &j) {
  return transpose(m) * j * m == j;
}

bool preserves_symplectic(const Matrix &m, const Matrix &j) { return preserves_bilinear(m, j); }

Matrix::Elem QuadraticForm::evaluate(const std::vector<Matrix::Elem> &v) const {
  const auto &F = *upper.field();
  if (v.size() != upper.dim())
    throw InputError("vector length does not match the form");
  Matrix::Elem s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i; j < v.size(); ++j)
      s = F.add(s, F.mul(upper.at(i, j), F.mul(v[i], v[j])));
  return s;
}

Matrix QuadraticForm::polar() const { return upper + transpose(upper); }

bool preserves_quadratic(const Matrix &m, const QuadraticForm &q) {
  const std::size_t n = m.dim();
  if (n != q.upper.dim())
    throw InputError("form and matrix dimensions differ");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Matrix::Elem> col(n), e(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      col[r] = m.at(r, i);
    e[i] = 1;
    if (q.evaluate(col) != q.evaluate(e))
      return false;
  }
  return preserves_bilinear(m, q.polar());
}

std::uint64_t singular_vector_count(const QuadraticForm &q) {
  const auto &F = *q.upper.field();
  const std::size_t n = q.upper.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= F.order();
    if (total > (1ull << 24))
      throw BudgetError("too many vectors to enumerate");
  }
  std::uint64_t count = 0;
  std::vector<Matrix::Elem> v(n, 0);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (auto &x : v) {
      x = static_cast<Matrix::Elem>(c % F.order());
      c /= F.order();
    }
    count += q.evaluate(v) == 0;
  }
  return count;
}

} // namespace drg
