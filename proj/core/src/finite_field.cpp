#include "drg/finite_field.hpp"

#include <algorithm>
#include <numeric>

#include "drg/error.hpp"
#include "drg/matrix.hpp"

namespace drg {

namespace {

std::vector<std::uint32_t> digits(std::uint64_t code, std::uint32_t base, std::uint32_t len) {
  std::vector<std::uint32_t> d(len);
  for (auto &c : d) {
    c = static_cast<std::uint32_t>(code % base);
    code /= base;
  }
  return d;
}

// product of coefficient vectors over GF(p), reduced modulo a monic modulus
std::vector<std::uint32_t> mul_mod_p(const std::vector<std::uint32_t> &a,
                                     const std::vector<std::uint32_t> &b,
                                     const std::vector<std::uint32_t> &modulus, std::uint32_t p) {
  const std::size_t k = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  for (std::size_t d = 2 * k; d-- > k;) {
    std::uint64_t c = prod[d];
    if (!c)
      continue;
    for (std::size_t i = 0; i <= k; ++i)
      prod[d - k + i] = (prod[d - k + i] + (p - c) * modulus[i]) % p;
  }
  return {prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(k)};
}

} // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (k == 0 || !is_prime(BigInt(p)))
    throw InputError("field needs a prime characteristic and degree >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536)
      throw InputError("field order exceeds 2^16");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    GaloisField prime_field(p, 1);
    modulus_ = least_irreducible(prime_field, k);
    if (!is_irreducible(prime_field, modulus_))
      throw IntegrityError("defining polynomial is reducible");
  }

  auto slow_mul = [&](Elem a, Elem b) -> Elem {
    if (k_ == 1)
      return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return from_coefficients(mul_mod_p(coefficients(a), coefficients(b), modulus_, p_));
  };

  exp_.assign(q_, 0);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t len = 0;
    do {
      exp_[len++] = x;
      x = slow_mul(x, g);
    } while (x != 1 && len < q_);
    if (len == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  if (q_ > 2 && primitive_ == 1)
    throw IntegrityError("no multiplicative generator found");
  for (std::uint32_t i = 0; i + 1 < q_; ++i)
    log_[exp_[i]] = i;
}

std::shared_ptr<const GaloisField> GaloisField::make(std::uint32_t q) {
  if (q < 2)
    throw InputError("field order must be a prime power >= 2");
  auto f = factorize(BigInt(q));
  if (f.size() != 1)
    throw InputError("field order " + std::to_string(q) + " is not a prime power");
  return std::make_shared<const GaloisField>(static_cast<std::uint32_t>(f[0].first.get_ui()),
                                             f[0].second);
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<Elem>(r < 0 ? r + p_ : r);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2)
    return a ^ b;
  if (k_ == 1)
    return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2)
    return a;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0)
    throw InputError("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0)
    return 1;
  if (a == 0)
    return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint64_t GaloisField::element_order(Elem a) const {
  if (a == 0)
    throw InputError("zero has no multiplicative order");
  return (q_ - 1) / std::gcd<std::uint64_t>(q_ - 1, log_[a]);
}

std::vector<std::uint32_t> GaloisField::coefficients(Elem a) const { return digits(a, p_, k_); }

GaloisField::Elem GaloisField::from_coefficients(const std::vector<std::uint32_t> &c) const {
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_ && i < c.size(); ++i) {
    out += (c[i] % p_) * scale;
    scale *= p_;
  }
  return out;
}

// ---- polynomials

Poly poly_trim(Poly f) {
  while (!f.empty() && f.back() == 0)
    f.pop_back();
  return f;
}

Poly poly_add(const GaloisField &F, const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return poly_trim(std::move(r));
}

Poly poly_sub(const GaloisField &F, const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return poly_trim(std::move(r));
}

Poly poly_mul(const GaloisField &F, const Poly &a, const Poly &b) {
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return poly_trim(std::move(r));
}

Poly poly_mod(const GaloisField &F, const Poly &a, const Poly &b_in) {
  Poly b = poly_trim(b_in);
  if (b.empty())
    throw InputError("polynomial division by zero");
  Poly r = poly_trim(a);
  const auto lead_inv = F.inv(b.back());
  while (r.size() >= b.size()) {
    auto c = F.mul(r.back(), lead_inv);
    std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      r[shift + i] = F.sub(r[shift + i], F.mul(c, b[i]));
    r = poly_trim(std::move(r));
  }
  return r;
}

Poly poly_gcd(const GaloisField &F, Poly a, Poly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    auto li = F.inv(a.back());
    for (auto &c : a)
      c = F.mul(c, li);
  }
  return a;
}

Poly poly_powmod(const GaloisField &F, const Poly &base, const BigInt &e, const Poly &mod) {
  Poly result = poly_mod(F, Poly{1}, mod);
  Poly b = poly_mod(F, base, mod);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mod(F, poly_mul(F, result, result), mod);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = poly_mod(F, poly_mul(F, result, b), mod);
  }
  return result;
}

GaloisField::Elem poly_eval(const GaloisField &F, const Poly &f, GaloisField::Elem x) {
  GaloisField::Elem v = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    v = F.add(F.mul(v, x), *it);
  return v;
}

bool is_irreducible(const GaloisField &F, const Poly &f_in) {
  Poly f = poly_trim(f_in);
  if (f.size() < 2)
    return false;
  const std::size_t d = f.size() - 1;
  if (d == 1)
    return true;
  const Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; i <= d / 2; ++i) {
    h = poly_powmod(F, h, BigInt(F.order()), f);
    Poly g = poly_gcd(F, poly_sub(F, h, x), f);
    if (g.size() > 1)
      return false;
  }
  return true;
}

Poly least_irreducible(const GaloisField &F, std::uint32_t degree) {
  if (degree == 0)
    throw InputError("irreducible polynomial needs degree >= 1");
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) {
    count *= F.order();
    if (count > (1ull << 40))
      throw BudgetError("irreducible search space too large");
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(degree + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < degree; ++i) {
      f[i] = static_cast<GaloisField::Elem>(c % F.order());
      c /= F.order();
    }
    f[degree] = 1;
    if (is_irreducible(F, f))
      return f;
  }
  throw IntegrityError("no irreducible polynomial found");
}

// ---- extension fields

ExtensionField::ExtensionField(FieldPtr base, std::uint32_t m) : base_(std::move(base)), m_(m) {
  if (m == 0)
    throw InputError("extension degree must be >= 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= base_->order();
    if (order > (1ull << 32))
      throw BudgetError("extension field order exceeds 2^32");
  }
  order_ = order;
  modulus_ = least_irreducible(*base_, m);
  if (order_ > 2)
    group_order_factors_ = factorize(BigInt(static_cast<unsigned long>(order_ - 1)));
}

ExtensionField::Vec ExtensionField::one() const { return embed(1); }

ExtensionField::Vec ExtensionField::embed(GaloisField::Elem c) const {
  Vec v(m_, 0);
  v[0] = c;
  return v;
}

ExtensionField::Vec ExtensionField::add(const Vec &a, const Vec &b) const {
  Vec r(m_);
  for (std::uint32_t i = 0; i < m_; ++i)
    r[i] = base_->add(a[i], b[i]);
  return r;
}

ExtensionField::Vec ExtensionField::mul(const Vec &a, const Vec &b) const {
  Poly r = poly_mod(*base_, poly_mul(*base_, poly_trim(a), poly_trim(b)), modulus_);
  r.resize(m_, 0);
  return r;
}

ExtensionField::Vec ExtensionField::pow(const Vec &a, std::uint64_t e) const {
  Vec result = one(), b = a;
  while (e) {
    if (e & 1)
      result = mul(result, b);
    e >>= 1;
    if (e)
      b = mul(b, b);
  }
  return result;
}

bool ExtensionField::is_zero(const Vec &a) const {
  return std::all_of(a.begin(), a.end(), [](auto c) { return c == 0; });
}

GaloisField::Elem ExtensionField::to_base(const Vec &a) const {
  for (std::uint32_t i = 1; i < m_; ++i)
    if (a[i] != 0)
      throw IntegrityError("extension element is not in the base field");
  return a[0];
}

ExtensionField::Vec ExtensionField::from_code(std::uint64_t code) const {
  return digits(code, base_->order(), m_);
}

std::uint64_t ExtensionField::element_order(const Vec &a) const {
  if (is_zero(a))
    throw InputError("zero has no multiplicative order");
  std::uint64_t n = order_ - 1;
  for (const auto &[p, e] : group_order_factors_) {
    std::uint64_t pp = p.get_ui();
    while (n % pp == 0 && pow(a, n / pp) == one())
      n /= pp;
  }
  return n;
}

ExtensionField::Vec ExtensionField::primitive_element() const {
  for (std::uint64_t code = 1; code < order_; ++code) {
    Vec v = from_code(code);
    if (element_order(v) == order_ - 1)
      return v;
  }
  throw IntegrityError("extension field has no multiplicative generator");
}

Matrix ExtensionField::multiplication_matrix(const Vec &a) const {
  Matrix M(base_, m_);
  for (std::uint32_t j = 0; j < m_; ++j) {
    Vec basis(m_, 0);
    basis[j] = 1;
    Vec col = mul(basis, a);
    for (std::uint32_t i = 0; i < m_; ++i)
      M.at(i, j) = col[i];
  }
  return M;
}

} // namespace drg
