#include "drg/builders.hpp"

#include <algorithm>
#include <map>

#include "drg/error.hpp"
#include "drg/number_theory.hpp"
#include "drg/semiregular.hpp"

namespace drg {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1ull << 40))
      return r;
  }
  return r;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > cap / std::max<std::uint64_t>(base, 1))
      throw BudgetError("product degree exceeds the coset-degree budget");
    r *= base;
  }
  if (r > cap)
    throw BudgetError("product degree exceeds the coset-degree budget");
  return r;
}

bool is_even(const Permutation &g) {
  std::size_t transpositions = 0;
  for (const auto &c : cycles(g))
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

} // namespace

std::vector<std::vector<Point>> subsets_of(std::size_t m, std::size_t l) {
  if (l > m)
    throw InputError("subset size exceeds m");
  std::vector<std::vector<Point>> out;
  std::vector<Point> cur(l);
  for (std::size_t i = 0; i < l; ++i)
    cur[i] = static_cast<Point>(i);
  for (;;) {
    out.push_back(cur);
    std::size_t i = l;
    while (i > 0 && cur[i - 1] == m - l + i - 1)
      --i;
    if (i == 0)
      break;
    ++cur[i - 1];
    for (std::size_t j = i; j < l; ++j)
      cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Permutation action_on_subsets(const Permutation &g, std::size_t l) {
  auto subs = subsets_of(g.degree(), l);
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < subs.size(); ++i)
    index.emplace(subs[i], static_cast<Point>(i));
  std::vector<Point> img(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    std::vector<Point> s;
    for (Point x : subs[i])
      s.push_back(g[x]);
    std::sort(s.begin(), s.end());
    img[i] = index.at(s);
  }
  return Permutation(std::move(img));
}

PermGroup subsets_action(std::size_t m, std::size_t l, const Budgets &budgets) {
  if (m < 3 || l < 1 || 2 * l > m)
    throw InputError("subsets_action needs m >= 3 and 1 <= l <= m/2");
  if (binomial(m, l) > budgets.coset_degree)
    throw BudgetError("binomial(m, l) exceeds the coset-degree budget");
  std::vector<Point> three(m), cyc(m);
  for (std::size_t i = 0; i < m; ++i)
    three[i] = cyc[i] = static_cast<Point>(i);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  std::vector<Permutation> gens{Permutation(three)};
  if (m > 3) {
    std::size_t start = m % 2 ? 0 : 1;  // an odd-length cycle is even
    for (std::size_t i = start; i < m; ++i)
      cyc[i] = static_cast<Point>(i + 1 < m ? i + 1 : start);
    gens.emplace_back(cyc);
  }
  std::vector<Permutation> images;
  for (const auto &g : gens)
    images.push_back(action_on_subsets(g, l));
  PermGroup G(images);
  BigInt expect;
  mpz_fac_ui(expect.get_mpz_t(), m);
  expect /= 2;
  if (BigInt(static_cast<unsigned long>(G.order())) != expect)
    throw IntegrityError("subset action does not have order m!/2");
  return G;
}

SubsetWitness alt_subset_semiregular_witness(std::size_t m, std::size_t l, std::size_t p) {
  if (m < 3 || l < 1 || 2 * l > m)
    throw InputError("alt_subset_semiregular_witness needs m >= 3 and 1 <= l <= m/2");
  if (!is_prime(BigInt(static_cast<unsigned long>(p))) || p <= l || m % p > l - 1)
    throw InputError("need a prime p > l with m mod p <= l - 1");
  const std::size_t fixed = m % p;
  std::vector<Point> img(m);
  for (std::size_t i = 0; i < m; ++i)
    img[i] = static_cast<Point>(i);
  for (std::size_t start = fixed; start < m; start += p)
    for (std::size_t j = 0; j < p; ++j)
      img[start + j] = static_cast<Point>(start + (j + 1) % p);
  Permutation x(std::move(img));
  if (!is_even(x))
    throw InputError("the p-cycle product is odd, so it is not in Alt(m)");
  return {x, action_on_subsets(x, l)};
}

PermGroup wreath_product_action(const WreathSpec &spec, const Budgets &budgets) {
  const std::size_t k = spec.top.degree();
  const std::size_t d = spec.base.degree();
  const std::uint64_t degree = checked_power(d, k, budgets.coset_degree);
  (void)degree;
  const Permutation id_base = Permutation::identity(d);
  const Permutation id_top = Permutation::identity(k);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < k; ++i)
    for (const auto &h : spec.base.generators()) {
      std::vector<Permutation> hs(k, id_base);
      hs[i] = h;
      gens.push_back(product_action_element(hs, id_top));
    }
  for (const auto &a : spec.top.generators())
    gens.push_back(product_action_element(std::vector<Permutation>(k, id_base), a));
  PermGroup G(gens);
  BigInt expect = spec.top.order();
  for (std::size_t i = 0; i < k; ++i)
    expect *= static_cast<unsigned long>(spec.base.order());
  if (BigInt(static_cast<unsigned long>(G.order())) != expect)
    throw IntegrityError("wreath product order differs from |base|^k |top|");
  return G;
}

CliqueCertificate product_clique(const Permutation &h, std::size_t k, const Budgets &budgets) {
  if (!is_derangement(h))
    throw InputError("product_clique needs a derangement h");
  if (k < 1 || k > 20)
    throw InputError("product_clique needs 1 <= k <= 20");
  checked_power(h.degree(), k, budgets.coset_degree);
  const Permutation id = Permutation::identity(h.degree());
  const Permutation id_top = Permutation::identity(k);
  CliqueCertificate c;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    std::vector<Permutation> hs;
    for (std::size_t i = 0; i < k; ++i)
      hs.push_back(mask >> i & 1 ? h : id);
    c.vertices.push_back(product_action_element(hs, id_top));
  }
  std::sort(c.vertices.begin() + 1, c.vertices.end());
  return c;
}

} // namespace drg
