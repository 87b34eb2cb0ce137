#pragma once

// Brute-force reference implementations used only by tests. They work on
// raw image vectors so they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using Img = std::vector<std::uint32_t>;

inline Img mul(const Img &p, const Img &q) {
  Img r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[i] = q[p[i]];
  return r;
}

inline Img inv(const Img &p) {
  Img r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Img ident(std::size_t n) {
  Img r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = static_cast<std::uint32_t>(i);
  return r;
}

inline bool deranged(const Img &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == i)
      return false;
  return true;
}

// all elements by breadth-first closure under right multiplication
inline std::vector<Img> closure(const std::vector<Img> &gens) {
  std::set<Img> seen{ident(gens.front().size())};
  std::vector<Img> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : gens) {
      Img h = mul(queue[i], g);
      if (seen.insert(h).second)
        queue.push_back(h);
    }
  return {seen.begin(), seen.end()};
}

inline bool agree_somewhere(const Img &a, const Img &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == b[i])
      return true;
  return false;
}

// plain Carraghan-Pardalos maximum clique on an explicit adjacency predicate
inline std::size_t cp_max_clique(const std::vector<Img> &verts,
                                 const std::function<bool(const Img &, const Img &)> &adj,
                                 std::size_t cap) {
  std::size_t best = 0;
  std::function<void(const std::vector<std::size_t> &, std::size_t)> rec =
      [&](const std::vector<std::size_t> &cand, std::size_t size) {
        if (size > best)
          best = size;
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (size + (cand.size() - i) <= best || best >= cap)
            return;
          std::vector<std::size_t> next;
          for (std::size_t j = i + 1; j < cand.size(); ++j)
            if (adj(verts[cand[i]], verts[cand[j]]))
              next.push_back(cand[j]);
          rec(next, size + 1);
        }
      };
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = i;
  rec(all, 0);
  return best;
}

inline bool all_deranged(const std::vector<Img> &elems) {
  for (const auto &e : elems)
    if (e != ident(e.size()) && !deranged(e))
      return false;
  return true;
}

// closure that gives up (returns empty) at the first non-identity element
// with a fixed point
inline std::vector<Img> semiregular_closure(const std::vector<Img> &gens) {
  std::set<Img> seen{ident(gens.front().size())};
  std::vector<Img> queue(seen.begin(), seen.end());
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &g : gens) {
      Img h = mul(queue[i], g);
      if (!seen.insert(h).second)
        continue;
      if (!deranged(h) && h != ident(h.size()))
        return {};
      queue.push_back(h);
    }
  return {seen.begin(), seen.end()};
}

// largest semiregular subgroup by closing every semiregular subgroup under
// adjoining one more semiregular element
inline std::size_t brute_max_semiregular(const std::vector<Img> &elems) {
  std::vector<Img> semireg;
  for (const auto &e : elems)
    if (e != ident(e.size()) && deranged(e))
      semireg.push_back(e);
  std::set<std::vector<Img>> found;
  std::vector<std::vector<Img>> queue;
  for (const auto &x : semireg) {
    auto c = closure({x});
    if (all_deranged(c) && found.insert(c).second)
      queue.push_back(c);
  }
  std::size_t best = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    best = std::max(best, queue[i].size());
    std::set<Img> have(queue[i].begin(), queue[i].end());
    for (const auto &x : semireg) {
      if (have.count(x))
        continue;
      auto gens = queue[i];
      gens.push_back(x);
      auto c = semiregular_closure(gens);
      if (!c.empty() && found.insert(c).second)
        queue.push_back(c);
    }
  }
  return best;
}

} // namespace oracle
