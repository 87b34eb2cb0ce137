#include "bit_clique.hpp"

#include <algorithm>

namespace drg::detail {

BitGraph agreement_graph(const std::vector<Permutation> &verts, bool disagree_everywhere) {
  const std::size_t nv = verts.size();
  BitGraph g(nv);
  if (nv == 0)
    return g;
  const std::size_t deg = verts.front().degree();
  // bucket[x * deg + y] = vertices v with v[x] == y
  std::vector<std::vector<std::uint32_t>> bucket(deg * deg);
  for (std::uint32_t v = 0; v < nv; ++v)
    for (Point x = 0; x < deg; ++x)
      bucket[x * deg + verts[v][x]].push_back(v);
  for (std::uint32_t v = 0; v < nv; ++v) {
    Bits &row = g.row(v);
    for (Point x = 0; x < deg; ++x)
      for (std::uint32_t u : bucket[x * deg + verts[v][x]])
        row.set(u);
    if (disagree_everywhere) {
      for (auto &word : row.w)
        word = ~word;
      // clear padding bits past the last vertex
      if (nv % 64)
        row.w.back() &= (Word{1} << (nv % 64)) - 1;
    } else {
      row.reset(v);
    }
  }
  return g;
}

namespace {

class Searcher {
public:
  Searcher(const BitGraph &g, std::size_t target, std::uint64_t budget)
      : g_(g), target_(target), budget_(budget) {}

  void run(std::vector<std::uint32_t> seed) {
    best_ = std::move(seed);
    if (best_.size() >= target_) {
      done_ = true;
      return;
    }
    Bits all(g_.size());
    for (std::size_t v = 0; v < g_.size(); ++v)
      all.set(v);
    std::vector<std::uint32_t> current;
    expand(current, all);
  }

  CliqueSearch result() const {
    CliqueSearch r;
    r.best = best_;
    std::sort(r.best.begin(), r.best.end());
    r.closed = !aborted_;
    r.reached_target = best_.size() >= target_;
    r.nodes = nodes_;
    return r;
  }

private:
  void expand(std::vector<std::uint32_t> &current, Bits candidates) {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    // greedy colouring: vertices in colour-class order with their colour
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> colour;
    Bits uncoloured = candidates;
    std::uint32_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bits q = uncoloured;
      // bits of q below the current vertex are already clear
      for (std::size_t wi = 0; wi < q.w.size();) {
        if (!q.w[wi]) {
          ++wi;
          continue;
        }
        std::size_t v = wi * 64 + static_cast<std::size_t>(std::countr_zero(q.w[wi]));
        q.reset(v);
        uncoloured.reset(v);
        const Bits &nv = g_.row(v);
        for (std::size_t i = wi; i < q.w.size(); ++i)
          q.w[i] &= ~nv.w[i];
        order.push_back(static_cast<std::uint32_t>(v));
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colour[i] <= best_.size())
        return;
      std::uint32_t v = order[i];
      current.push_back(v);
      Bits next = candidates;
      const Bits &nv = g_.row(v);
      for (std::size_t j = 0; j < next.w.size(); ++j)
        next.w[j] &= nv.w[j];
      if (next.none()) {
        if (current.size() > best_.size()) {
          best_ = current;
          if (best_.size() >= target_)
            done_ = true;
        }
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      candidates.reset(v);
      if (done_ || aborted_)
        return;
    }
  }

  const BitGraph &g_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool done_ = false;
  std::vector<std::uint32_t> best_;
};

} // namespace

CliqueSearch max_clique_bitset(const BitGraph &g, std::vector<std::uint32_t> seed, std::size_t target,
                               std::uint64_t node_budget) {
  Searcher s(g, target, node_budget);
  s.run(std::move(seed));
  return s.result();
}

} // namespace drg::detail
