#include "drg/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "drg/error.hpp"

namespace drg {

namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // keeps the smaller root
  std::uint32_t unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return a;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return a;
  }

private:
  std::vector<std::uint32_t> parent_;
};

} // namespace

std::vector<Point> BlockSystem::block(std::uint32_t id) const {
  std::vector<Point> out;
  for (std::size_t x = 0; x < degree; ++x)
    if (block_of[x] == id)
      out.push_back(static_cast<Point>(x));
  return out;
}

BlockSystem make_block_system(const std::vector<std::uint32_t> &labels) {
  BlockSystem sys;
  sys.degree = labels.size();
  sys.block_of.resize(labels.size());
  std::vector<std::int64_t> remap(labels.size() + 1, -1);
  std::uint32_t next = 0;
  std::vector<std::size_t> sizes;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    if (labels[x] >= remap.size())
      remap.resize(labels[x] + 1, -1);
    if (remap[labels[x]] < 0) {
      remap[labels[x]] = next++;
      sizes.push_back(0);
    }
    sys.block_of[x] = static_cast<std::uint32_t>(remap[labels[x]]);
    ++sizes[sys.block_of[x]];
  }
  sys.num_blocks = next;
  for (std::size_t s : sizes)
    if (s != sizes.front())
      throw InputError("block system blocks have unequal sizes");
  return sys;
}

BlockSystem minimal_block_system(const PermGroup &group, Point a) {
  const std::size_t n = group.degree();
  if (a >= n)
    throw InputError("minimal_block_system: point out of range");
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue;
  if (a != 0) {
    uf.unite(0, a);
    queue.emplace_back(0, a);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [x, y] = queue[qi];
    for (const auto &g : group.generators()) {
      std::uint32_t gx = uf.find(g[x]);
      std::uint32_t gy = uf.find(g[y]);
      if (gx != gy) {
        uf.unite(gx, gy);
        queue.emplace_back(gx, gy);
      }
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (std::uint32_t x = 0; x < n; ++x)
    labels[x] = uf.find(x);
  return make_block_system(labels);
}

PrimitivityReport blocks_and_primitivity(const PermGroup &group) {
  if (!group.is_transitive())
    throw PreconditionError("blocks_and_primitivity requires a transitive group");
  PrimitivityReport report;
  const std::size_t n = group.degree();
  std::vector<BlockSystem> found;
  for (Point a = 1; a < n; ++a) {
    BlockSystem sys = minimal_block_system(group, a);
    if (sys.num_blocks <= 1)
      continue;
    if (std::find(found.begin(), found.end(), sys) == found.end())
      found.push_back(std::move(sys));
  }
  // keep systems whose block through 0 contains no smaller found block through 0
  auto block0 = [](const BlockSystem &s) { return s.block(0); };
  for (const auto &s : found) {
    auto b = block0(s);
    bool minimal = true;
    for (const auto &t : found) {
      if (&t == &s)
        continue;
      auto c = block0(t);
      if (c.size() < b.size() && std::includes(b.begin(), b.end(), c.begin(), c.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      report.minimal_systems.push_back(s);
  }
  std::sort(report.minimal_systems.begin(), report.minimal_systems.end(),
            [](const BlockSystem &x, const BlockSystem &y) {
              if (x.block_size() != y.block_size())
                return x.block_size() < y.block_size();
              return x.block_of < y.block_of;
            });
  report.is_primitive = report.minimal_systems.empty();
  return report;
}

bool is_block_system(const PermGroup &group, const BlockSystem &system) {
  if (system.degree != group.degree())
    return false;
  for (const auto &g : group.generators()) {
    std::vector<std::int64_t> image(system.num_blocks, -1);
    for (Point x = 0; x < system.degree; ++x) {
      auto from = system.block_of[x];
      auto to = static_cast<std::int64_t>(system.block_of[g[x]]);
      if (image[from] < 0)
        image[from] = to;
      else if (image[from] != to)
        return false;
    }
  }
  return true;
}

Permutation induced_on_blocks(const Permutation &p, const BlockSystem &system) {
  if (p.degree() != system.degree)
    throw InputError("induced_on_blocks: degree mismatch");
  std::vector<std::int64_t> image(system.num_blocks, -1);
  for (Point x = 0; x < system.degree; ++x) {
    auto from = system.block_of[x];
    auto to = static_cast<std::int64_t>(system.block_of[p[x]]);
    if (image[from] < 0)
      image[from] = to;
    else if (image[from] != to)
      throw InputError("permutation does not preserve the block system");
  }
  std::vector<Point> img(image.begin(), image.end());
  return Permutation(std::move(img));
}

} // namespace drg
