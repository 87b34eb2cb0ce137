#pragma once

#include <cstdint>
#include <vector>

#include "drg/perm_group.hpp"

namespace drg {

/// A partition of {0..n-1} into num_blocks blocks of equal size; block ids
/// are numbered by first appearance, so block_of[0] == 0.
struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::uint32_t> block_of;
  std::size_t num_blocks = 0;

  std::size_t block_size() const { return num_blocks ? degree / num_blocks : 0; }
  std::vector<Point> block(std::uint32_t id) const;

  friend bool operator==(const BlockSystem &, const BlockSystem &) = default;
};

/// Relabels arbitrary class ids by first appearance and counts blocks.
BlockSystem make_block_system(const std::vector<std::uint32_t> &labels);

/// Finest G-invariant partition in which 0 and a share a block
/// (Atkinson's union-find closure).
BlockSystem minimal_block_system(const PermGroup &group, Point a);

struct PrimitivityReport {
  bool is_primitive = true;
  /// Minimal nontrivial block systems, deduplicated, sorted by block size then labels.
  std::vector<BlockSystem> minimal_systems;
};

/// Throws PreconditionError when the group is intransitive.
PrimitivityReport blocks_and_primitivity(const PermGroup &group);

/// True when every generator maps blocks to blocks.
bool is_block_system(const PermGroup &group, const BlockSystem &system);

/// Permutation induced on the block ids. Throws InputError when p does not
/// preserve the partition.
Permutation induced_on_blocks(const Permutation &p, const BlockSystem &system);

} // namespace drg
