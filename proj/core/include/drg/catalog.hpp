#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "drg/group_io.hpp"

namespace drg {

/// One row of the catalog index: what a shipped group must re-verify to.
struct CatalogEntry {
  std::string name;
  std::string file;
  std::size_t degree = 0;
  std::uint64_t order = 0;
  bool transitive = false;
  bool primitive = false;
  std::uint64_t stabilizer_order = 0;
  std::string notes;
};

struct CatalogGroup {
  CatalogEntry entry;
  GroupSpec spec;
  PermGroup group;
};

/// $DRG_DATA_DIR when set, else the directory compiled in at build time.
std::filesystem::path default_data_dir();

class Catalog {
public:
  /// Reads <data_dir>/catalog/index.json.
  explicit Catalog(std::filesystem::path data_dir = default_data_dir());

  const std::vector<CatalogEntry> &entries() const { return entries_; }
  const CatalogEntry &entry(const std::string &name) const;
  std::filesystem::path path_of(const std::string &name) const;

  /// Loads and re-verifies degree, order, transitivity, primitivity and
  /// stabilizer order. Throws InputError for an unknown name and
  /// IntegrityError when the data disagrees with the index.
  CatalogGroup load(const std::string &name) const;

private:
  std::filesystem::path dir_;
  std::vector<CatalogEntry> entries_;
};

/// Shorthand for Catalog().load(name).group.
PermGroup catalog_load(const std::string &name);

/// Checks a loaded group against index metadata; returns "" when it agrees,
/// else a description of the first mismatch.
std::string metadata_mismatch(const CatalogEntry &entry, const PermGroup &group);

} // namespace drg
