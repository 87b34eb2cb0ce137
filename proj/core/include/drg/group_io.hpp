#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drg/perm_group.hpp"

namespace drg {

struct NamedSubgroup {
  std::string name;
  std::vector<Permutation> generators;
};

/// Contents of a group spec file, normalized to 0-based points.
struct GroupSpec {
  std::string name;
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<NamedSubgroup> subgroups;
  std::string notes;

  PermGroup group() const { return PermGroup(generators); }
  const NamedSubgroup &subgroup(const std::string &name) const;
};

/// Parses a spec document. Generators are image arrays or cycle strings;
/// both are shifted down when "one_based" is true. Throws InputError
/// naming the offending field.
GroupSpec parse_group_spec(const nlohmann::json &doc);
/// Reads and parses a file; JSON syntax errors report line and column.
GroupSpec load_group_spec(const std::filesystem::path &path);

/// 0-based image arrays, one_based = false.
nlohmann::json to_json(const GroupSpec &spec);

nlohmann::json permutation_to_json(const Permutation &p);
Permutation permutation_from_json(const nlohmann::json &j, std::size_t degree, bool one_based);

/// Whole file as a string; throws InputError when unreadable.
std::string read_text_file(const std::filesystem::path &path);

} // namespace drg
