#include "drg/catalog.hpp"

#include <cstdlib>

#include "drg/blocks.hpp"
#include "drg/error.hpp"

#ifndef DRG_DEFAULT_DATA_DIR
#define DRG_DEFAULT_DATA_DIR "data"
#endif

namespace drg {

std::filesystem::path default_data_dir() {
  if (const char *env = std::getenv("DRG_DATA_DIR"); env && *env)
    return env;
  return DRG_DEFAULT_DATA_DIR;
}

Catalog::Catalog(std::filesystem::path data_dir) : dir_(std::move(data_dir) / "catalog") {
  auto index_path = dir_ / "index.json";
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(index_path));
  } catch (const nlohmann::json::exception &e) {
    throw IntegrityError(index_path.string() + ": " + e.what());
  }
  if (doc.value("schema_version", 0) != 1)
    throw IntegrityError(index_path.string() + ": unsupported schema_version");
  for (const auto &g : doc.at("groups")) {
    CatalogEntry e;
    e.name = g.at("name").get<std::string>();
    e.file = g.at("file").get<std::string>();
    e.degree = g.at("degree").get<std::size_t>();
    e.order = g.at("order").get<std::uint64_t>();
    e.transitive = g.at("transitive").get<bool>();
    e.primitive = g.at("primitive").get<bool>();
    e.stabilizer_order = g.at("stabilizer_order").get<std::uint64_t>();
    e.notes = g.value("notes", std::string());
    entries_.push_back(std::move(e));
  }
}

const CatalogEntry &Catalog::entry(const std::string &name) const {
  for (const auto &e : entries_)
    if (e.name == name)
      return e;
  throw InputError("unknown catalog group: " + name);
}

std::filesystem::path Catalog::path_of(const std::string &name) const { return dir_ / entry(name).file; }

std::string metadata_mismatch(const CatalogEntry &entry, const PermGroup &group) {
  if (group.degree() != entry.degree)
    return "degree " + std::to_string(group.degree()) + " != recorded " + std::to_string(entry.degree);
  if (group.order() != entry.order)
    return "order " + std::to_string(group.order()) + " != recorded " + std::to_string(entry.order);
  bool transitive = group.is_transitive();
  if (transitive != entry.transitive)
    return "transitivity differs from the recorded flag";
  if (transitive) {
    if (group.stabilizer(0).order() != entry.stabilizer_order)
      return "stabilizer order " + std::to_string(group.stabilizer(0).order()) + " != recorded " +
             std::to_string(entry.stabilizer_order);
    if (blocks_and_primitivity(group).is_primitive != entry.primitive)
      return "primitivity differs from the recorded flag";
  }
  return {};
}

CatalogGroup Catalog::load(const std::string &name) const {
  const CatalogEntry &e = entry(name);
  GroupSpec spec;
  try {
    spec = load_group_spec(dir_ / e.file);
  } catch (const InputError &err) {
    throw IntegrityError(std::string("catalog file damaged: ") + err.what());
  }
  PermGroup group = spec.group();
  if (auto why = metadata_mismatch(e, group); !why.empty())
    throw IntegrityError("catalog group " + name + " fails its metadata check: " + why);
  return CatalogGroup{e, std::move(spec), std::move(group)};
}

PermGroup catalog_load(const std::string &name) { return Catalog().load(name).group; }

} // namespace drg
