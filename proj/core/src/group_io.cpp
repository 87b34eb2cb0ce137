#include "drg/group_io.hpp"

#include <fstream>
#include <sstream>

#include "drg/error.hpp"

namespace drg {

namespace {

std::size_t line_of_offset(const std::string &text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    line += text[i] == '\n';
  return line;
}

std::vector<Permutation> parse_generators(const nlohmann::json &arr, std::size_t degree,
                                          bool one_based, const std::string &where) {
  if (!arr.is_array() || arr.empty())
    throw InputError(where + ": generators must be a nonempty array");
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    try {
      out.push_back(permutation_from_json(arr[i], degree, one_based));
    } catch (const InputError &e) {
      throw InputError(where + ".generators[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return out;
}

} // namespace

const NamedSubgroup &GroupSpec::subgroup(const std::string &sub_name) const {
  for (const auto &s : subgroups)
    if (s.name == sub_name)
      return s;
  throw InputError("group " + name + " has no subgroup named " + sub_name);
}

Permutation permutation_from_json(const nlohmann::json &j, std::size_t degree, bool one_based) {
  if (j.is_string())
    return Permutation::from_cycles(degree, j.get<std::string>(), one_based);
  if (!j.is_array())
    throw InputError("permutation must be an image array or a cycle string");
  if (j.size() != degree)
    throw InputError("image array has length " + std::to_string(j.size()) + ", degree is " +
                     std::to_string(degree));
  std::vector<Point> img;
  img.reserve(degree);
  for (const auto &v : j) {
    if (!v.is_number_integer())
      throw InputError("image array entries must be integers");
    long long x = v.get<long long>() - (one_based ? 1 : 0);
    if (x < 0 || static_cast<std::size_t>(x) >= degree)
      throw InputError("image " + std::to_string(v.get<long long>()) + " out of range");
    img.push_back(static_cast<Point>(x));
  }
  return Permutation(std::move(img));
}

nlohmann::json permutation_to_json(const Permutation &p) {
  return nlohmann::json(std::vector<Point>(p.images().begin(), p.images().end()));
}

GroupSpec parse_group_spec(const nlohmann::json &doc) {
  if (!doc.is_object())
    throw InputError("group spec must be a JSON object");
  GroupSpec spec;
  if (!doc.contains("degree") || !doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 1)
    throw InputError("group spec: \"degree\" must be a positive integer");
  spec.degree = doc["degree"].get<std::size_t>();
  spec.name = doc.value("name", std::string("unnamed"));
  spec.notes = doc.value("notes", std::string());
  bool one_based = doc.value("one_based", false);
  if (!doc.contains("generators"))
    throw InputError("group spec: missing \"generators\"");
  spec.generators = parse_generators(doc["generators"], spec.degree, one_based, spec.name);
  if (doc.contains("subgroups")) {
    for (const auto &s : doc["subgroups"]) {
      NamedSubgroup sub;
      sub.name = s.value("name", std::string());
      if (sub.name.empty())
        throw InputError(spec.name + ": subgroup without a name");
      if (!s.contains("generators"))
        throw InputError(spec.name + "." + sub.name + ": missing generators");
      sub.generators = parse_generators(s["generators"], spec.degree, one_based, spec.name + "." + sub.name);
      spec.subgroups.push_back(std::move(sub));
    }
  }
  return spec;
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GroupSpec load_group_spec(const std::filesystem::path &path) {
  std::string text = read_text_file(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw InputError(path.string() + ":" + std::to_string(line_of_offset(text, e.byte)) +
                     ": JSON syntax error: " + e.what());
  }
  try {
    return parse_group_spec(doc);
  } catch (const InputError &e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

nlohmann::json to_json(const GroupSpec &spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["degree"] = spec.degree;
  j["one_based"] = false;
  j["generators"] = nlohmann::json::array();
  for (const auto &g : spec.generators)
    j["generators"].push_back(permutation_to_json(g));
  j["subgroups"] = nlohmann::json::array();
  for (const auto &s : spec.subgroups) {
    nlohmann::json sj{{"name", s.name}, {"generators", nlohmann::json::array()}};
    for (const auto &g : s.generators)
      sj["generators"].push_back(permutation_to_json(g));
    j["subgroups"].push_back(sj);
  }
  j["notes"] = spec.notes;
  return j;
}

} // namespace drg
