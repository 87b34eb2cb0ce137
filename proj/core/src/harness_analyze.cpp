#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "drg/blocks.hpp"
#include "drg/error.hpp"
#include "drg/group_io.hpp"
#include "drg/harness.hpp"
#include "drg/semiregular.hpp"

namespace drg {

namespace {

nlohmann::json unknown_field(const std::string &reason) { return {{"verdict", "unknown"}, {"reason", reason}}; }

// runs one report field; budget stops become unknown, not an error
template <class F>
nlohmann::json guarded(F &&f) {
  try {
    return f();
  } catch (const BudgetError &e) {
    return unknown_field(e.what());
  }
}

const char *clique_verdict(std::size_t best, bool optimal, std::size_t k) {
  if (best >= k)
    return "yes";
  return optimal ? "no" : "unknown";
}

} // namespace

nlohmann::json analyze(const PermGroup &group, const std::string &name, const Budgets &budgets) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = tool_version();
  j["group"] = {{"name", name}, {"degree", group.degree()}, {"order", group.order()}};
  j["budget"] = to_json(budgets);

  const bool transitive = group.is_transitive();
  j["transitive"] = transitive;
  j["derangements"] = guarded([&]() -> nlohmann::json {
    return {{"count", derangement_set(group, budgets.elements).count()}};
  });
  if (!transitive) {
    for (const char *k : {"primitive", "stabilizer_order", "cliques", "max_semiregular", "elusive", "density"})
      j[k] = unknown_field("group is not transitive");
    return j;
  }

  auto prim = blocks_and_primitivity(group);
  j["primitive"] = prim.is_primitive;
  nlohmann::json sizes = nlohmann::json::array();
  for (const auto &s : prim.minimal_systems)
    sizes.push_back(s.block_size());
  j["minimal_block_sizes"] = sizes;
  j["stabilizer_order"] = group.order() / group.degree();

  j["elusive"] = guarded([&]() -> nlohmann::json {
    auto e = is_elusive(group, budgets);
    return {{"verdict", to_string(e.elusive)}, {"primes_checked", e.primes_checked}};
  });
  j["max_semiregular"] = guarded([&]() -> nlohmann::json {
    auto s = max_semiregular_order(group, budgets);
    return {{"order", s.witness.order}, {"optimal", s.optimal}, {"method", to_string(s.witness.method)}};
  });
  auto density = guarded([&]() -> nlohmann::json {
    auto d = density_bounds(group, budgets);
    j["cliques"] = {{"best", d.best_clique},
                    {"optimal", d.clique_optimal},
                    {"source", d.clique_source},
                    {"k2", clique_verdict(d.best_clique, d.clique_optimal, 2)},
                    {"k3", clique_verdict(d.best_clique, d.clique_optimal, 3)},
                    {"k4", clique_verdict(d.best_clique, d.clique_optimal, 4)}};
    auto dj = to_json(d);
    dj.erase("coclique");
    return dj;
  });
  j["density"] = std::move(density);
  if (!j.contains("cliques"))
    j["cliques"] = unknown_field("density computation over budget");
  return j;
}

nlohmann::json analyze_file(const std::filesystem::path &file, const Budgets &budgets) {
  GroupSpec spec = load_group_spec(file);
  return analyze(spec.group(), spec.name, budgets);
}

// ---------------------------------------------------------------------------

bool CorpusSummary::integrity_failure() const {
  return std::any_of(rows.begin(), rows.end(), [](const CorpusRow &r) { return !r.ok; });
}

namespace {

std::string budget_key(const Budgets &b) {
  return "e" + std::to_string(b.elements) + "-c" + std::to_string(b.coset_degree) + "-s" +
         std::to_string(b.subgroup) + "-n" + std::to_string(b.nodes);
}

std::map<std::string, CatalogEntry> read_index(const std::filesystem::path &path) {
  std::map<std::string, CatalogEntry> out;
  auto doc = nlohmann::json::parse(read_text_file(path));
  for (const auto &g : doc.at("groups")) {
    CatalogEntry e;
    e.name = g.at("name").get<std::string>();
    e.file = g.at("file").get<std::string>();
    e.degree = g.at("degree").get<std::size_t>();
    e.order = g.at("order").get<std::uint64_t>();
    e.transitive = g.at("transitive").get<bool>();
    e.primitive = g.at("primitive").get<bool>();
    e.stabilizer_order = g.at("stabilizer_order").get<std::uint64_t>();
    out[e.file] = e;
  }
  return out;
}

std::optional<nlohmann::json> cache_read(const std::filesystem::path &file, const std::string &hash,
                                         const std::string &key) {
  std::ifstream in(file);
  if (!in)
    return std::nullopt;
  try {
    auto doc = nlohmann::json::parse(in);
    if (doc.at("hash") != hash || doc.at("check") != "analyze" || doc.at("budget") != key ||
        doc.at("tool_version") != tool_version())
      return std::nullopt;
    return doc.at("analysis");
  } catch (const nlohmann::json::exception &) {
    return std::nullopt;
  }
}

void cache_write(const std::filesystem::path &file, const std::string &hash, const std::string &key,
                 const nlohmann::json &analysis) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"hash", hash}, {"check", "analyze"}, {"budget", key}, {"tool_version", tool_version()},
                          {"analysis", analysis}}
               .dump();
  }
  std::filesystem::rename(tmp, file);
}

} // namespace

CorpusSummary corpus_scan(const std::filesystem::path &dir, const CorpusOptions &options) {
  if (!std::filesystem::is_directory(dir))
    throw InputError("not a directory: " + dir.string());
  std::vector<std::string> files;
  for (const auto &ent : std::filesystem::directory_iterator(dir)) {
    auto fname = ent.path().filename().string();
    if (ent.is_regular_file() && ent.path().extension() == ".json" && fname != "index.json")
      files.push_back(fname);
  }
  std::sort(files.begin(), files.end());

  CorpusSummary summary;
  std::map<std::string, CatalogEntry> index;
  std::string index_error;
  if (std::filesystem::exists(dir / "index.json")) {
    try {
      index = read_index(dir / "index.json");
    } catch (const std::exception &e) {
      index_error = e.what();
    }
  }

  summary.rows.resize(files.size());
  const std::string key = budget_key(options.budgets);
  auto process = [&](std::size_t i) {
    CorpusRow &row = summary.rows[i];
    row.file = files[i];
    try {
      std::string bytes = read_text_file(dir / row.file);
      row.hash = content_hash(bytes);
      GroupSpec spec = parse_group_spec(nlohmann::json::parse(bytes));
      PermGroup group = spec.group();
      if (auto it = index.find(row.file); it != index.end())
        if (auto why = metadata_mismatch(it->second, group); !why.empty())
          throw IntegrityError("disagrees with index.json: " + why);
      std::optional<std::filesystem::path> cache_file;
      if (options.cache_dir)
        cache_file = *options.cache_dir / (row.hash + "-analyze-" + key + ".json");
      if (cache_file) {
        if (auto hit = cache_read(*cache_file, row.hash, key)) {
          row.analysis = std::move(*hit);
          row.cached = true;
        }
      }
      if (!row.cached) {
        row.analysis = analyze(group, spec.name, options.budgets);
        if (cache_file)
          cache_write(*cache_file, row.hash, key, row.analysis);
      }
      row.ok = true;
    } catch (const nlohmann::json::exception &e) {
      row.error = std::string("invalid JSON: ") + e.what();
    } catch (const std::exception &e) {
      row.error = e.what();
    }
  };

  unsigned workers = options.workers ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++)
          process(i);
      });
  }
  if (!index_error.empty()) {
    CorpusRow bad;
    bad.file = "index.json";
    bad.error = "unreadable index: " + index_error;
    summary.rows.insert(std::lower_bound(summary.rows.begin(), summary.rows.end(), bad,
                                         [](const CorpusRow &a, const CorpusRow &b) { return a.file < b.file; }),
                        bad);
  }
  return summary;
}

nlohmann::json to_json(const CorpusSummary &s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &r : s.rows) {
    nlohmann::json j{{"file", r.file}, {"hash", r.hash}, {"ok", r.ok}};
    if (!r.ok)
      j["error"] = r.error;
    else
      j["analysis"] = r.analysis;
    rows.push_back(j);
  }
  return {{"schema_version", kReportSchemaVersion},
          {"tool_version", tool_version()},
          {"integrity_failure", s.integrity_failure()},
          {"rows", rows}};
}

std::string to_tsv(const CorpusSummary &s) {
  std::ostringstream out;
  out << "file\tstatus\tdegree\torder\tomega\tsemiregular\telusive\trho_lower\trho_upper\n";
  auto field = [](const nlohmann::json &j, const char *a, const char *b) -> std::string {
    if (!j.contains(a) || !j[a].is_object() || !j[a].contains(b))
      return "?";
    const auto &v = j[a][b];
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  for (const auto &r : s.rows) {
    if (!r.ok) {
      out << r.file << "\terror: " << r.error << "\t\t\t\t\t\t\t\n";
      continue;
    }
    const auto &a = r.analysis;
    out << r.file << "\tok\t" << a["group"]["degree"].dump() << '\t' << a["group"]["order"].dump() << '\t'
        << field(a, "cliques", "best") << '\t' << field(a, "max_semiregular", "order") << '\t'
        << field(a, "elusive", "verdict") << '\t' << field(a, "density", "rho_lower") << '\t'
        << field(a, "density", "rho_upper") << '\n';
  }
  return out.str();
}

} // namespace drg
