#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drg/catalog.hpp"
#include "drg/derangement_graph.hpp"
#include "drg/perm_group.hpp"

namespace drg {

/// Bumped whenever a report field changes meaning or disappears.
inline constexpr int kReportSchemaVersion = 1;

const char *tool_version();

enum class CheckVerdict { pass, fail, unknown };
const char *to_string(CheckVerdict v);

/*
 * Outcome of one named check. `claim` states in plain words what was
 * computed. `budget` is always recorded; it is what an unknown verdict
 * ran out of. Wall time is kept out of the canonical JSON so that reports
 * are byte-identical across runs.
 */
struct CheckReport {
  std::string id;
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  CheckVerdict verdict = CheckVerdict::unknown;
  nlohmann::json certificate;  ///< null when the check has no witness
  nlohmann::json budget = nlohmann::json::object();
  std::string detail;
  double wall_seconds = 0;
  std::string tool_version;
};

nlohmann::json to_json(const CheckReport &r, bool with_timing = false);
nlohmann::json to_json(const Budgets &b);
/// Missing keys keep their defaults; throws InputError on a non-object.
Budgets budgets_from_json(const nlohmann::json &j);

struct CheckInfo {
  std::string id;
  std::string claim;
};

/// Registered checks in a fixed order.
const std::vector<CheckInfo> &check_registry();

/// Runs the check end to end. Throws InputError for an unregistered id.
/// A pass whose certificate fails re-validation is downgraded to fail.
CheckReport run_check(const std::string &id, const Budgets &budgets, const Catalog &catalog);
CheckReport run_check(const std::string &id, const Budgets &budgets = {});

/// 0 all pass, 1 any fail, 2 unknown without fail.
int exit_code(const std::vector<CheckVerdict> &verdicts);

/*
 * Certificates are self-contained JSON documents: each embeds the group it
 * refers to (degree and generators), so it can be re-validated without the
 * catalog. Kinds: clique, coclique, clique_coclique, semiregular, elusive,
 * matrix, bundle (a list of the others).
 */
nlohmann::json group_json(const std::string &name, const PermGroup &group);
PermGroup group_from_json(const nlohmann::json &j);

/// Independent re-validation. Malformed documents come back as not ok.
AuditResult verify_certificate(const nlohmann::json &cert, const Budgets &budgets = {});

/*
 * Full report for one group. Every field whose computation hits a budget
 * is reported as unknown with the budget message rather than failing the
 * whole report. Deterministic: no timings, fixed RNG seeds.
 */
nlohmann::json analyze(const PermGroup &group, const std::string &name, const Budgets &budgets = {});
/// Loads a group spec file (InputError with line context on bad JSON).
nlohmann::json analyze_file(const std::filesystem::path &file, const Budgets &budgets = {});

/// Lower-case hex SHA-256 of the bytes.
std::string content_hash(const std::string &bytes);

struct CorpusOptions {
  Budgets budgets;
  /// Results are cached here as <hash>-<check>-<budget key>.json; none when unset.
  std::optional<std::filesystem::path> cache_dir;
  unsigned workers = 0;  ///< 0 = hardware concurrency
};

struct CorpusRow {
  std::string file;  ///< relative to the scanned directory
  std::string hash;
  bool ok = false;   ///< parsed, and agrees with index.json when one is present
  bool cached = false;
  std::string error;
  nlohmann::json analysis;
};

struct CorpusSummary {
  std::vector<CorpusRow> rows;  ///< sorted by file
  bool integrity_failure() const;
};

/*
 * Analyzes every *.json group file in `dir` (index.json is read as
 * metadata, not as a group). Unreadable or corrupted files become rows
 * with an error and the scan continues. Throws InputError when `dir` is
 * not a directory.
 */
CorpusSummary corpus_scan(const std::filesystem::path &dir, const CorpusOptions &options = {});

nlohmann::json to_json(const CorpusSummary &s);
/// One line per group: file, status, degree, order, omega, semiregular, elusive, rho bounds.
std::string to_tsv(const CorpusSummary &s);

} // namespace drg
