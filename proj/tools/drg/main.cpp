#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "drg/catalog.hpp"
#include "drg/derangement_graph.hpp"
#include "drg/error.hpp"
#include "drg/group_io.hpp"
#include "drg/harness.hpp"
#include "drg/number_theory.hpp"

namespace {

constexpr int kUsage = 3;

using nlohmann::json;

json bigs(const std::vector<drg::BigInt> &v) {
  json out = json::array();
  for (const auto &x : v)
    out.push_back(x.get_str());
  return out;
}

std::uint64_t arg_u64(const std::vector<std::string> &args, std::size_t i) {
  if (i >= args.size())
    throw drg::InputError("missing argument " + std::to_string(i + 1));
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(args[i], &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos != args[i].size() || args[i].empty() || args[i][0] == '-')
    throw drg::InputError("not a nonnegative integer: '" + args[i] + "'");
  return v;
}

drg::BigInt arg_big(const std::vector<std::string> &args, std::size_t i) {
  if (i >= args.size())
    throw drg::InputError("missing argument " + std::to_string(i + 1));
  drg::BigInt v;
  if (v.set_str(args[i], 10) != 0)
    throw drg::InputError("not an integer: '" + args[i] + "'");
  return v;
}

json numth(const std::string &op, const std::vector<std::string> &a) {
  if (op == "is-prime")
    return {{"n", a.at(0)}, {"prime", drg::is_prime(arg_big(a, 0))}};
  if (op == "factor") {
    json f = json::array();
    for (const auto &[p, e] : drg::factorize(arg_big(a, 0)))
      f.push_back({p.get_str(), e});
    return {{"n", a.at(0)}, {"factors", f}};
  }
  if (op == "radical")
    return {{"n", a.at(0)}, {"radical", drg::radical(arg_big(a, 0)).get_str()}};
  if (op == "gpf")
    return {{"n", a.at(0)}, {"greatest_prime_factor", drg::greatest_prime_factor(arg_big(a, 0)).get_str()}};
  if (op == "phi")
    return {{"n", arg_u64(a, 0)}, {"q", arg_u64(a, 1)},
            {"value", drg::cyclotomic_value(arg_u64(a, 0), arg_u64(a, 1)).get_str()}};
  if (op == "phi-star")
    return {{"n", arg_u64(a, 0)},
            {"q", arg_u64(a, 1)},
            {"value", drg::phi_star(arg_u64(a, 0), arg_u64(a, 1)).get_str()},
            {"dichotomy_holds", drg::phi_star_dichotomy_holds(arg_u64(a, 0), arg_u64(a, 1))}};
  if (op == "ppd") {
    auto r = drg::primitive_prime_divisors(arg_u64(a, 0), arg_u64(a, 1));
    return {{"q", r.q}, {"t", r.t}, {"primitive_divisors", bigs(r.primitive_divisors)}, {"exceptional", r.exceptional}};
  }
  if (op == "sylvester")
    return {{"m", arg_u64(a, 0)}, {"l", arg_u64(a, 1)}, {"prime", drg::sylvester_prime(arg_u64(a, 0), arg_u64(a, 1))}};
  if (op == "bertrand")
    return {{"m", arg_u64(a, 0)}, {"prime", drg::bertrand_mid_prime(arg_u64(a, 0))}};
  if (op == "mod-dominance") {
    json pairs = json::array();
    for (const auto &[m, l] : drg::mod_dominance_classify(arg_u64(a, 0)))
      pairs.push_back({m, l});
    return {{"M", arg_u64(a, 0)}, {"pairs", pairs}};
  }
  if (op == "zsigmondy")
    return {{"q", arg_u64(a, 0)}, {"t", arg_u64(a, 1)}, {"exception", drg::zsigmondy_exception(arg_u64(a, 0), arg_u64(a, 1))}};
  throw drg::InputError("unknown numth operation '" + op + "'");
}

bool has_unknown(const json &j) {
  if (j.is_object()) {
    if (j.contains("verdict") && j["verdict"] == "unknown")
      return true;
    for (const auto &[k, v] : j.items())
      if (has_unknown(v))
        return true;
  } else if (j.is_array()) {
    for (const auto &v : j)
      if (has_unknown(v))
        return true;
  }
  return false;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Derangement graphs, semiregular subgroups and the supporting number theory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", drg::tool_version());

  drg::Budgets budgets;
  std::string data_dir;
  app.add_option("--budget-elems", budgets.elements, "max group order for full enumeration");
  app.add_option("--budget-nodes", budgets.nodes, "max search-tree nodes");
  app.add_option("--budget-coset", budgets.coset_degree, "max coset-action degree");
  app.add_option("--budget-subgroup", budgets.subgroup, "max enumerated subgroup order");
  app.add_option("--data-dir", data_dir, "catalog data directory (default: $DRG_DATA_DIR or the build-time path)");

  std::string file;
  auto *analyze = app.add_subcommand("analyze", "full JSON report for a group spec file");
  analyze->add_option("file", file)->required();

  std::string check_id;
  bool timing = false, list = false;
  auto *verify = app.add_subcommand("verify", "run a named check, or all of them");
  verify->add_option("check", check_id, "check id or 'all'");
  verify->add_flag("--timing", timing, "include wall time in the reports");
  verify->add_flag("--list", list, "list registered checks");

  auto *density = app.add_subcommand("density", "intersection density bounds with certificates");
  density->add_option("file", file)->required();

  std::string dir, format = "json", cache;
  unsigned workers = 0;
  auto *corpus = app.add_subcommand("corpus", "analyze every group file in a directory");
  corpus->add_option("dir", dir)->required();
  corpus->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));
  corpus->add_option("--cache", cache, "cache directory for analysis results");
  corpus->add_option("--workers", workers, "worker threads (0 = all cores)");

  std::string op;
  std::vector<std::string> op_args;
  auto *nt = app.add_subcommand("numth", "number theory: is-prime factor radical gpf phi phi-star ppd sylvester "
                                         "bertrand mod-dominance zsigmondy");
  nt->add_option("op", op)->required();
  nt->add_option("args", op_args);

  auto *vcert = app.add_subcommand("verify-cert", "re-validate a certificate or a check report");
  vcert->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    auto catalog = [&] { return data_dir.empty() ? drg::Catalog() : drg::Catalog(data_dir); };

    if (*analyze) {
      auto report = drg::analyze_file(file, budgets);
      std::cout << report.dump(2) << '\n';
      return has_unknown(report) ? 2 : 0;
    }
    if (*verify) {
      if (list) {
        for (const auto &c : drg::check_registry())
          std::cout << c.id << '\t' << c.claim << '\n';
        return 0;
      }
      if (check_id.empty())
        throw drg::InputError("verify needs a check id or 'all'");
      auto cat = catalog();
      std::vector<std::string> ids;
      if (check_id == "all")
        for (const auto &c : drg::check_registry())
          ids.push_back(c.id);
      else
        ids.push_back(check_id);
      std::vector<drg::CheckVerdict> verdicts;
      json out = json::array();
      for (const auto &id : ids) {
        auto r = drg::run_check(id, budgets, cat);
        verdicts.push_back(r.verdict);
        std::cerr << drg::to_string(r.verdict) << ' ' << id << '\n';
        out.push_back(drg::to_json(r, timing));
      }
      std::cout << (ids.size() == 1 ? out[0] : out).dump(2) << '\n';
      return drg::exit_code(verdicts);
    }
    if (*density) {
      auto spec = drg::load_group_spec(file);
      auto d = drg::density_bounds(spec.group(), budgets);
      std::cout << drg::to_json(d).dump(2) << '\n';
      return d.clique_optimal && d.coclique_optimal ? 0 : 2;
    }
    if (*corpus) {
      drg::CorpusOptions opts;
      opts.budgets = budgets;
      opts.workers = workers;
      if (!cache.empty())
        opts.cache_dir = cache;
      auto s = drg::corpus_scan(dir, opts);
      if (format == "tsv")
        std::cout << drg::to_tsv(s);
      else
        std::cout << drg::to_json(s).dump(2) << '\n';
      return s.integrity_failure() ? kUsage : 0;
    }
    if (*nt) {
      std::cout << numth(op, op_args).dump(2) << '\n';
      return 0;
    }
    if (*vcert) {
      json doc;
      try {
        doc = json::parse(drg::read_text_file(file));
      } catch (const json::exception &e) {
        throw drg::InputError(file + ": " + e.what());
      }
      // a check report carries its certificate and budget; a bare certificate has a kind
      json cert = doc.contains("kind") ? doc : doc.value("certificate", json());
      drg::Budgets b = doc.contains("budget") ? drg::budgets_from_json(doc["budget"]) : budgets;
      auto a = drg::verify_certificate(cert, b);
      std::cout << (a ? "valid" : "INVALID: " + a.message) << '\n';
      return a ? 0 : 1;
    }
  } catch (const drg::BudgetError &e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: missing argument\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
