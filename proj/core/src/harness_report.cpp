#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <memory>

#include "drg/error.hpp"
#include "drg/group_io.hpp"
#include "drg/harness.hpp"
#include "drg/matrix.hpp"
#include "drg/semiregular.hpp"

#ifndef DRG_VERSION
#define DRG_VERSION "0.0.0"
#endif

namespace drg {

const char *tool_version() { return DRG_VERSION; }

const char *to_string(CheckVerdict v) {
  switch (v) {
  case CheckVerdict::pass: return "pass";
  case CheckVerdict::fail: return "fail";
  case CheckVerdict::unknown: return "unknown";
  }
  return "unknown";
}

nlohmann::json to_json(const Budgets &b) {
  return {{"elements", b.elements}, {"coset_degree", b.coset_degree}, {"subgroup", b.subgroup}, {"nodes", b.nodes}};
}

Budgets budgets_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw InputError("budget record must be an object");
  Budgets b;
  b.elements = j.value("elements", b.elements);
  b.coset_degree = j.value("coset_degree", b.coset_degree);
  b.subgroup = j.value("subgroup", b.subgroup);
  b.nodes = j.value("nodes", b.nodes);
  return b;
}

nlohmann::json to_json(const CheckReport &r, bool with_timing) {
  nlohmann::json j = {{"schema_version", kReportSchemaVersion},
                      {"id", r.id},
                      {"claim", r.claim},
                      {"inputs", r.inputs},
                      {"verdict", to_string(r.verdict)},
                      {"certificate", r.certificate},
                      {"budget", r.budget},
                      {"detail", r.detail},
                      {"tool_version", r.tool_version}};
  if (with_timing)
    j["wall_seconds"] = r.wall_seconds;
  return j;
}

int exit_code(const std::vector<CheckVerdict> &verdicts) {
  if (std::count(verdicts.begin(), verdicts.end(), CheckVerdict::fail))
    return 1;
  if (std::count(verdicts.begin(), verdicts.end(), CheckVerdict::unknown))
    return 2;
  return 0;
}

std::string content_hash(const std::string &bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw IntegrityError("SHA-256 digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

nlohmann::json group_json(const std::string &name, const PermGroup &group) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &g : group.generators())
    gens.push_back(permutation_to_json(g));
  return {{"name", name}, {"degree", group.degree()}, {"order", group.order()}, {"generators", gens}};
}

PermGroup group_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("degree"))
    throw InputError("group record needs degree and generators");
  auto degree = j.at("degree").get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto &g : j.at("generators"))
    gens.push_back(permutation_from_json(g, degree, false));
  if (gens.empty())
    gens.push_back(Permutation::identity(degree));
  PermGroup group(std::move(gens));
  if (j.contains("order") && j.at("order").get<std::uint64_t>() != group.order())
    throw InputError("group record order " + j.at("order").dump() + " disagrees with the generators (" +
                     std::to_string(group.order()) + ")");
  return group;
}

namespace {

std::vector<Permutation> perms_from_json(const nlohmann::json &j, std::size_t degree) {
  std::vector<Permutation> out;
  for (const auto &p : j)
    out.push_back(permutation_from_json(p, degree, false));
  return out;
}

bool small_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Matrix matrix_from_json(const FieldPtr &f, const nlohmann::json &rows) {
  return Matrix::from_rows(f, rows.get<std::vector<std::vector<Matrix::Elem>>>());
}

AuditResult verify_matrix(const nlohmann::json &c) {
  auto field = GaloisField::make(c.at("q").get<std::uint32_t>());
  Matrix m = matrix_from_json(field, c.at("matrix"));
  auto order = c.at("order").get<std::uint64_t>();
  if (order == 0)
    return {false, "matrix order must be positive"};
  if (!mat_power(m, order).is_identity())
    return {false, "matrix power " + std::to_string(order) + " is not the identity"};
  for (auto p : prime_divisors(order))
    if (mat_power(m, order / p).is_identity())
      return {false, "matrix order is a proper divisor of " + std::to_string(order)};
  if (c.contains("bilinear") && !preserves_bilinear(m, matrix_from_json(field, c.at("bilinear"))))
    return {false, "matrix does not preserve the bilinear form"};
  if (c.contains("quadratic") && !preserves_quadratic(m, QuadraticForm{matrix_from_json(field, c.at("quadratic"))}))
    return {false, "matrix does not preserve the quadratic form"};
  return {};
}

AuditResult verify_elusive(const PermGroup &g, const Budgets &budgets) {
  if (!g.is_transitive())
    return {false, "group is not transitive"};
  AuditResult r;
  g.for_each_element(budgets.elements, [&](const Permutation &x) {
    if (r.ok && is_derangement(x) && small_prime(element_order(x)))
      r = {false, "derangement of prime order: " + x.to_cycle_string()};
  });
  return r;
}

AuditResult verify_one(const nlohmann::json &c, const Budgets &budgets) {
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "bundle") {
    std::size_t i = 0;
    for (const auto &item : c.at("items")) {
      auto a = verify_one(item, budgets);
      if (!a)
        return {false, "item " + std::to_string(i) + ": " + a.message};
      ++i;
    }
    return {};
  }
  if (kind == "matrix")
    return verify_matrix(c);

  PermGroup g = group_from_json(c.at("group"));
  const std::size_t n = g.degree();
  auto min_size = c.value("min_size", std::uint64_t{0});
  if (kind == "clique") {
    CliqueCertificate cc{perms_from_json(c.at("vertices"), n)};
    if (cc.size() < min_size)
      return {false, "clique has " + std::to_string(cc.size()) + " vertices, needs " + std::to_string(min_size)};
    return verify_clique(g, cc);
  }
  if (kind == "coclique") {
    CocliqueCertificate cc{perms_from_json(c.at("vertices"), n)};
    if (cc.size() < min_size)
      return {false, "family has " + std::to_string(cc.size()) + " members, needs " + std::to_string(min_size)};
    return verify_coclique(g, cc);
  }
  if (kind == "clique_coclique") {
    CliqueCertificate a{perms_from_json(c.at("clique"), n)};
    CocliqueCertificate b{perms_from_json(c.at("coclique"), n)};
    return clique_coclique_audit(a, b, g);
  }
  if (kind == "semiregular") {
    SemiregularWitness w;
    w.subgroup_generators = perms_from_json(c.at("generators"), n);
    w.order = c.at("order").get<std::uint64_t>();
    if (w.order < min_size)
      return {false, "semiregular subgroup of order " + std::to_string(w.order) + " is below " +
                         std::to_string(min_size)};
    return verify_semiregular_witness(w, g, std::max(budgets.subgroup, w.order));
  }
  if (kind == "elusive")
    return verify_elusive(g, budgets);
  return {false, "unknown certificate kind '" + kind + "'"};
}

} // namespace

AuditResult verify_certificate(const nlohmann::json &cert, const Budgets &budgets) {
  if (cert.is_null())
    return {};
  try {
    return verify_one(cert, budgets);
  } catch (const nlohmann::json::exception &e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const InputError &e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  } catch (const BudgetError &e) {
    return {false, std::string("certificate too large to re-check: ") + e.what()};
  }
}

} // namespace drg
