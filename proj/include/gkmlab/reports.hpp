#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gkmlab/catalog.hpp"
#include "gkmlab/serialize.hpp"

namespace gkm {

/// A loaded graph plus the run settings shared by every report.
class Session {
 public:
  explicit Session(CatalogGraph graph) : graph_(std::move(graph)) {}

  const CatalogGraph& graph() const { return graph_; }
  const Skeleton& skeleton() const { return graph_.skeleton; }

  void set_xi(Vec xi);
  void set_seed(std::uint64_t seed);
  std::uint64_t seed() const { return seed_; }
  bool xi_given() const { return xi_.has_value(); }

  /// The user's xi, or the seeded search result.
  const Vec& xi();
  /// Throws PreconditionError unless xi is polarizing and acyclic.
  const MorseData& morse();

 private:
  CatalogGraph graph_;
  std::optional<Vec> xi_;
  std::optional<MorseData> morse_;
  std::uint64_t seed_ = 1;
};

struct ReportOptions {
  int max_degree = -1;  // -1: command default
  int degree = -1;      // sweep: a single degree
  std::optional<Rational> level;
  std::optional<Rational> a;
  std::optional<json> cls;  // {"degree": m, "values": {...}}

  /// Throws InputError naming the bad field.
  static ReportOptions from_json(const json& j);
};

/// body: {"command", "graph", "verdict", "summary": [...], "tables": [...], ...}
struct Report {
  json body;
  bool positive = true;
};

/// Throws InputError on an unknown command.
Report run_report(Session& session, const std::string& command, const ReportOptions& opts);

Report appendix_report(int max_m, std::uint64_t seed);

/// Summary lines and aligned tables.
std::string render_table(const json& body);

}  // namespace gkm
