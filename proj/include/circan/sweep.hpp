#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "circan/cayley.hpp"
#include "circan/ci.hpp"

namespace circan {

enum class Tri { kFalse, kTrue, kSkipped };

/// Full analysis record for one instance. Serializes to one JSON object
/// with the fixed key set {n, s, inverse_closed, generating, aut_order,
/// normal, ci, witness_t, lemma31, stab_order}.
struct InstanceReport {
  int n = 0;
  ConnectionSet s;
  std::uint64_t orbit_size = 1;
  std::optional<std::uint64_t> aut_order;  // nullopt: beyond the order cap
  Tri normal = Tri::kSkipped;
  Tri ci = Tri::kSkipped;
  std::optional<ConnectionSet> witness_t;
  bool lemma_fired = false;
  std::int64_t stab_order = -1;
  NormalityCertificate normality;

  std::string to_json() const;
  std::string to_text() const;
};

/// One representative (lexicographically least member list) per orbit of
/// the unit-multiplier action on connection sets, sorted. `max_size` bounds
/// |S|; graph mode keeps only inverse-closed sets.
struct OrbitRep {
  ConnectionSet s;
  std::uint64_t orbit_size = 1;
};
std::vector<OrbitRep> orbit_representatives(int n,
                                            std::optional<int> max_size = {},
                                            bool inverse_closed_only = false);

/// Component-check prefilter, automorphism group, normality, then the
/// normal-case CI decision (or the conjugacy decision when n <= 8). CI is
/// left "skipped" for non-normal instances above the oracle scale.
InstanceReport classify(const ConnectionSet& s);

struct TheoremVerdict {
  int n = 0;
  bool graph_mode = false;
  bool observed_all_normal_ci = true;
  bool predicate = true;
  std::vector<std::string> counterexamples;  // canonical instance texts
  bool incomplete = false;

  bool matches() const { return incomplete || observed_all_normal_ci == predicate; }
};

enum class SweepMode { kDigraph, kGraph };

/// Sweep every representative for each n in [from, to] and compare the
/// observed "all normal instances CI" bit against the closed-form
/// predicate. Instances outside the sweep budget are flagged incomplete.
std::vector<TheoremVerdict> verify_theorem(int from, int to, SweepMode mode,
                                           std::optional<int> max_size = {},
                                           int jobs = 1);

/// JSON-lines result cache keyed by canonical instance text. Corrupt lines
/// are skipped with a warning.
class ReportCache {
public:
  void load(const std::string& path);
  std::optional<std::string> lookup(const std::string& key) const;
  void remember(const std::string& key, const std::string& line);
  void append_new_to(const std::string& path);

private:
  std::map<std::string, std::string> lines_;
  std::vector<std::string> new_lines_;
};

/// All representative reports for one n, as JSON lines in canonical order.
/// `jobs` classifies representatives in parallel; output order does not
/// depend on it.
std::vector<std::string> sweep_reports(int n, std::optional<int> max_size,
                                       int jobs, ReportCache* cache);

/// Sweep budget rule: full enumeration to n = 16, size-bounded to n = 24.
void check_sweep_budget(int n, std::optional<int> max_size);

}  // namespace circan
