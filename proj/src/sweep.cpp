#include "circan/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <iostream>
#include <thread>

#include "circan/constructions.hpp"
#include "circan/cyclic.hpp"
#include "circan/errors.hpp"

#include "json.hpp"

namespace circan {

namespace {

std::vector<int> mask_to_members(std::uint64_t mask) {
  std::vector<int> members;
  while (mask) {
    members.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return members;
}

}  // namespace

std::string InstanceReport::to_json() const {
  std::string out = "{\"n\":" + std::to_string(n);
  out += ",\"s\":\"" + s.to_text() + "\"";
  out += ",\"inverse_closed\":" + std::string(s.inverse_closed ? "true" : "false");
  out += ",\"generating\":" + std::string(s.generating ? "true" : "false");
  out += ",\"aut_order\":";
  out += aut_order ? std::to_string(*aut_order) : "\">cap\"";
  auto tri = [](Tri t) {
    return t == Tri::kTrue ? std::string("true")
           : t == Tri::kFalse ? std::string("false")
                              : std::string("\"skipped\"");
  };
  out += ",\"normal\":" + tri(normal);
  out += ",\"ci\":" + tri(ci);
  out += ",\"witness_t\":";
  out += witness_t ? "\"" + witness_t->to_text() + "\"" : "null";
  out += ",\"lemma31\":" + std::string(lemma_fired ? "true" : "false");
  out += ",\"stab_order\":" + std::to_string(stab_order);
  out += "}";
  return out;
}

std::string InstanceReport::to_text() const {
  auto tri = [](Tri t) {
    return t == Tri::kTrue ? std::string("yes")
           : t == Tri::kFalse ? std::string("no")
                              : std::string("skipped");
  };
  std::string out;
  out += "instance:         " + s.to_text() + "\n";
  out += "inverse-closed:   " + std::string(s.inverse_closed ? "yes" : "no") + "\n";
  out += "generating:       " + std::string(s.generating ? "yes" : "no") + "\n";
  out += "aut order:        " + (aut_order ? std::to_string(*aut_order) : std::string(">cap")) + "\n";
  out += "stabilizer order: " + (stab_order >= 0 ? std::to_string(stab_order) : std::string("n/a")) + "\n";
  out += "normal:           " + tri(normal) + "\n";
  out += "ci:               " + tri(ci) + "\n";
  if (witness_t) out += "witness T:        " + witness_t->to_text() + "\n";
  out += "component check:  " + std::string(lemma_fired ? "fired (non-normal)" : "no") + "\n";
  return out;
}

std::vector<OrbitRep> orbit_representatives(int n, std::optional<int> max_size,
                                            bool inverse_closed_only) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (n > 64) throw DomainError("modulus exceeds the 64-vertex row layout");

  std::vector<int> units = units_mod(n);
  std::vector<OrbitRep> reps;

  auto consider = [&](const std::vector<int>& members) {
    if (max_size && static_cast<int>(members.size()) > *max_size) return;

    // Canonical representative: lexicographically least member list over
    // the unit-multiplier orbit.
    std::vector<std::vector<int>> orbit;
    for (int k : units) {
      std::vector<int> image;
      image.reserve(members.size());
      for (int s : members)
        image.push_back(static_cast<int>((static_cast<long long>(k) * s) % n));
      std::sort(image.begin(), image.end());
      orbit.push_back(std::move(image));
    }
    std::sort(orbit.begin(), orbit.end());
    if (orbit.front() != members) return;  // not the canonical member
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());

    ConnectionSet cs = ConnectionSet::make(n, members);
    if (inverse_closed_only && !cs.inverse_closed) return;
    reps.push_back(OrbitRep{std::move(cs), orbit.size()});
  };

  if (n - 1 <= 24 && !max_size) {
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask)
      consider(mask_to_members(mask << 1));
  } else {
    // Size-bounded enumeration.
    int bound = max_size ? *max_size : n - 1;
    std::vector<int> members;
    auto rec = [&](auto&& self, int next) -> void {
      consider(members);
      if (static_cast<int>(members.size()) >= bound) return;
      for (int v = next; v < n; ++v) {
        members.push_back(v);
        self(self, v + 1);
        members.pop_back();
      }
    };
    rec(rec, 1);
  }

  std::sort(reps.begin(), reps.end(), [](const OrbitRep& a, const OrbitRep& b) {
    return a.s.members < b.s.members;
  });
  return reps;
}

InstanceReport classify(const ConnectionSet& s) {
  InstanceReport rep;
  rep.n = s.n;
  rep.s = s;
  // orbit-stabilizer over the unit action: the stabilizer of S is aut_gs
  rep.orbit_size = units_mod(s.n).size() / aut_gs(s.n, s).size();

  CrtContext ctx(s.n);
  rep.lemma_fired = nonnormal_component_check(ctx, s).has_value();

  CayleyDigraph g = build(s);
  PermGroup aut = automorphism_group(g);
  if (aut.order_known()) rep.aut_order = aut.order();

  NormalityCertificate cert = is_normal(g, aut);
  rep.normality = cert;
  rep.normal = cert.verdict ? Tri::kTrue : Tri::kFalse;
  rep.stab_order = cert.stabilizer_order;

  if (cert.verdict) {
    CiVerdict v = is_ci_normal(g, aut);
    rep.ci = v.is_ci ? Tri::kTrue : Tri::kFalse;
    rep.witness_t = v.witness_t;
  } else if (s.n <= 8) {
    CiVerdict v = is_ci_babai(g, aut);
    rep.ci = v.is_ci ? Tri::kTrue : Tri::kFalse;
    rep.witness_t = v.witness_t;
  }
  return rep;
}

void check_sweep_budget(int n, std::optional<int> max_size) {
  if (n > 24)
    throw BudgetError("sweeps are refused beyond n = 24 (got n = " +
                      std::to_string(n) + ")");
  if (n > 16 && !max_size)
    throw BudgetError("sweeps for 17 <= n <= 24 require --max-size");
}

namespace {

// Classify representatives with a small worker pool; slot-indexed results
// keep the aggregation order independent of scheduling.
std::vector<InstanceReport> classify_all(const std::vector<OrbitRep>& reps,
                                         int jobs) {
  std::vector<InstanceReport> out(reps.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) out[i] = classify(reps[i].s);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= reps.size()) break;
      out[i] = classify(reps[i].s);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

std::vector<TheoremVerdict> verify_theorem(int from, int to, SweepMode mode,
                                           std::optional<int> max_size,
                                           int jobs) {
  std::vector<TheoremVerdict> verdicts;
  for (int n = std::max(1, from); n <= to; ++n) {
    TheoremVerdict v;
    v.n = n;
    v.graph_mode = (mode == SweepMode::kGraph);
    v.predicate = v.graph_mode ? nci_predicate(n) : ndci_predicate(n);
    try {
      check_sweep_budget(n, max_size);
    } catch (const BudgetError&) {
      v.incomplete = true;
      verdicts.push_back(std::move(v));
      continue;
    }
    std::vector<OrbitRep> reps =
        orbit_representatives(n, max_size, mode == SweepMode::kGraph);
    std::vector<InstanceReport> reports = classify_all(reps, jobs);
    for (const InstanceReport& r : reports)
      if (r.normal == Tri::kTrue && r.ci == Tri::kFalse)
        v.counterexamples.push_back(r.s.to_text());
    v.observed_all_normal_ci = v.counterexamples.empty();
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

void ReportCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;  // fresh cache
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("s") ||
        !parsed["s"].is_string()) {
      std::cerr << "warning: skipping corrupt cache line " << lineno << "\n";
      continue;
    }
    lines_[parsed["s"].get<std::string>()] = line;
  }
}

std::optional<std::string> ReportCache::lookup(const std::string& key) const {
  auto it = lines_.find(key);
  if (it == lines_.end()) return std::nullopt;
  return it->second;
}

void ReportCache::remember(const std::string& key, const std::string& line) {
  lines_[key] = line;
  new_lines_.push_back(line);
}

void ReportCache::append_new_to(const std::string& path) {
  if (new_lines_.empty()) return;
  std::ofstream out(path, std::ios::app);
  for (const std::string& line : new_lines_) out << line << "\n";
  new_lines_.clear();
}

std::vector<std::string> sweep_reports(int n, std::optional<int> max_size,
                                       int jobs, ReportCache* cache) {
  check_sweep_budget(n, max_size);
  std::vector<OrbitRep> reps = orbit_representatives(n, max_size);

  std::vector<std::string> out(reps.size());
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (cache) {
      if (auto hit = cache->lookup(reps[i].s.to_text())) {
        out[i] = *hit;
        continue;
      }
    }
    missing.push_back(i);
  }

  std::vector<OrbitRep> todo;
  todo.reserve(missing.size());
  for (std::size_t i : missing) todo.push_back(reps[i]);
  std::vector<InstanceReport> fresh = classify_all(todo, jobs);
  for (std::size_t j = 0; j < missing.size(); ++j) {
    out[missing[j]] = fresh[j].to_json();
    if (cache) cache->remember(todo[j].s.to_text(), out[missing[j]]);
  }
  return out;
}

}  // namespace circan
