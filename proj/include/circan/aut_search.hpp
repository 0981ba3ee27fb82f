#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "circan/cayley.hpp"
#include "circan/perm.hpp"

namespace circan {

/// A vertex coloring (partition) produced by refinement. Refinement only
/// ever splits classes; a stable coloring is one where vertices of equal
/// color have equal in- and out-neighbour color multisets.
struct Coloring {
  std::vector<int> color;  // vertex -> color id, ids contiguous from 0
  int rounds = 0;          // refinement rounds applied so far

  static Coloring uniform(int n) { return Coloring{std::vector<int>(static_cast<std::size_t>(n), 0), 0}; }

  int num_colors() const;
  bool discrete() const;
};

/// Coarsest stable refinement of `initial` under in/out neighbour color
/// multiset splitting. Idempotent.
Coloring refine(const CayleyDigraph& g, const Coloring& initial);
Coloring refine(const InducedSubdigraph& g, const Coloring& initial);

/// Generators of the full automorphism group, found by individualization-
/// refinement backtracking along a stabilizer chain. The order is taken from
/// the element closure when it fits under `order_cap`; otherwise the group
/// is returned with generators intact and its order flagged as exceeding
/// the cap.
PermGroup automorphism_group(const CayleyDigraph& g,
                             std::uint64_t order_cap = PermGroup::kDefaultOrderCap);

/// {a in A : a(v) = v}; needs A's element list.
PermGroup stabilizer_of(const PermGroup& a, int v);

/// Oracle: the automorphism group by trying all n! permutations. n <= 8.
PermGroup brute_force_aut(const CayleyDigraph& g);

/// First automorphism of g mapping src_points[i] -> tgt_points[i] for all i,
/// or nullopt. Exposed for the analysis layer's certificate hunts.
std::optional<Perm> find_automorphism_mapping(const CayleyDigraph& g,
                                              const std::vector<int>& src_points,
                                              const std::vector<int>& tgt_points);

}  // namespace circan
