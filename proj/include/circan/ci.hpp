#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circan/aut_search.hpp"
#include "circan/cayley.hpp"
#include "circan/cyclic.hpp"
#include "circan/perm.hpp"

namespace circan {

/// Evidence for the normality verdict. A Cayley digraph of Z_n is normal
/// exactly when the vertex stabilizer of 0 consists of multiplier maps
/// alone, equivalently when the translations form a normal subgroup of the
/// full automorphism group; both routes are computed and cross-checked
/// whenever the element list fits under the cap.
struct NormalityCertificate {
  bool verdict = false;
  // -1 when the automorphism group outgrew the element cap (in that case the
  // verdict comes from the generator route and is still exact).
  std::int64_t stabilizer_order = -1;
  std::int64_t aut_gs_order = 0;
  // An element of the stabilizer of 0 that is not a multiplier map, present
  // exactly when the digraph is non-normal.
  std::optional<Perm> offending_element;
};

struct CiVerdict {
  bool is_ci = false;
  int regular_subgroup_count = 0;
  std::optional<ConnectionSet> witness_t;
  std::optional<Perm> witness_iso;
};

/// A generalized-wreath non-normality certificate for Cay(Z_n, S): divisor
/// subgroups H <= K with S \ K a union of H-cosets, a residue x outside K
/// and an element y of H that is not its own negative.
struct WreathCertificate {
  int n = 0;
  int k_divisor = 1;  // K = multiples of k_divisor
  int h_divisor = 1;  // H = multiples of h_divisor
  int x = 0;
  int y = 0;
  bool cosets_ok = false;

  std::vector<int> k_elements() const;
  std::vector<int> h_elements() const;
};

struct WreathCheckResult {
  bool accepted = false;
  std::string rejected_clause;  // empty when accepted
};

/// {k unit : kS = S}; the multipliers preserving the connection set. Always
/// contains 1 and is closed under multiplication mod n.
std::vector<int> aut_gs(int n, const ConnectionSet& s);

NormalityCertificate is_normal(const CayleyDigraph& g);
NormalityCertificate is_normal(const CayleyDigraph& g, const PermGroup& aut);

/// CI by conjugacy of all regular cyclic subgroups of Aut.
CiVerdict is_ci_babai(const CayleyDigraph& g);
CiVerdict is_ci_babai(const CayleyDigraph& g, const PermGroup& aut);

/// CI decision for normal instances: CI iff the translations are the only
/// regular cyclic subgroup.
CiVerdict is_ci_normal(const CayleyDigraph& g);
CiVerdict is_ci_normal(const CayleyDigraph& g, const PermGroup& aut);

/// When a regular cyclic subgroup not conjugate to the translations exists,
/// relabel the vertices along its orbit; the image T of S then satisfies
/// Cay(n,S) isomorphic to Cay(n,T) with no unit mapping S to T. Both facts
/// are verified before returning.
std::optional<std::pair<ConnectionSet, Perm>> non_ci_witness(
    const CayleyDigraph& g);
std::optional<std::pair<ConnectionSet, Perm>> non_ci_witness(
    const CayleyDigraph& g, const PermGroup& aut);

/// Oracle for the CI definition itself, n <= 8: every T of matching size
/// whose Cayley digraph is isomorphic (over all n! bijections) must be a
/// unit image of S.
bool is_ci_exhaustive(int n, const ConnectionSet& s);

/// Least factor index t (odd prime power, exponent >= 2) whose component
/// automorphism fixes S setwise, plus that automorphism. When present the
/// digraph is non-normal.
std::optional<std::pair<int, Perm>> nonnormal_component_check(
    const CrtContext& ctx, const ConnectionSet& s);

/// Validates every hypothesis of the generalized-wreath certificate;
/// rejection names the failed clause. Acceptance proves non-normality.
WreathCheckResult wreath_check(int n, const ConnectionSet& s,
                               const WreathCertificate& cert);

/// Derives the certificate the component-automorphism argument guarantees:
/// K of index p_t, H the subgroup of order p_t, x a generator of the t-th
/// component, y a generator of H.
WreathCertificate wreath_from_component(const CrtContext& ctx,
                                        const ConnectionSet& s, int t);

/// The permutation fixing everything outside the coset K + x and adding h
/// inside it. Requires the wreath hypotheses; h must be 0 or satisfy
/// 2h != 0 (mod n). Verified arc-preserving, 0-fixing and (for h != 0)
/// non-affine before being returned.
Perm extension_automorphism(const CayleyDigraph& g,
                            const WreathCertificate& cert, int x, int h);

}  // namespace circan
