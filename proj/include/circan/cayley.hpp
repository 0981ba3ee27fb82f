#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "circan/perm.hpp"

namespace circan {

/// A connection set S of Z_n (0 excluded), with the structural flags the
/// analysis keeps asking for.
struct ConnectionSet {
  int n = 0;
  std::vector<int> members;  // sorted ascending
  bool inverse_closed = false;
  bool generating = false;

  static ConnectionSet make(int n, std::vector<int> members);

  bool contains(int s) const;
  std::uint64_t mask() const;  // bit s set for each member

  /// "n:s1,s2,..." with members ascending; the empty set is "n:".
  std::string to_text() const;
};

/// Parse the instance encoding "n:s1,s2,...". Throws ParseError with the
/// offending byte position; members must be sorted, distinct, in range.
ConnectionSet parse_instance(const std::string& text);

/// Cayley digraph of Z_n: arc (g, s+g) for every s in S. Adjacency is one
/// bit row per vertex, so arc-set comparisons are word ops.
struct CayleyDigraph {
  int n = 0;
  ConnectionSet connection;
  std::vector<std::uint64_t> rows;      // out-neighbours
  std::vector<std::uint64_t> in_rows;   // transposed

  bool arc(int u, int v) const { return (rows[static_cast<std::size_t>(u)] >> v) & 1u; }

  bool preserves_arcs(const Perm& p) const;
};

CayleyDigraph build(int n, const std::vector<int>& members);
CayleyDigraph build(const ConnectionSet& s);

/// x -> x + g (mod n). These are the right translations; all of them are
/// automorphisms of every Cayley digraph on Z_n.
Perm right_translation(int n, int g);

/// The regular group of all translations of Z_n.
PermGroup right_regular_group(int n);

/// Vertices reachable from v, partitioned by out-distance. Layer 0 is {v}.
/// For inverse-closed S this coincides with undirected distance.
std::vector<std::vector<int>> distance_layers(const CayleyDigraph& g, int v);

/// Induced sub-digraph on a vertex subset. Rows are indexed by position in
/// `vertices`.
struct InducedSubdigraph {
  std::vector<int> vertices;
  std::vector<std::uint64_t> rows;

  int size() const { return static_cast<int>(vertices.size()); }
  bool arc(int i, int j) const { return (rows[static_cast<std::size_t>(i)] >> j) & 1u; }
  int arc_count() const;
  /// Every arc is paired with its reverse.
  bool symmetric() const;
  /// Connected 2-regular symmetric structure, i.e. one undirected cycle.
  bool is_undirected_cycle() const;
};

InducedSubdigraph induced(const CayleyDigraph& g, const std::vector<int>& verts);

}  // namespace circan
