#pragma once

#include "circan/cayley.hpp"
#include "circan/perm.hpp"

namespace circan {

/// Witness family 1: the normal non-CI digraphs on 2^r vertices, r >= 3.
/// S = {1, 2, 2^{r-1}+1}.
ConnectionSet li_digraph_witness(int r);

/// Witness family 2: the normal non-CI graphs on n = 2^s * m vertices, with
/// s >= 3, m odd and n != 8. S holds the six elements with 2-part/odd-part
/// coordinates +-(1,1), +-(2,2), +-(2^{s-1}+1, 1).
ConnectionSet graph_witness(int s, int m);

/// The generator of the second regular cyclic subgroup inside the witness
/// graph's automorphism group: x -> kx + 1 where k is 2^{s-1}+1 on the
/// 2-part and 1 on the odd part. Order 2^s * m, regular, arc-preserving.
Perm second_regular_generator(int s, int m);

/// Every normal Cayley digraph of Z_n is CI exactly when 8 does not divide n.
bool ndci_predicate(int n);
/// Every normal Cayley graph of Z_n is CI exactly when n = 8 or 8 does not
/// divide n.
bool nci_predicate(int n);

/// The classical full-CI classification, as lookup predicates: all Cayley
/// digraphs of Z_n are CI iff n = k, 2k or 4k with k odd square-free; the
/// graph version additionally admits n in {8, 9, 18}.
bool muzychuk_dci(int n);
bool muzychuk_ci(int n);

}  // namespace circan
