#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "circan/ci.hpp"
#include "circan/constructions.hpp"

using namespace circan;

TEST_CASE("aut_gs") {
  // the full set is invariant under every multiplier
  ConnectionSet full = ConnectionSet::make(8, {1, 2, 3, 4, 5, 6, 7});
  CHECK(aut_gs(8, full) == units_mod(8));

  CHECK(aut_gs(8, ConnectionSet::make(8, {1, 2, 5})) == std::vector<int>{1, 5});

  // order-24 witness: the two sign/2-part involutions and their product
  ConnectionSet w = graph_witness(3, 3);
  CHECK(aut_gs(24, w) == std::vector<int>{1, 11, 13, 23});
}

TEST_CASE("aut_gs is closed under multiplication") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 23);
    std::vector<int> members;
    for (int v = 1; v < n; ++v)
      if (rng() % 2) members.push_back(v);
    auto gs = aut_gs(n, ConnectionSet::make(n, members));
    CHECK(std::find(gs.begin(), gs.end(), 1 % n) != gs.end());
    for (int a : gs)
      for (int b : gs) {
        int ab = a * b % n;
        CHECK(std::find(gs.begin(), gs.end(), ab) != gs.end());
      }
  }
}

TEST_CASE("is_normal on named instances") {
  NormalityCertificate cycle = is_normal(build(9, {1}));
  CHECK(cycle.verdict);
  CHECK(cycle.stabilizer_order == 1);
  CHECK(cycle.aut_gs_order == 1);
  CHECK(!cycle.offending_element.has_value());

  CHECK(is_normal(build(8, {1, 2, 5})).verdict);

  NormalityCertificate bad = is_normal(build(9, {1, 4, 7}));
  CHECK(!bad.verdict);
  REQUIRE(bad.offending_element.has_value());
  const Perm& off = *bad.offending_element;
  CHECK(off[0] == 0);
  CHECK(build(9, {1, 4, 7}).preserves_arcs(off));
  CHECK(!decompose_affine(off, CrtContext(9)).has_value());
}

TEST_CASE("is_normal generator route handles capped groups") {
  NormalityCertificate empty16 = is_normal(build(16, {}));
  CHECK(!empty16.verdict);
  CHECK(empty16.stabilizer_order == -1);
  REQUIRE(empty16.offending_element.has_value());
  CHECK((*empty16.offending_element)[0] == 0);
  CHECK(build(16, {}).preserves_arcs(*empty16.offending_element));
}

TEST_CASE("is_ci_babai") {
  CiVerdict cycle = is_ci_babai(build(9, {1}));
  CHECK(cycle.is_ci);
  CHECK(cycle.regular_subgroup_count == 1);

  CiVerdict w = is_ci_babai(build(8, {1, 2, 5}));
  CHECK(!w.is_ci);
  CHECK(w.regular_subgroup_count == 2);

  CHECK(is_ci_babai(build(8, {4})).is_ci);
}

TEST_CASE("is_ci_normal agrees with the conjugacy route on normal instances") {
  CHECK(is_ci_normal(build(8, {1})).is_ci);
  CHECK(!is_ci_normal(build(8, {1, 2, 5})).is_ci);
  CHECK(!is_ci_normal(build(graph_witness(3, 3))).is_ci);
  // non-normal input violates the precondition
  CHECK_THROWS_AS(is_ci_normal(build(9, {1, 4, 7})), DomainError);

  for (int n : {5, 6, 7, 8}) {
    for (std::uint64_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> members;
      for (int v = 1; v < n; ++v)
        if (mask >> (v - 1) & 1) members.push_back(v);
      CayleyDigraph g = build(n, members);
      PermGroup a = automorphism_group(g);
      if (!is_normal(g, a).verdict) continue;
      CHECK(is_ci_normal(g, a).is_ci == is_ci_babai(g, a).is_ci);
    }
  }
}

TEST_CASE("non_ci_witness") {
  auto w = non_ci_witness(build(8, {1, 2, 5}));
  REQUIRE(w.has_value());
  CHECK(w->first.members == std::vector<int>{1, 5, 6});

  CHECK(!non_ci_witness(build(9, {1})).has_value());

  auto w24 = non_ci_witness(build(graph_witness(3, 3)));
  REQUIRE(w24.has_value());
  CHECK(w24->first.members.size() == 6);
  // the verification inside non_ci_witness already guarantees the
  // isomorphism and that no unit maps S to T; spot-check the former
  CayleyDigraph gs = build(graph_witness(3, 3));
  CayleyDigraph gt = build(w24->first);
  const Perm& iso = w24->second;
  for (int u = 0; u < 24; ++u)
    for (int v = 0; v < 24; ++v)
      CHECK(gs.arc(u, v) == gt.arc(iso[u], iso[v]));
}

TEST_CASE("is_ci_exhaustive") {
  CHECK(!is_ci_exhaustive(8, ConnectionSet::make(8, {1, 2, 5})));
  CHECK(is_ci_exhaustive(8, ConnectionSet::make(8, {1})));
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<int> members;
    for (int v = 1; v < 5; ++v)
      if (mask >> (v - 1) & 1) members.push_back(v);
    CHECK(is_ci_exhaustive(5, ConnectionSet::make(5, members)));
  }
  CHECK_THROWS_AS(is_ci_exhaustive(9, ConnectionSet::make(9, {1})),
                  CapacityError);
}

TEST_CASE("exhaustive and conjugacy CI decisions agree at oracle scale") {
  for (int n : {5, 6}) {
    for (std::uint64_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> members;
      for (int v = 1; v < n; ++v)
        if (mask >> (v - 1) & 1) members.push_back(v);
      ConnectionSet s = ConnectionSet::make(n, members);
      CHECK(is_ci_babai(build(s)).is_ci == is_ci_exhaustive(n, s));
    }
  }
}

TEST_CASE("nonnormal_component_check") {
  CrtContext c9(9);
  auto hit = nonnormal_component_check(c9, ConnectionSet::make(9, {1, 4, 7}));
  REQUIRE(hit.has_value());
  CHECK(hit->first == 0);
  CHECK(hit->second == unit_to_perm(c9, 4));

  CrtContext c18(18);
  auto hit18 = nonnormal_component_check(c18, ConnectionSet::make(18, {2, 8, 14}));
  REQUIRE(hit18.has_value());
  CHECK(hit18->second == unit_to_perm(c18, 13));

  CrtContext c8(8);
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    std::vector<int> members;
    for (int v = 1; v < 8; ++v)
      if (mask >> (v - 1) & 1) members.push_back(v);
    CHECK(!nonnormal_component_check(c8, ConnectionSet::make(8, members)));
  }
}

TEST_CASE("component check firing implies non-normal") {
  // every fired instance is a union of multiplier orbit blocks; enumerate
  // those unions directly
  for (int n : {9, 18}) {
    CrtContext ctx(n);
    int unit = component_automorphism_unit(ctx, 0);
    std::vector<std::vector<int>> blocks;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int v = 1; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      std::vector<int> block;
      int x = v;
      do {
        used[static_cast<std::size_t>(x)] = true;
        block.push_back(x);
        x = static_cast<int>(static_cast<long long>(unit) * x % n);
      } while (x != v);
      blocks.push_back(std::move(block));
    }
    int fired = 0;
    for (std::uint64_t mask = 0; mask < (1ull << blocks.size()); ++mask) {
      std::vector<int> members;
      for (std::size_t b = 0; b < blocks.size(); ++b)
        if (mask >> b & 1)
          members.insert(members.end(), blocks[b].begin(), blocks[b].end());
      ConnectionSet s = ConnectionSet::make(n, members);
      REQUIRE(nonnormal_component_check(ctx, s).has_value());
      ++fired;
      CHECK(!is_normal(build(s)).verdict);
    }
    CHECK(fired >= 2);
  }
}

TEST_CASE("wreath_check") {
  // accepted: Cay(Z_9, {1,4,7}) with K = H = {0,3,6}, x = 1, y = 3
  WreathCertificate cert{9, 3, 3, 1, 3, false};
  ConnectionSet s9 = ConnectionSet::make(9, {1, 4, 7});
  CHECK(wreath_check(9, s9, cert).accepted);

  // y of order two is rejected
  WreathCertificate bad_y{8, 2, 4, 1, 4, false};
  auto r = wreath_check(8, ConnectionSet::make(8, {1, 3, 5, 7}), bad_y);
  CHECK(!r.accepted);
  CHECK(r.rejected_clause == "y equals its own negative");

  // S with extra material inside K is still fine
  CHECK(wreath_check(9, ConnectionSet::make(9, {1, 3, 4, 7}), cert).accepted);

  // S \ K must be a union of H-cosets
  auto r2 = wreath_check(9, ConnectionSet::make(9, {1, 4}), cert);
  CHECK(!r2.accepted);
  CHECK(r2.rejected_clause == "S \\ K is not a union of H-cosets");

  // x inside K is rejected
  WreathCertificate bad_x{9, 3, 3, 3, 3, false};
  CHECK(wreath_check(9, s9, bad_x).rejected_clause == "x lies in K");
}

TEST_CASE("accepted wreath certificates imply non-normality") {
  ConnectionSet s9 = ConnectionSet::make(9, {1, 4, 7});
  WreathCertificate cert{9, 3, 3, 1, 3, false};
  REQUIRE(wreath_check(9, s9, cert).accepted);
  CHECK(!is_normal(build(s9)).verdict);
}

TEST_CASE("wreath_from_component reproduces the named certificates") {
  CrtContext c9(9);
  WreathCertificate w9 = wreath_from_component(c9, ConnectionSet::make(9, {1, 4, 7}), 0);
  CHECK(w9.k_divisor == 3);
  CHECK(w9.h_divisor == 3);
  CHECK(w9.cosets_ok);

  CrtContext c18(18);
  WreathCertificate w18 =
      wreath_from_component(c18, ConnectionSet::make(18, {2, 8, 14}), 0);
  CHECK(w18.k_divisor == 3);
  CHECK(w18.h_divisor == 6);
  CHECK(w18.x == 10);
  CHECK(w18.y == 6);
  CHECK(w18.cosets_ok);
}

TEST_CASE("extension_automorphism") {
  CayleyDigraph g = build(9, {1, 4, 7});
  WreathCertificate cert{9, 3, 3, 1, 3, false};

  CHECK(extension_automorphism(g, cert, 1, 0) == Perm::identity(9));

  Perm p = extension_automorphism(g, cert, 1, 3);
  CHECK(p[1] == 4);
  CHECK(p[4] == 7);
  CHECK(p[7] == 1);
  for (int v : {0, 2, 3, 5, 6, 8}) CHECK(p[v] == v);
  CHECK(g.preserves_arcs(p));
  CHECK(!decompose_affine(p, CrtContext(9)).has_value());

  Perm q = extension_automorphism(g, cert, 2, 6);
  CHECK(q[2] == 8);
  CHECK(q[8] == 5);
  CHECK(q[5] == 2);

  CHECK_THROWS_AS(extension_automorphism(g, cert, 3, 3), DomainError);  // x in K
  CHECK_THROWS_AS(extension_automorphism(g, cert, 1, 1), DomainError);  // h not in H
}
