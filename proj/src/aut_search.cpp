#include "circan/aut_search.hpp"

#include <algorithm>
#include <bit>

#include "circan/errors.hpp"

namespace circan {

namespace {

// Adjacency view shared by CayleyDigraph and InducedSubdigraph.
struct View {
  int n;
  const std::uint64_t* out;
  const std::uint64_t* in;
};

// Per-vertex refinement signature: current color, then the out- and
// in-neighbour counts per color. Lexicographic comparison of these drives
// the splitting, so new color ids respect old ones and the partition only
// ever gets finer.
std::vector<int> signature(const View& g, const std::vector<int>& color,
                           int num_colors, int v) {
  std::vector<int> sig(1 + 2 * static_cast<std::size_t>(num_colors), 0);
  sig[0] = color[static_cast<std::size_t>(v)];
  std::uint64_t row = g.out[v];
  while (row) {
    int w = std::countr_zero(row);
    row &= row - 1;
    ++sig[1 + static_cast<std::size_t>(color[static_cast<std::size_t>(w)])];
  }
  row = g.in[v];
  while (row) {
    int w = std::countr_zero(row);
    row &= row - 1;
    ++sig[1 + static_cast<std::size_t>(num_colors) +
          static_cast<std::size_t>(color[static_cast<std::size_t>(w)])];
  }
  return sig;
}

int normalize_colors(std::vector<int>& color) {
  std::vector<int> ids(color);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int& c : color)
    c = static_cast<int>(std::lower_bound(ids.begin(), ids.end(), c) -
                         ids.begin());
  return static_cast<int>(ids.size());
}

int count_colors(const std::vector<int>& color) {
  int m = -1;
  for (int c : color) m = std::max(m, c);
  return m + 1;
}

// One-sided stable refinement.
Coloring refine_view(const View& g, Coloring c) {
  int k = normalize_colors(c.color);
  while (k < g.n) {
    std::vector<std::vector<int>> sigs;
    sigs.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) sigs.push_back(signature(g, c.color, k, v));
    std::vector<std::vector<int>> uniq(sigs);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < g.n; ++v)
      c.color[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[static_cast<std::size_t>(v)]) -
          uniq.begin());
    ++c.rounds;
    int new_k = static_cast<int>(uniq.size());
    if (new_k == k) break;
    k = new_k;
  }
  return c;
}

// Lockstep refinement of a source/target coloring pair. Returns false when
// the signature multisets diverge, i.e. no automorphism can map one
// configuration to the other.
bool refine_pair(const View& g, std::vector<int>& c1, std::vector<int>& c2) {
  int k1 = normalize_colors(c1);
  int k2 = normalize_colors(c2);
  if (k1 != k2) return false;
  int k = k1;
  while (true) {
    std::vector<std::vector<int>> sigs1, sigs2;
    sigs1.reserve(static_cast<std::size_t>(g.n));
    sigs2.reserve(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      sigs1.push_back(signature(g, c1, k, v));
      sigs2.push_back(signature(g, c2, k, v));
    }
    std::vector<std::vector<int>> uniq(sigs1);
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    {
      // The two signature multisets must coincide.
      std::vector<std::vector<int>> a(sigs1), b(sigs2);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    for (int v = 0; v < g.n; ++v) {
      c1[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs1[static_cast<std::size_t>(v)]) -
          uniq.begin());
      c2[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs2[static_cast<std::size_t>(v)]) -
          uniq.begin());
    }
    int new_k = static_cast<int>(uniq.size());
    if (new_k == k) return true;
    k = new_k;
    if (k == g.n) return true;
  }
}

// Branch cell: largest non-singleton class, lowest color id on ties.
int pick_cell(const std::vector<int>& color, int num_colors) {
  std::vector<int> size(static_cast<std::size_t>(num_colors), 0);
  for (int c : color) ++size[static_cast<std::size_t>(c)];
  int best = -1;
  for (int c = 0; c < num_colors; ++c)
    if (size[static_cast<std::size_t>(c)] > 1 &&
        (best < 0 || size[static_cast<std::size_t>(c)] > size[static_cast<std::size_t>(best)]))
      best = c;
  return best;
}

std::vector<int> cell_members(const std::vector<int>& color, int cell) {
  std::vector<int> members;
  for (std::size_t v = 0; v < color.size(); ++v)
    if (color[v] == cell) members.push_back(static_cast<int>(v));
  return members;
}

bool preserves_view(const View& g, const Perm& p) {
  for (int u = 0; u < g.n; ++u) {
    std::uint64_t mapped = 0;
    std::uint64_t row = g.out[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      mapped |= 1ull << p[v];
    }
    if (mapped != g.out[p[u]]) return false;
  }
  return true;
}

// Depth-first hunt for one automorphism consistent with the given pair of
// individualized colorings.
std::optional<Perm> extend(const View& g, std::vector<int> c1,
                           std::vector<int> c2) {
  if (!refine_pair(g, c1, c2)) return std::nullopt;
  int k = count_colors(c1);
  if (k == g.n) {
    // Discrete on both sides: read the candidate bijection off the colors.
    std::vector<int> img(static_cast<std::size_t>(g.n));
    std::vector<int> where(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v)
      where[static_cast<std::size_t>(c2[static_cast<std::size_t>(v)])] = v;
    for (int v = 0; v < g.n; ++v)
      img[static_cast<std::size_t>(v)] =
          where[static_cast<std::size_t>(c1[static_cast<std::size_t>(v)])];
    Perm p = Perm::from_images(img);
    if (preserves_view(g, p)) return p;
    return std::nullopt;
  }
  int cell = pick_cell(c1, k);
  std::vector<int> members1 = cell_members(c1, cell);
  std::vector<int> members2 = cell_members(c2, cell);
  int u = members1.front();
  for (int v : members2) {
    std::vector<int> d1(c1), d2(c2);
    d1[static_cast<std::size_t>(u)] = k;
    d2[static_cast<std::size_t>(v)] = k;
    if (auto found = extend(g, std::move(d1), std::move(d2))) return found;
  }
  return std::nullopt;
}

std::optional<Perm> search_mapped(const View& g, const std::vector<int>& src,
                                  const std::vector<int>& tgt) {
  std::vector<int> c1(static_cast<std::size_t>(g.n), 0);
  std::vector<int> c2(static_cast<std::size_t>(g.n), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    c1[static_cast<std::size_t>(src[i])] = static_cast<int>(i) + 1;
    c2[static_cast<std::size_t>(tgt[i])] = static_cast<int>(i) + 1;
  }
  return extend(g, std::move(c1), std::move(c2));
}

View view_of(const CayleyDigraph& g) {
  return View{g.n, g.rows.data(), g.in_rows.data()};
}

// Orbit of b under `gens`, as a bitmask.
std::uint64_t orbit_mask(int b, const std::vector<Perm>& gens) {
  std::uint64_t mask = 1ull << b;
  std::vector<int> stack = {b};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& p : gens) {
      int y = p[x];
      if (!(mask >> y & 1u)) {
        mask |= 1ull << y;
        stack.push_back(y);
      }
    }
  }
  return mask;
}

}  // namespace

int Coloring::num_colors() const { return count_colors(color); }

bool Coloring::discrete() const {
  return num_colors() == static_cast<int>(color.size());
}

Coloring refine(const CayleyDigraph& g, const Coloring& initial) {
  if (static_cast<int>(initial.color.size()) != g.n)
    throw StructuralError("coloring size mismatch");
  return refine_view(view_of(g), initial);
}

Coloring refine(const InducedSubdigraph& g, const Coloring& initial) {
  if (initial.color.size() != g.vertices.size())
    throw StructuralError("coloring size mismatch");
  std::vector<std::uint64_t> in_rows(g.rows.size(), 0);
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    std::uint64_t row = g.rows[i];
    while (row) {
      int j = std::countr_zero(row);
      row &= row - 1;
      in_rows[static_cast<std::size_t>(j)] |= 1ull << i;
    }
  }
  View v{g.size(), g.rows.data(), in_rows.data()};
  return refine_view(v, initial);
}

std::optional<Perm> find_automorphism_mapping(const CayleyDigraph& g,
                                              const std::vector<int>& src_points,
                                              const std::vector<int>& tgt_points) {
  if (src_points.size() != tgt_points.size())
    throw StructuralError("point list size mismatch");
  return search_mapped(view_of(g), src_points, tgt_points);
}

PermGroup automorphism_group(const CayleyDigraph& g, std::uint64_t order_cap) {
  const View view = view_of(g);
  const int n = g.n;
  std::vector<Perm> gens;
  std::vector<int> base;  // individualized prefix, mapped to itself
  std::uint64_t chain_order = 1;

  while (true) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < base.size(); ++i)
      c[static_cast<std::size_t>(base[i])] = static_cast<int>(i) + 1;
    Coloring refined = refine_view(view, Coloring{std::move(c), 0});
    int k = refined.num_colors();
    if (k == n) break;

    int cell = pick_cell(refined.color, k);
    std::vector<int> members = cell_members(refined.color, cell);
    int b = members.front();

    // Transversal hunt: one automorphism per new orbit point of b inside
    // its cell, with the current base fixed. Points already reachable from
    // b under this level's generators are skipped.
    std::vector<Perm> level_gens;
    std::uint64_t orbit = 1ull << b;
    std::vector<int> src(base);
    src.push_back(b);
    for (int w : members) {
      if (orbit >> w & 1u) continue;
      std::vector<int> tgt(base);
      tgt.push_back(w);
      if (auto found = search_mapped(view, src, tgt)) {
        level_gens.push_back(*found);
        gens.push_back(*found);
        orbit = orbit_mask(b, level_gens);
      }
    }
    chain_order *= static_cast<std::uint64_t>(std::popcount(orbit));
    // Saturate: the chain runs to completion for the generators even when
    // the order is already past the cap.
    if (chain_order > order_cap) chain_order = order_cap + 1;
    base.push_back(b);
  }

  if (gens.empty()) gens.push_back(Perm::identity(n));

  if (chain_order > order_cap)
    return PermGroup::from_generators_uncounted(n, std::move(gens), order_cap);

  PermGroup group = PermGroup::generate(n, std::move(gens), order_cap);
  // The closure must agree with the orbit-chain product.
  if (group.order() != chain_order)
    throw StructuralError("automorphism search/closure order mismatch");
  return group;
}

PermGroup stabilizer_of(const PermGroup& a, int v) {
  std::vector<Perm> fixed;
  for (const Perm& p : a.elements())
    if (p[v] == v) fixed.push_back(p);
  return PermGroup::from_elements(a.degree(), std::move(fixed));
}

PermGroup brute_force_aut(const CayleyDigraph& g) {
  if (g.n > 8)
    throw CapacityError("brute-force oracle limited to 8 vertices",
                        static_cast<std::uint64_t>(g.n));
  std::vector<std::uint8_t> img(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<Perm> elements;
  do {
    Perm p = Perm::from_bytes(img);
    if (g.preserves_arcs(p)) elements.push_back(p);
  } while (std::next_permutation(img.begin(), img.end()));
  return PermGroup::from_elements(g.n, std::move(elements));
}

}  // namespace circan
