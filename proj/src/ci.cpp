#include "circan/ci.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "circan/errors.hpp"

namespace circan {

namespace {

// kS as a sorted member list.
std::vector<int> multiply_set(int n, const std::vector<int>& members, int k) {
  std::vector<int> out;
  out.reserve(members.size());
  for (int s : members)
    out.push_back(static_cast<int>((static_cast<long long>(k) * s) % n));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_translation(const Perm& p) {
  int n = p.degree();
  int c = p[0];
  for (int x = 0; x < n; ++x)
    if (p[x] != (x + c) % n) return false;
  return true;
}

bool is_multiplier(const Perm& p) {
  int n = p.degree();
  if (p[0] != 0) return false;
  if (n == 1) return true;
  int k = p[1];
  if (std::gcd(k, n) != 1) return false;
  for (int x = 0; x < n; ++x)
    if (p[x] != static_cast<int>((static_cast<long long>(k) * x) % n))
      return false;
  return true;
}

// Find the subgroup of `subs` equal to the translation group.
int find_translation_subgroup(const std::vector<PermGroup>& subs, int n) {
  Perm step = right_translation(n, 1 % n);
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (subs[i].contains(step)) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::vector<int> WreathCertificate::k_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n; v += k_divisor) out.push_back(v);
  return out;
}

std::vector<int> WreathCertificate::h_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n; v += h_divisor) out.push_back(v);
  return out;
}

std::vector<int> aut_gs(int n, const ConnectionSet& s) {
  std::vector<int> result;
  for (int k : units_mod(n))
    if (multiply_set(n, s.members, k) == s.members) result.push_back(k);
  return result;
}

NormalityCertificate is_normal(const CayleyDigraph& g, const PermGroup& aut) {
  const int n = g.n;
  NormalityCertificate cert;
  cert.aut_gs_order = static_cast<std::int64_t>(aut_gs(n, g.connection).size());

  if (aut.has_elements()) {
    PermGroup stab = stabilizer_of(aut, 0);
    cert.stabilizer_order = static_cast<std::int64_t>(stab.order());
    cert.verdict = (cert.stabilizer_order == cert.aut_gs_order);
    if (!cert.verdict)
      for (const Perm& p : stab.elements())
        if (!is_multiplier(p)) {
          cert.offending_element = p;
          break;
        }
    // Cross-check against the subgroup route.
    bool normal_subgroup = is_normal_subgroup(aut, right_regular_group(n));
    if (normal_subgroup != cert.verdict)
      throw StructuralError("normality routes disagree");
    return cert;
  }

  // Generator route: the translations are normal iff every generator
  // conjugates the unit translation back to a translation. A normal
  // instance has order at most n*phi(n), far below the cap, so a capped
  // group here is in fact always non-normal; the route still decides it
  // directly.
  Perm step = right_translation(n, 1 % n);
  cert.verdict = true;
  for (const Perm& gen : aut.generators())
    if (!is_translation(conjugate(step, gen))) {
      cert.verdict = false;
      // Shift the witness into the stabilizer of 0: gen followed by the
      // translation by -gen(0) fixes 0, and is no multiplier since gen does
      // not normalize the translations.
      Perm w = compose(gen, right_translation(n, (n - gen[0]) % n));
      if (is_multiplier(w))
        throw StructuralError("offending element collapsed to a multiplier");
      cert.offending_element = w;
      break;
    }
  if (cert.verdict)
    throw StructuralError(
        "capped automorphism group cannot be normal: order exceeds n*phi(n)");
  return cert;
}

NormalityCertificate is_normal(const CayleyDigraph& g) {
  return is_normal(g, automorphism_group(g));
}

CiVerdict is_ci_babai(const CayleyDigraph& g, const PermGroup& aut) {
  CiVerdict v;
  std::vector<PermGroup> subs = regular_cyclic_subgroups(aut);
  v.regular_subgroup_count = static_cast<int>(subs.size());
  int r_index = find_translation_subgroup(subs, g.n);
  if (r_index < 0) throw StructuralError("translation subgroup not found");
  v.is_ci = true;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (static_cast<int>(i) == r_index) continue;
    if (!are_conjugate_cyclic(aut, subs[static_cast<std::size_t>(r_index)], subs[i])) {
      v.is_ci = false;
      break;
    }
  }
  if (!v.is_ci)
    if (auto w = non_ci_witness(g, aut)) {
      v.witness_t = w->first;
      v.witness_iso = w->second;
    }
  return v;
}

CiVerdict is_ci_babai(const CayleyDigraph& g) {
  return is_ci_babai(g, automorphism_group(g));
}

CiVerdict is_ci_normal(const CayleyDigraph& g, const PermGroup& aut) {
  NormalityCertificate cert = is_normal(g, aut);
  if (!cert.verdict)
    throw DomainError("is_ci_normal requires a normal instance");
  CiVerdict v;
  std::vector<PermGroup> subs = regular_cyclic_subgroups(aut);
  v.regular_subgroup_count = static_cast<int>(subs.size());
  v.is_ci = (v.regular_subgroup_count == 1);
  if (!v.is_ci)
    if (auto w = non_ci_witness(g, aut)) {
      v.witness_t = w->first;
      v.witness_iso = w->second;
    }
  return v;
}

CiVerdict is_ci_normal(const CayleyDigraph& g) {
  return is_ci_normal(g, automorphism_group(g));
}

std::optional<std::pair<ConnectionSet, Perm>> non_ci_witness(
    const CayleyDigraph& g, const PermGroup& aut) {
  const int n = g.n;
  std::vector<PermGroup> subs = regular_cyclic_subgroups(aut);
  int r_index = find_translation_subgroup(subs, n);
  if (r_index < 0) throw StructuralError("translation subgroup not found");
  const PermGroup& r = subs[static_cast<std::size_t>(r_index)];

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (static_cast<int>(i) == r_index) continue;
    if (are_conjugate_cyclic(aut, r, subs[i])) continue;

    // Lexicographically least generator of the first non-conjugate
    // subgroup.
    std::optional<Perm> gen;
    for (const Perm& e : subs[i].elements())
      if (e.is_single_n_cycle() && (!gen || e < *gen)) gen = e;

    // Relabel: the vertex gen^k(0) receives label k.
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int v = 0;
    for (int k = 0; k < n; ++k) {
      label[static_cast<std::size_t>(v)] = k;
      v = (*gen)[v];
    }
    Perm iso = Perm::from_images(label);

    std::vector<int> t_members;
    for (int s : g.connection.members)
      t_members.push_back(label[static_cast<std::size_t>(s)]);
    ConnectionSet t = ConnectionSet::make(n, std::move(t_members));

    // Verify the witness before handing it out: iso must carry arcs of S
    // onto arcs of T, and no unit may map S to T.
    CayleyDigraph ht = build(t);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        if (g.arc(u, w) != ht.arc(iso[u], iso[w]))
          throw StructuralError("witness relabeling is not an isomorphism");
    for (int k : units_mod(n))
      if (multiply_set(n, g.connection.members, k) == t.members)
        throw StructuralError("witness T is a unit image of S");

    return std::make_pair(std::move(t), std::move(iso));
  }
  return std::nullopt;
}

std::optional<std::pair<ConnectionSet, Perm>> non_ci_witness(
    const CayleyDigraph& g) {
  return non_ci_witness(g, automorphism_group(g));
}

bool is_ci_exhaustive(int n, const ConnectionSet& s) {
  if (n > 8)
    throw CapacityError("exhaustive CI oracle limited to n <= 8",
                        static_cast<std::uint64_t>(n));
  CayleyDigraph gs = build(s);
  const int size = static_cast<int>(s.members.size());

  // All candidate sets T of the same size.
  std::vector<int> pool;
  for (int v = 1; v < n; ++v) pool.push_back(v);
  std::vector<int> t_members;

  std::vector<int> unit_list = units_mod(n);

  auto isomorphic = [&](const CayleyDigraph& a, const CayleyDigraph& b) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    do {
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        std::uint64_t mapped = 0;
        std::uint64_t row = a.rows[static_cast<std::size_t>(u)];
        while (row) {
          int w = std::countr_zero(row);
          row &= row - 1;
          mapped |= 1ull << img[static_cast<std::size_t>(w)];
        }
        ok = (mapped == b.rows[img[static_cast<std::size_t>(u)]]);
      }
      if (ok) return true;
    } while (std::next_permutation(img.begin(), img.end()));
    return false;
  };

  bool all_ci = true;
  auto consider = [&](const std::vector<int>& t) {
    for (int k : unit_list)
      if (multiply_set(n, s.members, k) == t) return;  // Cayley isomorphic
    CayleyDigraph gt = build(n, t);
    if (isomorphic(gs, gt)) all_ci = false;
  };

  // Enumerate size-|S| subsets of {1,...,n-1}.
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  if (size == 0) return true;  // only T = {} matches, and 1*S = T
  while (all_ci) {
    t_members.clear();
    for (int i : idx) t_members.push_back(pool[static_cast<std::size_t>(i)]);
    consider(t_members);
    // next combination
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                         static_cast<int>(pool.size()) - size + i)
      --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return all_ci;
}

std::optional<std::pair<int, Perm>> nonnormal_component_check(
    const CrtContext& ctx, const ConnectionSet& s) {
  for (int t = 0; t < ctx.factor_count(); ++t) {
    auto [p, r] = ctx.prime_powers()[static_cast<std::size_t>(t)];
    if (p == 2 || r < 2) continue;
    int unit = component_automorphism_unit(ctx, t);
    if (multiply_set(ctx.n(), s.members, unit) == s.members)
      return std::make_pair(t, component_automorphism(ctx, t));
  }
  return std::nullopt;
}

WreathCheckResult wreath_check(int n, const ConnectionSet& s,
                               const WreathCertificate& cert) {
  auto reject = [](const std::string& clause) {
    return WreathCheckResult{false, clause};
  };
  if (cert.n != n || s.n != n) return reject("modulus mismatch");
  if (cert.k_divisor < 1 || n % cert.k_divisor != 0)
    return reject("K is not a divisor subgroup");
  if (cert.h_divisor < 1 || n % cert.h_divisor != 0)
    return reject("H is not a divisor subgroup");
  int k_order = n / cert.k_divisor;
  int h_order = n / cert.h_divisor;
  if (h_order <= 1) return reject("H is trivial");
  if (k_order >= n) return reject("K is not proper");
  if (cert.h_divisor % cert.k_divisor != 0) return reject("H not contained in K");
  if (cert.x % cert.k_divisor == 0) return reject("x lies in K");
  if (cert.y % cert.h_divisor != 0) return reject("y not in H");
  if ((2 * cert.y) % n == 0) return reject("y equals its own negative");

  // S \ K must be a union of cosets of H.
  for (int m : s.members) {
    if (m % cert.k_divisor == 0) continue;  // inside K, unconstrained
    for (int h = 0; h < n; h += cert.h_divisor)
      if (!s.contains((m + h) % n))
        return reject("S \\ K is not a union of H-cosets");
  }
  return WreathCheckResult{true, ""};
}

WreathCertificate wreath_from_component(const CrtContext& ctx,
                                        const ConnectionSet& s, int t) {
  auto [p, r] = ctx.prime_powers()[static_cast<std::size_t>(t)];
  if (p == 2 || r < 2)
    throw DomainError("factor must be an odd prime power with exponent >= 2");
  const int n = ctx.n();
  WreathCertificate cert;
  cert.n = n;
  cert.k_divisor = p;      // K: index-p subgroup
  cert.h_divisor = n / p;  // H: order-p subgroup
  // x: the element with coordinate 1 at factor t and 0 elsewhere.
  std::vector<int> coords(static_cast<std::size_t>(ctx.factor_count()), 0);
  coords[static_cast<std::size_t>(t)] = 1;
  cert.x = ctx.from_coords(coords);
  cert.y = n / p;
  cert.cosets_ok = wreath_check(n, s, cert).accepted;
  return cert;
}

Perm extension_automorphism(const CayleyDigraph& g,
                            const WreathCertificate& cert, int x, int h) {
  const int n = g.n;
  WreathCheckResult check = wreath_check(n, g.connection, cert);
  if (!check.accepted)
    throw DomainError("wreath hypotheses fail: " + check.rejected_clause);
  x = ((x % n) + n) % n;
  h = ((h % n) + n) % n;
  if (x % cert.k_divisor == 0) throw DomainError("x lies in K");
  if (h % cert.h_divisor != 0) throw DomainError("h not in H");
  if (h != 0 && (2 * h) % n == 0)
    throw DomainError("h equals its own negative");

  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    bool in_coset = ((v - x) % cert.k_divisor + cert.k_divisor) % cert.k_divisor == 0;
    img[static_cast<std::size_t>(v)] = in_coset ? (v + h) % n : v;
  }
  Perm p = Perm::from_images(img);

  if (!g.preserves_arcs(p))
    throw StructuralError("extension automorphism fails to preserve arcs");
  if (p[0] != 0)
    throw StructuralError("extension automorphism moves vertex 0");
  if (h != 0 && decompose_affine(p, crt_decompose(n)))
    throw StructuralError("extension automorphism is affine");
  return p;
}

}  // namespace circan
