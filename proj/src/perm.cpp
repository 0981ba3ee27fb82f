#include "circan/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace circan {

Perm Perm::identity(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  return Perm(std::move(img));
}

Perm Perm::from_bytes(std::vector<std::uint8_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (std::uint8_t v : images) {
    if (v >= images.size() || seen[v])
      throw StructuralError("image vector is not a permutation");
    seen[v] = true;
  }
  return Perm(std::move(images));
}

Perm Perm::from_images(const std::vector<int>& images) {
  std::vector<std::uint8_t> img;
  img.reserve(images.size());
  for (int v : images) {
    if (v < 0 || v > 255) throw StructuralError("point out of range");
    img.push_back(static_cast<std::uint8_t>(v));
  }
  return from_bytes(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    inv[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(inv));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::cycle_lengths() const {
  std::vector<int> lengths;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t start = 0; start < img_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::size_t x = start;
    while (!seen[x]) {
      seen[x] = true;
      x = img_[x];
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Perm::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_lengths())
    ord = std::lcm(ord, static_cast<std::uint64_t>(len));
  return ord;
}

bool Perm::is_single_n_cycle() const {
  if (img_.empty()) return false;
  // Walk the cycle through 0; a single cycle covers all points.
  int len = 0;
  std::size_t x = 0;
  do {
    x = img_[x];
    ++len;
  } while (x != 0);
  return len == degree();
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(static_cast<int>(img_[i]));
  }
  s += ']';
  return s;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw StructuralError("compose: degree mismatch");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x)
    img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(q[p[x]]);
  return Perm::from_bytes(std::move(img));
}

Perm conjugate(const Perm& h, const Perm& g) {
  return compose(compose(g.inverse(), h), g);
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : p.images()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

PermGroup PermGroup::generate(int degree, std::vector<Perm> generators,
                              std::uint64_t order_cap) {
  PermGroup g = generate_capped(degree, std::move(generators), order_cap);
  if (!g.order_known())
    throw CapacityError("group closure exceeds order cap", g.partial_count());
  return g;
}

PermGroup PermGroup::generate_capped(int degree, std::vector<Perm> generators,
                                     std::uint64_t order_cap) {
  for (const Perm& p : generators)
    if (p.degree() != degree)
      throw StructuralError("generator degree mismatch");

  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);

  bool capped = false;
  while (!frontier.empty()) {
    Perm e = std::move(frontier.front());
    frontier.pop_front();
    for (const Perm& gen : g.generators_) {
      Perm f = compose(e, gen);
      if (seen.insert(f).second) {
        if (seen.size() > order_cap) {
          capped = true;
          break;
        }
        frontier.push_back(std::move(f));
      }
    }
    if (capped) break;
  }

  g.partial_count_ = seen.size();
  if (capped) return g;

  std::vector<Perm> elements(seen.begin(), seen.end());
  std::sort(elements.begin(), elements.end());
  g.order_ = elements.size();
  g.elements_ = std::move(elements);
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  for (const Perm& p : elements)
    if (p.degree() != degree)
      throw StructuralError("element degree mismatch");
  std::sort(elements.begin(), elements.end());
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = elements;
  g.order_ = elements.size();
  g.partial_count_ = elements.size();
  g.elements_ = std::move(elements);
  return g;
}

PermGroup PermGroup::from_generators_uncounted(int degree,
                                               std::vector<Perm> generators,
                                               std::uint64_t partial_count) {
  for (const Perm& p : generators)
    if (p.degree() != degree)
      throw StructuralError("generator degree mismatch");
  PermGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);
  g.partial_count_ = partial_count;
  return g;
}

std::uint64_t PermGroup::order() const {
  if (!order_)
    throw CapacityError("group order exceeds cap", partial_count_);
  return *order_;
}

const std::vector<Perm>& PermGroup::elements() const {
  if (!elements_)
    throw CapacityError("element list unavailable (order cap exceeded)",
                        partial_count_);
  return *elements_;
}

bool PermGroup::contains(const Perm& p) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

bool PermGroup::is_transitive() const {
  // Orbit of 0 under the generators.
  std::vector<bool> in_orbit(static_cast<std::size_t>(degree_), false);
  std::vector<int> stack = {0};
  in_orbit[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : generators_) {
      int y = g[x];
      if (!in_orbit[static_cast<std::size_t>(y)]) {
        in_orbit[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == degree_;
}

bool PermGroup::is_regular() const {
  return is_transitive() && order_known() &&
         order() == static_cast<std::uint64_t>(degree_);
}

bool is_normal_subgroup(const PermGroup& g, const PermGroup& h) {
  for (const Perm& hg : h.generators())
    if (!g.contains(hg))
      throw StructuralError("is_normal_subgroup: H generator not in G");
  for (const Perm& gg : g.generators())
    for (const Perm& hg : h.generators())
      if (!h.contains(conjugate(hg, gg))) return false;
  return true;
}

std::optional<Perm> are_conjugate_cyclic(const PermGroup& g,
                                         const PermGroup& h1,
                                         const PermGroup& h2) {
  const Perm& a = h1.generators().at(0);
  for (const Perm& t : g.elements()) {
    Perm c = conjugate(a, t);
    if (h2.contains(c) && c.order() == h2.order()) {
      // Witness check: conjugating h1's generator by t lands on a generator
      // of h2, so H1^t = H2.
      return t;
    }
  }
  return std::nullopt;
}

std::vector<PermGroup> regular_cyclic_subgroups(const PermGroup& g) {
  const int n = g.degree();
  std::vector<PermGroup> result;
  std::vector<std::vector<Perm>> seen_element_lists;
  for (const Perm& e : g.elements()) {
    if (!e.is_single_n_cycle()) continue;
    PermGroup sub = PermGroup::generate(n, {e});
    if (std::find(seen_element_lists.begin(), seen_element_lists.end(),
                  sub.elements()) != seen_element_lists.end())
      continue;
    seen_element_lists.push_back(sub.elements());
    result.push_back(std::move(sub));
  }
  return result;
}

}  // namespace circan
