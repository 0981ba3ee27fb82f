#include "circan/cayley.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "circan/errors.hpp"

namespace circan {

ConnectionSet ConnectionSet::make(int n, std::vector<int> members) {
  if (n < 1) throw DomainError("modulus must be positive");
  if (n > 64) throw DomainError("modulus exceeds the 64-vertex row layout");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int s : members)
    if (s < 1 || s >= n)
      throw DomainError("connection set member out of range (1..n-1)");

  ConnectionSet cs;
  cs.n = n;
  cs.members = std::move(members);
  cs.inverse_closed = true;
  for (int s : cs.members)
    if (!std::binary_search(cs.members.begin(), cs.members.end(),
                            (n - s) % n)) {
      cs.inverse_closed = false;
      break;
    }
  int g = n;
  for (int s : cs.members) g = std::gcd(g, s);
  cs.generating = (g == 1);
  return cs;
}

bool ConnectionSet::contains(int s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

std::uint64_t ConnectionSet::mask() const {
  std::uint64_t m = 0;
  for (int s : members) m |= 1ull << s;
  return m;
}

std::string ConnectionSet::to_text() const {
  std::string out = std::to_string(n) + ":";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(members[i]);
  }
  return out;
}

ConnectionSet parse_instance(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("instance parse error at position " +
                          std::to_string(pos) + ": " + msg,
                      pos);
  };
  auto read_int = [&]() {
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      throw fail("expected digit");
    long v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) throw fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  };

  int n = read_int();
  if (pos >= text.size() || text[pos] != ':') throw fail("expected ':'");
  ++pos;
  std::vector<int> members;
  if (pos < text.size()) {
    while (true) {
      int s = read_int();
      if (!members.empty() && s <= members.back())
        throw fail("members must be strictly ascending");
      members.push_back(s);
      if (pos == text.size()) break;
      if (text[pos] != ',') throw fail("expected ','");
      ++pos;
    }
  }
  if (n < 1) throw fail("modulus must be positive");
  for (int s : members)
    if (s < 1 || s >= n) throw fail("member out of range");
  return ConnectionSet::make(n, std::move(members));
}

bool CayleyDigraph::preserves_arcs(const Perm& p) const {
  for (int u = 0; u < n; ++u) {
    std::uint64_t mapped = 0;
    std::uint64_t row = rows[static_cast<std::size_t>(u)];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      mapped |= 1ull << p[v];
    }
    if (mapped != rows[static_cast<std::size_t>(p[u])]) return false;
  }
  return true;
}

CayleyDigraph build(const ConnectionSet& s) {
  CayleyDigraph g;
  g.n = s.n;
  g.connection = s;
  g.rows.assign(static_cast<std::size_t>(s.n), 0);
  g.in_rows.assign(static_cast<std::size_t>(s.n), 0);
  for (int v = 0; v < s.n; ++v)
    for (int m : s.members) {
      int w = (v + m) % s.n;
      g.rows[static_cast<std::size_t>(v)] |= 1ull << w;
      g.in_rows[static_cast<std::size_t>(w)] |= 1ull << v;
    }
  return g;
}

CayleyDigraph build(int n, const std::vector<int>& members) {
  return build(ConnectionSet::make(n, members));
}

Perm right_translation(int n, int g) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    img[static_cast<std::size_t>(x)] = (x + g % n + n) % n;
  return Perm::from_images(img);
}

PermGroup right_regular_group(int n) {
  return PermGroup::generate(n, {right_translation(n, 1 % n)});
}

std::vector<std::vector<int>> distance_layers(const CayleyDigraph& g, int v) {
  std::vector<std::vector<int>> layers;
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  layers.push_back({v});
  seen[static_cast<std::size_t>(v)] = true;
  while (true) {
    std::vector<int> next;
    for (int u : layers.back()) {
      std::uint64_t row = g.rows[static_cast<std::size_t>(u)];
      while (row) {
        int w = std::countr_zero(row);
        row &= row - 1;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    layers.push_back(std::move(next));
  }
  return layers;
}

int InducedSubdigraph::arc_count() const {
  int c = 0;
  for (std::uint64_t row : rows) c += std::popcount(row);
  return c;
}

bool InducedSubdigraph::symmetric() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (arc(i, j) != arc(j, i)) return false;
  return true;
}

bool InducedSubdigraph::is_undirected_cycle() const {
  int k = size();
  if (k < 3 || !symmetric()) return false;
  for (int i = 0; i < k; ++i) {
    int deg = std::popcount(rows[static_cast<std::size_t>(i)] &
                            ~(1ull << i));
    if (deg != 2) return false;
  }
  // 2-regular and symmetric: connected iff a single cycle.
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  std::vector<int> stack = {0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    std::uint64_t row = rows[static_cast<std::size_t>(u)];
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == k;
}

InducedSubdigraph induced(const CayleyDigraph& g,
                          const std::vector<int>& verts) {
  for (int v : verts)
    if (v < 0 || v >= g.n) throw DomainError("vertex out of range");
  InducedSubdigraph sub;
  sub.vertices = verts;
  sub.rows.assign(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (g.arc(verts[i], verts[j])) sub.rows[i] |= 1ull << j;
  return sub;
}

}  // namespace circan
