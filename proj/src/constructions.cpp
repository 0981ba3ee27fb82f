#include "circan/constructions.hpp"

#include "circan/cyclic.hpp"
#include "circan/errors.hpp"

namespace circan {

ConnectionSet li_digraph_witness(int r) {
  if (r < 3) throw DomainError("witness requires r >= 3");
  if (r > 6) throw BudgetError("witness exceeds the n <= 64 working range");
  int n = 1 << r;
  return ConnectionSet::make(n, {1, 2, (1 << (r - 1)) + 1});
}

namespace {

void check_graph_witness_params(int s, int m) {
  if (s < 3) throw DomainError("witness requires s >= 3");
  if (m < 1 || m % 2 == 0) throw DomainError("witness requires odd m");
  long long n = (1ll << s) * m;
  if (n == 8) throw DomainError("witness excludes n = 8");
  if (n > 64) throw BudgetError("witness exceeds the n <= 64 working range");
}

}  // namespace

ConnectionSet graph_witness(int s, int m) {
  check_graph_witness_params(s, m);
  int n = (1 << s) * m;
  CrtContext ctx(n);

  int two_part = 1 << s;
  // Solve for the three defining elements from their (2-part, odd-part)
  // coordinate pairs; the set is closed under negation by construction.
  auto element = [&](int two_coord, int odd_coord) {
    for (int x = 0; x < n; ++x)
      if (x % two_part == ((two_coord % two_part) + two_part) % two_part &&
          (m == 1 || x % m == ((odd_coord % m) + m) % m))
        return x;
    throw StructuralError("coordinate solve failed");
  };

  int half = (1 << (s - 1)) + 1;
  std::vector<int> members;
  for (int base : {element(1, 1), element(2, 2), element(half, 1)}) {
    members.push_back(base);
    members.push_back((n - base) % n);
  }
  return ConnectionSet::make(n, std::move(members));
}

Perm second_regular_generator(int s, int m) {
  check_graph_witness_params(s, m);
  int n = (1 << s) * m;
  int two_part = 1 << s;
  // multiplier: 2^{s-1}+1 on the 2-part, 1 on the odd part
  int k = 0;
  for (int x = 0; x < n; ++x)
    if (x % two_part == (1 << (s - 1)) + 1 && (m == 1 || x % m == 1)) {
      k = x;
      break;
    }
  return AffinePair{1, k}.to_perm(n);
}

bool ndci_predicate(int n) { return n % 8 != 0; }

bool nci_predicate(int n) { return n == 8 || n % 8 != 0; }

namespace {

bool odd_square_free(int k) {
  if (k % 2 == 0) return false;
  for (int p = 3; p * p <= k; p += 2)
    if (k % (p * p) == 0) return false;
  return true;
}

}  // namespace

bool muzychuk_dci(int n) {
  if (n % 4 == 0) return odd_square_free(n / 4);
  if (n % 2 == 0) return odd_square_free(n / 2);
  return odd_square_free(n);
}

bool muzychuk_ci(int n) {
  return muzychuk_dci(n) || n == 8 || n == 9 || n == 18;
}

}  // namespace circan
