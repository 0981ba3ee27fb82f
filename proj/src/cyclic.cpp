#include "circan/cyclic.hpp"

#include <algorithm>
#include <numeric>

namespace circan {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

int euler_phi(int n) {
  int count = 0;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::vector<int> units_mod(int n) {
  std::vector<int> units;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units.push_back(k % n);
  std::sort(units.begin(), units.end());
  return units;
}

CrtContext::CrtContext(int n) : n_(n) {
  if (n < 1) throw DomainError("modulus must be positive");

  // Trial division; n <= 64 in practice so nothing fancier is needed.
  std::vector<std::pair<int, int>> odd_factors;
  int two_exponent = 0;
  int rest = n;
  while (rest % 2 == 0) {
    rest /= 2;
    ++two_exponent;
  }
  for (int p = 3; p * p <= rest; p += 2) {
    if (rest % p) continue;
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    odd_factors.emplace_back(p, r);
  }
  if (rest > 1) odd_factors.emplace_back(rest, 1);

  // Odd primes descending, then the 2-part.
  std::sort(odd_factors.begin(), odd_factors.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  factors_ = std::move(odd_factors);
  if (two_exponent > 0) factors_.emplace_back(2, two_exponent);

  for (const auto& [p, r] : factors_) {
    int m = 1;
    for (int i = 0; i < r; ++i) m *= p;
    moduli_.push_back(m);
  }

  // CRT basis: basis_[i] = 1 mod moduli_[i], = 0 mod the others.
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    int m = moduli_[i];
    int rest_product = n_ / m;
    int e = 0;
    for (int x = 0; x < n_; ++x) {
      if (x % m == 1 && (rest_product == 1 || x % rest_product == 0)) {
        e = x;
        break;
      }
    }
    basis_.push_back(e);
  }
}

std::vector<int> CrtContext::to_coords(int x) const {
  std::vector<int> coords;
  coords.reserve(moduli_.size());
  int v = ((x % n_) + n_) % n_;
  for (int m : moduli_) coords.push_back(v % m);
  return coords;
}

int CrtContext::from_coords(const std::vector<int>& coords) const {
  if (coords.size() != moduli_.size())
    throw StructuralError("coordinate count mismatch");
  long long x = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    x += static_cast<long long>(coords[i] % moduli_[i]) * basis_[i];
  return static_cast<int>(((x % n_) + n_) % n_);
}

Perm AffinePair::to_perm(int n) const {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    img[static_cast<std::size_t>(x)] =
        static_cast<int>((static_cast<long long>(multiplier) * x + shift) % n);
  return Perm::from_images(img);
}

CrtContext crt_decompose(int n) { return CrtContext(n); }

Perm unit_to_perm(const CrtContext& ctx, int k) {
  int n = ctx.n();
  int kk = ((k % n) + n) % n;
  if (n == 1) return Perm::identity(1);
  if (std::gcd(kk, n) != 1) throw DomainError("multiplier is not a unit");
  return AffinePair{0, kk}.to_perm(n);
}

int component_automorphism_unit(const CrtContext& ctx, int t) {
  if (t < 0 || t >= ctx.factor_count())
    throw DomainError("no such factor");
  auto [p, r] = ctx.prime_powers()[static_cast<std::size_t>(t)];
  if (p == 2 || r < 2)
    throw DomainError("factor must be an odd prime power with exponent >= 2");
  int pr1 = ctx.factor_modulus(t) / p;  // p^{r-1}
  std::vector<int> coords(static_cast<std::size_t>(ctx.factor_count()), 1);
  coords[static_cast<std::size_t>(t)] = (pr1 + 1) % ctx.factor_modulus(t);
  for (int i = 0; i < ctx.factor_count(); ++i)
    if (i != t) coords[static_cast<std::size_t>(i)] = 1 % ctx.factor_modulus(i);
  return ctx.from_coords(coords);
}

Perm component_automorphism(const CrtContext& ctx, int t) {
  return unit_to_perm(ctx, component_automorphism_unit(ctx, t));
}

PermGroup holomorph(const CrtContext& ctx) {
  int n = ctx.n();
  std::vector<Perm> gens;
  gens.push_back(AffinePair{1 % n, 1}.to_perm(n));
  for (int k : units_mod(n))
    if (k != 1) gens.push_back(unit_to_perm(ctx, k));
  return PermGroup::generate(n, std::move(gens));
}

std::optional<AffinePair> decompose_affine(const Perm& p,
                                           const CrtContext& ctx) {
  int n = ctx.n();
  if (p.degree() != n) throw StructuralError("degree mismatch");
  if (n == 1) return AffinePair{0, 1};
  int a = p[0];
  int k = ((p[1] - a) % n + n) % n;
  if (std::gcd(k, n) != 1) return std::nullopt;
  for (int x = 0; x < n; ++x)
    if (p[x] != static_cast<int>((static_cast<long long>(k) * x + a) % n))
      return std::nullopt;
  return AffinePair{a, k};
}

}  // namespace circan
