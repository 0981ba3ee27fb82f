#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "circan/perm.hpp"

namespace circan {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
int euler_phi(int n);
/// Units of Z_n in ascending order.
std::vector<int> units_mod(int n);

/// CRT decomposition of Z_n as a product of its prime-power parts. Factors
/// are ordered with the odd primes descending and the 2-part (if any) last,
/// so component indices are stable across reports.
class CrtContext {
public:
  explicit CrtContext(int n);

  int n() const { return n_; }
  /// (prime, exponent) pairs in the fixed order described above.
  const std::vector<std::pair<int, int>>& prime_powers() const {
    return factors_;
  }
  /// modulus of factor i, i.e. p_i^{r_i}
  int factor_modulus(int i) const { return moduli_[static_cast<std::size_t>(i)]; }
  int factor_count() const { return static_cast<int>(factors_.size()); }

  /// x -> (x mod p_1^{r_1}, ..., x mod p_m^{r_m})
  std::vector<int> to_coords(int x) const;
  /// Inverse of to_coords.
  int from_coords(const std::vector<int>& coords) const;

private:
  int n_;
  std::vector<std::pair<int, int>> factors_;
  std::vector<int> moduli_;
  std::vector<int> basis_;  // basis_[i] = 1 mod factor i, = 0 mod the others
};

/// x -> kx + shift (mod n); the elements of the holomorph in normal form.
struct AffinePair {
  int shift = 0;
  int multiplier = 1;

  Perm to_perm(int n) const;
};

CrtContext crt_decompose(int n);

/// The multiplier permutation x -> kx mod n. k must be a unit.
Perm unit_to_perm(const CrtContext& ctx, int k);

/// The order-p automorphism acting as multiplication by p^{r-1}+1 on factor
/// t and as the identity elsewhere. Only defined for odd prime powers with
/// r >= 2.
Perm component_automorphism(const CrtContext& ctx, int t);

/// Multiplier value of component_automorphism (the CRT lift of p^{r-1}+1).
int component_automorphism_unit(const CrtContext& ctx, int t);

/// Hol(Z_n) = {x -> kx + a : gcd(k, n) = 1}, of order n*phi(n).
PermGroup holomorph(const CrtContext& ctx);

/// Writes p as x -> kx + a when p lies in the holomorph; the multiplier's
/// CRT coordinates are then available through ctx.to_coords(k).
std::optional<AffinePair> decompose_affine(const Perm& p,
                                           const CrtContext& ctx);

}  // namespace circan
