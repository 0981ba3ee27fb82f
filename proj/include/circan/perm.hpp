#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circan/errors.hpp"

namespace circan {

/// A permutation of {0,...,n-1}, stored as its image vector: images()[i] is
/// where point i goes. All group operations compose left-to-right, i.e.
/// compose(p, q) applies p first and q second.
class Perm {
public:
  Perm() = default;

  /// Identity on n points.
  static Perm identity(int n);

  /// Validates that `images` is a bijection on {0,...,n-1}.
  static Perm from_bytes(std::vector<std::uint8_t> images);
  static Perm from_images(const std::vector<int>& images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[static_cast<std::size_t>(x)]; }
  int operator[](int x) const { return apply(x); }
  const std::vector<std::uint8_t>& images() const { return img_; }

  Perm inverse() const;

  bool is_identity() const;

  /// Least k >= 1 with p^k = id; the lcm of the cycle lengths.
  std::uint64_t order() const;

  /// Cycle lengths in the order the cycles are first met from point 0.
  std::vector<int> cycle_lengths() const;

  /// True when the permutation is one single n-cycle. On n points such an
  /// element generates a regular cyclic group.
  bool is_single_n_cycle() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  /// Lexicographic on the image vector; used for canonical choices.
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string to_string() const;

private:
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {}

  std::vector<std::uint8_t> img_;
};

/// compose(p, q): apply p first, then q. Image of x is q(p(x)).
Perm compose(const Perm& p, const Perm& q);

/// g^{-1} h g with the same left-to-right convention.
Perm conjugate(const Perm& h, const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

/// A finite permutation group given by generators. The closure is enumerated
/// breadth-first and cached in full when it fits under the order cap;
/// otherwise only the generators are kept and the order is reported as
/// exceeding the cap. Groups are immutable after construction.
class PermGroup {
public:
  static constexpr std::uint64_t kDefaultOrderCap = 500000;

  /// Full closure; throws CapacityError (carrying the partial element count)
  /// if the group has more than `order_cap` elements.
  static PermGroup generate(int degree, std::vector<Perm> generators,
                            std::uint64_t order_cap = kDefaultOrderCap);

  /// Like generate() but a blown cap yields a group with generators intact,
  /// no element list and no exact order, instead of an exception.
  static PermGroup generate_capped(int degree, std::vector<Perm> generators,
                                   std::uint64_t order_cap = kDefaultOrderCap);

  /// Wraps an explicit element list (must be closed; not re-verified here).
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  /// A group known only by generators, whose order is known to exceed the
  /// cap; no closure is attempted. `partial_count` records the enumeration
  /// floor the caller established.
  static PermGroup from_generators_uncounted(int degree,
                                             std::vector<Perm> generators,
                                             std::uint64_t partial_count);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool order_known() const { return order_.has_value(); }
  /// Exact order; throws CapacityError when the closure outgrew the cap.
  std::uint64_t order() const;
  /// Number of elements seen before the cap stopped the closure.
  std::uint64_t partial_count() const { return partial_count_; }

  bool has_elements() const { return elements_.has_value(); }
  /// Sorted element list; throws CapacityError when unavailable.
  const std::vector<Perm>& elements() const;

  /// Membership test against the cached element list.
  bool contains(const Perm& p) const;

  bool is_trivial() const { return order_known() && order() == 1; }

  /// Acts with a single orbit on {0,...,degree-1}.
  bool is_transitive() const;
  /// Transitive with trivial point stabilizers (|G| = degree).
  bool is_regular() const;

private:
  PermGroup() = default;

  int degree_ = 0;
  std::vector<Perm> generators_;
  std::optional<std::vector<Perm>> elements_;  // sorted when present
  std::optional<std::uint64_t> order_;
  std::uint64_t partial_count_ = 0;
};

/// True iff every generator of G conjugates every generator of H back into H.
/// Precondition: H's generators are members of G (checked; both groups need
/// cached element lists).
bool is_normal_subgroup(const PermGroup& g, const PermGroup& h);

/// Looks for t in G with H1^t = H2, for cyclic H1, H2 (single generator
/// each). The returned witness is re-verified before being handed out.
std::optional<Perm> are_conjugate_cyclic(const PermGroup& g,
                                         const PermGroup& h1,
                                         const PermGroup& h2);

/// All distinct cyclic subgroups of order degree(G) generated by single
/// n-cycle elements of G, deduplicated by element set. Deterministic order.
std::vector<PermGroup> regular_cyclic_subgroups(const PermGroup& g);

}  // namespace circan
