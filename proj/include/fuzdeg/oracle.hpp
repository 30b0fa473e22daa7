#pragma once

// Brute-force evaluation of the fuzzy-subgroup definitions. Nothing here goes
// through the chain encoding; these routines exist to cross-check it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzdeg/fuzzy_subgroup.hpp"
#include "fuzdeg/group.hpp"
#include "fuzdeg/subgroup_lattice.hpp"

namespace fuzdeg {

inline constexpr std::uint64_t kDefaultEnumerationCap = 2'000'000;

/// Strictly decreasing positive membership values starting at 1; zero is implied.
class MembershipGrid {
 public:
  explicit MembershipGrid(std::vector<Rational> levels);

  /// 1, 1/2, 1/3, ..., 1/depth.
  static MembershipGrid harmonic(std::size_t depth);

  std::size_t depth() const { return levels_.size(); }
  const std::vector<Rational>& levels() const { return levels_; }

 private:
  std::vector<Rational> levels_;
};

/// True iff `values` is a fuzzy subgroup. Evaluates the pointwise laws and the
/// level-set characterization; throws InternalError if they disagree.
bool is_fuzzy_subgroup(const Group& g, std::span<const Rational> values);

/// Every fuzzy subgroup with identity value 1 and values in grid ∪ {0}, in
/// odometer order over elements 1..n-1. Throws DepthError when the grid is
/// shallower than the longest subgroup chain and CapacityError when the search
/// space exceeds `cap`.
std::vector<FuzzySubgroup> enumerate_fuzzy_subgroups(const SubgroupLattice& lat, const MembershipGrid& grid,
                                                     std::uint64_t cap = kDefaultEnumerationCap);

/// Same value order on every pair of elements and the same zero set.
bool equivalent(const FuzzySubgroup& mu, const FuzzySubgroup& nu);

/// Max-min convolution: (a o b)(x) = max over yz = x of min(a(y), b(z)).
MembershipMap fuzzy_product(const Group& g, std::span<const Rational> a, std::span<const Rational> b);

/// For all a, b there is x with mu(x^-1 a b) >= mu(a) and nu(x) >= nu(b).
bool is_permuted_by(const FuzzySubgroup& mu, const FuzzySubgroup& nu);

inline bool are_permutable(const FuzzySubgroup& mu, const FuzzySubgroup& nu) {
  return is_permuted_by(mu, nu) && is_permuted_by(nu, mu);
}

/// For every b in Im nu (zero included when present), every subgroup L of
/// nu_b, and all a in G, l in L: some l1, l2 in L give mu(l1^-1 a l) >= mu(a)
/// and mu(l a l2^-1) >= mu(a).
bool is_mutually_permuted_by(const FuzzySubgroup& mu, const FuzzySubgroup& nu, const SubgroupLattice& lat);

inline bool are_mutually_permutable(const FuzzySubgroup& mu, const FuzzySubgroup& nu, const SubgroupLattice& lat) {
  return is_mutually_permuted_by(mu, nu, lat) && is_mutually_permuted_by(nu, mu, lat);
}

/// mu(xy) == mu(yx) for all x, y.
bool is_fuzzy_normal(const FuzzySubgroup& mu);

/// The conjugation-style quantifier condition over every subgroup L of the
/// group, checked against "every positive level subgroup is quasinormal".
/// Throws InternalError if the two disagree.
bool is_fuzzy_quasinormal(const FuzzySubgroup& mu, const SubgroupLattice& lat);

}  // namespace fuzdeg
