#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "fuzdeg/element_set.hpp"
#include "fuzdeg/group.hpp"

namespace fuzdeg {

using Rational = boost::rational<std::int64_t>;

// boost::rational's mixed rational/integer comparisons recurse forever under
// C++20 rewritten operators, so compare against these instead of literals.
inline const Rational kZero{0};
inline const Rational kOne{1};

/// Membership degrees indexed by element. Not necessarily a fuzzy subgroup.
using MembershipMap = std::vector<Rational>;

/// Distinct values of `values`, largest first.
std::vector<Rational> image_of(std::span<const Rational> values);

/// {x : values[x] >= t}.
ElementSet level_set(std::span<const Rational> values, const Rational& t);

/// Fuzzy subgroup of a group with value 1 at the identity.
///
/// Holds a non-owning pointer to the group, which must outlive it.
class FuzzySubgroup {
 public:
  /// Throws InvalidInputError unless `values` is a fuzzy subgroup of `group`
  /// with entries in [0, 1] and value 1 at the identity.
  FuzzySubgroup(const Group& group, MembershipMap values);

  const Group& group() const { return *group_; }
  const MembershipMap& values() const { return values_; }
  const Rational& operator()(Element x) const { return values_[x]; }

  /// Distinct values, largest first (includes 0 when the support is proper).
  std::vector<Rational> image() const { return image_of(values_); }
  ElementSet level(const Rational& t) const { return level_set(values_, t); }
  ElementSet support() const;

 private:
  const Group* group_;
  MembershipMap values_;
};

}  // namespace fuzdeg
