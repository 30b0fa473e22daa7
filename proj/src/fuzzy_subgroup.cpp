#include "fuzdeg/fuzzy_subgroup.hpp"

#include <algorithm>
#include <functional>

#include "fuzdeg/errors.hpp"
#include "fuzdeg/oracle.hpp"

namespace fuzdeg {

std::vector<Rational> image_of(std::span<const Rational> values) {
  std::vector<Rational> out(values.begin(), values.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet level_set(std::span<const Rational> values, const Rational& t) {
  ElementSet out;
  for (std::size_t x = 0; x < values.size(); ++x)
    if (values[x] >= t) out.insert(static_cast<Element>(x));
  return out;
}

FuzzySubgroup::FuzzySubgroup(const Group& group, MembershipMap values) : group_(&group), values_(std::move(values)) {
  if (values_.size() != group.order())
    throw InvalidInputError("membership map has " + std::to_string(values_.size()) + " entries for a group of order " +
                            std::to_string(group.order()));
  for (const auto& v : values_)
    if (v < kZero || v > kOne) throw InvalidInputError("membership value outside [0, 1]");
  if (values_[Group::identity()] != kOne) throw InvalidInputError("membership at the identity must be 1");
  if (!is_fuzzy_subgroup(group, values_)) throw InvalidInputError("membership map is not a fuzzy subgroup");
}

ElementSet FuzzySubgroup::support() const {
  ElementSet out;
  for (std::size_t x = 0; x < values_.size(); ++x)
    if (values_[x] > kZero) out.insert(static_cast<Element>(x));
  return out;
}

}  // namespace fuzdeg
