#pragma once

#include <string>
#include <vector>

#include "fuzdeg/fuzzy_subgroup.hpp"
#include "fuzdeg/group_spec.hpp"

namespace fuzdeg {

/// A numeric value stated in the literature for a specific group.
struct PublishedClaim {
  std::string claim;     // e.g. "s(D_8)"
  std::string quantity;  // "s" or "sd"
  std::string spec;      // group spec the claim is evaluated on
  Rational value;
  std::string location;  // where the value is stated
  bool from_literature = true;  // false for rows that only restate an elementary fact
  std::string printed;          // unreduced form as stated, when it differs from value
};

/// The value as stated: `printed` when set, otherwise the reduced fraction.
std::string stated_value(const PublishedClaim& claim);

/// Claims that apply to the group described by `spec` (cyclic prime powers,
/// dihedral groups of order 4, 8 and 2p, S_3 and the Klein group).
std::vector<PublishedClaim> published_claims_for(const GroupSpec& spec);

/// Rows reproduced by the paper-table command, in display order.
std::vector<PublishedClaim> published_table_claims();

}  // namespace fuzdeg
