#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fuzdeg/element_set.hpp"

namespace fuzdeg {

inline constexpr std::size_t kDefaultMaxOrder = 128;

/// Reads FUZDEG_MAX_ORDER from the environment, falling back to kDefaultMaxOrder.
std::size_t max_order_from_env();

/// A finite group stored as a full multiplication table.
///
/// Elements are the indices 0..order()-1 and the identity is always index 0.
/// Instances are immutable; every constructor validates all group axioms.
class Group {
 public:
  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }

  const std::string& label() const { return label_; }
  /// Display name of an element ("a^2b", "(0 2 1)", "3", ...).
  const std::string& element_name(Element a) const { return names_[a]; }

  ElementSet all() const { return ElementSet::first_n(order_); }
  bool is_abelian() const;

  /// The full table as rows, suitable for from_cayley_table.
  std::vector<std::vector<Element>> rows() const;

  /// Restricts the table to `members` (which must be a subgroup) and relabels
  /// the elements in increasing index order.
  Group subgroup_as_group(const ElementSet& members) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  friend class GroupBuilder;
  Group() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::string label_;
};

/// Z_n under addition mod n.
Group make_cyclic(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// D_{two_n}: rotations a^i at index i, reflections a^i b at index n+i,
/// with b a b = a^{-1}.
Group make_dihedral(std::size_t two_n, std::size_t max_order = kDefaultMaxOrder);

/// S_n with permutations in lexicographic order; table[i][j] = p_i after p_j.
Group make_symmetric(std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// Z_2 x Z_2.
Group make_klein();

/// Component-wise product; element (x, y) has index x * h.order() + y.
Group direct_product(const Group& g, const Group& h, std::size_t max_order = kDefaultMaxOrder);

/// Validates an arbitrary table. If the identity is not element 0 it is
/// swapped into position 0 before the Group is built.
Group from_cayley_table(const std::vector<std::vector<Element>>& raw, std::string label,
                        std::size_t max_order = kDefaultMaxOrder);

/// Parses the Cayley-table file format: "order n", optional "label <text>",
/// then n rows of n integers. Lines starting with '#' are ignored.
Group read_cayley_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder);

}  // namespace fuzdeg
