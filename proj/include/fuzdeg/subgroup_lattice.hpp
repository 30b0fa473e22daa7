#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fuzdeg/element_set.hpp"
#include "fuzdeg/group.hpp"

namespace fuzdeg {

using SubgroupId = std::size_t;

struct Subgroup {
  SubgroupId id = 0;
  ElementSet members;
  std::size_t size = 0;
  std::vector<Element> generators;  // a generating set found during enumeration
};

/// Row-major square boolean matrix.
class RelationMatrix {
 public:
  RelationMatrix() = default;
  explicit RelationMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells_[i * n_ + j] = v ? 1 : 0; }
  std::size_t dim() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> cells_;
};

/// Every subgroup of a group, ordered by (size, mask value), with all pairwise
/// relations precomputed. Subgroup 0 is trivial, the last one is the group.
class SubgroupLattice {
 public:
  /// `threads` only affects how relation matrices are filled; the result is identical.
  explicit SubgroupLattice(Group group, unsigned threads = 1);

  const Group& group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  const std::vector<Subgroup>& subgroups() const { return subgroups_; }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }

  SubgroupId trivial() const { return 0; }
  SubgroupId whole() const { return subgroups_.size() - 1; }

  std::optional<SubgroupId> find(const ElementSet& members) const;

  bool leq(SubgroupId a, SubgroupId b) const { return leq_(a, b); }
  bool strictly_below(SubgroupId a, SubgroupId b) const { return a != b && leq_(a, b); }
  bool permutes(SubgroupId a, SubgroupId b) const { return permutes_(a, b); }
  bool mutually_permutes(SubgroupId a, SubgroupId b) const { return mutually_permutes_(a, b); }
  bool normal(SubgroupId a) const { return normal_[a] != 0; }
  bool quasinormal(SubgroupId a) const { return quasinormal_[a] != 0; }

  /// {xy : x in a, y in b}; need not be a subgroup.
  ElementSet set_product(SubgroupId a, SubgroupId b) const;

  /// Covering pairs (child, parent) of the inclusion order, sorted.
  std::vector<std::pair<SubgroupId, SubgroupId>> hasse_edges() const;

  /// Longest chain of subgroups, counted in subgroups (the trivial group gives 1).
  std::size_t longest_chain() const;

  /// Short display name: "1", "<a>", "<a^2, b>", or a member list.
  std::string name(SubgroupId id) const;

 private:
  void enumerate();
  void fill_relations(unsigned threads);

  Group group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, SubgroupId, ElementSetHash> index_;
  RelationMatrix leq_;
  RelationMatrix permutes_;
  RelationMatrix mutually_permutes_;
  std::vector<unsigned char> normal_;
  std::vector<unsigned char> quasinormal_;
};

/// Subgroup generated by `generators` (closure under products; inverses follow by finiteness).
ElementSet generated_subgroup(const Group& g, const std::vector<Element>& generators);

// Free-function forms of the lattice queries.
inline ElementSet set_product(const SubgroupLattice& lat, SubgroupId h, SubgroupId k) { return lat.set_product(h, k); }
inline bool permutes(const SubgroupLattice& lat, SubgroupId h, SubgroupId k) { return lat.permutes(h, k); }
inline bool mutually_permutable(const SubgroupLattice& lat, SubgroupId h, SubgroupId k) {
  return lat.mutually_permutes(h, k);
}
inline bool is_normal(const SubgroupLattice& lat, SubgroupId h) { return lat.normal(h); }
inline bool is_quasinormal(const SubgroupLattice& lat, SubgroupId h) { return lat.quasinormal(h); }

}  // namespace fuzdeg
