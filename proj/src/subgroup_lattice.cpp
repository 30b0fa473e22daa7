#include "fuzdeg/subgroup_lattice.hpp"

#include <algorithm>
#include <deque>
#include <thread>

#include "fuzdeg/errors.hpp"

namespace fuzdeg {

ElementSet generated_subgroup(const Group& g, const std::vector<Element>& generators) {
  ElementSet members = ElementSet::singleton(Group::identity());
  std::vector<Element> frontier{Group::identity()};
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : generators) {
      const Element y = g.mul(x, s);
      if (!members.contains(y)) {
        members.insert(y);
        frontier.push_back(y);
      }
    }
  }
  return members;
}

SubgroupLattice::SubgroupLattice(Group group, unsigned threads) : group_(std::move(group)) {
  enumerate();
  fill_relations(std::max(1U, threads));
}

void SubgroupLattice::enumerate() {
  const std::size_t n = group_.order();
  std::vector<Subgroup> found;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  found.push_back(Subgroup{0, ElementSet::singleton(Group::identity()), 1, {}});
  seen.emplace(found[0].members, 0);

  // Cyclic extension: close <H, g> for every known H and every g outside H.
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    const std::size_t h = work.front();
    work.pop_front();
    for (Element g = 1; g < n; ++g) {
      if (found[h].members.contains(g)) continue;
      std::vector<Element> gens = found[h].generators;
      gens.push_back(g);
      const ElementSet closure = generated_subgroup(group_, gens);
      if (seen.contains(closure)) continue;
      seen.emplace(closure, found.size());
      found.push_back(Subgroup{0, closure, closure.size(), std::move(gens)});
      work.push_back(found.size() - 1);
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.members < b.members;
  });
  for (std::size_t i = 0; i < found.size(); ++i) {
    found[i].id = i;
    if (n % found[i].size != 0) throw InternalError("subgroup order does not divide the group order");
    index_.emplace(found[i].members, i);
  }
  subgroups_ = std::move(found);
}

void SubgroupLattice::fill_relations(unsigned threads) {
  const std::size_t m = subgroups_.size();
  leq_ = RelationMatrix(m);
  permutes_ = RelationMatrix(m);
  mutually_permutes_ = RelationMatrix(m);
  normal_.assign(m, 0);
  quasinormal_.assign(m, 0);

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq_.set(i, j, subgroups_[i].members.is_subset_of(subgroups_[j].members));

  // Each unordered pair {i, j} with i <= j is owned by row i, so workers never share a cell.
  auto run_rows = [&](auto&& body) {
    if (threads == 1 || m < 2) {
      for (std::size_t i = 0; i < m; ++i) body(i);
      return;
    }
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < m; i += threads) body(i);
      });
    }
  };

  run_rows([&](std::size_t i) {
    for (std::size_t j = i; j < m; ++j) {
      const bool p = set_product(i, j) == set_product(j, i);
      permutes_.set(i, j, p);
      permutes_.set(j, i, p);
    }
  });

  run_rows([&](std::size_t i) {
    for (std::size_t j = i; j < m; ++j) {
      bool ok = true;
      for (std::size_t l = 0; l < m && ok; ++l) {
        if (leq_(l, j) && !permutes_(i, l)) ok = false;
        if (leq_(l, i) && !permutes_(j, l)) ok = false;
      }
      mutually_permutes_.set(i, j, ok);
      mutually_permutes_.set(j, i, ok);
    }
  });

  const std::size_t n = group_.order();
  for (std::size_t i = 0; i < m; ++i) {
    const auto elems = subgroups_[i].members.members();
    bool is_normal = true;
    for (Element g = 0; g < n && is_normal; ++g)
      for (Element h : elems)
        if (!subgroups_[i].members.contains(group_.mul(group_.mul(g, h), group_.inv(g)))) {
          is_normal = false;
          break;
        }
    normal_[i] = is_normal ? 1 : 0;

    bool is_quasinormal = true;
    for (std::size_t j = 0; j < m && is_quasinormal; ++j) is_quasinormal = permutes_(i, j);
    quasinormal_[i] = is_quasinormal ? 1 : 0;
  }
}

std::optional<SubgroupId> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet SubgroupLattice::set_product(SubgroupId a, SubgroupId b) const {
  const auto xs = subgroups_[a].members.members();
  const auto ys = subgroups_[b].members.members();
  ElementSet out;
  for (Element x : xs)
    for (Element y : ys) out.insert(group_.mul(x, y));
  return out;
}

std::vector<std::pair<SubgroupId, SubgroupId>> SubgroupLattice::hasse_edges() const {
  const std::size_t m = subgroups_.size();
  std::vector<std::pair<SubgroupId, SubgroupId>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!strictly_below(i, j)) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k) covered = !(strictly_below(i, k) && strictly_below(k, j));
      if (covered) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::size_t SubgroupLattice::longest_chain() const {
  const std::size_t m = subgroups_.size();
  std::vector<std::size_t> len(m, 1);
  std::size_t best = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < j; ++i)
      if (strictly_below(i, j)) len[j] = std::max(len[j], len[i] + 1);
    best = std::max(best, len[j]);
  }
  return best;
}

std::string SubgroupLattice::name(SubgroupId id) const {
  const Subgroup& s = subgroups_[id];
  if (s.size == 1) return "1";
  const auto elems = s.members.members();
  for (Element x : elems) {
    if (x != 0 && generated_subgroup(group_, {x}) == s.members) return "<" + group_.element_name(x) + ">";
  }
  for (std::size_t i = 1; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (generated_subgroup(group_, {elems[i], elems[j]}) == s.members)
        return "<" + group_.element_name(elems[i]) + ", " + group_.element_name(elems[j]) + ">";
    }
  }
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ", ";
    out += group_.element_name(elems[i]);
  }
  return out + "}";
}

}  // namespace fuzdeg
