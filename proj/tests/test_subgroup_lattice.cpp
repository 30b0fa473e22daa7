#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "fuzdeg/group_spec.hpp"
#include "fuzdeg/subgroup_lattice.hpp"
#include "support.hpp"

using namespace fuzdeg;
using fuzdeg::testing::set_of;

namespace {

const std::vector<std::string> kSmallSpecs = {
    "cyclic:1",  "cyclic:2",    "cyclic:3",    "cyclic:4",    "cyclic:6",
    "cyclic:8",  "cyclic:9",    "cyclic:12",   "cyclic:16",   "klein",
    "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:14",
    "dihedral:16", "product:cyclic:2,cyclic:4", "product:cyclic:2,klein", "product:cyclic:4,cyclic:4",
    "product:cyclic:2,dihedral:8", "product:cyclic:2,cyclic:8", "product:klein,klein"};

SubgroupId id_of(const SubgroupLattice& lat, std::initializer_list<Element> xs) {
  const auto id = lat.find(set_of(xs));
  REQUIRE(id.has_value());
  return *id;
}

std::set<ElementSet> lattice_sets(const SubgroupLattice& lat) {
  std::set<ElementSet> out;
  for (const auto& h : lat.subgroups()) out.insert(h.members);
  return out;
}

}  // namespace

TEST_CASE("subgroups match subset closure for orders up to 16") {
  for (const auto& spec : kSmallSpecs) {
    CAPTURE(spec);
    const SubgroupLattice lat(build_group(spec));
    CHECK(lattice_sets(lat) == fuzdeg::testing::subgroups_by_subsets(lat.group()));
    CHECK(lattice_sets(lat).size() == lat.size());
  }
}

TEST_CASE("subgroups match join closure for larger groups") {
  for (const char* spec : {"symmetric:4", "dihedral:22", "product:cyclic:3,symmetric:3", "cyclic:30"}) {
    CAPTURE(spec);
    const SubgroupLattice lat(build_group(spec));
    CHECK(lattice_sets(lat) == fuzdeg::testing::subgroups_by_joins(lat.group()));
  }
  CHECK(SubgroupLattice(make_symmetric(4)).size() == 30);
}

TEST_CASE("subgroup counts") {
  CHECK(SubgroupLattice(make_symmetric(3)).size() == 6);
  CHECK(SubgroupLattice(make_klein()).size() == 5);
  CHECK(SubgroupLattice(make_dihedral(8)).size() == 10);
  CHECK(SubgroupLattice(make_cyclic(8)).size() == 4);
  CHECK(SubgroupLattice(build_group("product:cyclic:2,cyclic:4")).size() == 8);
  for (std::size_t p : {3, 5, 7, 11}) CHECK(SubgroupLattice(make_dihedral(2 * p)).size() == p + 3);

  const SubgroupLattice d8(make_dihedral(8));
  std::vector<std::size_t> by_size(9, 0);
  for (const auto& h : d8.subgroups()) ++by_size[h.size];
  CHECK(by_size[1] == 1);
  CHECK(by_size[2] == 5);
  CHECK(by_size[4] == 3);
  CHECK(by_size[8] == 1);
}

TEST_CASE("ordering, generators and names") {
  for (const auto& spec : kSmallSpecs) {
    const SubgroupLattice lat(build_group(spec));
    CHECK(lat[lat.trivial()].size == 1);
    CHECK(lat[lat.whole()].members == lat.group().all());
    for (SubgroupId i = 0; i < lat.size(); ++i) {
      CHECK(lat[i].id == i);
      CHECK(lat[i].size == lat[i].members.size());
      CHECK(generated_subgroup(lat.group(), lat[i].generators) == lat[i].members);
      if (i > 0) CHECK(lat[i - 1].size <= lat[i].size);
    }
  }
  const SubgroupLattice s3(make_dihedral(6));
  CHECK(s3.name(s3.trivial()) == "1");
  CHECK(s3.name(id_of(s3, {0, 1, 2})) == "<a>");
  CHECK(s3.name(id_of(s3, {0, 3})) == "<b>");
}

TEST_CASE("set products") {
  const SubgroupLattice s3(make_dihedral(6));
  const SubgroupId b = id_of(s3, {0, 3}), ab = id_of(s3, {0, 4});
  for (SubgroupId k = 0; k < s3.size(); ++k) CHECK(set_product(s3, s3.trivial(), k) == s3[k].members);
  const ElementSet prod = set_product(s3, b, ab);
  CHECK(prod.size() == 4);
  CHECK_FALSE(s3.find(prod).has_value());
  CHECK_FALSE(permutes(s3, b, ab));

  const SubgroupLattice d8(make_dihedral(8));
  const SubgroupId beta = id_of(d8, {0, 4}), a2beta = id_of(d8, {0, 6});
  CHECK(set_product(d8, beta, a2beta) == set_of({0, 2, 4, 6}));
  CHECK(permutes(d8, beta, a2beta));
}

TEST_CASE("product formula and permutability") {
  for (const auto& spec : kSmallSpecs) {
    CAPTURE(spec);
    const SubgroupLattice lat(build_group(spec));
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      CHECK(permutes(lat, h, lat.whole()));
      for (SubgroupId k = 0; k < lat.size(); ++k) {
        const ElementSet hk = set_product(lat, h, k);
        CHECK(hk.size() * (lat[h].members & lat[k].members).size() == lat[h].size * lat[k].size);
        CHECK(lat.permutes(h, k) == (hk == set_product(lat, k, h)));
        CHECK(lat.permutes(h, k) == fuzdeg::testing::is_closed_subgroup(lat.group(), hk));
        CHECK(lat.permutes(h, k) == lat.permutes(k, h));
        CHECK(lat.leq(h, k) == lat[h].members.is_subset_of(lat[k].members));
        if (lat.mutually_permutes(h, k)) CHECK(lat.permutes(h, k));
      }
    }
  }
}

TEST_CASE("mutual permutability") {
  const SubgroupLattice s3(make_dihedral(6));
  const SubgroupId a = id_of(s3, {0, 1, 2}), b = id_of(s3, {0, 3}), ab = id_of(s3, {0, 4});
  CHECK(mutually_permutable(s3, a, s3.whole()));
  CHECK_FALSE(mutually_permutable(s3, b, ab));
  CHECK_FALSE(mutually_permutable(s3, b, s3.whole()));

  for (const auto& spec : kSmallSpecs) {
    const SubgroupLattice lat(build_group(spec));
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      CHECK(lat.mutually_permutes(h, lat.whole()) == lat.quasinormal(h));
      // Direct definition: h permutes with every subgroup of k and vice versa.
      for (SubgroupId k = 0; k < lat.size(); ++k) {
        bool expected = true;
        for (SubgroupId l = 0; l < lat.size(); ++l) {
          if (lat.leq(l, k) && !lat.permutes(h, l)) expected = false;
          if (lat.leq(l, h) && !lat.permutes(k, l)) expected = false;
        }
        CHECK(lat.mutually_permutes(h, k) == expected);
      }
    }
  }
}

TEST_CASE("normal and quasinormal subgroups") {
  const SubgroupLattice s3(make_dihedral(6));
  CHECK(is_normal(s3, s3.trivial()));
  CHECK(is_normal(s3, s3.whole()));
  CHECK(is_normal(s3, id_of(s3, {0, 1, 2})));
  CHECK_FALSE(is_normal(s3, id_of(s3, {0, 3})));
  CHECK_FALSE(is_quasinormal(s3, id_of(s3, {0, 3})));

  const SubgroupLattice d8(make_dihedral(8));
  CHECK(is_normal(d8, id_of(d8, {0, 2})));

  for (const auto& spec : kSmallSpecs) {
    const SubgroupLattice lat(build_group(spec));
    const Group& g = lat.group();
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      bool conj_closed = true;
      for (Element x = 0; x < g.order(); ++x)
        for (Element y : lat[h].members.members())
          if (!lat[h].members.contains(g.mul(g.mul(x, y), g.inv(x)))) conj_closed = false;
      CHECK(lat.normal(h) == conj_closed);
      if (lat.normal(h)) CHECK(lat.quasinormal(h));
      bool permutes_all = true;
      for (SubgroupId k = 0; k < lat.size(); ++k) permutes_all = permutes_all && lat.permutes(h, k);
      CHECK(lat.quasinormal(h) == permutes_all);
      if (g.is_abelian()) CHECK(lat.quasinormal(h));
    }
  }
}

TEST_CASE("Hasse diagram") {
  CHECK(SubgroupLattice(make_cyclic(1)).hasse_edges().empty());
  CHECK(SubgroupLattice(make_klein()).hasse_edges().size() == 6);
  CHECK(SubgroupLattice(make_symmetric(3)).hasse_edges().size() == 8);

  const SubgroupLattice z27(make_cyclic(27));
  const auto path = z27.hasse_edges();
  REQUIRE(path.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(path[i] == std::make_pair(i, i + 1));
  CHECK(z27.longest_chain() == 4);
  CHECK(SubgroupLattice(make_cyclic(1)).longest_chain() == 1);
  CHECK(SubgroupLattice(make_dihedral(8)).longest_chain() == 4);

  // Covering pairs are exactly the strict inclusions with nothing between.
  const SubgroupLattice d8(make_dihedral(8));
  std::set<std::pair<SubgroupId, SubgroupId>> expected;
  for (SubgroupId a = 0; a < d8.size(); ++a)
    for (SubgroupId b = 0; b < d8.size(); ++b) {
      if (!d8.strictly_below(a, b)) continue;
      bool covered = true;
      for (SubgroupId c = 0; c < d8.size(); ++c)
        if (d8.strictly_below(a, c) && d8.strictly_below(c, b)) covered = false;
      if (covered) expected.insert({a, b});
    }
  const auto edges = d8.hasse_edges();
  CHECK(std::set(edges.begin(), edges.end()) == expected);
}

TEST_CASE("thread count does not change relations") {
  for (const char* spec : {"dihedral:16", "symmetric:4", "product:cyclic:2,dihedral:8"}) {
    const SubgroupLattice one(build_group(spec), 1);
    const SubgroupLattice many(build_group(spec), 4);
    REQUIRE(one.size() == many.size());
    for (SubgroupId h = 0; h < one.size(); ++h) {
      CHECK(one.normal(h) == many.normal(h));
      CHECK(one.quasinormal(h) == many.quasinormal(h));
      for (SubgroupId k = 0; k < one.size(); ++k) {
        CHECK(one.permutes(h, k) == many.permutes(h, k));
        CHECK(one.mutually_permutes(h, k) == many.mutually_permutes(h, k));
      }
    }
  }
}
