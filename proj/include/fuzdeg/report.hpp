#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzdeg/degree.hpp"
#include "fuzdeg/fuzzy_classes.hpp"
#include "fuzdeg/group_spec.hpp"
#include "fuzdeg/subgroup_lattice.hpp"
#include "fuzdeg/verify.hpp"

namespace fuzdeg {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv, kMarkdown, kDot };

Format parse_format(const std::string& text);

struct RunConfig {
  std::string spec;
  std::size_t max_order = kDefaultMaxOrder;
  std::uint64_t pair_cap = kDefaultPairCap;
  std::uint64_t class_cap = kDefaultClassCap;
  std::optional<std::size_t> oracle_depth;
  Format format = Format::kJson;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct Discrepancy {
  std::string quantity;
  std::string paper_value;
  std::string computed_value;
  std::string paper_location;
};

struct Analysis {
  std::string spec;
  SubgroupLattice lattice;
  ClassCensus census;
  DegreeReport degree;
  std::vector<Discrepancy> discrepancies;
};

/// "num/den" (or "num" when den is 1).
std::string fraction_string(const Rational& r);
/// Decimal rendering rounded half-up to `places` digits.
std::string decimal_string(const Rational& r, int places = 6);
Json fraction_json(const Rational& r);

Analysis analyze(const GroupSpec& spec, const RunConfig& config);

Json analysis_json(const Analysis& a);
std::string analysis_csv(const Analysis& a);
std::string analysis_markdown(const Analysis& a);

/// Subgroup member lists and every relation matrix.
Json lattice_json(const SubgroupLattice& lat);
Json census_json(const SubgroupLattice& lat, const ClassCensus& census);
Json classes_json(const SubgroupLattice& lat, const std::vector<FuzzyClass>& classes);

/// Hasse diagram as a bottom-to-top DOT digraph.
std::string lattice_dot(const SubgroupLattice& lat);

struct TableRow {
  std::string claim;
  std::string published;
  std::string location;
  std::string computed;
  bool match = false;
  bool from_literature = true;
};

std::vector<TableRow> paper_table(const RunConfig& config);
std::string paper_table_markdown(const std::vector<TableRow>& rows);
std::string paper_table_csv(const std::vector<TableRow>& rows);

Json verification_json(const VerificationReport& r);
std::string verification_markdown(const VerificationReport& r);

}  // namespace fuzdeg
