#include "fuzdeg/report.hpp"

#include <map>
#include <sstream>

#include "fuzdeg/errors.hpp"
#include "fuzdeg/oracle.hpp"
#include "fuzdeg/published.hpp"

namespace fuzdeg {

Format parse_format(const std::string& text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "markdown" || text == "md") return Format::kMarkdown;
  if (text == "dot") return Format::kDot;
  throw InvalidSpecError("unknown output format '" + text + "'");
}

std::string fraction_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string decimal_string(const Rational& r, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = r < kZero;
  const std::int64_t num = negative ? -r.numerator() : r.numerator();
  const std::int64_t den = r.denominator();
  // Half-up rounding of num * scale / den.
  const __int128 scaled = (static_cast<__int128>(num) * scale * 2 + den) / (2 * static_cast<__int128>(den));
  const auto whole = static_cast<std::int64_t>(scaled / scale);
  const auto frac = static_cast<std::int64_t>(scaled % scale);
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (places <= 0) return out;
  const std::string digits = std::to_string(frac);
  return out + "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
}

Json fraction_json(const Rational& r) {
  Json j;
  j["num"] = r.numerator();
  j["den"] = r.denominator();
  return j;
}

Analysis analyze(const GroupSpec& spec, const RunConfig& config) {
  Analysis a{spec.to_string(), SubgroupLattice(build_group(spec, config.max_order), config.threads), {}, {}, {}};
  a.census = count_classes(a.lattice);
  const auto classes = enumerate_classes(a.lattice, config.class_cap);
  a.degree = compute_sd(a.lattice, classes, DegreeOptions{config.threads, config.pair_cap});

  for (const PublishedClaim& claim : published_claims_for(spec)) {
    const Rational computed = claim.quantity == "s" ? Rational(static_cast<std::int64_t>(a.census.total)) : a.degree.sd;
    if (computed != claim.value)
      a.discrepancies.push_back({claim.claim, stated_value(claim), fraction_string(computed), claim.location});
  }
  return a;
}

namespace {

Json members_json(const Subgroup& s) {
  Json out = Json::array();
  for (Element x : s.members.members()) out.push_back(x);
  return out;
}

Json discrepancies_json(const std::vector<Discrepancy>& list) {
  Json out = Json::array();
  for (const auto& d : list) {
    Json j;
    j["quantity"] = d.quantity;
    j["paper_value"] = d.paper_value;
    j["computed_value"] = d.computed_value;
    j["paper_location"] = d.paper_location;
    out.push_back(std::move(j));
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json analysis_json(const Analysis& a) {
  const SubgroupLattice& lat = a.lattice;
  Json j;
  j["group"] = lat.group().label();
  j["spec"] = a.spec;
  j["order"] = lat.group().order();
  j["abelian"] = lat.group().is_abelian();
  j["subgroup_count"] = lat.size();

  Json subs = Json::array();
  for (const Subgroup& s : lat.subgroups()) {
    Json row;
    row["id"] = s.id;
    row["name"] = lat.name(s.id);
    row["order"] = s.size;
    row["members"] = members_json(s);
    row["normal"] = lat.normal(s.id);
    row["quasinormal"] = lat.quasinormal(s.id);
    row["s_star"] = a.census.per_top[s.id];
    subs.push_back(std::move(row));
  }
  j["subgroups"] = std::move(subs);

  Json edges = Json::array();
  for (auto [c, p] : lat.hasse_edges()) edges.push_back(Json::array({c, p}));
  j["hasse_edges"] = std::move(edges);

  j["s"] = a.census.total;
  j["s_star_full"] = a.census.per_top[lat.whole()];
  j["longest_chain"] = a.census.longest_chain;
  j["sd"] = fraction_json(a.degree.sd);
  j["sd_decimal"] = decimal_string(a.degree.sd);
  j["permutable_pairs"] = a.degree.permutable_pairs;
  j["n_count"] = a.degree.n_count;
  j["qn_count"] = a.degree.qn_count;
  j["discrepancies"] = discrepancies_json(a.discrepancies);
  return j;
}

std::string analysis_csv(const Analysis& a) {
  const SubgroupLattice& lat = a.lattice;
  std::ostringstream os;
  os << "quantity,value\n";
  os << "group," << csv_field(lat.group().label()) << "\n";
  os << "spec," << csv_field(a.spec) << "\n";
  os << "order," << lat.group().order() << "\n";
  os << "subgroup_count," << lat.size() << "\n";
  os << "hasse_edges," << lat.hasse_edges().size() << "\n";
  os << "s," << a.census.total << "\n";
  os << "s_star_full," << a.census.per_top[lat.whole()] << "\n";
  os << "sd," << fraction_string(a.degree.sd) << "\n";
  os << "sd_decimal," << decimal_string(a.degree.sd) << "\n";
  os << "permutable_pairs," << a.degree.permutable_pairs << "\n";
  os << "n_count," << a.degree.n_count << "\n";
  os << "qn_count," << a.degree.qn_count << "\n";
  for (const Subgroup& s : lat.subgroups())
    os << csv_field("s_star " + lat.name(s.id)) << "," << a.census.per_top[s.id] << "\n";
  for (const auto& d : a.discrepancies)
    os << csv_field("discrepancy " + d.quantity) << "," << csv_field(d.paper_value + " vs " + d.computed_value) << "\n";
  return os.str();
}

std::string analysis_markdown(const Analysis& a) {
  const SubgroupLattice& lat = a.lattice;
  std::ostringstream os;
  os << "# " << lat.group().label() << " (" << a.spec << ")\n\n";
  os << "| quantity | value |\n|---|---|\n";
  os << "| order | " << lat.group().order() << " |\n";
  os << "| subgroups | " << lat.size() << " |\n";
  os << "| Hasse edges | " << lat.hasse_edges().size() << " |\n";
  os << "| s(G) | " << a.census.total << " |\n";
  os << "| s*(G) | " << a.census.per_top[lat.whole()] << " |\n";
  os << "| sd(G) | " << fraction_string(a.degree.sd) << " (" << decimal_string(a.degree.sd) << ") |\n";
  os << "| permutable pairs | " << a.degree.permutable_pairs << " |\n";
  os << "| normal classes | " << a.degree.n_count << " |\n";
  os << "| quasinormal classes | " << a.degree.qn_count << " |\n\n";
  os << "| id | subgroup | order | normal | quasinormal | s* |\n|---|---|---|---|---|---|\n";
  for (const Subgroup& s : lat.subgroups()) {
    os << "| " << s.id << " | " << lat.name(s.id) << " | " << s.size << " | " << (lat.normal(s.id) ? "yes" : "no")
       << " | " << (lat.quasinormal(s.id) ? "yes" : "no") << " | " << a.census.per_top[s.id] << " |\n";
  }
  if (!a.discrepancies.empty()) {
    os << "\n## Discrepancies\n\n| quantity | published | computed | where |\n|---|---|---|---|\n";
    for (const auto& d : a.discrepancies)
      os << "| " << d.quantity << " | " << d.paper_value << " | " << d.computed_value << " | " << d.paper_location
         << " |\n";
  }
  return os.str();
}

Json lattice_json(const SubgroupLattice& lat) {
  const std::size_t m = lat.size();
  Json j;
  j["group"] = lat.group().label();
  j["order"] = lat.group().order();
  Json subs = Json::array();
  for (const Subgroup& s : lat.subgroups()) {
    Json row;
    row["id"] = s.id;
    row["name"] = lat.name(s.id);
    row["members"] = members_json(s);
    subs.push_back(std::move(row));
  }
  j["subgroups"] = std::move(subs);

  auto matrix = [m](auto&& cell) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m; ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m; ++k) row.push_back(cell(i, k) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["leq"] = matrix([&](std::size_t a, std::size_t b) { return lat.leq(a, b); });
  j["permutes"] = matrix([&](std::size_t a, std::size_t b) { return lat.permutes(a, b); });
  j["mutually_permutes"] = matrix([&](std::size_t a, std::size_t b) { return lat.mutually_permutes(a, b); });
  Json normal = Json::array(), quasinormal = Json::array();
  for (std::size_t i = 0; i < m; ++i) {
    normal.push_back(lat.normal(i));
    quasinormal.push_back(lat.quasinormal(i));
  }
  j["normal"] = std::move(normal);
  j["quasinormal"] = std::move(quasinormal);
  Json edges = Json::array();
  for (auto [c, p] : lat.hasse_edges()) edges.push_back(Json::array({c, p}));
  j["hasse_edges"] = std::move(edges);
  return j;
}

Json census_json(const SubgroupLattice& lat, const ClassCensus& census) {
  Json j;
  j["total"] = census.total;
  j["longest_chain"] = census.longest_chain;
  Json rows = Json::array();
  for (const Subgroup& s : lat.subgroups()) {
    Json row;
    row["id"] = s.id;
    row["name"] = lat.name(s.id);
    row["s_star"] = census.per_top[s.id];
    rows.push_back(std::move(row));
  }
  j["per_top"] = std::move(rows);
  return j;
}

Json classes_json(const SubgroupLattice& lat, const std::vector<FuzzyClass>& classes) {
  Json out = Json::array();
  for (const FuzzyClass& c : classes) {
    Json row;
    row["chain"] = c.chain;
    Json members = Json::array();
    for (SubgroupId id : c.chain) members.push_back(members_json(lat[id]));
    row["members"] = std::move(members);
    row["support"] = c.support_id;
    row["full_support"] = c.full_support;
    out.push_back(std::move(row));
  }
  return out;
}

std::string lattice_dot(const SubgroupLattice& lat) {
  std::ostringstream os;
  os << "digraph \"" << dot_escape(lat.group().label()) << "\" {\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (const Subgroup& s : lat.subgroups())
    os << "  n" << s.id << " [label=\"" << dot_escape(lat.name(s.id)) << "\"];\n";
  for (auto [c, p] : lat.hasse_edges()) os << "  n" << c << " -> n" << p << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

// The S_3 pair used to illustrate permutability: mu peaks on b, nu on ab.
std::vector<TableRow> product_example_rows() {
  const Group s3 = make_dihedral(6);
  const Element b = 3, ab = 4;
  MembershipMap mu_values(6, Rational(1, 3)), nu_values(6, Rational(1, 3));
  mu_values[0] = nu_values[0] = Rational(1);
  mu_values[b] = Rational(1, 2);
  nu_values[ab] = Rational(1, 2);
  const FuzzySubgroup mu(s3, mu_values), nu(s3, nu_values);

  const MembershipMap product = fuzzy_product(s3, mu.values(), nu.values());
  std::string differs;
  for (Element x = 0; x < 6; ++x)
    if (product[x] != mu(x)) {
      differs += (differs.empty() ? "" : ", ") + s3.element_name(x) + ": " + fraction_string(product[x]) + " vs " +
                 fraction_string(mu(x));
    }
  const char* where = "S_3 example on permutable fuzzy subgroups";
  std::vector<TableRow> rows;
  rows.push_back({"S_3 example: mu o nu = mu", "true", where, differs.empty() ? "true" : "false (" + differs + ")",
                  differs.empty(), true});
  const bool permuted = is_permuted_by(mu, nu);
  rows.push_back({"S_3 example: mu is not permuted by nu", "true", where, permuted ? "false" : "true", !permuted, true});
  return rows;
}

}  // namespace

std::vector<TableRow> paper_table(const RunConfig& config) {
  std::map<std::string, std::pair<std::uint64_t, Rational>> cache;
  auto evaluate = [&](const std::string& spec) -> const std::pair<std::uint64_t, Rational>& {
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
    const SubgroupLattice lat(build_group(spec, config.max_order), config.threads);
    const auto classes = enumerate_classes(lat, config.class_cap);
    const auto sd = compute_sd(lat, classes, DegreeOptions{config.threads, config.pair_cap}).sd;
    return cache.emplace(spec, std::make_pair(count_classes(lat).total, sd)).first->second;
  };

  std::vector<TableRow> rows;
  for (const PublishedClaim& claim : published_table_claims()) {
    const auto& [s, sd] = evaluate(claim.spec);
    const Rational computed = claim.quantity == "s" ? Rational(static_cast<std::int64_t>(s)) : sd;
    rows.push_back({claim.claim, stated_value(claim), claim.location, fraction_string(computed),
                    computed == claim.value, claim.from_literature});
  }
  for (auto& row : product_example_rows()) rows.push_back(std::move(row));
  return rows;
}

std::string paper_table_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "| claim | published | computed | match | where |\n|---|---|---|---|---|\n";
  for (const auto& r : rows)
    os << "| " << r.claim << " | " << r.published << " | " << r.computed << " | " << (r.match ? "yes" : "**no**")
       << " | " << r.location << " |\n";
  return os.str();
}

std::string paper_table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "claim,published,computed,match,where\n";
  for (const auto& r : rows)
    os << csv_field(r.claim) << "," << csv_field(r.published) << "," << csv_field(r.computed) << ","
       << (r.match ? "yes" : "no") << "," << csv_field(r.location) << "\n";
  return os.str();
}

Json verification_json(const VerificationReport& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["grid_depth"] = r.depth;
  j["fuzzy_subgroups"] = r.fuzzy_subgroups;
  j["oracle_classes"] = r.oracle_classes;
  j["chain_classes"] = r.chain_classes;
  j["pairs"] = r.exhaustive_pairs ? "exhaustive" : "sampled";
  j["pairs_examined"] = r.pairs_examined;
  j["sd_chain"] = fraction_json(r.sd_chain);
  j["sd_oracle"] = fraction_json(r.sd_oracle);
  Json suites = Json::array();
  for (const auto& s : r.suites) {
    Json row;
    row["name"] = s.name;
    row["statement"] = s.statement;
    row["passed"] = s.passed;
    row["cases"] = s.cases;
    if (!s.passed) row["counterexample"] = s.counterexample;
    suites.push_back(std::move(row));
  }
  j["suites"] = std::move(suites);
  j["all_passed"] = r.all_passed();
  return j;
}

std::string verification_markdown(const VerificationReport& r) {
  std::ostringstream os;
  os << "# Oracle verification: " << r.group << "\n\n";
  os << "order " << r.order << ", grid depth " << r.depth << ", " << r.fuzzy_subgroups << " fuzzy subgroups, "
     << r.oracle_classes << " oracle classes, " << r.chain_classes << " chain classes\n";
  os << (r.exhaustive_pairs ? "exhaustive" : "sampled") << " pairs: " << r.pairs_examined << "\n";
  os << "sd: chain " << fraction_string(r.sd_chain) << ", oracle " << fraction_string(r.sd_oracle) << "\n\n";
  os << "| suite | cases | result |\n|---|---|---|\n";
  for (const auto& s : r.suites) os << "| " << s.name << " | " << s.cases << " | " << (s.passed ? "pass" : "FAIL") << " |\n";
  for (const auto& s : r.suites)
    if (!s.passed) os << "\n" << s.name << " counterexample: " << s.counterexample << "\n";
  return os.str();
}

}  // namespace fuzdeg
