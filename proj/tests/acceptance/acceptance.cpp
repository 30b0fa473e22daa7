// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fuzdeg/degree.hpp"
#include "fuzdeg/fuzzy_classes.hpp"
#include "fuzdeg/group_spec.hpp"
#include "fuzdeg/oracle.hpp"
#include "fuzdeg/report.hpp"
#include "fuzdeg/verify.hpp"

using namespace fuzdeg;

namespace {

// Time limits, in seconds.
constexpr double kCountingLimit = 10.0;
constexpr double kOracleLimit = 300.0;
// Sampled pairs per suite for groups of order 8.
constexpr std::size_t kSampledPairs = 10'000;
// Largest order checked exhaustively by the pair suites.
constexpr std::size_t kExhaustiveOrder = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << what;
    }
  }
};

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note.str("");
    out.note << "exception: " << e.what();
  }
  if (!out.ok) ++failures;
  std::printf("%s [%d] %s (%.2fs) %s\n", out.ok ? "PASS" : "FAIL", number, title.c_str(), seconds_since(start),
              out.note.str().c_str());
  std::fflush(stdout);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(FUZDEG_BIN) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out += "<exit " + std::to_string(WEXITSTATUS(status)) + ">";
  return out;
}

std::uint64_t s_of(const std::string& spec) { return count_classes(SubgroupLattice(build_group(spec))).total; }

// Groups of order at most 16 used for the support identities and the degree bounds.
const std::vector<std::string> kFamily = {
    "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
    "cyclic:9", "cyclic:10", "cyclic:11", "cyclic:12", "cyclic:13", "cyclic:14", "cyclic:15", "cyclic:16",
    "klein", "dihedral:4", "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:14", "dihedral:16",
    "symmetric:3", "product:cyclic:2,cyclic:4", "product:cyclic:2,klein", "product:cyclic:2,cyclic:6",
    "product:cyclic:3,cyclic:3", "product:cyclic:4,cyclic:4", "product:cyclic:2,cyclic:8", "product:klein,klein",
    "product:cyclic:2,dihedral:8", "product:cyclic:2,symmetric:3", "product:klein,cyclic:4",
    "file:" FUZDEG_TEST_DATA "/q8.txt"};

void criterion_counting(Outcome& out) {
  const auto start = Clock::now();
  struct Expect {
    std::string spec;
    std::uint64_t s;
  };
  std::vector<Expect> cases;
  const std::pair<std::uint64_t, int> powers[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}};
  for (auto [p, n] : powers) {
    std::uint64_t m = 1;
    for (int i = 0; i < n; ++i) m *= p;
    cases.push_back({"cyclic:" + std::to_string(m), (std::uint64_t{1} << (n + 1)) - 1});
  }
  cases.push_back({"dihedral:4", 15});
  cases.push_back({"dihedral:8", 63});
  cases.push_back({"symmetric:3", 19});
  for (std::uint64_t p : {3, 5, 7, 11}) cases.push_back({"dihedral:" + std::to_string(2 * p), 4 * p + 7});

  for (const auto& c : cases) {
    const std::uint64_t got = s_of(c.spec);
    out.expect(got == c.s, "s(" + c.spec + ") = " + std::to_string(got) + ", expected " + std::to_string(c.s));
  }
  const double elapsed = seconds_since(start);
  out.expect(elapsed < kCountingLimit, "took " + std::to_string(elapsed) + "s");
  if (out.ok) out.note << cases.size() << " groups";
}

void criterion_support(Outcome& out) {
  std::size_t subgroups = 0;
  for (const auto& spec : kFamily) {
    const SubgroupLattice lat(build_group(spec));
    const ClassCensus census = count_classes(lat);
    const std::uint64_t s = census.total;
    out.expect(s % 2 == 1, spec + ": s even");
    out.expect(2 * census.per_top[lat.whole()] == s + 1, spec + ": s*(G) != (s+1)/2");
    std::uint64_t proper = 0;
    for (SubgroupId h = 0; h < lat.size(); ++h) {
      ++subgroups;
      if (h != lat.whole()) proper += census.per_top[h];
      const std::uint64_t s_h = count_classes(SubgroupLattice(lat.group().subgroup_as_group(lat[h].members))).total;
      out.expect(2 * census.per_top[h] == s_h + 1, spec + ": s*(" + lat.name(h) + ") != (s(H)+1)/2");
    }
    out.expect(2 * proper == s - 1, spec + ": proper supports do not sum to (s-1)/2");
  }
  if (out.ok) out.note << kFamily.size() << " groups, " << subgroups << " subgroups";
}

void criterion_oracle_classes(Outcome& out) {
  const auto start = Clock::now();
  const std::vector<std::string> groups = {"cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6",
                                           "cyclic:7", "cyclic:8", "klein",    "symmetric:3", "dihedral:8",
                                           "product:cyclic:2,cyclic:4"};
  std::uint64_t total = 0;
  for (const auto& spec : groups) {
    const SubgroupLattice lat(build_group(spec));
    const auto fuzzy = enumerate_fuzzy_subgroups(lat, MembershipGrid::harmonic(lat.longest_chain()));
    const auto buckets = bucket_by_equivalence(fuzzy);
    const std::uint64_t s = count_classes(lat).total;
    out.expect(buckets.size() == s,
               spec + ": " + std::to_string(buckets.size()) + " buckets, s = " + std::to_string(s));

    // classify must be constant on buckets and injective across them, and
    // its image must be every enumerated chain.
    std::set<std::vector<SubgroupId>> image;
    for (const auto& bucket : buckets) {
      const FuzzyClass c = classify(lat, fuzzy[bucket.front()]);
      for (std::size_t i : bucket) out.expect(classify(lat, fuzzy[i]) == c, spec + ": bucket splits under classify");
      image.insert(c.chain);
    }
    out.expect(image.size() == buckets.size(), spec + ": classify merges buckets");
    std::set<std::vector<SubgroupId>> chains;
    for (const auto& c : enumerate_classes(lat)) chains.insert(c.chain);
    out.expect(image == chains, spec + ": classify image is not the set of chains");
    total += fuzzy.size();
  }
  const double elapsed = seconds_since(start);
  out.expect(elapsed < kOracleLimit, "took " + std::to_string(elapsed) + "s");
  if (out.ok) out.note << groups.size() << " groups, " << total << " fuzzy subgroups";
}

void criterion_suites(Outcome& out) {
  // Every suite that run_verification reports; each must appear and pass.
  const std::vector<std::string> required = {
      "class-buckets",          "support-counts",
      "level-permutability",    "level-mutual-permutability",
      "product-subgroup-iff-commuting", "permutable-product-is-subgroup",
      "permutable-level-bound", "quasinormal-characterizations",
      "quasinormal-iff-commutes-with-all", "degree-agreement"};
  const std::vector<std::string> groups = {
      "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "klein", "symmetric:3",
      "cyclic:8", "dihedral:8", "product:cyclic:2,cyclic:4", "product:cyclic:2,klein",
      "file:" FUZDEG_TEST_DATA "/q8.txt"};
  std::uint64_t cases = 0;
  for (const auto& spec : groups) {
    const SubgroupLattice lat(build_group(spec));
    VerifyOptions opts;
    opts.exhaustive_max_order = kExhaustiveOrder;
    opts.sample_pairs = kSampledPairs;
    const VerificationReport r = run_verification(lat, opts);
    const std::uint64_t n = r.fuzzy_subgroups;
    if (lat.group().order() <= kExhaustiveOrder) {
      out.expect(r.exhaustive_pairs && r.pairs_examined == n * n, spec + ": pairs not exhaustive");
    } else {
      out.expect(r.pairs_examined >= kSampledPairs, spec + ": only " + std::to_string(r.pairs_examined) + " pairs");
    }
    std::set<std::string> seen;
    for (const auto& suite : r.suites) {
      seen.insert(suite.name);
      cases += suite.cases;
      out.expect(suite.passed, spec + ": " + suite.name + " failed: " + suite.counterexample);
    }
    for (const auto& name : required) out.expect(seen.count(name) == 1, spec + ": suite " + name + " missing");
  }
  if (out.ok) out.note << groups.size() << " groups, " << cases << " cases, 0 violations";
}

void criterion_degree(Outcome& out) {
  for (const auto& spec : kFamily) {
    const SubgroupLattice lat(build_group(spec));
    const DegreeReport r = compute_sd(lat, enumerate_classes(lat));
    const auto s = static_cast<std::int64_t>(r.s);
    const Rational n_ratio(static_cast<std::int64_t>(r.n_count), s);
    const Rational qn_ratio(static_cast<std::int64_t>(r.qn_count), s);
    out.expect(n_ratio <= qn_ratio && qn_ratio <= r.sd && r.sd <= kOne, spec + ": bounds violated");
    if (lat.group().is_abelian()) out.expect(r.sd == kOne, spec + ": abelian but sd = " + fraction_string(r.sd));
  }

  for (const char* spec : {"symmetric:3", "dihedral:8"}) {
    const SubgroupLattice lat(build_group(spec));
    const Rational chain = compute_sd(lat, enumerate_classes(lat)).sd;
    const auto fuzzy = enumerate_fuzzy_subgroups(lat, MembershipGrid::harmonic(lat.longest_chain()));
    const Rational oracle = oracle_sd(fuzzy, bucket_by_equivalence(fuzzy));
    out.expect(chain == oracle, std::string(spec) + ": chain " + fraction_string(chain) + " vs oracle " +
                                    fraction_string(oracle));
  }

  // The printed degrees must show up as discrepancies unless the computation agrees.
  auto logged = [](const std::string& spec, const std::string& quantity) {
    RunConfig config;
    config.spec = spec;
    const Analysis a = analyze(parse_group_spec(spec), config);
    for (const auto& d : a.discrepancies)
      if (d.quantity == quantity) return true;
    return false;
  };
  out.expect(logged("symmetric:3", "sd(S_3)"), "sd(S_3) not logged");
  out.expect(logged("dihedral:8", "sd(D_8)"), "sd(D_8) not logged");
  for (std::size_t p : {3, 5, 7, 11}) {
    const std::string name = "sd(D_" + std::to_string(2 * p) + ")";
    out.expect(logged("dihedral:" + std::to_string(2 * p), name), name + " not logged");
  }

  for (const auto& row : paper_table(RunConfig{})) {
    if (row.claim == "sd(S_3)" || row.claim == "sd(D_8)" || row.claim == "sd(D_6)")
      out.expect(!row.match, row.claim + " unexpectedly matches");
    if (row.claim == "sd(D_4)") out.expect(row.match, "sd(D_4) row does not match");
  }
  if (out.ok) out.note << "sd(S_3) = 265/361, sd(D_8) = 3457/3969 by both routes";
}

void criterion_determinism(Outcome& out) {
  for (const char* spec : {"dihedral:8", "symmetric:4", "dihedral:16", "product:cyclic:2,dihedral:8", "cyclic:16"}) {
    const std::string first = run_cli(std::string("analyze ") + spec + " --threads 1");
    const std::string second = run_cli(std::string("analyze ") + spec + " --threads 1");
    const std::string parallel = run_cli(std::string("analyze ") + spec + " --threads 8");
    out.expect(first.find("<exit") == std::string::npos, std::string(spec) + ": analyze failed");
    out.expect(first == second, std::string(spec) + ": two serial runs differ");
    out.expect(first == parallel, std::string(spec) + ": serial and parallel differ");
  }
  if (out.ok) out.note << "5 groups, byte-identical";
}

}  // namespace

int main() {
  report(1, "class counts", criterion_counting);
  report(2, "support-counting identities", criterion_support);
  report(3, "oracle class-count equivalence", criterion_oracle_classes);
  report(4, "property suites", criterion_suites);
  report(5, "degree computation", criterion_degree);
  report(6, "determinism", criterion_determinism);
  return failures;
}
