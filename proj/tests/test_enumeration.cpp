#include <cmath>
#include <mutex>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stight/constructions.hpp"
#include "stight/errors.hpp"
#include "stight/enumeration.hpp"
#include "stight/io.hpp"
#include "stight/isomorphism.hpp"
#include "stight/tightness.hpp"

using namespace stight;

namespace {

// Base-3 counter over the pairs; independent of the library's scanner.
std::vector<Orientation> brute_all(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::size_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= 3;
  std::vector<Orientation> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Arc> arcs;
    std::size_t c = code;
    for (const auto& [u, v] : pairs) {
      if (c % 3 == 1) arcs.push_back({u, v});
      if (c % 3 == 2) arcs.push_back({v, u});
      c /= 3;
    }
    out.emplace_back(n, arcs);
  }
  return out;
}

std::set<std::string> keys(const std::vector<Orientation>& gs) {
  std::set<std::string> s;
  for (const auto& g : gs) s.insert(to_edge_list(g));
  return s;
}

std::size_t classes(const std::vector<Orientation>& gs) {
  std::vector<Orientation> reps;
  for (const auto& g : gs) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || oracle::isomorphic(r, g);
    if (!seen) reps.push_back(g);
  }
  return reps.size();
}

}  // namespace

TEST(Scan, CountsAndRefusals) {
  EXPECT_EQ(enumerate_orientations({.n = 3}).size(), 27u);
  EXPECT_EQ(orientation_state_count(6), std::pow(3.0, 15));
  EXPECT_EQ(shard_count(3), 9u);
  EXPECT_THROW(scan_orientations({.n = 7}, [](std::size_t, const FastGraph&) {}), RefusalError);
  EXPECT_THROW(scan_orientations({.n = 9, .strongly_connected = true},
                                 [](std::size_t, const FastGraph&) {}),
               RefusalError);
}

TEST(Scan, MatchesBruteForceWithFilters) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = brute_all(n);
    EXPECT_EQ(keys(enumerate_orientations({.n = n})), keys(all));
    std::vector<Orientation> strong, euler, capped;
    for (const auto& g : all) {
      if (oracle::strongly_connected(g)) strong.push_back(g);
      if (is_eulerian(g)) euler.push_back(g);
      bool ok = true;
      for (Vertex v = 0; v < n; ++v) ok = ok && g.out_degree(v) <= 1;
      if (ok) capped.push_back(g);
    }
    EXPECT_EQ(keys(enumerate_orientations({.n = n, .strongly_connected = true})), keys(strong));
    EXPECT_EQ(keys(enumerate_orientations({.n = n, .eulerian = true})), keys(euler));
    EXPECT_EQ(keys(enumerate_orientations({.n = n, .max_out_degree = 1})), keys(capped));
  }
}

TEST(Scan, ParallelVisitsSameGraphs) {
  std::mutex mu;
  std::set<std::string> seen;
  const auto count = scan_orientations({.n = 5, .jobs = 4}, [&](std::size_t, const FastGraph& g) {
    const std::string k = to_edge_list(g.to_orientation());
    std::lock_guard lock(mu);
    seen.insert(k);
  });
  EXPECT_EQ(count, 59049u);
  EXPECT_EQ(seen.size(), 59049u);
}

TEST(FastGraph, AgreesWithProfile) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const Orientation d = oracle::random_orientation(1 + rng() % 12, rng);
    const FastGraph f = FastGraph::from(d);
    EXPECT_EQ(f.to_orientation(), d);
    const auto c = oracle::counts(d);
    for (Vertex v = 0; v < d.order(); ++v) {
      EXPECT_EQ(f.out1(v), c[v].out1);
      EXPECT_EQ(f.out2(v), c[v].out2);
      EXPECT_EQ(f.in1(v), c[v].in1);
      EXPECT_EQ(f.in2(v), c[v].in2);
    }
    EXPECT_EQ(f.seymour_tight(), oracle::seymour_tight(d));
    EXPECT_EQ(f.sullivan_tight(), oracle::sullivan_tight(d));
    EXPECT_EQ(f.strongly_connected(), oracle::strongly_connected(d));
    EXPECT_EQ(f.seymour_counterexample(), is_seymour_counterexample(d));
    EXPECT_EQ(f.converse().to_orientation(), converse(d));
  }
}

TEST(Search, SmallCensuses) {
  const SearchReport t3 = search({.n = 3}, Predicate::seymour_tight, true);
  std::set<std::string> want{to_edge_list(canonical_form(Orientation(3))),
                             to_edge_list(canonical_form(build_family(FamilySpec::cycle(3))))};
  EXPECT_EQ(std::set<std::string>(t3.matches.begin(), t3.matches.end()), want);
  EXPECT_EQ(t3.count_total, 27u);

  const SearchReport s4 = search({.n = 4, .strongly_connected = true}, Predicate::seymour_tight, true);
  ASSERT_EQ(s4.matches.size(), 1u);
  EXPECT_TRUE(is_isomorphic(parse_orientation(s4.matches[0]), build_family(FamilySpec::cycle(4))));
}

TEST(Search, DedupMatchesOracleClassCount) {
  for (std::size_t n = 3; n <= 5; ++n) {
    std::vector<Orientation> tight;
    for (const auto& g : brute_all(n))
      if (oracle::seymour_tight(g)) tight.push_back(g);
    const SearchReport r = search({.n = n}, Predicate::seymour_tight, true);
    EXPECT_EQ(r.matches.size(), classes(tight)) << n;
    const SearchReport raw = search({.n = n}, Predicate::seymour_tight, false);
    EXPECT_EQ(raw.matches.size(), tight.size()) << n;
  }
}

TEST(Search, ReportJsonLabelsData) {
  const auto j = search({.n = 3}, Predicate::seymour_tight, true).to_json();
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["predicate"], "seymour-tight");
  EXPECT_NE(j["label"].get<std::string>().find("new data"), std::string::npos);
  EXPECT_THROW(parse_predicate("tight"), InputError);
}

TEST(NoCounterexample, UpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const SearchReport r = verify_no_counterexample(n, 2);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_EQ(r.count_total, static_cast<std::uint64_t>(orientation_state_count(n)));
  }
}

TEST(LowDegree, DegreeOneAndTwo) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto c1 = lowdegree_census(n, 1);
    ASSERT_EQ(c1.size(), 1u) << n;
    EXPECT_TRUE(is_isomorphic(c1[0], build_family(FamilySpec::cycle(n))));
  }
  const auto six = lowdegree_census(6, 2);
  ASSERT_EQ(six.size(), 2u);
  const Orientation c62 = build_family(FamilySpec::cycle_power(6, 2));
  const Orientation c3e2 = lex_product(build_family(FamilySpec::cycle(3)), Orientation(2));
  EXPECT_TRUE((is_isomorphic(six[0], c62) && is_isomorphic(six[1], c3e2)) ||
              (is_isomorphic(six[1], c62) && is_isomorphic(six[0], c3e2)));
  const auto seven = lowdegree_census(7, 2);
  ASSERT_EQ(seven.size(), 1u);
  EXPECT_TRUE(is_isomorphic(seven[0], build_family(FamilySpec::cycle_power(7, 2))));
}

TEST(LowDegree, RootedCensusAgreesWithFullScan) {
  // Full filtered scan at n <= 6 as an independent check of the rooted search.
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t deg = 1; deg <= 2; ++deg) {
      std::vector<Orientation> hits;
      for (const auto& g : enumerate_orientations({.n = n, .max_out_degree = deg, .strongly_connected = true})) {
        if (!is_seymour_tight(g)) continue;
        std::size_t lo = n;
        for (Vertex v = 0; v < n; ++v) lo = std::min(lo, g.out_degree(v));
        if (lo == deg) hits.push_back(g);
      }
      EXPECT_EQ(lowdegree_census(n, deg).size(), dedup_isomorphic(hits).size()) << n << "," << deg;
    }
}

TEST(Converse, PendantAndCyclePower) {
  const Orientation p = fixtures::pendant_triangle();
  EXPECT_FALSE(is_eulerian(p));
  EXPECT_TRUE(is_seymour_tight(p));
  EXPECT_FALSE(is_seymour_tight(converse(p)));
  EXPECT_TRUE(is_seymour_tight(converse(build_family(FamilySpec::cycle_power(6, 2)))));
  const SearchReport r = converse_conjecture_experiment(5);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_NE(r.label.find("not proof"), std::string::npos);
}

TEST(Sullivan, CatalogueThreeAndFive) {
  const SearchReport r3 = sullivan_catalogue(3);
  std::set<std::string> want{to_edge_list(canonical_form(Orientation(3))),
                             to_edge_list(canonical_form(build_family(FamilySpec::cycle(3))))};
  EXPECT_EQ(std::set<std::string>(r3.matches.begin(), r3.matches.end()), want);

  const SearchReport r5 = sullivan_catalogue(5);
  EXPECT_TRUE(r5.violations.empty());
  EXPECT_FALSE(r5.flagged.empty());
  for (const auto& s : r5.flagged) {
    const Orientation g = parse_orientation(s);
    EXPECT_TRUE(oracle::sullivan_tight(g));
    EXPECT_FALSE(oracle::seymour_tight(g));
  }
  // Tournaments: Sullivan-tight exactly when diameter <= 2, by brute force.
  std::size_t tournaments = 0;
  for (const auto& g : brute_all(5)) {
    if (g.arc_count() != 10) continue;
    ++tournaments;
    const auto d = oracle::distances(oracle::adjacency(g));
    bool diam2 = true;
    for (const auto& row : d)
      for (int x : row) diam2 = diam2 && x >= 0 && x <= 2;
    EXPECT_EQ(oracle::sullivan_tight(g), diam2);
    EXPECT_EQ(has_diameter_at_most_two(FastGraph::from(g)), diam2);
  }
  EXPECT_EQ(tournaments, 1024u);
}
