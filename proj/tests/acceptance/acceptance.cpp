// One line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "stight/constructions.hpp"
#include "stight/enumeration.hpp"
#include "stight/errors.hpp"
#include "stight/groups.hpp"
#include "stight/intkernel.hpp"
#include "stight/isomorphism.hpp"
#include "stight/io.hpp"
#include "stight/tightness.hpp"

using namespace stight;
using Degrees = std::map<std::size_t, std::size_t>;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

Orientation c(std::size_t n) { return build_family(FamilySpec::cycle(n)); }
Orientation cp(std::size_t n, std::size_t k) { return build_family(FamilySpec::cycle_power(n, k)); }
Orientation tour(std::size_t m) { return build_family(FamilySpec::tournament(m)); }
Orientation e(std::size_t m) { return Orientation(m); }

Degrees out_degrees(const Orientation& d) {
  Degrees m;
  for (Vertex v = 0; v < d.order(); ++v) ++m[d.out_degree(v)];
  return m;
}

bool oracle_def_zero(const Orientation& d) {
  for (const auto& x : oracle::counts(d))
    if (x.out1 != x.out2) return false;
  return true;
}

// Tight family members of order <= 9.
std::vector<Orientation> catalogue() {
  std::vector<Orientation> out;
  for (std::size_t m = 1; m <= 9; ++m) out.push_back(e(m));
  for (std::size_t n = 3; n <= 9; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) out.push_back(cp(n, k));
  for (std::size_t m = 3; m <= 9; m += 2) out.push_back(tour(m));
  return out;
}

// A tight orientation of exactly m vertices.
Orientation tight_of_order(std::size_t m, std::mt19937_64& rng) {
  std::vector<Orientation> options{e(m)};
  for (std::size_t k = 1; 2 * k < m; ++k) options.push_back(cp(m, k));
  if (m % 2 == 1 && m >= 3) options.push_back(tour(m));
  return options[rng() % options.size()];
}

std::string text(const Orientation& d) {
  std::string s = to_edge_list(d);
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// 1.
std::string families() {
  std::size_t count = 0;
  for (std::size_t n = 3; n <= 30; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const Orientation d = cp(n, k);
      const auto p = profile(d);
      for (auto x : p.seymour_deficiencies()) require(x == 0, "C" + std::to_string(n) + "^" + std::to_string(k) + " Seymour");
      for (auto x : p.sullivan_deficiencies()) require(x == 0, "C" + std::to_string(n) + "^" + std::to_string(k) + " Sullivan");
      require(oracle::seymour_tight(d) && oracle::sullivan_tight(d), "oracle disagrees on cycle power");
      ++count;
    }
  for (std::size_t m = 3; m <= 21; m += 2) {
    const Orientation t = tour(m);
    for (auto x : profile(t).seymour_deficiencies()) require(x == 0, "T" + std::to_string(m));
    require(oracle::seymour_tight(t), "oracle disagrees on T" + std::to_string(m));
    ++count;
  }
  return std::to_string(count) + " family members tight";
}

// 2.
std::string fixture_graphs() {
  struct Case {
    const char* name;
    Orientation graph;
    Degrees degrees;
  };
  const std::vector<Case> cases{
      {"c3-e2", fixtures::c3_e2(), {{2, 6}}},
      {"triangle-with-source", fixtures::triangle_with_source(), {{1, 4}}},
      {"twin-triangles", fixtures::twin_triangles(), {{1, 3}, {2, 3}}},
      {"c3-e3e3c3", fixtures::c3_e3e3c3(), {{3, 6}, {4, 3}}},
      {"c4-mixed", fixtures::c4_mixed(), {{4, 5}, {5, 11}}},
      {"c62-weighted", fixtures::c62_weighted(), {{4, 9}, {5, 3}}},
  };
  for (const auto& cs : cases) {
    require(is_seymour_tight(cs.graph) && oracle::seymour_tight(cs.graph), std::string(cs.name) + " not tight");
    require(out_degrees(cs.graph) == cs.degrees, std::string(cs.name) + " out-degree multiset");
  }
  require(oracle::isomorphic(fixtures::triangle_with_source(), fixtures::pendant_triangle()), "source copy shape");
  require(fixtures::c62_weighted().order() == 12, "weighted product order");
  // Same graph as replacing one block of C3[E3].
  const Vertex block[] = {6, 7, 8};
  require(replace_uniform_subset(lex_product(c(3), e(3)), block, c(3)) == fixtures::c3_e3e3c3(), "block replacement");
  return std::to_string(cases.size()) + " fixtures tight with matching degrees";
}

// 3.
std::string products() {
  std::mt19937_64 rng(2024);
  const auto cat = catalogue();
  std::size_t formula_checks = 0;
  const auto check_formula = [&](const Orientation& d, const Orientation& g, const Orientation& p) {
    const auto brute = oracle::counts(p);
    const auto pd = profile(d), pg = profile(g);
    const auto sey = deficiency_of_product(pd, g.order(), pg, SignKind::seymour);
    const auto sul = deficiency_of_product(pd, g.order(), pg, SignKind::sullivan);
    for (std::size_t i = 0; i < brute.size(); ++i) {
      require(sey[i] == brute[i].out1 - brute[i].out2, "Seymour deficiency formula on " + text(d) + "| " + text(g));
      require(sul[i] == brute[i].in1 - brute[i].out2, "Sullivan deficiency formula on " + text(d) + "| " + text(g));
    }
    ++formula_checks;
  };
  for (int i = 0; i < 200; ++i) {
    const Orientation& d = cat[rng() % cat.size()];
    const Orientation& g = cat[rng() % cat.size()];
    const Orientation p = lex_product(d, g);
    require(static_cast<const Digraph&>(p) ==
                oracle::from_matrix(oracle::lex(oracle::adjacency(d), oracle::adjacency(g))),
            "lex product arcs");
    require(is_seymour_tight(p) && oracle_def_zero(p), "lex product not tight: " + text(d) + "| " + text(g));
    check_formula(d, g, p);
  }
  // Arbitrary pairs for the formula, tight or not.
  for (int i = 0; i < 200; ++i) {
    const Orientation d = oracle::random_orientation(1 + rng() % 6, rng, 0.3 + 0.1 * (i % 6));
    const Orientation g = oracle::random_orientation(1 + rng() % 5, rng, 0.3 + 0.1 * (i % 5));
    check_formula(d, g, lex_product(d, g));
  }
  // Generalized products: 50 equal-size, 50 kernel-vector.
  for (int i = 0; i < 50; ++i) {
    const Orientation& outer = cat[rng() % cat.size()];
    const std::size_t m = 1 + rng() % 4;
    std::vector<Orientation> parts;
    for (std::size_t v = 0; v < outer.order(); ++v) parts.push_back(tight_of_order(m, rng));
    const Orientation p = gen_lex_product(outer, parts, ProductContract::seymour);
    require(oracle_def_zero(p), "equal-size gen_lex not tight");
  }
  std::vector<std::pair<Orientation, std::vector<IntVector>>> kernels;
  for (const auto& [n, k] : std::vector<std::pair<std::size_t, std::size_t>>{{6, 2}, {9, 3}, {8, 2}, {10, 4}}) {
    const Orientation outer = cp(n, k);
    std::vector<IntVector> positive;
    for (auto& x : nonnegative_kernel_vectors(seymour_matrix(outer), 3))
      if (std::all_of(x.begin(), x.end(), [](std::int64_t y) { return y > 0; })) positive.push_back(x);
    require(!positive.empty(), "no positive kernel vectors");
    kernels.emplace_back(outer, positive);
  }
  for (int i = 0; i < 50; ++i) {
    const auto& [outer, vecs] = kernels[rng() % kernels.size()];
    const IntVector& x = vecs[rng() % vecs.size()];
    std::vector<Orientation> parts;
    for (auto size : x) parts.push_back(tight_of_order(static_cast<std::size_t>(size), rng));
    const Orientation p = gen_lex_product(outer, parts, ProductContract::seymour);
    require(oracle_def_zero(p), "kernel gen_lex not tight");
  }
  return "200 lex pairs, 100 gen_lex, " + std::to_string(formula_checks) + " formula checks";
}

// 4.
std::string kernel() {
  const Orientation c62 = cp(6, 2);
  const KernelBasis b = integer_kernel_basis(seymour_matrix(c62));
  const auto s = oracle::seymour_sign(c62);
  for (const auto& v : b.vectors)
    for (std::size_t r = 0; r < 6; ++r) {
      std::int64_t acc = 0;
      for (std::size_t j = 0; j < 6; ++j) acc += s[r][j] * v[j];
      require(acc == 0, "basis vector not in kernel");
    }
  require(b.vectors.size() == 6 - oracle::rank(oracle::to_rows(s), 6), "kernel dimension");
  require(in_lattice(b, IntVector{1, 3, 1, 3, 1, 3}), "(1,3,1,3,1,3) not in lattice");
  std::size_t pairs = 0;
  for (std::size_t n = 3; n <= 20; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      const auto chi = chi_vectors(n, k);
      require(chi.size() == std::gcd(n, k), "chi count");
      const auto m = oracle::seymour_sign(cp(n, k));
      for (const auto& x : chi)
        for (std::size_t r = 0; r < n; ++r) {
          std::int64_t acc = 0;
          for (std::size_t j = 0; j < n; ++j) acc += m[r][j] * x[j];
          require(acc == 0, "chi not annihilated n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      ++pairs;
    }
  return "lattice membership exact; chi checked on " + std::to_string(pairs) + " (n,k)";
}

struct Instance {
  AbelianGroup group;
  std::vector<AbelianGroup::Element> set;
};

std::vector<Instance> seymour_instances;  // filled by criterion 5

// 5.
std::string cayley() {
  seymour_instances.clear();
  std::size_t valid = 0, groups = 0;
  for (std::size_t n = 1; n <= 16; ++n)
    for (const AbelianGroup& g : abelian_groups_of_order(n)) {
      ++groups;
      std::vector<AbelianGroup::Element> pair_rep;
      for (std::size_t a = 1; a < n; ++a)
        if (g.neg(a) > a) pair_rep.push_back(a);
      // Each inverse pair contributes nothing, a or -a.
      std::size_t total = 1;
      for (std::size_t i = 0; i < pair_rep.size(); ++i) total *= 3;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<AbelianGroup::Element> s;
        std::size_t cc = code;
        for (auto a : pair_rep) {
          if (cc % 3 == 1) s.push_back(a);
          if (cc % 3 == 2) s.push_back(g.neg(a));
          cc /= 3;
        }
        std::sort(s.begin(), s.end());
        const ConnectionSet cs(g, s);
        const Orientation d = cayley_digraph(cs);
        const bool crit = seymour_set_criterion(cs);
        const auto counts = oracle::counts(d);
        bool tight = true, positive = d.order() > 0;
        for (const auto& x : counts) {
          tight = tight && x.out1 == x.out2;
          positive = positive && x.out1 > x.out2;
        }
        require(crit == tight, "criterion disagrees on " + g.name() + " " + cs.format());
        require(!positive, "Cayley counterexample " + g.name() + " " + cs.format());
        std::vector<AbelianGroup::Element> s1 = s;
        s1.push_back(0);
        std::set<AbelianGroup::Element> sum;
        for (auto a : s1)
          for (auto b2 : s1) sum.insert(g.add(a, b2));
        require(sum.size() + 1 >= 2 * s1.size(), "Kemperman bound fails on " + g.name() + " " + cs.format());
        if (crit) seymour_instances.push_back({g, s});
        ++valid;
      }
    }
  require(groups == 25, "expected 25 groups of order <= 16");
  return std::to_string(groups) + " groups, " + std::to_string(valid) + " valid sets, " +
         std::to_string(seymour_instances.size()) + " Seymour";
}

// 6.
std::string classification() {
  require(!seymour_instances.empty(), "criterion 5 produced no instances");
  for (const auto& inst : seymour_instances) {
    const ConnectionSet cs(inst.group, inst.set);
    LexDecomposition t;
    try {
      t = classify_abelian_seymour(cs);
    } catch (const TheoremViolation& v) {
      throw Failure{std::string("THEOREM VIOLATION ") + v.what()};
    }
    require(is_isomorphic(t.reconstruct(), cayley_digraph(cs)),
            "reconstruction mismatch " + inst.group.name() + " " + cs.format());
  }
  const auto witness = [](std::size_t n, std::vector<AbelianGroup::Element> s, const Orientation& want,
                          const std::string& name) {
    const LexDecomposition t = classify_abelian_seymour(ConnectionSet(AbelianGroup::cyclic(n), s));
    require(t.name() == name, "witness name " + t.name() + " != " + name);
    require(oracle::isomorphic(t.reconstruct(), want), "witness graph " + name);
  };
  witness(6, {1, 4}, lex_product(c(3), e(2)), "Lex(C3, E2)");
  witness(9, {1, 2}, cp(9, 2), "C9^2");
  witness(7, {1, 2, 3}, tour(7), "T7");
  return std::to_string(seymour_instances.size()) + " trees verified, witnesses match";
}

// 7.
std::string lowdegree() {
  const SearchReport r1 = verify_lowdegree_classification(7, 1);
  require(r1.violations.empty(), "degree-1 violations");
  for (std::size_t n = 3; n <= 7; ++n) {
    const auto census = lowdegree_census(n, 1);
    require(census.size() == 1 && oracle::isomorphic(census[0], c(n)), "degree-1 census n=" + std::to_string(n));
  }
  const SearchReport r2 = verify_lowdegree_classification(8, 2);
  require(r2.violations.empty(), "degree-2 violations");
  for (std::size_t n = 3; n <= 8; ++n) {
    std::vector<Orientation> expected;
    if (n >= 5) expected.push_back(cp(n, 2));
    if (n % 2 == 0 && n / 2 >= 3) expected.push_back(lex_product(c(n / 2), e(2)));
    const auto census = lowdegree_census(n, 2);
    require(census.size() == expected.size(), "degree-2 census size n=" + std::to_string(n));
    for (const auto& want : expected) {
      bool found = false;
      for (const auto& g : census) found = found || is_isomorphic(g, want);
      require(found, "degree-2 census misses a class at n=" + std::to_string(n));
    }
  }
  // n <= 6 also by the plain pair-order scan.
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Orientation> hits;
    for (const auto& g : enumerate_orientations({.n = n, .max_out_degree = 2, .strongly_connected = true})) {
      if (!oracle::seymour_tight(g)) continue;
      std::size_t lo = n;
      for (Vertex v = 0; v < n; ++v) lo = std::min(lo, g.out_degree(v));
      if (lo == 2) hits.push_back(g);
    }
    require(dedup_isomorphic(hits).size() == lowdegree_census(n, 2).size(), "scan/census mismatch n=" + std::to_string(n));
  }
  return "degree 1 exactly C_n (n<=7); degree 2 exactly {C_n^2, C_{n/2}[E2]} (n<=8)";
}

// 8.
std::string probes() {
  const SearchReport r = verify_no_counterexample(6, 4);
  require(r.violations.empty(), "Seymour counterexample at n=6: " + (r.violations.empty() ? "" : r.violations[0]));
  require(r.count_total == 14348907, "n=6 state count " + std::to_string(r.count_total));
  for (std::size_t n = 1; n <= 5; ++n) require(verify_no_counterexample(n, 4).violations.empty(), "counterexample");
  const SearchReport cv = converse_conjecture_experiment(6, 4);
  require(cv.violations.empty(), "converse violation: " + (cv.violations.empty() ? "" : cv.violations[0]));
  require(cv.label.find("not proof") != std::string::npos, "experiment not labelled as evidence");
  std::uint64_t eulerian = 0;
  for (const auto& [k, v] : cv.tallies)
    if (k == "eulerian_tight") eulerian = v;
  return "14348907 states, 0 counterexamples; " + std::to_string(eulerian) +
         " Eulerian tight, 0 converse violations (evidence, not proof)";
}

// 9.
std::string negatives() {
  const Orientation p = fixtures::pendant_triangle();
  require(is_seymour_tight(p) && oracle::seymour_tight(p), "pendant triangle not tight");
  const auto prof = profile(p);
  require(prof.at(0).in1 == 2 && prof.at(0).in2 == 1, "pendant head in-profile");
  const Orientation q = converse(p);
  require(!is_seymour_tight(q) && !oracle::seymour_tight(q), "converse is tight");
  const auto cq = oracle::counts(q);
  require(cq[0].out1 == 2 && cq[0].out2 == 1, "converse head out-profile");
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 8;
    const Orientation base = oracle::random_orientation(n, rng, 0.5);
    const Vertex sink = static_cast<Vertex>(rng() % n);
    std::vector<Arc> arcs;
    for (const Arc& a : base.arcs()) {
      if (a.from == sink) arcs.push_back({a.to, a.from});
      else arcs.push_back(a);
    }
    const Vertex other = (sink + 1) % n;
    if (std::find(arcs.begin(), arcs.end(), Arc{other, sink}) == arcs.end()) arcs.push_back({other, sink});
    const Orientation d(n, arcs);
    require(d.out_degree(sink) == 0 && d.in_degree(sink) > 0, "corpus sink construction");
    require(!is_sullivan_tight(d) && !oracle::sullivan_tight(d), "graph with sink is Sullivan-tight: " + text(d));
  }
  return "pendant head in1=2 in2=1, converse out1=2 out2=1; 50 sink graphs not Sullivan-tight";
}

// 10.
std::string embedding() {
  std::mt19937_64 rng(7);
  std::size_t largest = 0;
  for (int i = 0; i < 20; ++i) {
    const Orientation d = oracle::random_orientation(1 + rng() % 6, rng, 0.2 + 0.15 * (i % 5));
    const EmbeddingMap m = embed_in_seymour_tight(d);
    require(is_induced_embedding(d, m), "embedding not induced: " + text(d));
    for (Vertex u = 0; u < d.order(); ++u)
      for (Vertex v = 0; v < d.order(); ++v)
        require(u == v || d.has_arc(u, v) == m.host.has_arc(m.image[u], m.image[v]), "image arcs");
    require(is_seymour_tight(m.host) && oracle_def_zero(m.host), "host not tight: " + text(d));
    require(is_strongly_connected(m.host) && oracle::strongly_connected(m.host), "host not strong");
    largest = std::max(largest, m.host.order());
  }
  return "20 hosts tight and strongly connected, largest " + std::to_string(largest) + " vertices";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_s;
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria{
      {1, 1, families},  {2, 1, fixture_graphs},        {3, 30, products}, {4, 1, kernel},
      {5, 300, cayley},  {6, 600, classification}, {7, 300, lowdegree},
      {8, 600, probes},  {9, 1, negatives},        {10, 10, embedding},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = cr.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs >= cr.limit_s) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(cr.limit_s)) + " s limit)";
    }
    failures += !ok;
    std::printf("%s criterion %d: %s [%.3f s]\n", ok ? "PASS" : "FAIL", cr.id, detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures;
}
