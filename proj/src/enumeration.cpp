#include "stight/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "stight/constructions.hpp"
#include "stight/errors.hpp"
#include "stight/io.hpp"
#include "stight/isomorphism.hpp"

namespace stight {

// ---------------------------------------------------------------- FastGraph

Orientation FastGraph::to_orientation() const {
  std::vector<Arc> arcs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::uint32_t m = out[u]; m; m &= m - 1)
      arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(std::countr_zero(m))});
  return Orientation(n, arcs);
}

FastGraph FastGraph::from(const Digraph& d) {
  if (d.order() > 16) throw InputError("mask graphs hold at most 16 vertices");
  FastGraph g;
  g.n = d.order();
  for (const Arc& a : d.arcs()) {
    g.out[a.from] |= 1u << a.to;
    g.in[a.to] |= 1u << a.from;
  }
  return g;
}

FastGraph FastGraph::converse() const {
  FastGraph g = *this;
  std::swap(g.out, g.in);
  return g;
}

int FastGraph::out1(std::size_t v) const { return std::popcount(out[v]); }
int FastGraph::in1(std::size_t v) const { return std::popcount(in[v]); }

int FastGraph::out2(std::size_t v) const {
  std::uint32_t reach = 0;
  for (std::uint32_t m = out[v]; m; m &= m - 1) reach |= out[std::countr_zero(m)];
  return std::popcount(reach & ~out[v] & ~(1u << v));
}

int FastGraph::in2(std::size_t v) const {
  std::uint32_t reach = 0;
  for (std::uint32_t m = in[v]; m; m &= m - 1) reach |= in[std::countr_zero(m)];
  return std::popcount(reach & ~in[v] & ~(1u << v));
}

bool FastGraph::seymour_tight() const {
  for (std::size_t v = 0; v < n; ++v)
    if (out1(v) != out2(v)) return false;
  return true;
}

bool FastGraph::seymour_counterexample() const {
  for (std::size_t v = 0; v < n; ++v)
    if (out1(v) <= out2(v)) return false;
  return true;
}

bool FastGraph::sullivan_tight() const {
  for (std::size_t v = 0; v < n; ++v)
    if (in1(v) != out2(v)) return false;
  return true;
}

namespace {

std::uint32_t closure(const std::array<std::uint32_t, 16>& rows, std::size_t n) {
  if (n == 0) return 0;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m; m &= m - 1) next |= rows[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool FastGraph::strongly_connected() const {
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  return n <= 1 || (closure(out, n) == all && closure(in, n) == all);
}

bool has_diameter_at_most_two(const FastGraph& g) {
  for (std::size_t v = 0; v < g.n; ++v) {
    std::uint32_t reach = g.out[v];
    for (std::uint32_t m = g.out[v]; m; m &= m - 1) reach |= g.out[std::countr_zero(m)];
    reach |= 1u << v;
    if (reach != (1u << g.n) - 1) return false;
  }
  return true;
}

// ------------------------------------------------------------- pair scanner

double orientation_state_count(std::size_t n) {
  return std::pow(3.0, static_cast<double>(n * (n - (n > 0 ? 1 : 0)) / 2));
}

std::size_t shard_count(std::size_t n) { return n >= 3 ? 9 : 1; }

namespace {

class PairScanner {
 public:
  PairScanner(const ScanOptions& opt, std::size_t shard,
              const std::function<void(std::size_t, const FastGraph&)>& visit)
      : opt_(opt), shard_(shard), visit_(visit) {
    g_.n = opt.n;
    for (std::size_t u = 0; u < opt.n; ++u)
      for (std::size_t v = u + 1; v < opt.n; ++v) pairs_.push_back({u, v});
    for (std::size_t v = 0; v < opt.n; ++v) remaining_[v] = static_cast<int>(opt.n) - 1;
  }

  std::uint64_t run() {
    if (pairs_.size() < 2) {
      descend(0);
      return count_;
    }
    const int first = static_cast<int>(shard_ / 3), second = static_cast<int>(shard_ % 3);
    if (place(0, first)) {
      if (place(1, second)) {
        descend(2);
        unplace(1, second);
      } else {
        unplace(1, second);
      }
    }
    unplace(0, first);
    return count_;
  }

 private:
  // Applies branch `choice` at pair p; false if a hook prunes it. The caller
  // always undoes with unplace.
  bool place(std::size_t p, int choice) {
    const auto [u, v] = pairs_[p];
    --remaining_[u];
    --remaining_[v];
    if (choice == 1) {
      g_.out[u] |= 1u << v;
      g_.in[v] |= 1u << u;
    } else if (choice == 2) {
      g_.out[v] |= 1u << u;
      g_.in[u] |= 1u << v;
    }
    return admissible(u) && admissible(v);
  }

  void unplace(std::size_t p, int choice) {
    const auto [u, v] = pairs_[p];
    ++remaining_[u];
    ++remaining_[v];
    if (choice == 1) {
      g_.out[u] &= ~(1u << v);
      g_.in[v] &= ~(1u << u);
    } else if (choice == 2) {
      g_.out[v] &= ~(1u << u);
      g_.in[u] &= ~(1u << v);
    }
  }

  bool admissible(std::size_t w) const {
    const int out = std::popcount(g_.out[w]);
    const int in = std::popcount(g_.in[w]);
    if (opt_.max_out_degree && static_cast<std::size_t>(out) > *opt_.max_out_degree) return false;
    if (opt_.eulerian && std::abs(out - in) > remaining_[w]) return false;
    if (opt_.strongly_connected && opt_.n > 1 && remaining_[w] == 0 && (out == 0 || in == 0))
      return false;
    return true;
  }

  void descend(std::size_t p) {
    if (p == pairs_.size()) {
      if (opt_.strongly_connected && !g_.strongly_connected()) return;
      ++count_;
      visit_(shard_, g_);
      return;
    }
    for (int choice = 0; choice < 3; ++choice) {
      if (place(p, choice)) descend(p + 1);
      unplace(p, choice);
    }
  }

  const ScanOptions& opt_;
  std::size_t shard_;
  const std::function<void(std::size_t, const FastGraph&)>& visit_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  FastGraph g_;
  std::array<int, 16> remaining_{};
  std::uint64_t count_ = 0;
};

std::string format_count(double states) {
  std::ostringstream s;
  s.precision(3);
  s << states;
  return s.str();
}

}  // namespace

std::uint64_t scan_orientations(const ScanOptions& options,
                                const std::function<void(std::size_t, const FastGraph&)>& visit) {
  const std::size_t limit = options.filtered() ? kFilteredMaxOrder : kUnfilteredMaxOrder;
  if (options.n > limit) {
    throw RefusalError("scan of order " + std::to_string(options.n) + " has ~" +
                       format_count(orientation_state_count(options.n)) +
                       " states; limit is order " + std::to_string(limit) +
                       (options.filtered() ? " with filters" : " without filters"));
  }
  const std::size_t shards = shard_count(options.n);
  std::vector<std::uint64_t> counts(shards, 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t s; (s = next.fetch_add(1)) < shards;) counts[s] = PairScanner(options, s, visit).run();
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, shards);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::vector<Orientation> enumerate_orientations(const ScanOptions& options) {
  ScanOptions sequential = options;
  sequential.jobs = 1;
  std::vector<Orientation> out;
  scan_orientations(sequential, [&](std::size_t, const FastGraph& g) { out.push_back(g.to_orientation()); });
  return out;
}

std::vector<Orientation> dedup_isomorphic(const std::vector<Orientation>& graphs) {
  std::map<std::size_t, std::vector<const Orientation*>> buckets;
  std::vector<const Orientation*> reps;
  for (const Orientation& g : graphs) {
    auto& bucket = buckets[invariant_hash(g)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                  [&](const Orientation* r) { return is_isomorphic(*r, g); });
    if (seen) continue;
    bucket.push_back(&g);
    reps.push_back(&g);
  }
  std::vector<std::pair<std::string, Orientation>> keyed;
  for (const Orientation* r : reps) {
    Orientation c(canonical_form(*r));
    keyed.emplace_back(to_edge_list(c), std::move(c));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Orientation> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

// ------------------------------------------------------------------ reports

nlohmann::ordered_json SearchReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["predicate"] = predicate;
  j["count_total"] = count_total;
  j["deduplicated"] = deduplicated;
  j["match_count"] = matches.size();
  j["matches"] = matches;
  j["violations"] = violations;
  nlohmann::ordered_json t = nlohmann::ordered_json::object();
  for (const auto& [k, v] : tallies) t[k] = v;
  j["tallies"] = t;
  if (!flag_meaning.empty()) {
    j["flag_meaning"] = flag_meaning;
    j["flagged"] = flagged;
  }
  j["label"] = label;
  j["note"] = note;
  return j;
}

Predicate parse_predicate(const std::string& name) {
  if (name == "any") return Predicate::any;
  if (name == "seymour") return Predicate::seymour;
  if (name == "seymour-tight") return Predicate::seymour_tight;
  if (name == "counterexample") return Predicate::counterexample;
  if (name == "sullivan-tight") return Predicate::sullivan_tight;
  throw InputError("unknown predicate '" + name + "'");
}

std::string predicate_name(Predicate p) {
  switch (p) {
    case Predicate::any: return "any";
    case Predicate::seymour: return "seymour";
    case Predicate::seymour_tight: return "seymour-tight";
    case Predicate::counterexample: return "counterexample";
    case Predicate::sullivan_tight: return "sullivan-tight";
  }
  return {};
}

namespace {

bool holds(Predicate p, const FastGraph& g) {
  switch (p) {
    case Predicate::any: return true;
    case Predicate::seymour:
      for (std::size_t v = 0; v < g.n; ++v)
        if (g.out1(v) < g.out2(v)) return false;
      return true;
    case Predicate::seymour_tight: return g.seymour_tight();
    case Predicate::counterexample: return g.seymour_counterexample();
    case Predicate::sullivan_tight: return g.sullivan_tight();
  }
  return false;
}

std::string wall_note(std::chrono::steady_clock::time_point start) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return "wall-clock " + std::to_string(ms) + " ms";
}

// Per-shard collection merged in shard order, so the result does not depend
// on thread scheduling.
std::vector<FastGraph> collect(const ScanOptions& options, Predicate pred, std::uint64_t& total) {
  std::vector<std::vector<FastGraph>> per(shard_count(options.n));
  total = scan_orientations(options, [&](std::size_t s, const FastGraph& g) {
    if (holds(pred, g)) per[s].push_back(g);
  });
  std::vector<FastGraph> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::string> edge_lists(const std::vector<Orientation>& gs) {
  std::vector<std::string> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(to_edge_list(g));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SearchReport search(const ScanOptions& options, Predicate pred, bool dedup) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  r.n = options.n;
  r.predicate = predicate_name(pred);
  r.deduplicated = dedup;
  const auto found = collect(options, pred, r.count_total);
  std::vector<Orientation> graphs;
  graphs.reserve(found.size());
  for (const auto& g : found) graphs.push_back(g.to_orientation());
  if (dedup) graphs = dedup_isomorphic(graphs);
  r.matches = edge_lists(graphs);
  r.tallies = {{"raw_matches", found.size()}};
  r.label = pred == Predicate::seymour_tight || pred == Predicate::sullivan_tight
                ? "new data: no published census to compare against"
                : "exhaustive scan";
  r.note = wall_note(start);
  return r;
}

SearchReport verify_no_counterexample(std::size_t n, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  ScanOptions options;
  options.n = n;
  options.jobs = jobs;
  SearchReport r;
  r.n = n;
  r.predicate = "counterexample";
  const auto found = collect(options, Predicate::counterexample, r.count_total);
  for (const auto& g : found) r.violations.push_back(to_edge_list(g.to_orientation()));
  std::sort(r.violations.begin(), r.violations.end());
  r.tallies = {{"counterexamples", found.size()}};
  r.label = "exhaustive scan";
  r.note = wall_note(start);
  return r;
}

// ---------------------------------------------------------- low-degree census

namespace {

class RootedCensus {
 public:
  RootedCensus(std::size_t n, std::size_t degree) : n_(n), degree_(degree) { g_.n = n; }

  std::vector<FastGraph> run() {
    if (n_ > 16) throw RefusalError("census order above 16");
    if (degree_ == 0 || degree_ >= n_) return {};
    next_ = 1;
    assign(0);
    return found_;
  }

  std::uint64_t leaves() const { return found_.size(); }

 private:
  void assign(std::size_t i) {
    if (i == n_) {
      if (g_.strongly_connected() && g_.seymour_tight()) found_.push_back(g_);
      return;
    }
    if (i >= next_) return;  // the processed vertices are closed under out-arcs
    // Discovered vertices i may point to; earlier rows that contain i forbid
    // the reverse arc.
    std::uint32_t free = ((1u << next_) - 1) & ~(1u << i);
    for (std::size_t j = 0; j < i; ++j)
      if (g_.out[j] & (1u << i)) free &= ~(1u << j);
    const std::size_t fresh_max = n_ - next_;
    // Enumerate subsets of `free` (including empty).
    for (std::uint32_t y = free;; y = (y - 1) & free) {
      const auto old = static_cast<std::size_t>(std::popcount(y));
      for (std::size_t t = 0; t <= fresh_max; ++t) {
        const std::size_t deg = old + t;
        if (i == 0 ? deg != degree_ : deg < degree_) continue;
        std::uint32_t row = y;
        for (std::size_t k = 0; k < t; ++k) row |= 1u << (next_ + k);
        set_row(i, row);
        const std::size_t saved = next_;
        next_ += t;
        if (consistent(i)) assign(i + 1);
        next_ = saved;
        set_row(i, 0);
      }
      if (y == 0) break;
    }
  }

  void set_row(std::size_t i, std::uint32_t row) {
    for (std::uint32_t m = g_.out[i]; m; m &= m - 1) g_.in[std::countr_zero(m)] &= ~(1u << i);
    g_.out[i] = row;
    for (std::uint32_t m = row; m; m &= m - 1) g_.in[std::countr_zero(m)] |= 1u << i;
  }

  // Rows 0..i are final. Second neighbourhoods only grow as rows are added,
  // and are exact once every out-neighbour has its row.
  bool consistent(std::size_t i) const {
    const std::uint32_t assigned = (i + 1 >= 32) ? ~0u : (1u << (i + 1)) - 1;
    for (std::size_t v = 0; v <= i; ++v) {
      std::uint32_t reach = 0;
      for (std::uint32_t m = g_.out[v] & assigned; m; m &= m - 1) reach |= g_.out[std::countr_zero(m)];
      const int second = std::popcount(reach & ~g_.out[v] & ~(1u << v));
      const int first = std::popcount(g_.out[v]);
      if (second > first) return false;
      if ((g_.out[v] & ~assigned) == 0 && second != first) return false;
    }
    return true;
  }

  std::size_t n_, degree_;
  std::size_t next_ = 1;
  FastGraph g_;
  std::vector<FastGraph> found_;
};

}  // namespace

std::vector<Orientation> lowdegree_census(std::size_t n, std::size_t degree) {
  RootedCensus census(n, degree);
  std::vector<Orientation> graphs;
  for (const auto& g : census.run()) graphs.push_back(g.to_orientation());
  return dedup_isomorphic(graphs);
}

SearchReport verify_lowdegree_classification(std::size_t n_max, std::size_t degree) {
  if (degree != 1 && degree != 2) throw InputError("census degree must be 1 or 2");
  const std::size_t cap = degree == 1 ? 7 : 8;
  if (n_max > cap) {
    throw RefusalError("degree-" + std::to_string(degree) + " census is limited to order " +
                       std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  r.n = n_max;
  r.predicate = "strongly-connected seymour-tight, min out-degree " + std::to_string(degree);
  r.deduplicated = true;
  std::uint64_t missing = 0;
  for (std::size_t n = 3; n <= n_max; ++n) {
    std::vector<Orientation> expected;
    if (degree == 1) {
      expected.push_back(build_family(FamilySpec::cycle(n)));
    } else {
      if (n >= 5) expected.push_back(build_family(FamilySpec::cycle_power(n, 2)));
      if (n % 2 == 0 && n / 2 >= 3)
        expected.push_back(lex_product(build_family(FamilySpec::cycle(n / 2)), Orientation(2)));
    }
    RootedCensus census(n, degree);
    const auto raw = census.run();
    r.count_total += raw.size();
    std::vector<Orientation> graphs;
    for (const auto& g : raw) graphs.push_back(g.to_orientation());
    const auto classes = dedup_isomorphic(graphs);
    for (const auto& c : classes) {
      const std::string text = to_edge_list(c);
      r.matches.push_back(text);
      const bool known = std::any_of(expected.begin(), expected.end(),
                                     [&](const Orientation& e) { return is_isomorphic(e, c); });
      if (!known) r.violations.push_back(text);
    }
    for (const auto& e : expected) {
      const bool hit = std::any_of(classes.begin(), classes.end(),
                                   [&](const Orientation& c) { return is_isomorphic(e, c); });
      if (!hit) ++missing;
    }
    r.tallies.push_back({"classes_n" + std::to_string(n), classes.size()});
  }
  r.tallies.push_back({"missing_expected", missing});
  r.label = "exhaustive rooted search";
  r.note = wall_note(start);
  return r;
}

// ------------------------------------------------------- conjecture probes

SearchReport converse_conjecture_experiment(std::size_t n_max, std::size_t jobs) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  r.n = n_max;
  r.predicate = "eulerian seymour-tight";
  struct Shard {
    std::uint64_t tight = 0, constant = 0, in2_fail = 0;
    std::vector<std::string> violations;
  };
  std::uint64_t tight = 0, constant = 0, in2_fail = 0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    ScanOptions options;
    options.n = n;
    options.eulerian = true;
    options.jobs = jobs;
    std::vector<Shard> per(shard_count(n));
    r.count_total += scan_orientations(options, [&](std::size_t s, const FastGraph& g) {
      if (!g.seymour_tight()) return;
      Shard& sh = per[s];
      ++sh.tight;
      if (!g.converse().seymour_tight()) sh.violations.push_back(to_edge_list(g.to_orientation()));
      const int k = g.n ? g.out1(0) : 0;
      bool uniform = true;
      for (std::size_t v = 0; v < g.n && uniform; ++v) uniform = g.out1(v) == k && g.in1(v) == k;
      if (!uniform) return;
      ++sh.constant;
      for (std::size_t v = 0; v < g.n; ++v)
        if (g.in2(v) != k) {
          ++sh.in2_fail;
          break;
        }
    });
    for (auto& sh : per) {
      tight += sh.tight;
      constant += sh.constant;
      in2_fail += sh.in2_fail;
      r.violations.insert(r.violations.end(), sh.violations.begin(), sh.violations.end());
    }
  }
  std::sort(r.violations.begin(), r.violations.end());
  r.tallies = {{"eulerian_tight", tight},
               {"converse_violations", r.violations.size()},
               {"constant_degree", constant},
               {"constant_degree_in2_violations", in2_fail}};
  r.label = "evidence, not proof";
  r.note = wall_note(start);
  return r;
}

SearchReport sullivan_catalogue(std::size_t n, std::size_t jobs) {
  if (n > kUnfilteredMaxOrder) {
    throw RefusalError("Sullivan catalogue is limited to order " + std::to_string(kUnfilteredMaxOrder));
  }
  const auto start = std::chrono::steady_clock::now();
  SearchReport r;
  r.n = n;
  r.predicate = "sullivan-tight";
  r.deduplicated = true;
  ScanOptions options;
  options.n = n;
  options.jobs = jobs;
  const auto found = collect(options, Predicate::sullivan_tight, r.count_total);
  std::vector<Orientation> graphs;
  for (const auto& g : found) graphs.push_back(g.to_orientation());
  const auto classes = dedup_isomorphic(graphs);
  r.matches = edge_lists(classes);
  r.flag_meaning = "not seymour-tight";
  for (const auto& c : classes)
    if (!FastGraph::from(c).seymour_tight()) r.flagged.push_back(to_edge_list(c));
  std::sort(r.flagged.begin(), r.flagged.end());
  const std::uint64_t not_seymour = r.flagged.size();

  // Tournaments: Sullivan-tight exactly when every pair is within distance 2.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::uint64_t tournaments = 0, diameter_two = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    FastGraph t;
    t.n = n;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [u, v] = pairs[p];
      if (bits >> p & 1) std::swap(u, v);
      t.out[u] |= 1u << v;
      t.in[v] |= 1u << u;
    }
    ++tournaments;
    const bool d2 = has_diameter_at_most_two(t);
    diameter_two += d2;
    if (d2 != t.sullivan_tight()) r.violations.push_back(to_edge_list(t.to_orientation()));
  }
  r.tallies = {{"raw_matches", found.size()},
               {"classes", classes.size()},
               {"not_seymour_tight", not_seymour},
               {"tournaments", tournaments},
               {"tournaments_diameter_two", diameter_two}};
  r.label = "new data: no published census to compare against";
  r.note = wall_note(start);
  return r;
}

}  // namespace stight
