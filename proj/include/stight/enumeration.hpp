#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "stight/digraph.hpp"

namespace stight {

constexpr std::size_t kUnfilteredMaxOrder = 6;
constexpr std::size_t kFilteredMaxOrder = 8;

/// Orientation on at most 16 vertices as out/in bitmasks.
struct FastGraph {
  std::size_t n = 0;
  std::array<std::uint32_t, 16> out{};
  std::array<std::uint32_t, 16> in{};

  Orientation to_orientation() const;
  static FastGraph from(const Digraph& d);
  FastGraph converse() const;

  int out1(std::size_t v) const;
  int in1(std::size_t v) const;
  int out2(std::size_t v) const;
  int in2(std::size_t v) const;
  bool seymour_tight() const;
  bool seymour_counterexample() const;
  bool sullivan_tight() const;
  bool strongly_connected() const;
};

struct ScanOptions {
  std::size_t n = 0;
  std::optional<std::size_t> max_out_degree;
  bool strongly_connected = false;
  bool eulerian = false;
  std::size_t jobs = 1;

  bool filtered() const { return max_out_degree.has_value() || strongly_connected || eulerian; }
};

/// 3^C(n,2).
double orientation_state_count(std::size_t n);

/// Shards fix the first two pairs, so there are 9 of them for n >= 3.
std::size_t shard_count(std::size_t n);

/// Pair-order scan: pairs {u,v} in lexicographic order, branches none,
/// u->v, v->u. Every graph passed to `visit` satisfies all filters. Shards
/// run on `jobs` threads; `visit` must tolerate concurrent calls for distinct
/// shards. Returns the number of graphs visited. Refuses unfiltered scans
/// above order 6 and filtered ones above order 8.
std::uint64_t scan_orientations(const ScanOptions& options,
                                const std::function<void(std::size_t shard, const FastGraph&)>& visit);

/// Sequential convenience wrapper.
std::vector<Orientation> enumerate_orientations(const ScanOptions& options);

/// One representative per isomorphism class, each in canonical form, sorted.
std::vector<Orientation> dedup_isomorphic(const std::vector<Orientation>& graphs);

struct SearchReport {
  std::size_t n = 0;
  std::string predicate;
  std::uint64_t count_total = 0;
  bool deduplicated = false;
  std::vector<std::string> matches;     // edge-list text
  std::vector<std::string> violations;  // edge-list text
  std::vector<std::pair<std::string, std::uint64_t>> tallies;
  std::string flag_meaning;            // what `flagged` lists, if used
  std::vector<std::string> flagged;    // edge-list text
  std::string label;
  std::string note;

  nlohmann::ordered_json to_json() const;
};

enum class Predicate { any, seymour, seymour_tight, counterexample, sullivan_tight };

/// Parses "any", "seymour", "seymour-tight", "counterexample",
/// "sullivan-tight"; throws InputError.
Predicate parse_predicate(const std::string& name);
std::string predicate_name(Predicate p);

/// Generic scan keeping graphs that satisfy `pred`.
SearchReport search(const ScanOptions& options, Predicate pred, bool dedup);

/// Zero orientations of order n with positive Seymour deficiency everywhere.
SearchReport verify_no_counterexample(std::size_t n, std::size_t jobs = 1);

/// Strongly connected Seymour-tight orientations of order n with a vertex of
/// out-degree `degree` and minimum out-degree `degree`, one per class. Uses a
/// rooted search: the root has out-degree `degree`, vertices are labelled
/// in discovery order and rows are assigned in label order.
std::vector<Orientation> lowdegree_census(std::size_t n, std::size_t degree);

/// Checks the census for 3..n_max against directed cycles (degree 1) or
/// {C_n^2, C_{n/2}[E2]} (degree 2).
SearchReport verify_lowdegree_classification(std::size_t n_max, std::size_t degree);

/// Eulerian Seymour-tight orientations of order <= n_max whose converse is not
/// Seymour-tight, plus the constant-degree second in-neighbourhood check.
SearchReport converse_conjecture_experiment(std::size_t n_max, std::size_t jobs = 1);

/// Sullivan-tight orientations of order n up to isomorphism, flagging those
/// that are not Seymour-tight, and the tournament diameter check.
SearchReport sullivan_catalogue(std::size_t n, std::size_t jobs = 1);

/// Tournament on n vertices in which every ordered pair is joined by a path
/// of length at most 2.
bool has_diameter_at_most_two(const FastGraph& g);

}  // namespace stight
