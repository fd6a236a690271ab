#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "stight/vertex_set.hpp"

namespace stight {

struct Arc {
  Vertex from = 0;
  Vertex to = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable loop-free digraph on vertices 0..n-1. Out- and in-rows are kept
/// as bitsets and are always consistent with each other.
class Digraph {
 public:
  Digraph() = default;
  /// Empty graph E_n.
  explicit Digraph(std::size_t n);
  /// Arcs are a set: repeats collapse. Loops or out-of-range ends throw
  /// InputError.
  Digraph(std::size_t n, std::span<const Arc> arcs);

  std::size_t order() const { return out_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  bool has_arc(Vertex u, Vertex v) const;
  const VertexSet& out_set(Vertex v) const;
  const VertexSet& in_set(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_set(v).count(); }
  std::size_t in_degree(Vertex v) const { return in_set(v).count(); }

  /// All arcs, sorted lexicographically.
  std::vector<Arc> arcs() const;

  /// Arc-identical comparison.
  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.out_ == b.out_;
  }

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_count_ = 0;
};

/// A Digraph with no 2-cycles, checked at construction.
class Orientation : public Digraph {
 public:
  Orientation() = default;
  /// Throws InputError naming a 2-cycle if one exists.
  explicit Orientation(Digraph d);
  explicit Orientation(std::size_t n) : Digraph(n) {}
  Orientation(std::size_t n, std::span<const Arc> arcs)
      : Orientation(Digraph(n, arcs)) {}

  static bool admits(const Digraph& d);
};

/// Incremental construction of a Digraph.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(std::size_t n = 0) : n_(n) {}

  std::size_t order() const { return n_; }
  Vertex add_vertex() { return static_cast<Vertex>(n_++); }
  /// Adds `count` fresh vertices and returns the first new id.
  Vertex add_vertices(std::size_t count) {
    const auto first = static_cast<Vertex>(n_);
    n_ += count;
    return first;
  }
  /// Throws InputError on loops and out-of-range ends.
  void add_arc(Vertex u, Vertex v);
  /// Adds a copy of `g` with labels shifted by `offset`.
  void add_arcs_of(const Digraph& g, Vertex offset);

  Digraph build() const { return Digraph(n_, arcs_); }
  Orientation build_orientation() const { return Orientation(build()); }

 private:
  std::size_t n_;
  std::vector<Arc> arcs_;
};

/// Guest-to-host vertex map. `image[u]` is the host vertex of guest vertex u.
struct EmbeddingMap {
  Orientation host;
  std::vector<Vertex> image;
};

// Neighbourhoods. All vertex-set results are ascending; out-of-range vertices
// throw InputError.
std::vector<Vertex> out_neighbourhood(const Digraph& d, Vertex v);
std::vector<Vertex> in_neighbourhood(const Digraph& d, Vertex v);
VertexSet second_out_set(const Digraph& d, Vertex v);
VertexSet second_in_set(const Digraph& d, Vertex v);
std::vector<Vertex> second_out_neighbourhood(const Digraph& d, Vertex v);
std::vector<Vertex> second_in_neighbourhood(const Digraph& d, Vertex v);

Digraph converse(const Digraph& d);
Orientation converse(const Orientation& d);

/// Mutual-reachability classes. Components are ordered by their smallest
/// vertex and each component lists its vertices in ascending order.
struct SccPartition {
  std::vector<std::vector<Vertex>> components;
  std::vector<std::size_t> component_of;
};

SccPartition strongly_connected_components(const Digraph& d);
/// Vertex i of the result is component i of `strongly_connected_components`.
Digraph condensation(const Digraph& d);
Digraph condensation(const Digraph& d, const SccPartition& scc);
bool is_strongly_connected(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// Vertices of every component reachable from `component` in the
/// condensation, inclusive, ascending.
std::vector<Vertex> reachable_closure_vertices(const Digraph& d,
                                               std::size_t component);
/// Induced sub-orientation on `reachable_closure_vertices`.
Orientation reachable_closure(const Orientation& d, std::size_t component);

/// Keeps the arcs with both ends in `x`; vertices are relabelled 0..|x|-1 in
/// ascending original order. Duplicates or invalid ids throw InputError.
Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> x);
Orientation induced_subgraph(const Orientation& d, std::span<const Vertex> x);

/// The second graph's labels are offset by d1.order().
Digraph disjoint_union(const Digraph& d1, const Digraph& d2);
Orientation disjoint_union(const Orientation& d1, const Orientation& d2);

/// `perm[v]` is the new label of v. Throws InputError unless perm is a
/// permutation of 0..n-1.
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);
Orientation relabel(const Orientation& d, std::span<const Vertex> perm);

bool is_eulerian(const Digraph& d);

/// True iff `map.image` is injective into the host and arcs correspond in
/// both directions.
bool is_induced_embedding(const Digraph& guest, const EmbeddingMap& map);

}  // namespace stight
