#include "stight/digraph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "stight/errors.hpp"

namespace stight {
namespace {

void check_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for order " +
                     std::to_string(d.order()));
  }
}

std::string arc_text(Vertex u, Vertex v) {
  return std::to_string(u) + "->" + std::to_string(v);
}

}  // namespace

Digraph::Digraph(std::size_t n) : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

Digraph::Digraph(std::size_t n, std::span<const Arc> arcs) : Digraph(n) {
  for (const Arc& a : arcs) {
    if (a.from >= n || a.to >= n) {
      throw InputError("arc " + arc_text(a.from, a.to) +
                       " out of range for order " + std::to_string(n));
    }
    if (a.from == a.to) throw InputError("self-loop at " + std::to_string(a.from));
    if (!out_[a.from].contains(a.to)) {
      out_[a.from].insert(a.to);
      in_[a.to].insert(a.from);
      ++arc_count_;
    }
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return u < order() && out_[u].contains(v);
}

const VertexSet& Digraph::out_set(Vertex v) const {
  check_vertex(*this, v);
  return out_[v];
}

const VertexSet& Digraph::in_set(Vertex v) const {
  check_vertex(*this, v);
  return in_[v];
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 0; u < order(); ++u)
    out_[u].for_each([&](Vertex v) { result.push_back({u, v}); });
  return result;
}

Orientation::Orientation(Digraph d) : Digraph(std::move(d)) {
  for (Vertex u = 0; u < order(); ++u) {
    const VertexSet& out = out_set(u);
    if (out.intersects(in_set(u))) {
      VertexSet both = out;
      both &= in_set(u);
      const Vertex w = both.to_vector().front();
      throw InputError("not an orientation: 2-cycle between " +
                       std::to_string(u) + " and " + std::to_string(w));
    }
  }
}

bool Orientation::admits(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u)
    if (d.out_set(u).intersects(d.in_set(u))) return false;
  return true;
}

void DigraphBuilder::add_arc(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_) {
    throw InputError("arc " + arc_text(u, v) + " out of range for order " +
                     std::to_string(n_));
  }
  if (u == v) throw InputError("self-loop at " + std::to_string(u));
  arcs_.push_back({u, v});
}

void DigraphBuilder::add_arcs_of(const Digraph& g, Vertex offset) {
  for (const Arc& a : g.arcs()) add_arc(a.from + offset, a.to + offset);
}

std::vector<Vertex> out_neighbourhood(const Digraph& d, Vertex v) {
  return d.out_set(v).to_vector();
}

std::vector<Vertex> in_neighbourhood(const Digraph& d, Vertex v) {
  return d.in_set(v).to_vector();
}

VertexSet second_out_set(const Digraph& d, Vertex v) {
  const VertexSet& first = d.out_set(v);
  VertexSet reach(d.order());
  first.for_each([&](Vertex u) { reach |= d.out_set(u); });
  reach.subtract(first);
  reach.erase(v);
  return reach;
}

VertexSet second_in_set(const Digraph& d, Vertex v) {
  const VertexSet& first = d.in_set(v);
  VertexSet reach(d.order());
  first.for_each([&](Vertex u) { reach |= d.in_set(u); });
  reach.subtract(first);
  reach.erase(v);
  return reach;
}

std::vector<Vertex> second_out_neighbourhood(const Digraph& d, Vertex v) {
  return second_out_set(d, v).to_vector();
}

std::vector<Vertex> second_in_neighbourhood(const Digraph& d, Vertex v) {
  return second_in_set(d, v).to_vector();
}

Digraph converse(const Digraph& d) {
  std::vector<Arc> reversed;
  reversed.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) reversed.push_back({a.to, a.from});
  return Digraph(d.order(), reversed);
}

Orientation converse(const Orientation& d) {
  return Orientation(converse(static_cast<const Digraph&>(d)));
}

SccPartition strongly_connected_components(const Digraph& d) {
  // Iterative Tarjan.
  const std::size_t n = d.order();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnset), low(n, 0), raw_comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<std::vector<Vertex>> adjacency(n);
  for (Vertex v = 0; v < n; ++v) adjacency[v] = d.out_set(v).to_vector();

  std::size_t next_index = 0;
  std::size_t raw_count = 0;
  struct Frame {
    Vertex v;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < adjacency[f.v].size()) {
        const Vertex w = adjacency[f.v][f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_comp[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  // Renumber components by smallest member.
  std::vector<std::size_t> renumber(raw_count, kUnset);
  SccPartition result;
  result.component_of.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t& id = renumber[raw_comp[v]];
    if (id == kUnset) {
      id = result.components.size();
      result.components.emplace_back();
    }
    result.components[id].push_back(v);
    result.component_of[v] = id;
  }
  return result;
}

Digraph condensation(const Digraph& d, const SccPartition& scc) {
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    const auto ca = static_cast<Vertex>(scc.component_of[a.from]);
    const auto cb = static_cast<Vertex>(scc.component_of[a.to]);
    if (ca != cb) arcs.push_back({ca, cb});
  }
  return Digraph(scc.components.size(), arcs);
}

Digraph condensation(const Digraph& d) {
  return condensation(d, strongly_connected_components(d));
}

bool is_strongly_connected(const Digraph& d) {
  return strongly_connected_components(d).components.size() <= 1;
}

bool is_acyclic(const Digraph& d) {
  // Kahn's algorithm.
  const std::size_t n = d.order();
  std::vector<std::size_t> indeg(n);
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    d.out_set(v).for_each([&](Vertex w) {
      if (--indeg[w] == 0) ready.push_back(w);
    });
  }
  return removed == n;
}

std::vector<Vertex> reachable_closure_vertices(const Digraph& d,
                                               std::size_t component) {
  const SccPartition scc = strongly_connected_components(d);
  if (component >= scc.components.size()) {
    throw InputError("component id " + std::to_string(component) +
                     " out of range (" + std::to_string(scc.components.size()) +
                     " components)");
  }
  const Digraph cond = condensation(d, scc);
  VertexSet seen(cond.order());
  std::vector<Vertex> frontier{static_cast<Vertex>(component)};
  seen.insert(static_cast<Vertex>(component));
  while (!frontier.empty()) {
    const Vertex c = frontier.back();
    frontier.pop_back();
    cond.out_set(c).for_each([&](Vertex w) {
      if (!seen.contains(w)) {
        seen.insert(w);
        frontier.push_back(w);
      }
    });
  }
  std::vector<Vertex> members;
  seen.for_each([&](Vertex c) {
    for (Vertex v : scc.components[c]) members.push_back(v);
  });
  std::sort(members.begin(), members.end());
  return members;
}

Orientation reachable_closure(const Orientation& d, std::size_t component) {
  const auto members = reachable_closure_vertices(d, component);
  return induced_subgraph(d, members);
}

Digraph induced_subgraph(const Digraph& d, std::span<const Vertex> x) {
  VertexSet keep(d.order());
  for (Vertex v : x) {
    check_vertex(d, v);
    if (keep.contains(v)) {
      throw InputError("duplicate vertex " + std::to_string(v) + " in subset");
    }
    keep.insert(v);
  }
  const std::vector<Vertex> sorted = keep.to_vector();
  std::vector<Vertex> position(d.order(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    position[sorted[i]] = static_cast<Vertex>(i);
  std::vector<Arc> arcs;
  for (Vertex u : sorted) {
    d.out_set(u).for_each([&](Vertex v) {
      if (keep.contains(v)) arcs.push_back({position[u], position[v]});
    });
  }
  return Digraph(sorted.size(), arcs);
}

Orientation induced_subgraph(const Orientation& d, std::span<const Vertex> x) {
  return Orientation(induced_subgraph(static_cast<const Digraph&>(d), x));
}

Digraph disjoint_union(const Digraph& d1, const Digraph& d2) {
  DigraphBuilder b(d1.order() + d2.order());
  b.add_arcs_of(d1, 0);
  b.add_arcs_of(d2, static_cast<Vertex>(d1.order()));
  return b.build();
}

Orientation disjoint_union(const Orientation& d1, const Orientation& d2) {
  return Orientation(disjoint_union(static_cast<const Digraph&>(d1),
                                    static_cast<const Digraph&>(d2)));
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
  const std::size_t n = d.order();
  if (perm.size() != n) throw InputError("permutation has wrong length");
  VertexSet hit(n);
  for (Vertex p : perm) {
    if (p >= n || hit.contains(p)) throw InputError("not a permutation");
    hit.insert(p);
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
  return Digraph(n, arcs);
}

Orientation relabel(const Orientation& d, std::span<const Vertex> perm) {
  return Orientation(relabel(static_cast<const Digraph&>(d), perm));
}

bool is_eulerian(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.in_degree(v) != d.out_degree(v)) return false;
  return true;
}

bool is_induced_embedding(const Digraph& guest, const EmbeddingMap& map) {
  const std::size_t n = guest.order();
  if (map.image.size() != n) return false;
  VertexSet used(map.host.order());
  for (Vertex h : map.image) {
    if (h >= map.host.order() || used.contains(h)) return false;
    used.insert(h);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (guest.has_arc(u, v) != map.host.has_arc(map.image[u], map.image[v]))
        return false;
    }
  }
  return true;
}

}  // namespace stight
