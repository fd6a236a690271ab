#include "stight/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "stight/errors.hpp"

namespace stight {
namespace {

using Colour = std::size_t;

std::vector<Colour> seed_colours(const Digraph& d) {
  std::vector<Colour> seeds(d.order());
  for (Vertex v = 0; v < d.order(); ++v) {
    const std::size_t out = d.out_degree(v), in = d.in_degree(v);
    const std::size_t out2 = second_out_set(d, v).count();
    const std::size_t in2 = second_in_set(d, v).count();
    seeds[v] = ((out * 131 + in) * 131 + out2) * 131 + in2;
  }
  return seeds;
}

/// One refinement round over several graphs at once so colours stay
/// comparable between them. Returns the number of distinct colours.
std::size_t refine(const std::vector<const Digraph*>& graphs,
                   std::vector<std::vector<Colour>>& colours) {
  using Signature =
      std::tuple<Colour, std::vector<Colour>, std::vector<Colour>>;
  std::map<Signature, Colour> palette;
  std::vector<std::vector<Signature>> sigs(graphs.size());
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    const Digraph& d = *graphs[g];
    for (Vertex v = 0; v < d.order(); ++v) {
      std::vector<Colour> outs, ins;
      d.out_set(v).for_each([&](Vertex w) { outs.push_back(colours[g][w]); });
      d.in_set(v).for_each([&](Vertex w) { ins.push_back(colours[g][w]); });
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sigs[g].emplace_back(colours[g][v], std::move(outs), std::move(ins));
      palette.emplace(sigs[g].back(), 0);
    }
  }
  Colour next = 0;
  for (auto& [sig, c] : palette) c = next++;
  for (std::size_t g = 0; g < graphs.size(); ++g)
    for (std::size_t v = 0; v < sigs[g].size(); ++v)
      colours[g][v] = palette.at(sigs[g][v]);
  return palette.size();
}

std::vector<std::vector<Colour>> stable_colours(
    const std::vector<const Digraph*>& graphs) {
  std::vector<std::vector<Colour>> colours;
  for (const Digraph* d : graphs) colours.push_back(seed_colours(*d));
  std::size_t classes = 0;
  for (;;) {
    const std::size_t now = refine(graphs, colours);
    if (now == classes) break;
    classes = now;
  }
  return colours;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& d1,
                                                    const Digraph& d2) {
  const std::size_t n = d1.order();
  if (n != d2.order() || d1.arc_count() != d2.arc_count()) return std::nullopt;
  if (n == 0) return std::vector<Vertex>{};

  const auto colours = stable_colours({&d1, &d2});
  const auto& c1 = colours[0];
  const auto& c2 = colours[1];
  {
    auto s1 = c1, s2 = c2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  std::map<Colour, std::vector<Vertex>> class2;
  std::map<Colour, std::size_t> class_size;
  for (Vertex v = 0; v < n; ++v) {
    class2[c2[v]].push_back(v);
    ++class_size[c1[v]];
  }

  // Search order: smallest classes first, then prefer vertices adjacent to
  // already-ordered ones so consistency checks bite early.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    Vertex best = 0;
    bool found = false;
    std::tuple<bool, std::size_t, Vertex> best_key{};
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool linked = false;
      for (Vertex u : order) linked = linked || d1.has_arc(u, v) || d1.has_arc(v, u);
      const std::tuple<bool, std::size_t, Vertex> key{!linked, class_size[c1[v]], v};
      if (!found || key < best_key) {
        best_key = key;
        best = v;
        found = true;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  std::vector<Vertex> map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Vertex u = order[depth];
    for (Vertex cand : class2[c1[u]]) {
      if (used[cand]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex w = order[i];
        ok = d1.has_arc(u, w) == d2.has_arc(cand, map[w]) &&
             d1.has_arc(w, u) == d2.has_arc(map[w], cand);
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = true;
      if (extend(depth + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool is_isomorphic(const Digraph& d1, const Digraph& d2) {
  return find_isomorphism(d1, d2).has_value();
}

Digraph canonical_form(const Digraph& d) {
  const std::size_t n = d.order();
  if (n > kCanonicalFormMaxOrder) {
    throw RefusalError("canonical_form refuses order " + std::to_string(n) +
                       " (cap " + std::to_string(kCanonicalFormMaxOrder) + ")");
  }
  const std::vector<Arc> arcs = d.arcs();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<Arc> best = arcs;
  std::vector<Arc> scratch(arcs.size());
  do {
    for (std::size_t i = 0; i < arcs.size(); ++i)
      scratch[i] = {perm[arcs[i].from], perm[arcs[i].to]};
    std::sort(scratch.begin(), scratch.end());
    if (scratch < best) best = scratch;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Digraph(n, best);
}

std::size_t invariant_hash(const Digraph& d) {
  auto colours = stable_colours({&d});
  std::sort(colours[0].begin(), colours[0].end());
  // Colours from a single-graph refinement are not comparable across graphs,
  // so hash the seed multiset and the class-size profile instead.
  auto seeds = seed_colours(d);
  std::sort(seeds.begin(), seeds.end());
  std::map<Colour, std::size_t> sizes;
  for (Colour c : colours[0]) ++sizes[c];
  std::vector<std::size_t> profile;
  for (const auto& [c, s] : sizes) profile.push_back(s);
  std::sort(profile.begin(), profile.end());
  std::size_t h = std::hash<std::size_t>{}(d.order() * 1000003 + d.arc_count());
  auto mix = [&](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (Colour s : seeds) mix(s);
  for (std::size_t s : profile) mix(s);
  return h;
}

}  // namespace stight
