#include "stight/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stight/errors.hpp"

namespace stight {

void FamilySpec::validate() const {
  switch (kind) {
    case FamilyKind::empty:
      return;
    case FamilyKind::directed_cycle:
      if (n < 3) throw InputError("directed cycle needs n >= 3, got " + std::to_string(n));
      return;
    case FamilyKind::cycle_power:
      if (k < 1) throw InputError("cycle power needs k >= 1");
      if (2 * k >= n) {
        throw InputError("cycle power needs 2k < n, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
      }
      return;
    case FamilyKind::regular_tournament:
      if (n < 3 || n % 2 == 0) {
        throw InputError("regular tournament needs odd order >= 3, got " +
                         std::to_string(n));
      }
      return;
  }
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::empty:
      return "E" + std::to_string(n);
    case FamilyKind::directed_cycle:
      return "C" + std::to_string(n);
    case FamilyKind::cycle_power:
      if (k == 1) return "C" + std::to_string(n);
      return "C" + std::to_string(n) + "^" + std::to_string(k);
    case FamilyKind::regular_tournament:
      return "T" + std::to_string(n);
  }
  return {};
}

Orientation build_family(const FamilySpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::size_t reach = 0;
  switch (spec.kind) {
    case FamilyKind::empty: reach = 0; break;
    case FamilyKind::directed_cycle: reach = 1; break;
    case FamilyKind::cycle_power: reach = spec.k; break;
    case FamilyKind::regular_tournament: reach = (n - 1) / 2; break;
  }
  std::vector<Arc> arcs;
  arcs.reserve(n * reach);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 1; j <= reach; ++j)
      arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n)});
  return Orientation(n, arcs);
}

namespace {

Orientation assemble(const Orientation& outer, std::span<const Orientation> parts) {
  std::vector<Vertex> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + static_cast<Vertex>(parts[i].order());
  DigraphBuilder b(offset.back());
  for (std::size_t i = 0; i < parts.size(); ++i) b.add_arcs_of(parts[i], offset[i]);
  for (const Arc& a : outer.arcs())
    for (Vertex u = offset[a.from]; u < offset[a.from + 1]; ++u)
      for (Vertex w = offset[a.to]; w < offset[a.to + 1]; ++w) b.add_arc(u, w);
  return b.build_orientation();
}

std::int64_t deficiency(const VertexProfile& r, SignKind kind) {
  const auto first = static_cast<std::int64_t>(kind == SignKind::seymour ? r.out1 : r.in1);
  return first - static_cast<std::int64_t>(r.out2);
}

}  // namespace

Orientation lex_product(const Orientation& d, const Orientation& g) {
  const std::vector<Orientation> parts(d.order(), g);
  return assemble(d, parts);
}

Orientation gen_lex_product(const Orientation& outer,
                            std::span<const Orientation> parts,
                            ProductContract contract) {
  if (parts.size() != outer.order()) {
    throw InputError("generalized product needs " + std::to_string(outer.order()) +
                     " parts, got " + std::to_string(parts.size()));
  }
  if (contract != ProductContract::none) {
    const bool seymour = contract == ProductContract::seymour;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const bool ok = seymour ? is_seymour_tight(parts[i]) : is_sullivan_tight(parts[i]);
      if (!ok) {
        throw ValidationError("part " + std::to_string(i) + " is not " +
                              (seymour ? "Seymour" : "Sullivan") + "-tight");
      }
    }
    // Zero-size parts delete their outer vertex, so the size vector is tested
    // against the outer graph restricted to its support.
    std::vector<Vertex> support;
    std::vector<std::int64_t> x;
    for (Vertex v = 0; v < outer.order(); ++v) {
      if (parts[v].order() == 0) continue;
      support.push_back(v);
      x.push_back(static_cast<std::int64_t>(parts[v].order()));
    }
    const Orientation restricted = induced_subgraph(outer, support);
    const SignMatrix m = seymour ? seymour_matrix(restricted) : sullivan_matrix(restricted);
    const auto mx = m.multiply(x);
    for (std::size_t r = 0; r < mx.size(); ++r) {
      if (mx[r] != 0) {
        throw ValidationError("size vector violates row " + std::to_string(support[r]) +
                              " of the outer " + (seymour ? "S" : "R") +
                              " matrix (value " + std::to_string(mx[r]) + ")");
      }
    }
  }
  return assemble(outer, parts);
}

bool is_uniform_on(const Orientation& d, Vertex v, std::span<const Vertex> x) {
  const VertexSet& out = d.out_set(v);
  const VertexSet& in = d.in_set(v);
  bool all_out = true, all_in = true, none = true;
  for (Vertex w : x) {
    if (w >= d.order()) throw InputError("vertex " + std::to_string(w) + " out of range");
    if (w == v) throw InputError("vertex " + std::to_string(v) + " lies in X");
    const bool o = out.contains(w);
    const bool i = in.contains(w);
    all_out = all_out && o;
    all_in = all_in && i;
    none = none && !o && !i;
  }
  return all_out || all_in || none;
}

Orientation replace_uniform_subset(const Orientation& d, std::span<const Vertex> x,
                                   const Orientation& h, ReplaceContract contract) {
  if (h.order() != x.size()) {
    throw InputError("replacement has " + std::to_string(h.order()) +
                     " vertices but X has " + std::to_string(x.size()));
  }
  const Orientation inner = induced_subgraph(d, x);  // validates X
  std::vector<Vertex> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  const VertexSet in_x = VertexSet::of(d.order(), sorted);
  for (Vertex v = 0; v < d.order(); ++v) {
    if (in_x.contains(v)) continue;
    if (!is_uniform_on(d, v, sorted))
      throw ValidationError("vertex " + std::to_string(v) + " is not uniform on X");
  }
  if (contract == ReplaceContract::seymour) {
    const auto dh = profile(h).seymour_deficiencies();
    const auto dx = profile(inner).seymour_deficiencies();
    for (std::size_t i = 0; i < dh.size(); ++i) {
      if (dh[i] < dx[i]) {
        throw ValidationError("replacement deficiency " + std::to_string(dh[i]) +
                              " below " + std::to_string(dx[i]) + " at X vertex " +
                              std::to_string(sorted[i]));
      }
    }
  } else if (contract == ReplaceContract::tight) {
    if (!is_seymour_tight(d)) throw ValidationError("host is not Seymour-tight");
    if (!is_seymour_tight(inner)) throw ValidationError("host restricted to X is not Seymour-tight");
    if (!is_seymour_tight(h)) throw ValidationError("replacement is not Seymour-tight");
  }
  DigraphBuilder b(d.order());
  for (const Arc& a : d.arcs())
    if (!(in_x.contains(a.from) && in_x.contains(a.to))) b.add_arc(a.from, a.to);
  for (const Arc& a : h.arcs()) b.add_arc(sorted[a.from], sorted[a.to]);
  return b.build_orientation();
}

Orientation add_source_by_neighbourhood_copy(const Orientation& d,
                                             const Orientation& g,
                                             std::span<const Vertex> x) {
  VertexSet xs(g.order());
  for (Vertex v : x) {
    if (v >= g.order()) throw InputError("vertex " + std::to_string(v) + " not in G");
    if (xs.contains(v)) throw InputError("duplicate vertex " + std::to_string(v) + " in X");
    xs.insert(v);
  }
  VertexSet reach(g.order());
  xs.for_each([&](Vertex v) { reach |= g.out_set(v); });
  reach.subtract(xs);
  if (reach.count() != xs.count()) {
    throw ValidationError("|N+1(X) \\ X| = " + std::to_string(reach.count()) +
                          " but |X| = " + std::to_string(xs.count()));
  }
  const auto off = static_cast<Vertex>(d.order());
  DigraphBuilder b(d.order() + g.order());
  b.add_arcs_of(d, 0);
  b.add_arcs_of(g, off);
  for (Vertex u = 0; u < d.order(); ++u) xs.for_each([&](Vertex w) { b.add_arc(u, off + w); });
  return b.build_orientation();
}

void check_homomorphism(const Orientation& d, const Orientation& g,
                        std::span<const Vertex> f) {
  if (f.size() != d.order())
    throw InputError("map has " + std::to_string(f.size()) + " entries, expected " +
                     std::to_string(d.order()));
  for (Vertex v : f)
    if (v >= g.order()) throw InputError("map image " + std::to_string(v) + " not in G");
  for (const Arc& a : d.arcs()) {
    if (!g.has_arc(f[a.from], f[a.to])) {
      throw ValidationError("not a homomorphism: arc " + std::to_string(a.from) + "->" +
                            std::to_string(a.to) + " maps to " + std::to_string(f[a.from]) +
                            "->" + std::to_string(f[a.to]));
    }
  }
}

Orientation hom_source_attach(const Orientation& d, const Orientation& g,
                              std::span<const Vertex> f) {
  check_homomorphism(d, g, f);
  const auto off = static_cast<Vertex>(d.order());
  DigraphBuilder b(d.order() + g.order());
  b.add_arcs_of(d, 0);
  b.add_arcs_of(g, off);
  for (Vertex u = 0; u < d.order(); ++u)
    g.out_set(f[u]).for_each([&](Vertex w) { b.add_arc(u, off + w); });
  return b.build_orientation();
}

Orientation hom_bijective_attach(const Orientation& d, const Orientation& g,
                                 std::span<const Vertex> f) {
  if (d.order() != g.order()) throw InputError("bijective attach needs |D| = |G|");
  check_homomorphism(d, g, f);
  VertexSet hit(g.order());
  for (Vertex v : f) {
    if (hit.contains(v)) throw InputError("map is not a bijection (repeated " + std::to_string(v) + ")");
    hit.insert(v);
  }
  const auto off = static_cast<Vertex>(d.order());
  DigraphBuilder b(d.order() + g.order());
  b.add_arcs_of(d, 0);
  b.add_arcs_of(g, off);
  for (Vertex u = 0; u < d.order(); ++u)
    g.in_set(f[u]).for_each([&](Vertex w) { b.add_arc(off + w, u); });
  return b.build_orientation();
}

EmbeddingMap embed_in_seymour_tight(const Orientation& d) {
  const std::size_t n = d.order();
  DigraphBuilder b(3 * n);
  b.add_arcs_of(d, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < n; ++s) b.add_arc(v, static_cast<Vertex>(n + s));
    b.add_arc(v, static_cast<Vertex>(2 * n + v));
  }
  const NeighbourhoodProfile augmented = profile(b.build());
  const Orientation c3 = build_family(FamilySpec::cycle(3));
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t k = static_cast<std::size_t>(augmented.seymour_deficiency(v));
    if (k == 0) continue;  // does not occur: k_v = n + 1 - |N+2_D(v)| >= 2
    const Orientation gadget = lex_product(c3, Orientation(k));
    std::vector<Vertex> place(gadget.order());
    place[0] = static_cast<Vertex>(2 * n + v);
    const Vertex first = b.add_vertices(gadget.order() - 1);
    for (std::size_t i = 1; i < gadget.order(); ++i) place[i] = first + static_cast<Vertex>(i - 1);
    for (const Arc& a : gadget.arcs()) b.add_arc(place[a.from], place[a.to]);
  }
  EmbeddingMap map;
  map.host = lex_product(c3, b.build_orientation());
  map.image.resize(n);
  std::iota(map.image.begin(), map.image.end(), Vertex{0});
  return map;
}

std::vector<std::int64_t> deficiency_of_product(const NeighbourhoodProfile& pd,
                                                std::size_t size_g,
                                                const NeighbourhoodProfile& pg,
                                                SignKind kind) {
  if (pg.order() != size_g) throw InputError("profile of G does not match |V(G)|");
  std::vector<std::int64_t> out;
  out.reserve(pd.order() * size_g);
  const auto scale = static_cast<std::int64_t>(size_g);
  for (Vertex v = 0; v < pd.order(); ++v) {
    const std::int64_t dv = deficiency(pd.at(v), kind);
    for (Vertex i = 0; i < size_g; ++i) out.push_back(scale * dv + deficiency(pg.at(i), kind));
  }
  return out;
}

namespace fixtures {

namespace {
Orientation c(std::size_t n) { return build_family(FamilySpec::cycle(n)); }
Orientation e(std::size_t m) { return Orientation(m); }
}  // namespace

Orientation pendant_triangle() {
  const Arc arcs[] = {{0, 1}, {1, 2}, {2, 0}, {3, 0}};
  return Orientation(4, arcs);
}

Orientation c3_e2() { return lex_product(c(3), e(2)); }

Orientation c3_c3e3e3() {
  const std::vector<Orientation> parts{c(3), e(3), e(3)};
  return gen_lex_product(c(3), parts, ProductContract::seymour);
}

Orientation triangle_with_source() {
  const Orientation g = c(3);
  const auto x = out_neighbourhood(g, 0);
  return add_source_by_neighbourhood_copy(e(1), g, x);
}

Orientation twin_triangles() {
  const Vertex id[] = {0, 1, 2};
  return hom_bijective_attach(c(3), c(3), id);
}

Orientation c3_e3e3c3() {
  const std::vector<Orientation> parts{e(3), e(3), c(3)};
  return gen_lex_product(c(3), parts, ProductContract::seymour);
}

Orientation c4_mixed() {
  const std::vector<Orientation> parts{c(4), disjoint_union(c(3), e(1)), e(4),
                                       pendant_triangle()};
  return gen_lex_product(c(4), parts, ProductContract::seymour);
}

Orientation c62_weighted() {
  const std::vector<Orientation> parts{e(1), e(3), e(1), e(3), e(1), c(3)};
  return gen_lex_product(build_family(FamilySpec::cycle_power(6, 2)), parts,
                         ProductContract::seymour);
}

}  // namespace fixtures

}  // namespace stight
