#include "stight/groups.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stight/errors.hpp"
#include "stight/isomorphism.hpp"
#include "stight/io.hpp"
#include "stight/tightness.hpp"

namespace stight {

using Element = AbelianGroup::Element;

AbelianGroup::AbelianGroup(std::vector<std::size_t> factors) : factors_(std::move(factors)) {
  for (std::size_t f : factors_) {
    if (f < 2) throw InputError("group factor must be >= 2, got " + std::to_string(f));
    order_ *= f;
    if (order_ > 4096) throw RefusalError("group order too large for explicit tables");
  }
  add_.resize(order_ * order_);
  neg_.resize(order_);
  std::vector<std::vector<std::size_t>> tuples(order_);
  for (Element a = 0; a < order_; ++a) tuples[a] = to_tuple(a);
  for (Element a = 0; a < order_; ++a) {
    std::vector<std::size_t> t(factors_.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (factors_[i] - tuples[a][i]) % factors_[i];
    neg_[a] = from_tuple(t);
    for (Element b = 0; b < order_; ++b) {
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = (tuples[a][i] + tuples[b][i]) % factors_[i];
      add_[a * order_ + b] = from_tuple(t);
    }
  }
}

AbelianGroup AbelianGroup::cyclic(std::size_t n) {
  if (n == 1) return AbelianGroup();
  return AbelianGroup({n});
}

std::size_t AbelianGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = add(x, a)) ++k;
  return k;
}

std::vector<std::size_t> AbelianGroup::to_tuple(Element a) const {
  std::vector<std::size_t> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    t[i] = a % factors_[i];
    a /= factors_[i];
  }
  return t;
}

Element AbelianGroup::from_tuple(const std::vector<std::size_t>& t) const {
  if (t.size() != factors_.size()) throw InputError("tuple has wrong length");
  Element a = 0;
  for (std::size_t i = 0; i < t.size(); ++i) a = a * factors_[i] + t[i] % factors_[i];
  return a;
}

std::string AbelianGroup::format(Element a) const {
  const auto t = to_tuple(a);
  if (t.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(t[i]);
  }
  return s;
}

Element AbelianGroup::parse(const std::string& text) const {
  std::vector<std::size_t> t;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad group element '" + text + "'");
    t.push_back(std::stoul(part));
  }
  if (factors_.empty() && t == std::vector<std::size_t>{0}) return 0;
  if (t.size() != factors_.size())
    throw InputError("element '" + text + "' needs " + std::to_string(factors_.size()) + " coordinates");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] >= factors_[i]) throw InputError("coordinate out of range in '" + text + "'");
  return from_tuple(t);
}

std::string AbelianGroup::name() const {
  if (factors_.empty()) return "Z1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += "Z" + std::to_string(factors_[i]);
  }
  return s;
}

ConnectionSet::ConnectionSet(AbelianGroup group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  std::vector<bool> in(group_.order(), false);
  for (Element s : elements_) {
    if (s >= group_.order()) throw InputError("element index " + std::to_string(s) + " not in group");
    if (s == 0) throw InputError("connection set contains the identity");
    in[s] = true;
  }
  for (Element s : elements_) {
    if (in[group_.neg(s)]) {
      throw InputError("connection set contains " + group_.format(s) + " and its inverse " +
                       group_.format(group_.neg(s)));
    }
  }
}

std::string ConnectionSet::format() const {
  std::string s = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) s += ',';
    s += group_.format(elements_[i]);
  }
  return s + "}";
}

Orientation cayley_digraph(const ConnectionSet& s) {
  const AbelianGroup& g = s.group();
  std::vector<Arc> arcs;
  arcs.reserve(g.order() * s.size());
  for (Element x = 0; x < g.order(); ++x)
    for (Element e : s.elements())
      arcs.push_back({static_cast<Vertex>(x), static_cast<Vertex>(g.add(x, e))});
  return Orientation(g.order(), arcs);
}

std::vector<Element> sumset(const AbelianGroup& g, const std::vector<Element>& a,
                            const std::vector<Element>& b) {
  std::vector<bool> hit(g.order(), false);
  for (Element x : a)
    for (Element y : b) hit[g.add(x, y)] = true;
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (hit[x]) out.push_back(x);
  return out;
}

bool seymour_set_criterion(const ConnectionSet& s) {
  std::vector<Element> both = sumset(s.group(), s.elements(), s.elements());
  both.insert(both.end(), s.elements().begin(), s.elements().end());
  std::sort(both.begin(), both.end());
  both.erase(std::unique(both.begin(), both.end()), both.end());
  return both.size() == 2 * s.size();
}

std::vector<std::vector<Element>> automorphisms(const AbelianGroup& g) {
  const std::size_t r = g.factors().size();
  std::vector<Element> unit(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::size_t> t(r, 0);
    t[i] = 1;
    unit[i] = g.from_tuple(t);
  }
  // Candidate images for generator i: elements whose order divides n_i.
  std::vector<std::vector<Element>> options(r);
  for (std::size_t i = 0; i < r; ++i)
    for (Element x = 0; x < g.order(); ++x)
      if (g.factors()[i] % g.element_order(x) == 0) options[i].push_back(x);

  std::vector<std::vector<Element>> result;
  std::vector<Element> image(r);
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == r) {
      std::vector<Element> perm(g.order());
      std::vector<bool> used(g.order(), false);
      for (Element x = 0; x < g.order(); ++x) {
        const auto t = g.to_tuple(x);
        Element y = 0;
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t c = 0; c < t[j]; ++c) y = g.add(y, image[j]);
        if (used[y]) return;
        used[y] = true;
        perm[x] = y;
      }
      result.push_back(std::move(perm));
      return;
    }
    for (Element x : options[i]) {
      image[i] = x;
      self(self, i + 1);
    }
  };
  recurse(recurse, 0);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<ConnectionSet> enumerate_seymour_connection_sets(const AbelianGroup& g, bool up_to_auto,
                                                             std::size_t cap) {
  if (g.order() > cap) {
    throw RefusalError("group order " + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(cap));
  }
  // Each pair {x, -x} with x != -x contributes nothing, x, or -x.
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 1; x < g.order(); ++x)
    if (x < g.neg(x)) pairs.push_back({x, g.neg(x)});

  std::vector<std::vector<Element>> sets;
  std::vector<Element> current;
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == pairs.size()) {
      ConnectionSet cs(g, current);
      if (seymour_set_criterion(cs)) sets.push_back(cs.elements());
      return;
    }
    self(self, i + 1);
    for (Element pick : {pairs[i].first, pairs[i].second}) {
      current.push_back(pick);
      self(self, i + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);

  if (up_to_auto) {
    const auto autos = automorphisms(g);
    std::set<std::vector<Element>> reps;
    for (const auto& s : sets) {
      std::vector<Element> best = s;
      for (const auto& a : autos) {
        std::vector<Element> img;
        for (Element x : s) img.push_back(a[x]);
        std::sort(img.begin(), img.end());
        best = std::min(best, img);
      }
      reps.insert(best);
    }
    sets.assign(reps.begin(), reps.end());
  }
  std::sort(sets.begin(), sets.end());
  std::vector<ConnectionSet> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(g, std::move(s));
  return out;
}

Subgroup generated_subgroup(const AbelianGroup& g, const std::vector<Element>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{0}, frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : gens) {
      const Element y = g.add(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_subgroup(const AbelianGroup& g, const std::vector<Element>& f) {
  if (f.empty()) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : f) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  for (Element x : f)
    for (Element y : f)
      if (!in[g.add(x, g.neg(y))]) return false;
  return true;
}

std::vector<Subgroup> subgroups(const AbelianGroup& g, std::size_t cap) {
  if (g.order() > cap) {
    throw RefusalError("group order " + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(cap));
  }
  std::set<Subgroup> seen{{0}};
  std::vector<Subgroup> queue{{0}};
  while (!queue.empty()) {
    const Subgroup h = queue.back();
    queue.pop_back();
    for (Element x = 1; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Element> gens = h;
      gens.push_back(x);
      Subgroup joined = generated_subgroup(g, gens);
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<Subgroup> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<Element>> cosets(const AbelianGroup& g, const Subgroup& f) {
  if (!is_subgroup(g, f)) throw InputError("not a subgroup");
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<Element>> out;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> c;
    for (Element y : f) c.push_back(g.add(x, y));
    std::sort(c.begin(), c.end());
    for (Element y : c) done[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

// Smith normal form of `a` (rows x cols). Returns the diagonal and the column
// transform V with U a V = diag.
std::vector<std::int64_t> smith(Matrix a, Matrix& v) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : v.size();
  v.assign(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;
  auto col_axpy = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (auto& row : a) row[target] -= q * row[source];
    for (auto& row : v) row[target] -= q * row[source];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : v) std::swap(row[x], row[y]);
  };
  std::vector<std::int64_t> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t br = rows, bc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a[r][c] != 0 && (br == rows || std::llabs(a[r][c]) < std::llabs(a[br][bc]))) {
            br = r;
            bc = c;
          }
      if (br == rows) return diag;
      std::swap(a[t], a[br]);
      col_swap(t, bc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const std::int64_t q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        col_axpy(c, t, a[t][c] / a[t][t]);
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into row t and retry.
      std::size_t bad = rows;
      for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad][c];
    }
    if (a[t][t] < 0) {
      for (std::size_t c = t; c < cols; ++c) a[t][c] = -a[t][c];
    }
    diag.push_back(a[t][t]);
  }
  return diag;
}

}  // namespace

Quotient quotient(const AbelianGroup& g, const Subgroup& f) {
  if (!is_subgroup(g, f)) throw InputError("not a subgroup");
  const std::size_t r = g.factors().size();
  Matrix rel;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::int64_t> row(r, 0);
    row[i] = static_cast<std::int64_t>(g.factors()[i]);
    rel.push_back(row);
  }
  for (Element x : f) {
    if (x == 0) continue;
    const auto t = g.to_tuple(x);
    rel.emplace_back(t.begin(), t.end());
  }
  Matrix v;
  std::vector<std::int64_t> diag = r ? smith(rel, v) : std::vector<std::int64_t>{};
  diag.resize(r, 0);  // a zero invariant means the quotient is infinite, which cannot happen
  // Normalise column signs so each kept coordinate starts positive.
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i][c] == 0) continue;
      if (v[i][c] < 0)
        for (std::size_t j = 0; j < r; ++j) v[j][c] = -v[j][c];
      break;
    }
  }
  std::vector<std::size_t> keep, factors;
  for (std::size_t c = 0; c < r; ++c) {
    if (diag[c] == 0) throw std::logic_error("degenerate quotient");
    if (diag[c] > 1) {
      keep.push_back(c);
      factors.push_back(static_cast<std::size_t>(diag[c]));
    }
  }
  Quotient q{AbelianGroup(factors), std::vector<Element>(g.order())};
  for (Element x = 0; x < g.order(); ++x) {
    const auto t = g.to_tuple(x);
    std::vector<std::size_t> img(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
      std::int64_t y = 0;
      for (std::size_t i = 0; i < r; ++i) y += static_cast<std::int64_t>(t[i]) * v[i][keep[k]];
      const auto d = static_cast<std::int64_t>(factors[k]);
      img[k] = static_cast<std::size_t>(((y % d) + d) % d);
    }
    q.projection[x] = q.group.from_tuple(img);
  }
  // Sanity: homomorphism with kernel F.
  for (Element x = 0; x < g.order(); ++x) {
    const bool in_f = std::binary_search(f.begin(), f.end(), x);
    if ((q.projection[x] == 0) != in_f) throw std::logic_error("quotient map has wrong kernel");
    for (Element y = 0; y < g.order(); ++y)
      if (q.projection[g.add(x, y)] != q.group.add(q.projection[x], q.projection[y]))
        throw std::logic_error("quotient map is not a homomorphism");
  }
  return q;
}

std::vector<AbelianGroup> abelian_groups_of_order(std::size_t n) {
  if (n == 0) throw InputError("group order must be positive");
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> chain;
  // d1 | d2 | ... | dk with product n.
  auto recurse = [&](auto&& self, std::size_t rest, std::size_t prev) -> void {
    if (rest == 1) {
      out.emplace_back(chain);
      return;
    }
    for (std::size_t d = prev; d <= rest; d += prev) {
      if (d < 2 || rest % d != 0) continue;
      // Later factors are multiples of d, so d^k must divide what remains.
      if ((rest / d) % d != 0 && rest != d) continue;
      chain.push_back(d);
      self(self, rest / d, d);
      chain.pop_back();
    }
  };
  recurse(recurse, n, 1);
  std::sort(out.begin(), out.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors() < b.factors();
  });
  return out;
}

LexDecomposition LexDecomposition::make_leaf(FamilySpec spec, Orientation graph) {
  LexDecomposition d;
  d.is_leaf = true;
  d.leaf = spec;
  d.leaf_graph = std::move(graph);
  return d;
}

LexDecomposition LexDecomposition::make_product(LexDecomposition outer, LexDecomposition inner) {
  // E_a[E_b] is E_ab.
  if (outer.is_leaf && inner.is_leaf && outer.leaf.kind == FamilyKind::empty &&
      inner.leaf.kind == FamilyKind::empty) {
    const std::size_t m = outer.leaf.n * inner.leaf.n;
    return make_leaf(FamilySpec::empty(m), Orientation(m));
  }
  LexDecomposition d;
  d.is_leaf = false;
  d.children.push_back(std::move(outer));
  d.children.push_back(std::move(inner));
  return d;
}

std::string LexDecomposition::name() const {
  if (is_leaf) return leaf.name();
  return "Lex(" + children[0].name() + ", " + children[1].name() + ")";
}

namespace {

void write_text(const LexDecomposition& d, std::size_t depth, std::string& out) {
  out += std::string(2 * depth, ' ');
  if (d.is_leaf) {
    out += d.leaf.name() + "\n";
    return;
  }
  out += "Lex\n";
  for (const auto& c : d.children) write_text(c, depth + 1, out);
}

const char* kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::empty: return "empty";
    case FamilyKind::directed_cycle: return "cycle";
    case FamilyKind::cycle_power: return "cycle-power";
    case FamilyKind::regular_tournament: return "regular-tournament";
  }
  return "";
}

}  // namespace

std::string LexDecomposition::text() const {
  std::string out;
  write_text(*this, 0, out);
  return out;
}

nlohmann::ordered_json LexDecomposition::to_json() const {
  nlohmann::ordered_json j;
  if (!is_leaf) {
    j["type"] = "lex";
    j["name"] = name();
    j["outer"] = children[0].to_json();
    j["inner"] = children[1].to_json();
    return j;
  }
  j["type"] = kind_name(leaf.kind);
  j["name"] = leaf.name();
  j["order"] = leaf.n;
  if (leaf.kind != FamilyKind::empty) j["k"] = leaf.k;
  if (leaf.kind == FamilyKind::regular_tournament) {
    nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
    for (const Arc& a : leaf_graph.arcs()) arcs.push_back({a.from, a.to});
    j["arcs"] = arcs;
  }
  return j;
}

Orientation LexDecomposition::reconstruct() const {
  if (is_leaf) return leaf_graph;
  return lex_product(children[0].reconstruct(), children[1].reconstruct());
}

std::vector<const LexDecomposition*> LexDecomposition::leaves() const {
  if (is_leaf) return {this};
  auto out = children[0].leaves();
  for (auto* p : children[1].leaves()) out.push_back(p);
  return out;
}

namespace {

// Cayley digraph of g on `a` minus the identity, restricted to `members`.
Orientation cayley_on(const AbelianGroup& g, const std::vector<Element>& a,
                      const std::vector<Element>& members) {
  std::vector<Element> s;
  for (Element x : a)
    if (x != 0) s.push_back(x);
  const Orientation whole = cayley_digraph(ConnectionSet(g, s));
  std::vector<Vertex> vs(members.begin(), members.end());
  return induced_subgraph(whole, vs);
}

LexDecomposition with_copies(std::size_t copies, LexDecomposition leaf) {
  if (copies == 1) return leaf;
  return LexDecomposition::make_product(
      LexDecomposition::make_leaf(FamilySpec::empty(copies), Orientation(copies)), std::move(leaf));
}

// The part of A inside F, as one of the three leaf patterns, tried in the
// order empty, tournament, progression.
std::optional<LexDecomposition> leaf_pattern(const AbelianGroup& g, const Subgroup& f,
                                             const std::vector<Element>& a_in) {
  if (a_in.size() == 1) {
    return LexDecomposition::make_leaf(FamilySpec::empty(f.size()), Orientation(f.size()));
  }
  const Subgroup h = generated_subgroup(g, a_in);
  if (2 * a_in.size() - 1 == h.size() && sumset(g, a_in, a_in) == h) {
    const FamilySpec spec = h.size() == 3 ? FamilySpec::cycle_power(3, 1) : FamilySpec::tournament(h.size());
    return with_copies(f.size() / h.size(),
                       LexDecomposition::make_leaf(spec, cayley_on(g, a_in, h)));
  }
  const std::size_t k = a_in.size() - 1;
  for (Element d : a_in) {
    if (d == 0) continue;
    std::vector<Element> prog{0};
    Element x = 0;
    for (std::size_t i = 0; i < k; ++i) prog.push_back(x = g.add(x, d));
    std::sort(prog.begin(), prog.end());
    if (prog != a_in) continue;
    const std::size_t m = g.element_order(d);
    if (m < 2 * k + 1) continue;
    const Subgroup cyc = generated_subgroup(g, {d});
    return with_copies(f.size() / m, LexDecomposition::make_leaf(FamilySpec::cycle_power(m, k),
                                                            cayley_on(g, a_in, cyc)));
  }
  return std::nullopt;
}

std::optional<LexDecomposition> decompose(const AbelianGroup& g, const std::vector<Element>& a) {
  if (g.order() == 1) return LexDecomposition::make_leaf(FamilySpec::empty(1), Orientation(1));
  std::vector<bool> in_a(g.order(), false);
  for (Element x : a) in_a[x] = true;
  for (const Subgroup& f : subgroups(g)) {
    if (f.size() < 2) continue;
    std::vector<Element> a_in, a_out;
    for (Element x : a) (std::binary_search(f.begin(), f.end(), x) ? a_in : a_out).push_back(x);
    bool unions = true;
    for (Element x : a_out)
      for (Element y : f)
        if (!in_a[g.add(x, y)]) unions = false;
    if (!unions) continue;
    auto leaf = leaf_pattern(g, f, a_in);
    if (!leaf) continue;
    if (f.size() == g.order()) return leaf;
    const Quotient q = quotient(g, f);
    std::vector<Element> x{0};
    for (Element y : a_out) x.push_back(q.projection[y]);
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    auto outer = decompose(q.group, x);
    if (!outer) continue;
    return LexDecomposition::make_product(std::move(*outer), std::move(*leaf));
  }
  return std::nullopt;
}

}  // namespace

LexDecomposition classify_abelian_seymour(const ConnectionSet& s) {
  if (!seymour_set_criterion(s))
    throw InputError("connection set " + s.format() + " fails the Seymour criterion");
  std::vector<Element> a = s.elements();
  a.push_back(0);
  std::sort(a.begin(), a.end());
  const std::string where = s.group().name() + " with S = " + s.format();
  auto result = decompose(s.group(), a);
  if (!result) throw TheoremViolation("no lexicographic decomposition for " + where);
  if (!is_isomorphic(result->reconstruct(), cayley_digraph(s)))
    throw TheoremViolation("decomposition " + result->name() + " does not reconstruct " + where);
  return std::move(*result);
}

}  // namespace stight
