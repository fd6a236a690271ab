#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "stight/constructions.hpp"
#include "stight/digraph.hpp"

namespace stight {

/// Z_{n1} x ... x Z_{nr}. Elements are indexed 0..order-1 in lexicographic
/// tuple order (first factor most significant); index 0 is the identity.
class AbelianGroup {
 public:
  using Element = std::size_t;

  /// The trivial group.
  AbelianGroup() : AbelianGroup(std::vector<std::size_t>{}) {}
  /// Every factor must be >= 2 (InputError).
  explicit AbelianGroup(std::vector<std::size_t> factors);
  static AbelianGroup cyclic(std::size_t n);

  const std::vector<std::size_t>& factors() const { return factors_; }
  std::size_t order() const { return order_; }

  Element add(Element a, Element b) const { return add_[a * order_ + b]; }
  Element neg(Element a) const { return neg_[a]; }
  std::size_t element_order(Element a) const;

  std::vector<std::size_t> to_tuple(Element a) const;
  Element from_tuple(const std::vector<std::size_t>& t) const;

  /// "4" for cyclic groups, "1.3" for tuples.
  std::string format(Element a) const;
  /// Parses format(); throws InputError.
  Element parse(const std::string& text) const;
  /// "Z6", "Z2xZ4", "Z1" for the trivial group.
  std::string name() const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<std::size_t> factors_;
  std::size_t order_ = 1;
  std::vector<Element> add_;
  std::vector<Element> neg_;
};

/// Sorted subset S of G with 0 not in S and S disjoint from -S.
class ConnectionSet {
 public:
  /// Throws InputError naming the offending element.
  ConnectionSet(AbelianGroup group, std::vector<AbelianGroup::Element> elements);

  const AbelianGroup& group() const { return group_; }
  const std::vector<AbelianGroup::Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::string format() const;

 private:
  AbelianGroup group_;
  std::vector<AbelianGroup::Element> elements_;
};

constexpr std::size_t kGroupCap = 24;

/// Arc g -> g+s for every g and s in S.
Orientation cayley_digraph(const ConnectionSet& s);

/// A + B, sorted.
std::vector<AbelianGroup::Element> sumset(const AbelianGroup& g,
                                          const std::vector<AbelianGroup::Element>& a,
                                          const std::vector<AbelianGroup::Element>& b);

/// |S u (S+S)| = 2|S|.
bool seymour_set_criterion(const ConnectionSet& s);

/// Every Seymour connection set of G, sorted by element lists. With
/// up_to_auto only the lexicographically least set of each automorphism
/// orbit is kept. Refuses groups above `cap`.
std::vector<ConnectionSet> enumerate_seymour_connection_sets(const AbelianGroup& g,
                                                             bool up_to_auto = false,
                                                             std::size_t cap = kGroupCap);

/// Automorphisms as element permutations, found by brute force over images
/// of the unit generators.
std::vector<std::vector<AbelianGroup::Element>> automorphisms(const AbelianGroup& g);

using Subgroup = std::vector<AbelianGroup::Element>;

/// All subgroups, each sorted, ordered by size then elements.
std::vector<Subgroup> subgroups(const AbelianGroup& g, std::size_t cap = kGroupCap);
/// Smallest subgroup containing `gens`.
Subgroup generated_subgroup(const AbelianGroup& g, const std::vector<AbelianGroup::Element>& gens);
bool is_subgroup(const AbelianGroup& g, const std::vector<AbelianGroup::Element>& f);

/// Cosets of F, each sorted, ordered by smallest element.
std::vector<std::vector<AbelianGroup::Element>> cosets(const AbelianGroup& g, const Subgroup& f);

struct Quotient {
  AbelianGroup group;
  std::vector<AbelianGroup::Element> projection;  // element of G -> element of G/F
};

/// G/F in invariant-factor form with an explicit surjection.
Quotient quotient(const AbelianGroup& g, const Subgroup& f);

/// Invariant-factor presentations d1 | d2 | ... of every abelian group of
/// order n.
std::vector<AbelianGroup> abelian_groups_of_order(std::size_t n);

/// Leaves are Empty, CyclePower or RegularTournament; internal nodes are
/// lexicographic products with children {outer, inner}.
struct LexDecomposition {
  bool is_leaf = true;
  FamilySpec leaf;
  Orientation leaf_graph;  // concrete leaf; tournaments need not be circulant
  std::vector<LexDecomposition> children;

  static LexDecomposition make_leaf(FamilySpec spec, Orientation graph);
  static LexDecomposition make_product(LexDecomposition outer, LexDecomposition inner);

  /// "Lex(C3, E2)".
  std::string name() const;
  /// One node per line, two spaces per level.
  std::string text() const;
  nlohmann::ordered_json to_json() const;
  Orientation reconstruct() const;
  std::vector<const LexDecomposition*> leaves() const;
};

/// Decomposes a Seymour Cayley orientation. Throws InputError if the
/// criterion fails and TheoremViolation if no decomposition is found.
LexDecomposition classify_abelian_seymour(const ConnectionSet& s);

}  // namespace stight
