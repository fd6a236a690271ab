#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stight/digraph.hpp"
#include "stight/tightness.hpp"

namespace stight {

enum class FamilyKind { empty, directed_cycle, cycle_power, regular_tournament };

struct FamilySpec {
  FamilyKind kind = FamilyKind::empty;
  std::size_t n = 0;  // order
  std::size_t k = 0;  // power; (n-1)/2 for tournaments

  static FamilySpec empty(std::size_t m) { return {FamilyKind::empty, m, 0}; }
  static FamilySpec cycle(std::size_t n) { return {FamilyKind::directed_cycle, n, 1}; }
  static FamilySpec cycle_power(std::size_t n, std::size_t k) {
    return {FamilyKind::cycle_power, n, k};
  }
  static FamilySpec tournament(std::size_t m) {
    return {FamilyKind::regular_tournament, m, m >= 1 ? (m - 1) / 2 : 0};
  }

  /// Throws InputError when the parameters are out of range.
  void validate() const;
  /// "E3", "C5", "C9^2", "T7".
  std::string name() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Orientation build_family(const FamilySpec& spec);

/// D[G] with (v,i) -> v*|G| + i.
Orientation lex_product(const Orientation& d, const Orientation& g);

enum class ProductContract { none, seymour, sullivan };

/// D[G_1..G_n]; block i starts at the prefix sum of the earlier part sizes.
/// The seymour (sullivan) contract requires every part to be Seymour-tight
/// (Sullivan-tight) and the size vector x to satisfy M x = 0, where M is the
/// sign matrix of the outer graph restricted to the support of x. Violations
/// throw ValidationError naming the part or the outer row.
Orientation gen_lex_product(const Orientation& outer,
                            std::span<const Orientation> parts,
                            ProductContract contract = ProductContract::none);

/// v sees all of X as in-neighbours, all as out-neighbours, or none at all.
/// Throws InputError if v is in X.
bool is_uniform_on(const Orientation& d, Vertex v, std::span<const Vertex> x);

enum class ReplaceContract {
  none,     // uniformity only
  seymour,  // def_H(x) >= def_{D|X}(x) for every x
  tight,    // D, D|X and H all Seymour-tight
};

/// Replaces the arcs inside X with H, matching X (ascending) to 0..|H|-1.
Orientation replace_uniform_subset(const Orientation& d, std::span<const Vertex> x,
                                   const Orientation& h,
                                   ReplaceContract contract = ReplaceContract::tight);

/// D then G (offset |D|), plus u -> x for every u in D and x in X. Requires
/// |N+1(X) \ X| = |X|.
Orientation add_source_by_neighbourhood_copy(const Orientation& d,
                                             const Orientation& g,
                                             std::span<const Vertex> x);

/// Throws ValidationError naming the first arc of D whose image is not an arc
/// of G, InputError if f has the wrong shape.
void check_homomorphism(const Orientation& d, const Orientation& g,
                        std::span<const Vertex> f);

/// D then G; adds d -> g for every g in N+1(f(d)).
Orientation hom_source_attach(const Orientation& d, const Orientation& g,
                              std::span<const Vertex> f);
/// D then G; adds g -> d whenever f(d) is in N+1(g). f must be a bijection.
Orientation hom_bijective_attach(const Orientation& d, const Orientation& g,
                                 std::span<const Vertex> f);

/// Sinks and C3[E_k] gadgets make D tight, then the result is wrapped as
/// C3[D']. Guest vertex v maps to host vertex v.
EmbeddingMap embed_in_seymour_tight(const Orientation& d);

/// Deficiency of (v,i) in D[G] is |G|*def_D(v) + def_G(i), for either kind.
std::vector<std::int64_t> deficiency_of_product(const NeighbourhoodProfile& pd,
                                                std::size_t size_g,
                                                const NeighbourhoodProfile& pg,
                                                SignKind kind = SignKind::seymour);

namespace fixtures {

/// C3 on {0,1,2} plus 3 -> 0.
Orientation pendant_triangle();
/// C3[E2].
Orientation c3_e2();
/// C3[C3, E3, E3].
Orientation c3_c3e3e3();
/// Source copy of N+1(0) in C3, source first.
Orientation triangle_with_source();
/// Two triangles joined through the identity homomorphism.
Orientation twin_triangles();
/// C3[E3, E3, C3].
Orientation c3_e3e3c3();
/// C4[C4, C3+K1, E4, pendant triangle].
Orientation c4_mixed();
/// C6^2[K1, E3, K1, E3, K1, C3].
Orientation c62_weighted();

}  // namespace fixtures

}  // namespace stight
