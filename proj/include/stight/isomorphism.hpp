#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stight/digraph.hpp"

namespace stight {

/// Vertex bijection `perm` (perm[v1] = v2) with relabel(d1, perm) == d2, or
/// nullopt. Colour refinement seeded with in/out degree and second
/// neighbourhood sizes prunes the backtracking; intended for n up to about
/// 16, slower beyond that but never refused.
std::optional<std::vector<Vertex>> find_isomorphism(const Digraph& d1,
                                                    const Digraph& d2);
bool is_isomorphic(const Digraph& d1, const Digraph& d2);

/// Largest order accepted by canonical_form.
inline constexpr std::size_t kCanonicalFormMaxOrder = 9;

/// Relabelling of `d` whose sorted edge list is lexicographically least over
/// all n! permutations. Throws RefusalError above kCanonicalFormMaxOrder.
Digraph canonical_form(const Digraph& d);

/// Isomorphism-invariant fingerprint (equal for isomorphic graphs).
std::size_t invariant_hash(const Digraph& d);

}  // namespace stight
