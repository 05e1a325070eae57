#pragma once

#include "sl2/group_set.hpp"

namespace sl2 {

/// C(g) = {h : hg = gh}, by scan over the enumerated group. For regular
/// semisimple g this is a maximal torus, of size q-1 (split) or q+1
/// (non-split) according to whether tr(g)^2 - 4 is a square.
GroupSet centralizer(GroupPtr G, const Sl2Elem& g);

/// Cl(g) = {h g h^{-1}}; satisfies |Cl(g)| * |C(g)| = |G|.
GroupSet conjugacy_class(GroupPtr G, const Sl2Elem& g);

/// V_t = elements of trace t (determinant 1 is implicit in the carrier).
GroupSet trace_variety(GroupPtr G, FqElem t);

/// The split torus of diagonal matrices diag(r, 1/r).
GroupSet diagonal_torus(GroupPtr G);

struct TorusCensus {
  uint32_t n_split = 0;
  uint32_t n_nonsplit = 0;
  /// every pair of distinct maximal tori meets exactly in {e, -e}
  bool pairwise_ok = true;
};

/// Enumerates the distinct maximal tori as centralizers of rss elements.
TorusCensus count_tori(GroupPtr G);

}  // namespace sl2
