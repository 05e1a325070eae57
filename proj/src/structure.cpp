#include "sl2/structure.hpp"

#include <algorithm>
#include <map>

namespace sl2 {

GroupSet centralizer(GroupPtr G, const Sl2Elem& g) {
  std::vector<uint32_t> out;
  uint32_t gr = G->rank_of(g);
  for (uint32_t h = 0; h < G->order(); ++h)
    if (G->mul_rank(h, gr) == G->mul_rank(gr, h)) out.push_back(h);
  return GroupSet::of_ranks(std::move(G), std::move(out));
}

GroupSet conjugacy_class(GroupPtr G, const Sl2Elem& g) {
  std::vector<uint32_t> out;
  uint32_t gr = G->rank_of(g);
  for (uint32_t h = 0; h < G->order(); ++h)
    out.push_back(G->mul_rank(G->mul_rank(h, gr), G->inv_rank(h)));
  return GroupSet::of_ranks(std::move(G), std::move(out));
}

GroupSet trace_variety(GroupPtr G, FqElem t) {
  std::vector<uint32_t> out;
  for (uint32_t r = 0; r < G->order(); ++r)
    if (G->trace(G->element(r)) == t) out.push_back(r);
  return GroupSet::of_ranks(std::move(G), std::move(out));
}

GroupSet diagonal_torus(GroupPtr G) {
  const Field& F = G->field();
  std::vector<Sl2Elem> elems;
  for (uint32_t rc = 1; rc < F.q(); ++rc) {
    FqElem r{rc};
    elems.push_back(Sl2Elem{{r, F.zero(), F.zero(), F.inv(r)}});
  }
  return GroupSet::of_elems(std::move(G), elems);
}

TorusCensus count_tori(GroupPtr G) {
  // Tori keyed by their sorted member list; rss elements with the same
  // centralizer give the same torus exactly once.
  std::map<std::vector<uint32_t>, GroupSet> tori;
  for (uint32_t r = 0; r < G->order(); ++r) {
    const Sl2Elem& g = G->element(r);
    if (!G->is_rss(g)) continue;
    GroupSet T = centralizer(G, g);
    tori.emplace(T.ranks(), T);
  }

  TorusCensus census;
  const uint32_t q = G->field().q();
  std::vector<const GroupSet*> list;
  for (auto& [key, T] : tori) {
    list.push_back(&T);
    if (T.size() == q - 1)
      ++census.n_split;
    else if (T.size() == q + 1)
      ++census.n_nonsplit;
    else
      fail(Err::BadInput, "torus of size " + std::to_string(T.size()));
  }

  GroupSet center = GroupSet::of_ranks(
      G, {G->identity_rank(), G->minus_identity_rank()});
  for (size_t i = 0; i < list.size() && census.pairwise_ok; ++i)
    for (size_t j = i + 1; j < list.size(); ++j) {
      if (!(list[i]->intersect(*list[j]) == center)) {
        census.pairwise_ok = false;
        break;
      }
    }
  return census;
}

}  // namespace sl2
