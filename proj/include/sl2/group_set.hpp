#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/rng.hpp"

namespace sl2 {

/// Exact subset of an enumerated SL2(F_q), keyed by element rank (the
/// canonical-index order). Dense sets hold a bit vector over the whole
/// group, sparse sets a sorted rank list; the switch happens at
/// |A| > |G|/64, where both cost the same memory. Values are immutable
/// after construction.
class GroupSet {
 public:
  static GroupSet empty(GroupPtr G);
  static GroupSet full(GroupPtr G);
  static GroupSet of_ranks(GroupPtr G, std::vector<uint32_t> ranks);  // dedups
  static GroupSet of_elems(GroupPtr G, const std::vector<Sl2Elem>& elems);
  static GroupSet singleton(GroupPtr G, const Sl2Elem& g);

  const GroupPtr& group() const { return G_; }
  uint32_t size() const { return size_; }
  bool is_empty() const { return size_ == 0; }
  bool contains(uint32_t rank) const;
  bool contains_elem(const Sl2Elem& g) const;

  /// Ranks in ascending order.
  std::vector<uint32_t> ranks() const;
  void for_each(const std::function<void(uint32_t)>& fn) const;

  GroupSet product(const GroupSet& B) const;  // {x y : x in this, y in B}
  GroupSet inverse() const;
  GroupSet symmetrized() const;  // A ∪ A^{-1} ∪ {e}
  GroupSet power(int k) const;   // A^k, k >= 1
  GroupSet power_sym(int k) const { return symmetrized().power(k); }

  GroupSet unite(const GroupSet& B) const;
  GroupSet intersect(const GroupSet& B) const;
  GroupSet without(const GroupSet& B) const;

  bool is_symmetric() const { return *this == inverse(); }
  bool is_subset_of(const GroupSet& B) const;
  bool operator==(const GroupSet& B) const;

  /// Left translate {g x : x in this}.
  GroupSet translate_left(uint32_t g_rank) const;
  /// Conjugate {g x g^{-1} : x in this}.
  GroupSet conjugate(uint32_t g_rank) const;

 private:
  GroupSet(GroupPtr G) : G_(std::move(G)) {}
  void normalize(std::vector<uint64_t> bits, uint32_t count);
  static void check_same_group(const GroupSet& A, const GroupSet& B);

  GroupPtr G_;
  bool dense_ = false;
  std::vector<uint64_t> bits_;    // dense mode
  std::vector<uint32_t> ranks_;   // sparse mode, sorted
  uint32_t size_ = 0;
};

/// Seeded draw of k distinct group elements (ranks), in canonical order.
GroupSet random_set(GroupPtr G, uint32_t k, Rng& rng);
/// Random A with A = A^{-1}: draws elements and closes under inverse until
/// the size reaches at least k.
GroupSet random_symmetric_set(GroupPtr G, uint32_t k, Rng& rng);
/// Random set of k elements that generates the group; retries the draw
/// (deterministically) until the BFS closure is everything.
GroupSet random_generating_set(GroupPtr G, uint32_t k, Rng& rng);

/// Set of ranks reachable from e by left-multiplying with A ∪ A^{-1},
/// i.e. the subgroup generated by A.
GroupSet bfs_closure(const GroupSet& A);
bool generates(const GroupSet& A);

}  // namespace sl2
