#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sl2/field.hpp"

namespace sl2 {

/// 2x2 matrix over F_q with determinant 1, row-major [a b; c d].
struct Sl2Elem {
  std::array<FqElem, 4> m{};
  auto operator<=>(const Sl2Elem&) const = default;
};

constexpr uint64_t kDefaultGroupCap = 2'000'000;

/// SL2(F_q), fully enumerated. Rank r = position of an element in the
/// enumeration, which is ordered by CanonicalIndex
///   idx = ((enc(a) q + enc(b)) q + enc(c)) q + enc(d)
/// with enc the field's element code. Ranks are the dense keys used by
/// sets, walks, and every golden file.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static std::shared_ptr<const Group> enumerate(const Field& F,
                                                uint64_t cap = kDefaultGroupCap);

  const Field& field() const { return F_; }
  uint32_t order() const { return static_cast<uint32_t>(elems_.size()); }

  const Sl2Elem& element(uint32_t rank) const { return elems_[rank]; }
  uint64_t canonical_index(const Sl2Elem& g) const;
  uint32_t rank_of(const Sl2Elem& g) const;

  Sl2Elem make(FqElem a, FqElem b, FqElem c, FqElem d) const;  // DetNotOne
  Sl2Elem make_ints(int64_t a, int64_t b, int64_t c, int64_t d) const;
  Sl2Elem identity() const;
  Sl2Elem minus_identity() const;
  uint32_t identity_rank() const { return id_rank_; }
  uint32_t minus_identity_rank() const { return neg_id_rank_; }

  FqElem det(const Sl2Elem& g) const;
  FqElem trace(const Sl2Elem& g) const { return F_.add(g.m[0], g.m[3]); }
  Sl2Elem mul(const Sl2Elem& g, const Sl2Elem& h) const;
  Sl2Elem inv(const Sl2Elem& g) const;  // [d -b; -c a]
  Sl2Elem neg(const Sl2Elem& g) const;
  /// Regular semisimple: two distinct eigenvalues, i.e. tr not in {2,-2}.
  bool is_rss(const Sl2Elem& g) const;

  uint32_t mul_rank(uint32_t g, uint32_t h) const;
  uint32_t inv_rank(uint32_t g) const;
  uint32_t neg_rank(uint32_t g) const;

  /// Builds the order^2 multiplication table; products then cost one load.
  /// Only sensible for small groups (refused above 4096 elements).
  void ensure_mul_table() const;
  bool has_mul_table() const { return !mul_table_.empty(); }

  std::string to_string(const Sl2Elem& g) const;

 private:
  Group() = default;
  Field F_;
  std::vector<Sl2Elem> elems_;   // rank -> element, canonical order
  std::vector<uint64_t> codes_;  // rank -> canonical index, ascending
  std::vector<uint32_t> inv_ranks_;
  std::vector<uint32_t> neg_ranks_;
  uint32_t id_rank_ = 0, neg_id_rank_ = 0;
  mutable std::vector<uint32_t> mul_table_;
  mutable std::once_flag mul_once_;
};

using GroupPtr = std::shared_ptr<const Group>;

}  // namespace sl2
