#include "sl2/group.hpp"

#include <algorithm>

namespace sl2 {

std::shared_ptr<const Group> Group::enumerate(const Field& F, uint64_t cap) {
  uint64_t q = F.q();
  uint64_t n = q * q * q - q;
  if (n > cap)
    fail(Err::CapExceeded,
         "|SL2(F_" + std::to_string(q) + ")| = " + std::to_string(n) + " exceeds cap");

  auto G = std::shared_ptr<Group>(new Group());
  G->F_ = F;
  G->elems_.reserve(n);
  G->codes_.reserve(n);

  // Walk (a,b,c) in code order; d is determined (or free when a = 0), and
  // contributes less than one (a,b,c) step to the index, so the enumeration
  // comes out sorted by canonical index without an explicit sort.
  // a = 0 block: bc = -1, d free.
  for (uint32_t bc = 1; bc < q; ++bc) {
    FqElem b{bc};
    FqElem c = F.neg(F.inv(b));
    for (uint32_t dc = 0; dc < q; ++dc) {
      G->elems_.push_back(Sl2Elem{{FqElem{0}, b, c, FqElem{dc}}});
    }
  }
  // a != 0 blocks: d = (1 + bc) / a.
  for (uint32_t ac = 1; ac < q; ++ac) {
    FqElem a{ac};
    FqElem ainv = F.inv(a);
    for (uint32_t bc = 0; bc < q; ++bc) {
      FqElem b{bc};
      for (uint32_t cc = 0; cc < q; ++cc) {
        FqElem c{cc};
        FqElem d = F.mul(F.add(F.one(), F.mul(b, c)), ainv);
        G->elems_.push_back(Sl2Elem{{a, b, c, d}});
      }
    }
  }
  for (const Sl2Elem& g : G->elems_) G->codes_.push_back(G->canonical_index(g));

  G->inv_ranks_.resize(n);
  G->neg_ranks_.resize(n);
  for (uint32_t r = 0; r < n; ++r) {
    G->inv_ranks_[r] = G->rank_of(G->inv(G->elems_[r]));
    G->neg_ranks_[r] = G->rank_of(G->neg(G->elems_[r]));
  }
  G->id_rank_ = G->rank_of(G->identity());
  G->neg_id_rank_ = G->rank_of(G->minus_identity());
  return G;
}

uint64_t Group::canonical_index(const Sl2Elem& g) const {
  uint64_t q = F_.q();
  return ((static_cast<uint64_t>(g.m[0].code) * q + g.m[1].code) * q + g.m[2].code) * q +
         g.m[3].code;
}

uint32_t Group::rank_of(const Sl2Elem& g) const {
  uint64_t idx = canonical_index(g);
  auto it = std::lower_bound(codes_.begin(), codes_.end(), idx);
  if (it == codes_.end() || *it != idx) fail(Err::BadInput, "element not in group");
  return static_cast<uint32_t>(it - codes_.begin());
}

FqElem Group::det(const Sl2Elem& g) const {
  return F_.sub(F_.mul(g.m[0], g.m[3]), F_.mul(g.m[1], g.m[2]));
}

Sl2Elem Group::make(FqElem a, FqElem b, FqElem c, FqElem d) const {
  Sl2Elem g{{a, b, c, d}};
  if (det(g) != F_.one()) fail(Err::DetNotOne, "det = " + F_.to_string(det(g)));
  return g;
}

Sl2Elem Group::make_ints(int64_t a, int64_t b, int64_t c, int64_t d) const {
  return make(F_.from_int(a), F_.from_int(b), F_.from_int(c), F_.from_int(d));
}

Sl2Elem Group::identity() const {
  return Sl2Elem{{F_.one(), F_.zero(), F_.zero(), F_.one()}};
}

Sl2Elem Group::minus_identity() const {
  FqElem m = F_.neg(F_.one());
  return Sl2Elem{{m, F_.zero(), F_.zero(), m}};
}

Sl2Elem Group::mul(const Sl2Elem& g, const Sl2Elem& h) const {
  const Field& F = F_;
  return Sl2Elem{{F.add(F.mul(g.m[0], h.m[0]), F.mul(g.m[1], h.m[2])),
                  F.add(F.mul(g.m[0], h.m[1]), F.mul(g.m[1], h.m[3])),
                  F.add(F.mul(g.m[2], h.m[0]), F.mul(g.m[3], h.m[2])),
                  F.add(F.mul(g.m[2], h.m[1]), F.mul(g.m[3], h.m[3]))}};
}

Sl2Elem Group::inv(const Sl2Elem& g) const {
  return Sl2Elem{{g.m[3], F_.neg(g.m[1]), F_.neg(g.m[2]), g.m[0]}};
}

Sl2Elem Group::neg(const Sl2Elem& g) const {
  return Sl2Elem{{F_.neg(g.m[0]), F_.neg(g.m[1]), F_.neg(g.m[2]), F_.neg(g.m[3])}};
}

bool Group::is_rss(const Sl2Elem& g) const {
  FqElem t = trace(g);
  return t != F_.from_int(2) && t != F_.from_int(-2);
}

uint32_t Group::mul_rank(uint32_t g, uint32_t h) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<uint64_t>(g) * order() + h];
  return rank_of(mul(elems_[g], elems_[h]));
}

uint32_t Group::inv_rank(uint32_t g) const { return inv_ranks_[g]; }
uint32_t Group::neg_rank(uint32_t g) const { return neg_ranks_[g]; }

void Group::ensure_mul_table() const {
  std::call_once(mul_once_, [this] {
    uint64_t n = order();
    if (n > 4096) fail(Err::CapExceeded, "mul table refused for order " + std::to_string(n));
    mul_table_.resize(n * n);
    for (uint32_t g = 0; g < n; ++g)
      for (uint32_t h = 0; h < n; ++h)
        mul_table_[g * n + h] = rank_of(mul(elems_[g], elems_[h]));
  });
}

std::string Group::to_string(const Sl2Elem& g) const {
  return "[" + F_.to_string(g.m[0]) + " " + F_.to_string(g.m[1]) + "; " + F_.to_string(g.m[2]) +
         " " + F_.to_string(g.m[3]) + "]";
}

}  // namespace sl2
