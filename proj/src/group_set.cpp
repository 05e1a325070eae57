#include "sl2/group_set.hpp"

#include <algorithm>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {
inline bool bit_test(const std::vector<uint64_t>& bits, uint32_t i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}
inline void bit_set(std::vector<uint64_t>& bits, uint32_t i) {
  bits[i >> 6] |= uint64_t{1} << (i & 63);
}
}  // namespace

GroupSet GroupSet::empty(GroupPtr G) { return GroupSet(std::move(G)); }

GroupSet GroupSet::full(GroupPtr G) {
  GroupSet s(G);
  uint32_t n = G->order();
  s.dense_ = true;
  s.bits_.assign((n + 63) / 64, ~uint64_t{0});
  if (n & 63) s.bits_.back() = (uint64_t{1} << (n & 63)) - 1;
  s.size_ = n;
  return s;
}

GroupSet GroupSet::of_ranks(GroupPtr G, std::vector<uint32_t> ranks) {
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  GroupSet s(std::move(G));
  s.size_ = static_cast<uint32_t>(ranks.size());
  if (s.size_ > s.G_->order() / 64) {
    s.dense_ = true;
    s.bits_.assign((s.G_->order() + 63) / 64, 0);
    for (uint32_t r : ranks) bit_set(s.bits_, r);
  } else {
    s.ranks_ = std::move(ranks);
  }
  return s;
}

GroupSet GroupSet::of_elems(GroupPtr G, const std::vector<Sl2Elem>& elems) {
  std::vector<uint32_t> ranks;
  ranks.reserve(elems.size());
  for (const Sl2Elem& g : elems) ranks.push_back(G->rank_of(g));
  return of_ranks(std::move(G), std::move(ranks));
}

GroupSet GroupSet::singleton(GroupPtr G, const Sl2Elem& g) {
  uint32_t r = G->rank_of(g);
  return of_ranks(std::move(G), {r});
}

bool GroupSet::contains(uint32_t rank) const {
  if (dense_) return bit_test(bits_, rank);
  return std::binary_search(ranks_.begin(), ranks_.end(), rank);
}

bool GroupSet::contains_elem(const Sl2Elem& g) const { return contains(G_->rank_of(g)); }

std::vector<uint32_t> GroupSet::ranks() const {
  if (!dense_) return ranks_;
  std::vector<uint32_t> out;
  out.reserve(size_);
  for (uint32_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      out.push_back((w << 6) + static_cast<uint32_t>(__builtin_ctzll(word)));
      word &= word - 1;
    }
  }
  return out;
}

void GroupSet::for_each(const std::function<void(uint32_t)>& fn) const {
  if (!dense_) {
    for (uint32_t r : ranks_) fn(r);
    return;
  }
  for (uint32_t w = 0; w < bits_.size(); ++w) {
    uint64_t word = bits_[w];
    while (word) {
      fn((w << 6) + static_cast<uint32_t>(__builtin_ctzll(word)));
      word &= word - 1;
    }
  }
}

void GroupSet::normalize(std::vector<uint64_t> bits, uint32_t count) {
  size_ = count;
  if (count > G_->order() / 64) {
    dense_ = true;
    bits_ = std::move(bits);
    ranks_.clear();
  } else {
    dense_ = false;
    ranks_.clear();
    ranks_.reserve(count);
    for (uint32_t w = 0; w < bits.size(); ++w) {
      uint64_t word = bits[w];
      while (word) {
        ranks_.push_back((w << 6) + static_cast<uint32_t>(__builtin_ctzll(word)));
        word &= word - 1;
      }
    }
    bits_.clear();
  }
}

void GroupSet::check_same_group(const GroupSet& A, const GroupSet& B) {
  if (!A.G_->field().same_as(B.G_->field()))
    fail(Err::FieldMismatch, "sets over different fields");
}

GroupSet GroupSet::product(const GroupSet& B) const {
  check_same_group(*this, B);
  const Group& G = *G_;
  std::vector<uint64_t> bits((G.order() + 63) / 64, 0);
  uint32_t count = 0;
  // The smaller factor drives the outer loop.
  const GroupSet& outer = (size() <= B.size()) ? *this : B;
  const GroupSet& inner = (size() <= B.size()) ? B : *this;
  bool outer_is_left = (&outer == this);
  auto in = inner.ranks();
  outer.for_each([&](uint32_t o) {
    for (uint32_t i : in) {
      uint32_t r = outer_is_left ? G.mul_rank(o, i) : G.mul_rank(i, o);
      if (!bit_test(bits, r)) {
        bit_set(bits, r);
        ++count;
      }
    }
  });
  GroupSet out(G_);
  out.normalize(std::move(bits), count);
  return out;
}

GroupSet GroupSet::inverse() const {
  std::vector<uint32_t> ranks;
  ranks.reserve(size_);
  for_each([&](uint32_t r) { ranks.push_back(G_->inv_rank(r)); });
  return of_ranks(G_, std::move(ranks));
}

GroupSet GroupSet::symmetrized() const {
  std::vector<uint32_t> ranks;
  ranks.reserve(2 * size_ + 1);
  for_each([&](uint32_t r) {
    ranks.push_back(r);
    ranks.push_back(G_->inv_rank(r));
  });
  ranks.push_back(G_->identity_rank());
  return of_ranks(G_, std::move(ranks));
}

GroupSet GroupSet::power(int k) const {
  if (k < 1) fail(Err::BadInput, "power requires k >= 1");
  GroupSet acc = *this;
  for (int i = 1; i < k; ++i) acc = acc.product(*this);
  return acc;
}

GroupSet GroupSet::unite(const GroupSet& B) const {
  check_same_group(*this, B);
  std::vector<uint32_t> ranks = this->ranks();
  std::vector<uint32_t> rb = B.ranks();
  ranks.insert(ranks.end(), rb.begin(), rb.end());
  return of_ranks(G_, std::move(ranks));
}

GroupSet GroupSet::intersect(const GroupSet& B) const {
  check_same_group(*this, B);
  std::vector<uint32_t> out;
  const GroupSet& small = size() <= B.size() ? *this : B;
  const GroupSet& large = size() <= B.size() ? B : *this;
  small.for_each([&](uint32_t r) {
    if (large.contains(r)) out.push_back(r);
  });
  return of_ranks(G_, std::move(out));
}

GroupSet GroupSet::without(const GroupSet& B) const {
  check_same_group(*this, B);
  std::vector<uint32_t> out;
  for_each([&](uint32_t r) {
    if (!B.contains(r)) out.push_back(r);
  });
  return of_ranks(G_, std::move(out));
}

bool GroupSet::is_subset_of(const GroupSet& B) const {
  if (size_ > B.size()) return false;
  bool ok = true;
  for_each([&](uint32_t r) { ok = ok && B.contains(r); });
  return ok;
}

bool GroupSet::operator==(const GroupSet& B) const {
  return size_ == B.size() && is_subset_of(B);
}

GroupSet GroupSet::translate_left(uint32_t g_rank) const {
  std::vector<uint32_t> out;
  out.reserve(size_);
  for_each([&](uint32_t r) { out.push_back(G_->mul_rank(g_rank, r)); });
  return of_ranks(G_, std::move(out));
}

GroupSet GroupSet::conjugate(uint32_t g_rank) const {
  std::vector<uint32_t> out;
  out.reserve(size_);
  uint32_t gi = G_->inv_rank(g_rank);
  for_each([&](uint32_t r) { out.push_back(G_->mul_rank(G_->mul_rank(g_rank, r), gi)); });
  return of_ranks(G_, std::move(out));
}

GroupSet random_set(GroupPtr G, uint32_t k, Rng& rng) {
  if (k > G->order()) fail(Err::BadInput, "sample larger than group");
  return GroupSet::of_ranks(G, rng.distinct(G->order(), k));
}

GroupSet random_symmetric_set(GroupPtr G, uint32_t k, Rng& rng) {
  if (k > G->order()) fail(Err::BadInput, "sample larger than group");
  std::vector<uint32_t> ranks;
  std::vector<bool> seen(G->order(), false);
  uint32_t count = 0;
  while (count < k) {
    uint32_t r = static_cast<uint32_t>(rng.below(G->order()));
    uint32_t ri = G->inv_rank(r);
    if (!seen[r]) { seen[r] = true; ranks.push_back(r); ++count; }
    if (!seen[ri]) { seen[ri] = true; ranks.push_back(ri); ++count; }
  }
  return GroupSet::of_ranks(std::move(G), std::move(ranks));
}

GroupSet random_generating_set(GroupPtr G, uint32_t k, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GroupSet A = random_set(G, k, rng);
    if (generates(A)) return A;
  }
  fail(Err::NotGenerating, "no generating set found after 1000 draws");
}

GroupSet bfs_closure(const GroupSet& A) {
  const Group& G = *A.group();
  std::vector<uint32_t> gens;
  A.for_each([&](uint32_t r) {
    gens.push_back(r);
    gens.push_back(G.inv_rank(r));
  });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<bool> seen(G.order(), false);
  std::vector<uint32_t> frontier{G.identity_rank()}, next;
  seen[G.identity_rank()] = true;
  std::vector<uint32_t> reached{G.identity_rank()};
  while (!frontier.empty()) {
    next.clear();
    for (uint32_t v : frontier) {
      for (uint32_t a : gens) {
        uint32_t w = G.mul_rank(a, v);
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
          reached.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  return GroupSet::of_ranks(A.group(), std::move(reached));
}

bool generates(const GroupSet& A) {
  return bfs_closure(A).size() == A.group()->order();
}

}  // namespace sl2
