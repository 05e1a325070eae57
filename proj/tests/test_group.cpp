#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sl2/rng.hpp"
#include "sl2/structure.hpp"

using namespace sl2;

namespace {
GroupPtr group(uint32_t p, uint32_t alpha = 1) {
  return Group::enumerate(Field::make(p, alpha));
}
}  // namespace

TEST_CASE("group order is q^3 - q") {
  for (auto [p, alpha] : std::vector<std::pair<uint32_t, uint32_t>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    GroupPtr G = group(p, alpha);
    uint64_t q = G->field().q();
    CHECK(G->order() == q * q * q - q);
  }
  // against the independent tuple-scan oracle
  CHECK(group(2)->order() == oracle::enumerate_sl2(2).size());
  CHECK(group(3)->order() == oracle::enumerate_sl2(3).size());
  CHECK(group(5)->order() == oracle::enumerate_sl2(5).size());
  CHECK(group(3, 2)->order() == oracle::order_sl2(3, 2));
  CHECK(group(2, 2)->order() == oracle::order_sl2(2, 2));
}

TEST_CASE("enumeration is canonical-index sorted and bijective") {
  GroupPtr G = group(5);
  uint64_t prev = 0;
  for (uint32_t r = 0; r < G->order(); ++r) {
    const Sl2Elem& g = G->element(r);
    CHECK(G->det(g) == G->field().one());
    uint64_t idx = G->canonical_index(g);
    if (r > 0) REQUIRE(idx > prev);
    prev = idx;
    REQUIRE(G->rank_of(g) == r);
  }
}

TEST_CASE("constructor rejects det != 1, exhaustive fuzz") {
  for (uint32_t p : {2u, 3u, 5u}) {
    GroupPtr G = group(p);
    const Field& F = G->field();
    uint64_t accepted = 0;
    for (uint32_t a = 0; a < p; ++a)
      for (uint32_t b = 0; b < p; ++b)
        for (uint32_t c = 0; c < p; ++c)
          for (uint32_t d = 0; d < p; ++d) {
            bool unimodular = (a * d % p + p - b * c % p) % p == 1;
            if (unimodular) {
              CHECK_NOTHROW(G->make(F.elem(a), F.elem(b), F.elem(c), F.elem(d)));
              ++accepted;
            } else {
              CHECK_THROWS_AS(G->make(F.elem(a), F.elem(b), F.elem(c), F.elem(d)), SlError);
            }
          }
    CHECK(accepted == G->order());
  }
}

TEST_CASE("hand-checked product in F_5") {
  GroupPtr G = group(5);
  Sl2Elem U = G->make_ints(1, 1, 0, 1);
  Sl2Elem L = G->make_ints(1, 0, 1, 1);
  CHECK(G->mul(U, L) == G->make_ints(2, 1, 1, 1));
  // against the oracle multiplication
  oracle::Mat m = oracle::mul_mod({1, 1, 0, 1}, {1, 0, 1, 1}, 5);
  CHECK(m == oracle::Mat{2, 1, 1, 1});
}

TEST_CASE("group laws") {
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    GroupPtr G = group(p);
    Rng rng(42 + p);
    for (int i = 0; i < 10'000; ++i) {
      uint32_t a = uint32_t(rng.below(G->order()));
      uint32_t b = uint32_t(rng.below(G->order()));
      uint32_t c = uint32_t(rng.below(G->order()));
      REQUIRE(G->mul_rank(G->mul_rank(a, b), c) == G->mul_rank(a, G->mul_rank(b, c)));
    }
    for (uint32_t r = 0; r < G->order(); ++r) {
      REQUIRE(G->inv_rank(G->inv_rank(r)) == r);
      REQUIRE(G->mul_rank(r, G->inv_rank(r)) == G->identity_rank());
      REQUIRE(G->mul_rank(G->identity_rank(), r) == r);
    }
  }
}

TEST_CASE("is_rss") {
  GroupPtr G = group(5);
  CHECK_FALSE(G->is_rss(G->identity()));
  CHECK_FALSE(G->is_rss(G->make_ints(1, 1, 0, 1)));  // unipotent, tr = 2
  // diag(2,3): tr = 0, and 0 is not 2 or 3 (= -2) in F_5
  CHECK(G->is_rss(G->make_ints(2, 0, 0, 3)));
  // tr = 3 = -2 mod 5 is not rss
  CHECK_FALSE(G->is_rss(G->make_ints(2, 1, 1, 1)));
}

TEST_CASE("centralizers of rss elements are maximal tori") {
  GroupPtr G = group(5);
  const Field& F = G->field();

  CHECK(centralizer(G, G->identity()).size() == G->order());

  // split: the diagonal torus
  GroupSet C = centralizer(G, G->make_ints(2, 0, 0, 3));
  CHECK(C.size() == 4);
  CHECK(C == diagonal_torus(G));
  C.for_each([&](uint32_t r) {
    const Sl2Elem& h = G->element(r);
    CHECK(h.m[1] == F.zero());
    CHECK(h.m[2] == F.zero());
  });

  // non-split: any rss with nonsquare tr^2 - 4 has |C| = q + 1
  bool found = false;
  for (uint32_t r = 0; r < G->order() && !found; ++r) {
    const Sl2Elem& g = G->element(r);
    if (!G->is_rss(g)) continue;
    FqElem tr = G->trace(g);
    if (F.quad_class(F.sub(F.mul(tr, tr), F.from_int(4))) == QuadClass::NonSquare) {
      CHECK(centralizer(G, g).size() == 6);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("conjugacy classes and orbit-stabilizer") {
  GroupPtr G = group(5);
  G->ensure_mul_table();
  CHECK(conjugacy_class(G, G->identity()).size() == 1);
  CHECK(conjugacy_class(G, G->minus_identity()).size() == 1);
  for (uint32_t r = 0; r < G->order(); ++r) {
    const Sl2Elem& g = G->element(r);
    uint64_t cl = conjugacy_class(G, g).size();
    uint64_t ce = centralizer(G, g).size();
    REQUIRE(cl * ce == G->order());
  }
}

TEST_CASE("trace varieties") {
  GroupPtr G = group(5);
  const Field& F = G->field();
  CHECK(trace_variety(G, F.from_int(2)).contains_elem(G->identity()));
  CHECK_FALSE(trace_variety(G, F.zero()).contains_elem(G->identity()));
  // |V_0| over F_5, against the oracle count
  CHECK(trace_variety(G, F.zero()).size() == oracle::trace_count(5, 0));
  // V_t is a disjoint union of conjugacy classes; t != ±2 gives rss only
  for (uint32_t t = 0; t < 5; ++t) {
    GroupSet V = trace_variety(G, F.elem(t));
    bool rss_only = t != 2 && t != 3;
    uint64_t covered = 0;
    std::set<uint32_t> seen;
    V.for_each([&](uint32_t r) {
      if (rss_only) REQUIRE(G->is_rss(G->element(r)));
      if (seen.count(r)) return;
      GroupSet cl = conjugacy_class(G, G->element(r));
      REQUIRE(cl.is_subset_of(V));
      cl.for_each([&](uint32_t x) { seen.insert(x); });
      covered += cl.size();
    });
    REQUIRE(covered == V.size());
  }
}

TEST_CASE("torus census") {
  GroupPtr G3 = group(3);
  G3->ensure_mul_table();
  TorusCensus c3 = count_tori(G3);
  // golden at q = 3: every torus is non-split of order 4; 6 trace-0
  // elements in pairs g, -g give 3 tori
  CHECK(c3.n_split == 0);
  CHECK(c3.n_nonsplit == 3);
  CHECK(c3.pairwise_ok);

  for (uint32_t p : {5u, 7u}) {
    GroupPtr G = group(p);
    G->ensure_mul_table();
    TorusCensus c = count_tori(G);
    CHECK(c.pairwise_ok);
    // split tori are conjugates of the diagonal torus: q(q+1)/2 of them;
    // non-split: q(q-1)/2
    CHECK(c.n_split == p * (p + 1) / 2);
    CHECK(c.n_nonsplit == p * (p - 1) / 2);
    CHECK(c.n_split + c.n_nonsplit >= 0.5 * G->order() / (p + 1));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_WITH_AS(Group::enumerate(Field::make(3, 1), 10),
                       doctest::Contains("CapExceeded"), SlError);
}
