#include "sl2/verify.hpp"

#include <algorithm>
#include <cmath>

#include "sl2/cayley.hpp"
#include "sl2/escape.hpp"
#include "sl2/growth.hpp"
#include "sl2/structure.hpp"

namespace sl2 {

namespace {

class Suite {
 public:
  explicit Suite(VerifyReport& rep) : rep_(rep) {}

  CheckResult& check(const std::string& name) {
    rep_.checks.push_back(CheckResult{name, 0, 0, {}});
    return rep_.checks.back();
  }

  static void expect(CheckResult& c, bool ok, const std::string& what) {
    ++c.instances;
    if (!ok) {
      ++c.violations;
      if (c.details.size() < 8) c.details.push_back(what);
    }
  }

 private:
  VerifyReport& rep_;
};

uint32_t sample_size(Rng& rng, uint32_t order) {
  uint32_t cap = std::min<uint32_t>(order, 40);
  return 1 + static_cast<uint32_t>(rng.below(cap));
}

void field_checks(Suite& s, const Field& F, uint64_t n, Rng& rng) {
  std::string tag = "q=" + std::to_string(F.q()) + " ";
  CheckResult& arith = s.check("field.arith q=" + std::to_string(F.q()));
  bool small = F.q() <= 25;
  uint64_t rounds = small ? uint64_t(F.q()) * F.q() : n;
  for (uint64_t i = 0; i < rounds; ++i) {
    FqElem a = small ? F.elem(uint32_t(i / F.q())) : F.elem(uint32_t(rng.below(F.q())));
    FqElem b = small ? F.elem(uint32_t(i % F.q())) : F.elem(uint32_t(rng.below(F.q())));
    FqElem c = F.elem(uint32_t(rng.below(F.q())));
    bool ok = F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a) &&
              F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c) &&
              F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)) &&
              F.sub(F.add(a, b), b) == a;
    if (a.code != 0)
      ok = ok && F.mul(a, F.inv(a)) == F.one() && F.div(b, a) == F.mul(b, F.inv(a)) &&
           F.pow(a, int64_t(F.q()) - 1) == F.one() && F.pow(a, -1) == F.inv(a);
    Suite::expect(arith, ok, tag + "arith at " + F.to_string(a) + "," + F.to_string(b));
  }

  CheckResult& quad = s.check("field.quad_class q=" + std::to_string(F.q()));
  uint32_t squares = 0;
  for (uint32_t x = 1; x < F.q(); ++x)
    if (F.quad_class(F.elem(x)) == QuadClass::Square) ++squares;
  uint32_t expected = (F.q() % 2 == 0) ? F.q() - 1 : (F.q() - 1) / 2;
  Suite::expect(quad, squares == expected,
                tag + "square count " + std::to_string(squares));
  Suite::expect(quad, F.quad_class(F.zero()) == QuadClass::Zero, tag + "quad(0)");
}

void group_checks(Suite& s, GroupPtr G, uint64_t n, Rng& rng) {
  const Field& F = G->field();
  uint32_t q = F.q();
  std::string tag = "q=" + std::to_string(q) + " ";

  CheckResult& order = s.check("group.order q=" + std::to_string(q));
  Suite::expect(order, G->order() == q * q * q - q,
                tag + "|G| = " + std::to_string(G->order()));

  CheckResult& law = s.check("group.law q=" + std::to_string(q));
  for (uint64_t i = 0; i < n; ++i) {
    uint32_t a = uint32_t(rng.below(G->order()));
    uint32_t b = uint32_t(rng.below(G->order()));
    uint32_t c = uint32_t(rng.below(G->order()));
    bool ok = G->mul_rank(G->mul_rank(a, b), c) == G->mul_rank(a, G->mul_rank(b, c));
    ok = ok && G->inv_rank(G->inv_rank(a)) == a;
    ok = ok && G->mul_rank(a, G->inv_rank(a)) == G->identity_rank();
    ok = ok && G->mul_rank(G->identity_rank(), a) == a;
    Suite::expect(law, ok, tag + "law at ranks " + std::to_string(a));
  }

  CheckResult& orbstab = s.check("group.orbit_stabilizer q=" + std::to_string(q));
  for (uint32_t r = 0; r < G->order(); ++r) {
    const Sl2Elem& g = G->element(r);
    uint64_t cl = conjugacy_class(G, g).size();
    uint64_t ce = centralizer(G, g).size();
    Suite::expect(orbstab, cl * ce == G->order(), tag + "rank " + std::to_string(r));
  }

  CheckResult& torus = s.check("group.rss_centralizer q=" + std::to_string(q));
  for (uint32_t r = 0; r < G->order(); ++r) {
    const Sl2Elem& g = G->element(r);
    if (!G->is_rss(g)) continue;
    GroupSet C = centralizer(G, g);
    bool ok = C.size() == q - 1 || C.size() == q + 1;
    // abelian
    auto ranks = C.ranks();
    for (size_t i = 0; i < ranks.size() && ok; ++i)
      for (size_t j = i + 1; j < ranks.size() && ok; ++j)
        ok = G->mul_rank(ranks[i], ranks[j]) == G->mul_rank(ranks[j], ranks[i]);
    if (q % 2 == 1) {
      // split/non-split tracks whether tr^2 - 4 is a square (odd q only)
      FqElem tr = G->trace(g);
      QuadClass qc = F.quad_class(F.sub(F.mul(tr, tr), F.from_int(4)));
      ok = ok && ((C.size() == q - 1 && qc == QuadClass::Square) ||
                  (C.size() == q + 1 && qc == QuadClass::NonSquare));
    }
    Suite::expect(torus, ok, tag + "centralizer at rank " + std::to_string(r));
  }

  CheckResult& vt = s.check("group.trace_variety q=" + std::to_string(q));
  for (uint32_t t = 0; t < q; ++t) {
    GroupSet V = trace_variety(G, F.elem(t));
    bool rss_expected = F.elem(t) != F.from_int(2) && F.elem(t) != F.from_int(-2);
    bool ok = true;
    uint64_t class_total = 0;
    std::vector<uint32_t> seen;
    V.for_each([&](uint32_t r) {
      if (rss_expected && !G->is_rss(G->element(r))) ok = false;
    });
    // disjoint union of conjugacy classes
    auto ranks = V.ranks();
    std::vector<bool> covered(G->order(), false);
    for (uint32_t r : ranks) {
      if (covered[r]) continue;
      GroupSet cl = conjugacy_class(G, G->element(r));
      if (!cl.is_subset_of(V)) ok = false;
      cl.for_each([&](uint32_t x) { covered[x] = true; });
      class_total += cl.size();
    }
    ok = ok && class_total == V.size();
    Suite::expect(vt, ok, tag + "t=" + std::to_string(t));
  }

  CheckResult& tori = s.check("group.count_tori q=" + std::to_string(q));
  TorusCensus census = count_tori(G);
  double bound = 0.5 * double(G->order()) / double(q + 1);
  Suite::expect(tori, census.pairwise_ok, tag + "pairwise intersection");
  Suite::expect(tori, census.n_split + census.n_nonsplit >= bound, tag + "census lower bound");
  (void)n;
}

void growth_checks(Suite& s, GroupPtr G, uint64_t n, Rng& rng) {
  uint32_t q = G->field().q();
  std::string tag = "q=" + std::to_string(q) + " ";

  CheckResult& ruzsa = s.check("growth.ruzsa q=" + std::to_string(q));
  for (uint64_t i = 0; i < n; ++i) {
    GroupSet A = random_set(G, sample_size(rng, G->order()), rng);
    GroupSet B = random_set(G, sample_size(rng, G->order()), rng);
    GroupSet C = random_set(G, sample_size(rng, G->order()), rng);
    Suite::expect(ruzsa, verify_ruzsa(A, B, C).holds, tag + "instance " + std::to_string(i));
  }

  CheckResult& plu = s.check("growth.plunnecke q=" + std::to_string(q));
  for (uint64_t i = 0; i < n; ++i) {
    int k = 3 + int(rng.below(3));
    GroupSet A = random_set(G, sample_size(rng, G->order()), rng);
    if (i % 2 == 0) A = A.unite(A.inverse());  // exercise the jotor clause
    PlunneckeReport rep = verify_plunnecke_chain(A, k);
    bool ok = rep.mony_holds && rep.marmundo_holds &&
              (!rep.jotor_holds.has_value() || *rep.jotor_holds);
    Suite::expect(plu, ok, tag + "instance " + std::to_string(i));
  }

  CheckResult& orb = s.check("growth.orbit_stab q=" + std::to_string(q));
  GroupSet coset_h = centralizer(G, G->element(G->order() - 1));
  for (uint64_t i = 0; i < n; ++i) {
    GroupSet A = random_set(G, sample_size(rng, G->order()), rng);
    GroupSet B = random_set(G, sample_size(rng, G->order()), rng);
    uint32_t x = uint32_t(rng.below(G->order()));
    OrbitStabReport conj = verify_orbit_stab(A, B, x, nullptr);
    OrbitStabReport coset = verify_orbit_stab(A, B, x, &coset_h);
    Suite::expect(orb, conj.applepie_holds && conj.easypie_holds &&
                           coset.applepie_holds && coset.easypie_holds,
                  tag + "instance " + std::to_string(i));
  }

  CheckResult& lawve = s.check("growth.lawve q=" + std::to_string(q));
  for (uint64_t i = 0; i < n; ++i) {
    GroupSet A = random_set(G, sample_size(rng, G->order()), rng);
    int l = 1 + int(rng.below(2));
    GroupSet Al = A.power(l);
    auto ranks = Al.ranks();
    const Sl2Elem& g = G->element(ranks[rng.below(ranks.size())]);
    Suite::expect(lawve, centralizer_bound(A, g, l).holds, tag + "instance " + std::to_string(i));
  }

  CheckResult& pivot = s.check("growth.pivot q=" + std::to_string(q));
  if (q > 3) {
    for (uint64_t i = 0; i < n; ++i) {
      GroupSet A = random_set(G, 1 + uint32_t(rng.below(8)), rng);
      uint32_t xi = uint32_t(rng.below(G->order()));
      uint32_t gr = uint32_t(rng.below(G->order()));
      if (!G->is_rss(G->element(gr))) continue;
      PivotResult res = classify_pivot(A, G->element(xi), G->element(gr));
      bool ok = true;
      if (!res.is_pivot) {
        const Sl2Elem w = *res.witness;
        GroupSet torus = centralizer(G, G->element(gr)).conjugate(xi);
        ok = A.inverse().product(A).contains_elem(w) && torus.contains_elem(w) &&
             w != G->identity() && w != G->minus_identity();
      }
      Suite::expect(pivot, ok, tag + "instance " + std::to_string(i));
    }
    // forced collision: A contains a whole conjugated torus
    uint32_t gr = 0;
    while (!G->is_rss(G->element(gr))) ++gr;
    GroupSet torus = centralizer(G, G->element(gr));
    if (torus.size() > 2) {
      PivotResult res = classify_pivot(torus, G->identity(), G->element(gr));
      Suite::expect(pivot, !res.is_pivot, tag + "torus self-collision");
    }
    PivotResult lone = classify_pivot(GroupSet::singleton(G, G->identity()),
                                      G->identity(), G->element(gr));
    Suite::expect(pivot, lone.is_pivot, tag + "singleton pivot");
  }

  CheckResult& tri = s.check("growth.trichotomy q=" + std::to_string(q));
  for (uint64_t i = 0; i < std::max<uint64_t>(n / 10, 4); ++i) {
    uint32_t k = std::min<uint32_t>(2 + uint32_t(rng.below(6)), G->order());
    GroupSet A = random_generating_set(G, k, rng);
    GrowthReport rep = trichotomy(A);
    Suite::expect(tri, rep.dichotomy_holds, tag + "dichotomy " + std::to_string(i));
  }
  GrowthReport full = trichotomy(GroupSet::full(G));
  Suite::expect(tri, full.covered, tag + "A=G covered");

  CheckResult& large = s.check("growth.large_set q=" + std::to_string(q));
  LargeSetReport whole = large_set_check(GroupSet::full(G));
  Suite::expect(large, whole.holds, tag + "A=G");
  GroupSet sym = random_symmetric_set(G, std::min<uint32_t>(G->order() / 2, 30), rng);
  LargeSetReport rep = large_set_check(sym);
  Suite::expect(large, rep.applies ? rep.holds : true, tag + "random symmetric");

  CheckResult& texp = s.check("growth.torus_exponents q=" + std::to_string(q));
  if (q > 3) {
    uint32_t gr = 0;
    while (!G->is_rss(G->element(gr))) ++gr;
    GroupSet T = centralizer(G, G->element(gr));
    TorusExponents te = torus_exponents(T, G->element(gr), 3);
    Suite::expect(texp, te.torus_meet == T.size(), tag + "torus meets itself");
    GroupSet A = random_generating_set(G, 4, rng);
    TorusExponents t2 = torus_exponents(A, G->element(gr), 3);
    Suite::expect(texp, t2.torus_meet <= T.size() && t2.variety_meet <= G->order(),
                  tag + "sample ratios");
  }

  CheckResult& fiber = s.check("growth.phi_fiber q=" + std::to_string(q));
  if (q >= 5) {
    GroupSet T = diagonal_torus(G);
    uint64_t tested = 0;
    for (uint32_t r = 0; r < G->order() && tested < n; ++r) {
      const Sl2Elem& g = G->element(r);
      if (g.m[0].code == 0 || g.m[1].code == 0 || g.m[2].code == 0 || g.m[3].code == 0)
        continue;
      ++tested;
      FiberReport rep2 = phi_fiber_check(G, g, T);
      Suite::expect(fiber, rep2.max_fiber <= 16 && rep2.excluded_s <= 4,
                    tag + "g rank " + std::to_string(r));
    }
  }
}

void cayley_checks(Suite& s, GroupPtr G, Rng& rng) {
  uint32_t q = G->field().q();
  std::string tag = "q=" + std::to_string(q) + " ";
  GroupSet uni = GroupSet::of_elems(
      G, {G->make_ints(1, 1, 0, 1), G->make_ints(1, 0, 1, 1)});
  GroupSet uni_sym = uni.unite(uni.inverse());

  CheckResult& b = s.check("cayley.bfs q=" + std::to_string(q));
  BfsReport br = bfs(uni);
  bool mono = true;
  for (size_t i = 1; i < br.ball_sizes.size(); ++i)
    mono = mono && br.ball_sizes[i] > br.ball_sizes[i - 1];
  Suite::expect(b, mono && br.ball_sizes.back() == G->order(), tag + "ball growth");
  double lower = std::log(double(G->order())) / std::log(double(uni.symmetrized().size()));
  Suite::expect(b, br.diameter >= lower - 1e-9, tag + "diameter lower bound");
  Suite::expect(b, bfs(GroupSet::full(G)).diameter == 1, tag + "A=G diameter");

  CheckResult& gi = s.check("cayley.girth q=" + std::to_string(q));
  int g_girth = girth(uni_sym);
  Suite::expect(gi, g_girth >= 2, tag + "girth value " + std::to_string(g_girth));

  CheckResult& mv = s.check("cayley.matvec q=" + std::to_string(q));
  {
    std::vector<double> f(G->order());
    for (double& x : f) x = rng.unit_double();
    std::vector<double> Af = matvec(f, uni_sym);
    double sf = 0, sa = 0;
    for (uint32_t i = 0; i < G->order(); ++i) { sf += f[i]; sa += Af[i]; }
    Suite::expect(mv, std::abs(sf - sa) < 1e-8 * G->order(), tag + "mass preserved");
    std::vector<double> ones(G->order(), 1.0);
    std::vector<double> Aones = matvec(ones, uni_sym);
    bool constant = true;
    for (double x : Aones) constant = constant && std::abs(x - 1.0) < 1e-12;
    Suite::expect(mv, constant, tag + "constants fixed");
    std::vector<double> delta(G->order(), 0.0);
    delta[G->identity_rank()] = 1.0;
    std::vector<double> Ad = matvec(delta, uni_sym);
    bool indicator_ok = true;
    for (uint32_t i = 0; i < G->order(); ++i) {
      double want = uni_sym.contains(G->inv_rank(i)) ? 1.0 / uni_sym.size() : 0.0;
      indicator_ok = indicator_ok && std::abs(Ad[i] - want) < 1e-12;
    }
    Suite::expect(mv, indicator_ok, tag + "indicator of e");
  }

  CheckResult& sp = s.check("cayley.spectrum q=" + std::to_string(q));
  SpectralReport rep = dense_spectrum(uni_sym);
  Suite::expect(sp, std::abs(rep.eigenvalues[0] - 1.0) < 1e-9, tag + "nu0 = 1");
  bool in_range = true;
  for (double nu : rep.eigenvalues) in_range = in_range && nu >= -1 - 1e-9 && nu <= 1 + 1e-9;
  Suite::expect(sp, in_range, tag + "range");
  Suite::expect(sp, rep.trace_identity_residual < 1e-6, tag + "trace identity");
  Suite::expect(sp, verify_multiplicity(rep, G->field()), tag + "multiplicity");
  Suite::expect(sp, verify_eig_bound(rep, uni_sym), tag + "himult bound");
  SpectralReport whole = dense_spectrum(GroupSet::full(G));
  Suite::expect(sp, whole.clusters.size() == 2 && std::abs(whole.clusters[1].value) < 1e-9,
                tag + "A=G averaging spectrum");

  CheckResult& l2 = s.check("cayley.lambda2 q=" + std::to_string(q));
  Lambda2Result sparse = lambda2_sparse(uni_sym, 1e-8);
  Suite::expect(l2, std::abs(sparse.nu1 - rep.eigenvalues[1]) < 1e-6,
                tag + "sparse vs dense: " + std::to_string(sparse.nu1 - rep.eigenvalues[1]));
  Suite::expect(l2, rep.eigenvalues[1] < 1.0, tag + "nu1 < 1");

  CheckResult& mix = s.check("cayley.mixing q=" + std::to_string(q));
  MixingProfile prof = mixing_profile(uni_sym, 12, /*exact_mode=*/true);
  Suite::expect(mix, prof.identity_ok, tag + "convolution identity (exact)");
  Suite::expect(mix, std::abs(prof.l2[0] - 1.0 / std::sqrt(double(uni_sym.size()))) < 1e-12,
                tag + "|mu^1|_2");
  MixingProfile fl = mixing_profile(uni_sym, 12, /*exact_mode=*/false);
  Suite::expect(mix, fl.identity_ok, tag + "convolution identity (float)");

  CheckResult& ex = s.check("cayley.expansion q=" + std::to_string(q));
  ExpansionReport es = expansion_check(uni, GroupSet::singleton(G, G->identity()));
  Suite::expect(ex, es.ratio >= 2.0, tag + "singleton expands");
  GroupSet H = centralizer(G, G->element(G->order() - 1));
  if (2 * H.size() <= G->order()) {
    ExpansionReport eh = expansion_check(H, H);
    Suite::expect(ex, eh.ratio == 1.0, tag + "subgroup does not expand");
  }
  GroupSet S = random_set(G, std::max<uint32_t>(1, G->order() / 2 - 1), rng);
  ExpansionReport er = expansion_check(uni, S);
  Suite::expect(ex, er.ratio >= 1.0, tag + "ratio >= 1");
}

void escape_checks(Suite& s, GroupPtr G, uint64_t n, Rng& rng) {
  const Field& F = G->field();
  uint32_t q = F.q();
  std::string tag = "q=" + std::to_string(q) + " ";

  CheckResult& mem = s.check("escape.member q=" + std::to_string(q));
  Variety b_zero = Variety::coordinate_zero(F, 1);
  Suite::expect(mem, member(b_zero, G->identity()), tag + "e on {b=0}");
  Suite::expect(mem, !member(b_zero, G->make_ints(1, 1, 0, 1)), tag + "U off {b=0}");
  Variety tr4 = Variety::trace_squared_four(F);
  uint32_t rss_rank = 0;
  while (!G->is_rss(G->element(rss_rank))) ++rss_rank;
  Suite::expect(mem, !member(tr4, G->element(rss_rank)), tag + "rss off {tr^2=4}");

  CheckResult& pc = s.check("escape.point_count q=" + std::to_string(q));
  Variety x1_zero = Variety::coordinate_zero(F, 0);
  Suite::expect(pc, point_count(x1_zero, F, Ambient::A4) == uint64_t(q) * q * q,
                tag + "hyperplane in A4");
  uint64_t tr4_sl2 = point_count(tr4, F, Ambient::SL2);
  uint64_t not_rss = 0;
  for (uint32_t r = 0; r < G->order(); ++r)
    if (!G->is_rss(G->element(r))) ++not_rss;
  Suite::expect(pc, tr4_sl2 == not_rss, tag + "tr^2=4 matches non-rss census");

  CheckResult& esc = s.check("escape.escape q=" + std::to_string(q));
  GroupSet uni = GroupSet::of_elems(
      G, {G->make_ints(1, 1, 0, 1), G->make_ints(1, 0, 1, 1)});
  EscapeResult r1 = escape(uni, b_zero, G->identity(), 8);
  Suite::expect(esc, r1.k_min == 1, tag + "b=0 from e in one step");
  for (const Sl2Elem& w : r1.witnesses)
    Suite::expect(esc, !member(b_zero, G->mul(w, G->identity())), tag + "witness recheck");
  // the whole group sits on its own defining equation: ad - bc - 1 = 0
  Variety sl2_eq(F, {Variety::Poly{{{{1, 0, 0, 1}}, F.one()},
                                   {{{0, 1, 1, 0}}, F.neg(F.one())},
                                   {{{0, 0, 0, 0}}, F.neg(F.one())}}});
  bool trapped = false;
  try {
    escape(uni, sl2_eq, G->identity(), 8);
  } catch (const SlError& e) {
    trapped = e.code() == Err::OrbitTrapped;
  }
  Suite::expect(esc, trapped, tag + "orbit trapped on det variety");
  if (q > 3) {
    for (uint64_t i = 0; i < std::max<uint64_t>(n / 10, 4); ++i) {
      GroupSet A = random_generating_set(G, 2 + uint32_t(rng.below(4)), rng);
      EscapeResult r2 = escape(A, tr4, G->identity(), 8);
      Suite::expect(esc, r2.k_min <= 2, tag + "rss escape k = " + std::to_string(r2.k_min));
      for (const Sl2Elem& w : r2.witnesses)
        Suite::expect(esc, !member(tr4, w), tag + "witness recheck");
    }
  }

  CheckResult& fr = s.check("escape.find_rss q=" + std::to_string(q));
  if (q > 3) {
    for (uint64_t i = 0; i < std::max<uint64_t>(n / 10, 4); ++i) {
      GroupSet A = random_generating_set(G, 2 + uint32_t(rng.below(4)), rng);
      RssWitness w = find_rss(A);
      Suite::expect(fr, w.k <= 2 && G->is_rss(w.g), tag + "k = " + std::to_string(w.k));
    }
    bool caught = false;
    try {
      find_rss(GroupSet::of_elems(G, {G->make_ints(1, 1, 0, 1), G->make_ints(1, -1, 0, 1)}));
    } catch (const SlError& e) {
      caught = e.code() == Err::NotGenerating;
    }
    Suite::expect(fr, caught, tag + "non-generating rejected");
  }
}

}  // namespace

VerifyReport verify_all(uint64_t seed, uint64_t instances,
                        const std::vector<uint32_t>& extra_primes) {
  VerifyReport rep;
  rep.seed = seed;
  rep.instances_per_check = instances;
  std::vector<uint32_t> primes{2, 3, 5, 7};
  for (uint32_t p : extra_primes)
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);

  Suite suite(rep);
  uint64_t salt = 0;
  for (uint32_t p : primes) {
    rep.qs.push_back(p);
    Field F = Field::make(p, 1);
    GroupPtr G = Group::enumerate(F);
    if (G->order() <= 4096) G->ensure_mul_table();
    Rng rng(seed ^ (0x9e37u + salt++ * 0x1000193u));
    field_checks(suite, F, instances, rng);
    group_checks(suite, G, instances, rng);
    growth_checks(suite, G, instances, rng);
    cayley_checks(suite, G, rng);
    escape_checks(suite, G, instances, rng);
  }
  return rep;
}

}  // namespace sl2
