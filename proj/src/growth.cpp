#include "sl2/growth.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>

namespace sl2 {

using boost::multiprecision::cpp_int;

namespace {

cpp_int ipow(cpp_int base, int e) {
  cpp_int r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

void require_nonempty(const GroupSet& A, const char* who) {
  if (A.is_empty()) fail(Err::EmptySet, who);
}

}  // namespace

RuzsaReport verify_ruzsa(const GroupSet& A, const GroupSet& B, const GroupSet& C) {
  require_nonempty(A, "verify_ruzsa: A");
  require_nonempty(B, "verify_ruzsa: B");
  require_nonempty(C, "verify_ruzsa: C");
  uint64_t ac = A.product(C.inverse()).size();
  uint64_t ab = A.product(B.inverse()).size();
  uint64_t bc = B.product(C.inverse()).size();
  RuzsaReport rep;
  rep.lhs = ac * B.size();
  rep.rhs = ab * bc;
  rep.holds = rep.lhs <= rep.rhs;
  return rep;
}

PlunneckeReport verify_plunnecke_chain(const GroupSet& A, int k, bool require_jotor) {
  require_nonempty(A, "verify_plunnecke_chain");
  if (k < 3) fail(Err::BadInput, "plunnecke chain needs k >= 3");
  bool symmetric = A.is_symmetric();
  if (require_jotor && !symmetric)
    fail(Err::NotSymmetric, "jotor clause needs A = A^{-1}");

  PlunneckeReport rep;
  rep.k = k;
  GroupSet sym = A.symmetrized();
  rep.size_a = A.size();
  rep.size_a3 = A.power(3).size();
  rep.size_ak = A.power(k).size();
  rep.size_sym3 = sym.power(3).size();
  rep.size_symk = sym.power(k).size();

  cpp_int a = rep.size_a, a3 = rep.size_a3;
  // mony: |S^3| * |A|^2 <= 27 |A^3|^3
  rep.mony_holds = cpp_int(rep.size_sym3) * a * a <= 27 * ipow(a3, 3);
  // marmundo: |S^k| * |A|^{3(k-2)-1} <= 27^{k-2} |A^3|^{3(k-2)}. The
  // constant 27^{k-2} = 3^{3(k-2)} is the one the mony+jotor chain yields
  // (and the k = 3 case is then exactly mony); a singleton {g} with
  // ord(g) >= 5 already breaks the smaller constant 3^{k-2}.
  rep.marmundo_holds =
      cpp_int(rep.size_symk) * ipow(a, 3 * (k - 2) - 1) <= ipow(27, k - 2) * ipow(a3, 3 * (k - 2));
  if (symmetric) {
    // jotor: |A^k| * |A|^{k-3} <= |A^3|^{k-2}
    rep.jotor_holds = cpp_int(rep.size_ak) * ipow(a, k - 3) <= ipow(a3, k - 2);
  }
  return rep;
}

namespace {

// A point of the group action: for conjugation the point is an element
// rank; for the coset action it is the canonical (smallest) rank in gH.
struct Action {
  const Group& G;
  const GroupSet* H;  // null = conjugation

  uint32_t canonical(uint32_t x) const {
    if (!H) return x;
    uint32_t best = UINT32_MAX;
    H->for_each([&](uint32_t h) { best = std::min(best, G.mul_rank(x, h)); });
    return best;
  }
  uint32_t act(uint32_t g, uint32_t x) const {
    if (!H) return G.mul_rank(G.mul_rank(g, x), G.inv_rank(g));
    return canonical(G.mul_rank(g, x));
  }
  GroupSet stabilizer(uint32_t x, GroupPtr Gp) const {
    if (!H) return centralizer(Gp, G.element(x));
    // Stab(xH) = x H x^{-1}
    return H->conjugate(x);
  }
};

uint64_t orbit_size(const Action& act, const GroupSet& A, uint32_t x) {
  std::vector<uint32_t> pts;
  A.for_each([&](uint32_t a) { pts.push_back(act.act(a, x)); });
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts.size();
}

}  // namespace

OrbitStabReport verify_orbit_stab(const GroupSet& A, const GroupSet& B, uint32_t x_rank,
                                  const GroupSet* coset_subgroup) {
  require_nonempty(A, "verify_orbit_stab: A");
  require_nonempty(B, "verify_orbit_stab: B");
  GroupPtr G = A.group();
  Action action{*G, coset_subgroup};
  uint32_t x = action.canonical(x_rank);

  GroupSet stab = action.stabilizer(x, G);
  OrbitStabReport rep;
  rep.size_a = A.size();
  rep.orbit_a = orbit_size(action, A, x);
  rep.stab_in_aia = A.inverse().product(A).intersect(stab).size();
  rep.applepie_holds = rep.stab_in_aia * rep.orbit_a >= rep.size_a;

  rep.size_ba = B.product(A).size();
  rep.stab_in_a = A.intersect(stab).size();
  rep.orbit_b = orbit_size(action, B, x);
  rep.easypie_holds = rep.size_ba >= rep.stab_in_a * rep.orbit_b;
  return rep;
}

CentralizerBoundReport centralizer_bound(const GroupSet& A, const Sl2Elem& g, int l) {
  require_nonempty(A, "centralizer_bound");
  if (l < 1) fail(Err::BadInput, "centralizer_bound needs l >= 1");
  GroupPtr G = A.group();
  GroupSet Al = A.power(l);
  if (!Al.contains_elem(g)) fail(Err::NotInPower, "g not in A^l");

  CentralizerBoundReport rep;
  rep.size_a = A.size();
  rep.lhs = A.inverse().product(A).intersect(centralizer(G, g)).size();
  rep.class_meet =
      Al.product(A).product(A.inverse()).intersect(conjugacy_class(G, g)).size();
  rep.holds = rep.lhs * rep.class_meet >= rep.size_a;
  return rep;
}

PivotResult classify_pivot(const GroupSet& A, const Sl2Elem& xi, const Sl2Elem& g) {
  require_nonempty(A, "classify_pivot");
  GroupPtr G = A.group();
  if (!G->is_rss(g)) fail(Err::NotRss, "pivot torus needs rss g");

  GroupSet torus = centralizer(G, g).conjugate(G->rank_of(xi));
  GroupSet meet = A.inverse().product(A).intersect(torus);
  PivotResult res;
  res.is_pivot = true;
  uint32_t e = G->identity_rank(), me = G->minus_identity_rank();
  std::optional<uint32_t> witness;
  meet.for_each([&](uint32_t r) {
    if (r != e && r != me && !witness) witness = r;
  });
  if (witness) {
    res.is_pivot = false;
    res.witness = G->element(*witness);
  }
  return res;
}

GrowthReport trichotomy(const GroupSet& A) {
  require_nonempty(A, "trichotomy");
  if (!generates(A)) fail(Err::NotGenerating, "trichotomy needs a generating set");
  GroupPtr G = A.group();

  GrowthReport rep;
  GroupSet acc = A;
  rep.sizes.push_back(acc.size());
  for (int k = 2; k <= 3; ++k) {
    acc = acc.product(A);
    rep.sizes.push_back(acc.size());
  }
  GroupSet sym = A.symmetrized();
  GroupSet sacc = sym;
  rep.sym_sizes.push_back(sacc.size());
  for (int k = 2; k <= 3; ++k) {
    sacc = sacc.product(sym);
    rep.sym_sizes.push_back(sacc.size());
  }
  if (A.size() > 1)
    rep.delta_meas = std::log(double(rep.sizes[2]) / double(rep.sizes[0])) /
                     std::log(double(rep.sizes[0]));
  rep.covered = rep.sym_sizes[2] == G->order();
  rep.dichotomy_holds = rep.covered || rep.sym_sizes[2] > rep.sym_sizes[0];
  return rep;
}

LargeSetReport large_set_check(const GroupSet& A) {
  require_nonempty(A, "large_set_check");
  if (!A.is_symmetric()) fail(Err::NotSymmetric, "large_set_check needs A = A^{-1}");
  LargeSetReport rep;
  double n = A.group()->order();
  rep.threshold = 2.0 * std::pow(n, 8.0 / 9.0);
  rep.applies = double(A.size()) >= rep.threshold;
  if (rep.applies) rep.holds = A.power(3).size() == A.group()->order();
  return rep;
}

TorusExponents torus_exponents(const GroupSet& A, const Sl2Elem& g, int k) {
  require_nonempty(A, "torus_exponents");
  GroupPtr G = A.group();
  if (!G->is_rss(g)) fail(Err::NotRss, "torus_exponents needs rss g");
  TorusExponents rep;
  rep.torus_meet = A.intersect(centralizer(G, g)).size();
  rep.variety_meet = A.intersect(trace_variety(G, G->trace(g))).size();
  rep.symk = A.power_sym(k).size();
  rep.r13 = double(rep.torus_meet) / std::cbrt(double(rep.symk));
  rep.r23 = double(rep.variety_meet) / std::pow(double(rep.symk), 2.0 / 3.0);
  return rep;
}

Sl2Elem malvot_image(const Group& G, const Sl2Elem& g, FqElem r, FqElem s, FqElem t) {
  const Field& F = G.field();
  FqElem a = g.m[0], b = g.m[1], c = g.m[2], d = g.m[3];
  FqElem si = F.inv(s), ri = F.inv(r), ti = F.inv(t);
  FqElem ad = F.mul(a, d), bc = F.mul(b, c);
  return Sl2Elem{{
      F.mul(F.mul(r, t), F.sub(F.mul(s, ad), F.mul(si, bc))),
      F.mul(F.mul(r, ti), F.mul(F.sub(si, s), F.mul(a, b))),
      F.mul(F.mul(ri, t), F.mul(F.sub(s, si), F.mul(c, d))),
      F.mul(F.mul(ri, ti), F.sub(F.mul(si, ad), F.mul(s, bc))),
  }};
}

FiberReport phi_fiber_check(GroupPtr G, const Sl2Elem& g, const GroupSet& T) {
  const Field& F = G->field();
  if (!(T == diagonal_torus(G)))
    fail(Err::NotSplit, "phi_fiber_check works on the diagonal split torus");
  for (int i = 0; i < 4; ++i)
    if (g.m[i].code == 0) fail(Err::BadG, "phi_fiber_check needs abcd != 0");

  FqElem ad = F.mul(g.m[0], g.m[3]), bc = F.mul(g.m[1], g.m[2]);
  auto admissible = [&](FqElem s) {
    FqElem si = F.inv(s);
    return F.sub(si, s).code != 0 && F.sub(F.mul(s, ad), F.mul(si, bc)).code != 0;
  };

  FiberReport rep;
  std::vector<FqElem> units;
  for (uint32_t c = 1; c < F.q(); ++c) units.push_back(FqElem{c});
  for (FqElem s : units)
    if (!admissible(s)) ++rep.excluded_s;

  auto diag = [&](FqElem r) { return Sl2Elem{{r, F.zero(), F.zero(), F.inv(r)}}; };
  std::map<uint32_t, uint32_t> fiber;        // image rank -> full-domain count
  std::vector<uint32_t> admissible_images;
  Sl2Elem gi = G->inv(g);
  for (FqElem s : units) {
    Sl2Elem mid = G->mul(G->mul(g, diag(s)), gi);
    bool ok = admissible(s);
    for (FqElem r : units) {
      Sl2Elem left = G->mul(diag(r), mid);
      for (FqElem t : units) {
        uint32_t img = G->rank_of(G->mul(left, diag(t)));
        ++fiber[img];
        if (ok) admissible_images.push_back(img);
      }
    }
  }
  std::sort(admissible_images.begin(), admissible_images.end());
  admissible_images.erase(std::unique(admissible_images.begin(), admissible_images.end()),
                          admissible_images.end());
  rep.admissible_images = admissible_images.size();
  for (uint32_t img : admissible_images)
    rep.max_fiber = std::max(rep.max_fiber, fiber[img]);
  return rep;
}

}  // namespace sl2
