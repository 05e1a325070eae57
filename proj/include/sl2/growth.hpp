#pragma once

#include <optional>

#include "sl2/structure.hpp"

namespace sl2 {

/// Ruzsa triangle inequality |A C^{-1}| |B| <= |A B^{-1}| |B C^{-1}|.
struct RuzsaReport {
  uint64_t lhs = 0, rhs = 0;
  bool holds = false;
};
RuzsaReport verify_ruzsa(const GroupSet& A, const GroupSet& B, const GroupSet& C);

/// The tripling chain: with S = A ∪ A^{-1} ∪ {e},
///   |S^3|/|A| <= (3 |A^3|/|A|)^3                      (mony)
///   |A^k|/|A| <= (|A^3|/|A|)^{k-2}    if A = A^{-1}   (jotor)
///   |A^k|/|A| <= |S^k|/|A| <= (3 |A^3|/|A|)^{3(k-2)}  (marmundo)
/// All sides are compared after clearing denominators, in exact integers.
struct PlunneckeReport {
  int k = 0;
  uint64_t size_a = 0, size_a3 = 0, size_ak = 0, size_sym3 = 0, size_symk = 0;
  bool mony_holds = false;
  bool marmundo_holds = false;
  std::optional<bool> jotor_holds;  // present iff A is symmetric
};
PlunneckeReport verify_plunnecke_chain(const GroupSet& A, int k, bool require_jotor = false);

/// Orbit-stabilizer for sets. Action is conjugation on a group element, or
/// left multiplication on cosets G/H when a subgroup H is supplied (x is
/// then a coset representative).
///   |(A^{-1}A) ∩ Stab(x)| >= |A| / |Ax|        (applepie)
///   |B A| >= |A ∩ Stab(x)| |B x|               (easypie)
struct OrbitStabReport {
  uint64_t size_a = 0, orbit_a = 0, stab_in_aia = 0;
  uint64_t size_ba = 0, stab_in_a = 0, orbit_b = 0;
  bool applepie_holds = false;
  bool easypie_holds = false;
};
OrbitStabReport verify_orbit_stab(const GroupSet& A, const GroupSet& B, uint32_t x_rank,
                                  const GroupSet* coset_subgroup = nullptr);

/// For g in A^l:  |A^{-1}A ∩ C(g)| >= |A| / |A^{l+1}A^{-1} ∩ Cl(g)|.
struct CentralizerBoundReport {
  uint64_t lhs = 0;          // |A^{-1}A ∩ C(g)|
  uint64_t class_meet = 0;   // |A^{l+1}A^{-1} ∩ Cl(g)|
  uint64_t size_a = 0;
  bool holds = false;        // lhs * class_meet >= |A|
};
CentralizerBoundReport centralizer_bound(const GroupSet& A, const Sl2Elem& g, int l);

/// Pivot test for xi relative to the torus T = C(g), g rss. xi is a pivot
/// iff the map (a, t) -> a xi t xi^{-1} is injective as a map
/// A/{±e} x T/{±e} -> G/{±e}; equivalently (and this is what is computed)
/// iff A^{-1}A ∩ xi T xi^{-1} ⊆ {e, -e}. A collision witness is an element
/// of that intersection other than ±e.
struct PivotResult {
  bool is_pivot = false;
  std::optional<Sl2Elem> witness;
};
PivotResult classify_pivot(const GroupSet& A, const Sl2Elem& xi, const Sl2Elem& g);

/// Growth measurement for a generating set: sizes of the first powers, the
/// measured exponent log(|A^3|/|A|)/log|A|, and whether S^3 already covers
/// the group. For generating A, |S^3| > |S| strictly or S^3 = G.
struct GrowthReport {
  std::vector<uint64_t> sizes;      // |A^1..A^3|
  std::vector<uint64_t> sym_sizes;  // |S^1..S^3|
  std::optional<double> delta_meas;
  bool covered = false;
  bool dichotomy_holds = false;
};
GrowthReport trichotomy(const GroupSet& A);

/// |A| >= 2 |G|^{8/9} with A = A^{-1} forces A^3 = G. `holds` is computed
/// only when the size threshold applies (vacuously true otherwise).
struct LargeSetReport {
  bool applies = false;
  bool holds = true;
  double threshold = 0.0;
};
LargeSetReport large_set_check(const GroupSet& A);

/// Reporting-only ratios behind the torus and trace-variety bounds:
///   r13 = |A ∩ C(g)|   / |S^k|^{1/3}
///   r23 = |A ∩ V_tr(g)| / |S^k|^{2/3}
struct TorusExponents {
  uint64_t torus_meet = 0, variety_meet = 0, symk = 0;
  double r13 = 0.0, r23 = 0.0;
};
TorusExponents torus_exponents(const GroupSet& A, const Sl2Elem& g, int k);

/// Fiber census of phi(x,y,z) = x g y g^{-1} z over the diagonal torus
/// cubed, restricted to middle parameters s with s != s^{-1} and
/// s ad != s^{-1} bc. The admissible fibers have at most 16 elements and
/// at most 4 values of s are excluded.
struct FiberReport {
  uint32_t max_fiber = 0;
  uint32_t excluded_s = 0;
  uint64_t admissible_images = 0;
};
FiberReport phi_fiber_check(GroupPtr G, const Sl2Elem& g, const GroupSet& T);

/// Closed form of x g y g^{-1} z for x = diag(r,1/r), y = diag(s,1/s),
/// z = diag(t,1/t):
///   [ r t (s ad - bc/s),   (r/t) (1/s - s) a b ]
///   [ (t/r) (s - 1/s) c d, (1/(r t)) (ad/s - s bc) ]
Sl2Elem malvot_image(const Group& G, const Sl2Elem& g, FqElem r, FqElem s, FqElem t);

}  // namespace sl2
