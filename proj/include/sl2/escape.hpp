#pragma once

#include <optional>
#include <string>

#include "sl2/group_set.hpp"

namespace sl2 {

/// Affine variety in the four matrix coordinates x1..x4 = (a, b, c, d):
/// the common zero locus of a list of polynomials, each stored as
/// exponent-vector/coefficient terms and evaluated exactly over F_q.
class Variety {
 public:
  struct Term {
    std::array<uint8_t, 4> exps{};
    FqElem coeff;
  };
  using Poly = std::vector<Term>;

  Variety(Field F, std::vector<Poly> polys);  // rejects zero polynomials

  const Field& field() const { return F_; }
  const std::vector<Poly>& polys() const { return polys_; }

  FqElem eval(const Poly& poly, const std::array<FqElem, 4>& x) const;
  bool contains_point(const std::array<FqElem, 4>& x) const;

  /// JSON format: an array of polynomials, each
  /// {"coeffs": [[[e1,e2,e3,e4], c], ...]} with integer coefficients c.
  static Variety from_json(const Field& F, const std::string& json_text);

  // Stock varieties used throughout the pipeline.
  static Variety coordinate_zero(const Field& F, int axis);   // x_axis = 0
  static Variety trace_squared_four(const Field& F);          // (x1+x4)^2 - 4 = 0
  static Variety entry_product_zero(const Field& F);          // x1 x2 x3 x4 = 0
  static Variety fixed_trace(const Field& F, FqElem t);       // x1 + x4 - t = 0

 private:
  Field F_;
  std::vector<Poly> polys_;
};

bool member(const Variety& W, const Sl2Elem& g);

enum class Ambient { SL2, A4 };

/// Exact F_q point count of W inside SL2 (the enumerated group) or inside
/// all of A^4 (q^4 points, cap-checked).
uint64_t point_count(const Variety& W, const Field& F, Ambient ambient,
                     uint64_t cap = kDefaultGroupCap);

/// Bounded escape: smallest k <= kmax with some g in (A ∪ A^{-1} ∪ {e})^k
/// such that g x lies off W, the number of such witnesses at that k, and
/// up to `witness_cap` of them. OrbitTrapped when the whole orbit <A> x
/// stays on W; KmaxExceeded when the search hits kmax undecided.
struct EscapeResult {
  int k_min = -1;
  uint64_t witness_count = 0;
  std::vector<Sl2Elem> witnesses;
};
EscapeResult escape(const GroupSet& A, const Variety& W, const Sl2Elem& x, int kmax,
                    uint32_t witness_cap = 1024);

/// Smallest k with a regular semisimple element in (A ∪ A^{-1} ∪ {e})^k,
/// plus the first such element in canonical order.
struct RssWitness {
  Sl2Elem g;
  int k = 0;
};
RssWitness find_rss(const GroupSet& A, int kmax = 16);

}  // namespace sl2
