#include "sl2/escape.hpp"

#include <nlohmann/json.hpp>

namespace sl2 {

Variety::Variety(Field F, std::vector<Poly> polys) : F_(F), polys_(std::move(polys)) {
  if (polys_.empty()) fail(Err::BadInput, "variety needs at least one polynomial");
  for (Poly& poly : polys_) {
    Poly reduced;
    for (const Term& t : poly)
      if (t.coeff.code != 0) reduced.push_back(t);
    if (reduced.empty()) fail(Err::BadInput, "zero polynomial rejected");
    poly = std::move(reduced);
  }
}

FqElem Variety::eval(const Poly& poly, const std::array<FqElem, 4>& x) const {
  FqElem sum = F_.zero();
  for (const Term& t : poly) {
    FqElem v = t.coeff;
    for (int i = 0; i < 4; ++i)
      for (uint8_t e = 0; e < t.exps[i]; ++e) v = F_.mul(v, x[i]);
    sum = F_.add(sum, v);
  }
  return sum;
}

bool Variety::contains_point(const std::array<FqElem, 4>& x) const {
  for (const Poly& p : polys_)
    if (eval(p, x).code != 0) return false;
  return true;
}

Variety Variety::from_json(const Field& F, const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<Poly> polys;
  for (const auto& jp : j) {
    Poly poly;
    for (const auto& jt : jp.at("coeffs")) {
      Term t;
      const auto& exps = jt.at(0);
      for (int i = 0; i < 4; ++i) t.exps[i] = exps.at(i).get<uint8_t>();
      t.coeff = F.from_int(jt.at(1).get<int64_t>());
      poly.push_back(t);
    }
    polys.push_back(std::move(poly));
  }
  return Variety(F, std::move(polys));
}

Variety Variety::coordinate_zero(const Field& F, int axis) {
  Term t;
  t.exps[axis] = 1;
  t.coeff = F.one();
  return Variety(F, {Poly{t}});
}

Variety Variety::trace_squared_four(const Field& F) {
  // x1^2 + 2 x1 x4 + x4^2 - 4
  Poly p;
  p.push_back({{2, 0, 0, 0}, F.one()});
  p.push_back({{1, 0, 0, 1}, F.from_int(2)});
  p.push_back({{0, 0, 0, 2}, F.one()});
  p.push_back({{0, 0, 0, 0}, F.from_int(-4)});
  return Variety(F, {p});
}

Variety Variety::entry_product_zero(const Field& F) {
  return Variety(F, {Poly{{{{1, 1, 1, 1}}, F.one()}}});
}

Variety Variety::fixed_trace(const Field& F, FqElem t) {
  Poly p;
  p.push_back({{1, 0, 0, 0}, F.one()});
  p.push_back({{0, 0, 0, 1}, F.one()});
  if (t.code != 0) p.push_back({{0, 0, 0, 0}, F.neg(t)});
  return Variety(F, {p});
}

bool member(const Variety& W, const Sl2Elem& g) {
  return W.contains_point({g.m[0], g.m[1], g.m[2], g.m[3]});
}

uint64_t point_count(const Variety& W, const Field& F, Ambient ambient, uint64_t cap) {
  if (ambient == Ambient::SL2) {
    GroupPtr G = Group::enumerate(F, cap);
    uint64_t n = 0;
    for (uint32_t r = 0; r < G->order(); ++r)
      if (member(W, G->element(r))) ++n;
    return n;
  }
  uint64_t q = F.q(), total = q * q * q * q;
  if (total > cap) fail(Err::CapExceeded, "A^4 has " + std::to_string(total) + " points");
  uint64_t n = 0;
  std::array<FqElem, 4> x;
  for (uint32_t a = 0; a < q; ++a)
    for (uint32_t b = 0; b < q; ++b)
      for (uint32_t c = 0; c < q; ++c)
        for (uint32_t d = 0; d < q; ++d) {
          x = {FqElem{a}, FqElem{b}, FqElem{c}, FqElem{d}};
          if (W.contains_point(x)) ++n;
        }
  return n;
}

EscapeResult escape(const GroupSet& A, const Variety& W, const Sl2Elem& x, int kmax,
                    uint32_t witness_cap) {
  GroupPtr G = A.group();
  if (!generates(A)) fail(Err::NotGenerating, "escape needs a generating set");

  GroupSet ball = GroupSet::singleton(G, G->identity());
  GroupSet sym = A.symmetrized();
  uint32_t xr = G->rank_of(x);
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      GroupSet next = ball.product(sym);
      bool stable = next.size() == ball.size();
      ball = std::move(next);
      if (stable) fail(Err::OrbitTrapped, "orbit of x stays on W");
    }
    EscapeResult res;
    res.k_min = k;
    ball.for_each([&](uint32_t g) {
      Sl2Elem gx = G->element(G->mul_rank(g, xr));
      if (!member(W, gx)) {
        ++res.witness_count;
        if (res.witnesses.size() < witness_cap) res.witnesses.push_back(G->element(g));
      }
    });
    if (res.witness_count > 0) return res;
  }
  fail(Err::KmaxExceeded, "no witness up to k = " + std::to_string(kmax));
}

RssWitness find_rss(const GroupSet& A, int kmax) {
  GroupPtr G = A.group();
  if (!generates(A)) fail(Err::NotGenerating, "find_rss needs a generating set");
  GroupSet ball = GroupSet::singleton(G, G->identity());
  GroupSet sym = A.symmetrized();
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) ball = ball.product(sym);
    std::optional<uint32_t> hit;
    ball.for_each([&](uint32_t r) {
      if (!hit && G->is_rss(G->element(r))) hit = r;
    });
    if (hit) return RssWitness{G->element(*hit), k};
  }
  fail(Err::KmaxExceeded, "no rss element up to k = " + std::to_string(kmax));
}

}  // namespace sl2
