#include "sl2/bgfamily.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <sstream>

#include "sl2/cayley.hpp"
#include "sl2/io.hpp"

namespace sl2 {

IntMat2 int_mat(int64_t a, int64_t b, int64_t c, int64_t d) {
  IntMat2 g{a, b, c, d};
  if (g.a * g.d - g.b * g.c != 1) fail(Err::DetNotOne, "integer matrix");
  return g;
}

IntMat2 imul(const IntMat2& g, const IntMat2& h) {
  return IntMat2{g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
                 g.c * h.b + g.d * h.d};
}

IntMat2 iinv(const IntMat2& g) { return IntMat2{g.d, -g.b, -g.c, g.a}; }

bool is_identity(const IntMat2& g) { return g.a == 1 && g.b == 0 && g.c == 0 && g.d == 1; }

std::vector<IntMat2> unipotent_pair() {
  return {int_mat(1, 1, 0, 1), int_mat(1, 0, 1, 1)};
}

std::vector<IntMat2> triple3_pair() {
  return {int_mat(1, 3, 0, 1), int_mat(1, 0, 3, 1)};
}

std::vector<IntMat2> generators_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<IntMat2> out;
  for (const auto& jm : j.at("generators"))
    out.push_back(int_mat(jm.at(0).at(0).get<int64_t>(), jm.at(0).at(1).get<int64_t>(),
                          jm.at(1).at(0).get<int64_t>(), jm.at(1).at(1).get<int64_t>()));
  if (out.empty()) fail(Err::BadInput, "no generators");
  return out;
}

namespace {

struct WordLetters {
  std::vector<IntMat2> mats;     // A0 ∪ A0^{-1}, deduplicated
  std::vector<uint32_t> ipair;   // index of each letter's inverse
};

bool same_mat(const IntMat2& x, const IntMat2& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

WordLetters make_letters(const std::vector<IntMat2>& A0) {
  WordLetters L;
  auto push = [&](const IntMat2& m) {
    for (const IntMat2& have : L.mats)
      if (same_mat(have, m)) return;
    L.mats.push_back(m);
  };
  for (const IntMat2& g : A0) {
    if (is_identity(g)) continue;
    push(g);
    push(iinv(g));
  }
  L.ipair.resize(L.mats.size());
  for (uint32_t i = 0; i < L.mats.size(); ++i) {
    IntMat2 inv = iinv(L.mats[i]);
    for (uint32_t j = 0; j < L.mats.size(); ++j)
      if (same_mat(L.mats[j], inv)) L.ipair[i] = j;
  }
  return L;
}

bool entries_within(const IntMat2& g, const cpp_int& bound) {
  return abs(g.a) <= bound && abs(g.b) <= bound && abs(g.c) <= bound && abs(g.d) <= bound;
}

}  // namespace

ReduceResult reduce_mod(const std::vector<IntMat2>& A0, uint32_t p, uint64_t cap) {
  if (!is_prime_u32(p)) fail(Err::NotPrime, "p = " + std::to_string(p));
  Field F = Field::make(p, 1);
  GroupPtr G = Group::enumerate(F, cap);
  auto red = [&](const cpp_int& v) {
    cpp_int r = v % p;
    if (r < 0) r += p;
    return F.elem(r.convert_to<uint32_t>());
  };
  std::vector<Sl2Elem> elems;
  for (const IntMat2& g : A0)
    elems.push_back(G->make(red(g.a), red(g.b), red(g.c), red(g.d)));
  ReduceResult res{GroupSet::of_elems(G, elems), false};
  res.generated = generates(res.set);
  return res;
}

int free_depth(const std::vector<IntMat2>& A0, uint32_t p, int depth_cap,
               uint64_t node_budget) {
  WordLetters L = make_letters(A0);
  if (L.mats.empty()) return depth_cap;
  cpp_int bound = static_cast<int64_t>(p) - 2;

  int best_violation = depth_cap + 1;
  uint64_t nodes = 0;

  struct Frame {
    IntMat2 mat;
    uint32_t last;
    int depth;
  };
  std::vector<Frame> stack;
  for (uint32_t i = 0; i < L.mats.size(); ++i)
    stack.push_back({L.mats[i], i, 1});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++nodes > node_budget) fail(Err::BudgetExceeded, "free_depth word tree");
    if (f.depth >= best_violation) continue;
    if (!entries_within(f.mat, bound)) {
      best_violation = f.depth;
      continue;
    }
    if (f.depth + 1 >= best_violation) continue;
    for (uint32_t y = 0; y < L.mats.size(); ++y) {
      if (y == L.ipair[f.last]) continue;
      stack.push_back({imul(f.mat, L.mats[y]), y, f.depth + 1});
    }
  }
  return best_violation - 1;
}

WordInjectivityReport word_injectivity_check(const std::vector<IntMat2>& A0, uint32_t p,
                                             int ell, uint64_t cap) {
  ReduceResult red = reduce_mod(A0, p, cap);
  GroupPtr G = red.set.group();
  WordLetters L = make_letters(A0);

  std::vector<uint32_t> letter_ranks;
  auto reduce_rank = [&](const IntMat2& g) {
    const Field& F = G->field();
    auto r = [&](const cpp_int& v) {
      cpp_int m = v % p;
      if (m < 0) m += p;
      return F.elem(m.convert_to<uint32_t>());
    };
    return G->rank_of(G->make(r(g.a), r(g.b), r(g.c), r(g.d)));
  };
  for (const IntMat2& m : L.mats) letter_ranks.push_back(reduce_rank(m));

  std::vector<bool> seen(G->order(), false);
  WordInjectivityReport rep;
  seen[G->identity_rank()] = true;
  rep.distinct_products = 1;
  rep.reduced_words = 1;

  struct Frame {
    uint32_t rank;
    uint32_t last;
    int depth;
  };
  std::vector<Frame> stack;
  if (ell >= 1)
    for (uint32_t i = 0; i < L.mats.size(); ++i)
      stack.push_back({letter_ranks[i], i, 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    ++rep.reduced_words;
    if (!seen[f.rank]) {
      seen[f.rank] = true;
      ++rep.distinct_products;
    }
    if (f.depth == ell) continue;
    for (uint32_t y = 0; y < L.mats.size(); ++y) {
      if (y == L.ipair[f.last]) continue;
      stack.push_back({G->mul_rank(letter_ranks[y], f.rank), y, f.depth + 1});
    }
  }
  return rep;
}

uint64_t free_ball_size(uint32_t m, int ell) {
  uint64_t total = 1, layer = 2 * uint64_t{m};
  for (int l = 1; l <= ell; ++l) {
    total += layer;
    layer *= 2 * m - 1;
  }
  return total;
}

std::vector<FamilyRow> family_scan(const std::vector<IntMat2>& A0,
                                   const std::vector<uint32_t>& primes,
                                   const FamilyBudget& budget) {
  std::vector<FamilyRow> rows;
  for (uint32_t p : primes) {
    FamilyRow row;
    row.p = p;
    ReduceResult red = reduce_mod(A0, p, budget.group_cap);
    row.generated = red.generated;
    row.girth_lb = free_depth(A0, p) + 1;
    if (!red.generated) {
      rows.push_back(row);
      continue;
    }
    GroupPtr G = red.set.group();
    uint32_t n = G->order();

    GroupSet letters = red.set.symmetrized().without(
        GroupSet::singleton(G, G->identity()));

    if (n <= budget.bfs_cap) {
      BfsReport b = bfs(red.set);
      row.diameter = b.diameter;
      row.diam_over_log = b.diameter / std::log(double(n));
    }
    if (n <= budget.dense_cap) {
      SpectralReport sp = dense_spectrum(letters, budget.dense_cap);
      row.nu1 = sp.eigenvalues.size() > 1 ? sp.eigenvalues[1] : 1.0;
    } else {
      row.nu1 = lambda2_sparse(letters, budget.lambda_tol).nu1;
    }
    row.gap = 1.0 - *row.nu1;
    if (n <= budget.girth_cap) row.girth_exact = girth(letters);
    row.mix_steps = mixing_steps_to_threshold(letters, 2.0, budget.mix_max_steps);
    rows.push_back(row);
  }
  return rows;
}

std::string family_csv(const std::vector<FamilyRow>& rows) {
  std::ostringstream out;
  out << "# family scan; artifact-chosen thresholds: mix threshold |mu^l|_2^2 <= 2/|G|, "
         "girth_lb = free_depth+1 (entry window |.| <= p-2)\n";
  out << "p,generated,nu1,gap,diameter,diam_over_log,girth_lb,girth_exact,mix_steps\n";
  for (const FamilyRow& r : rows) {
    out << r.p << ',' << (r.generated ? 1 : 0) << ',';
    out << (r.nu1 ? fmt_double(*r.nu1) : "skipped") << ',';
    out << (r.gap ? fmt_double(*r.gap) : "skipped") << ',';
    out << (r.diameter ? std::to_string(*r.diameter) : "skipped") << ',';
    out << (r.diam_over_log ? fmt_double(*r.diam_over_log) : "skipped") << ',';
    out << r.girth_lb << ',';
    out << (r.girth_exact ? std::to_string(*r.girth_exact) : "skipped") << ',';
    out << (r.mix_steps ? std::to_string(*r.mix_steps) : "skipped") << '\n';
  }
  return out.str();
}

}  // namespace sl2
