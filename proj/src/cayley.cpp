#include "sl2/cayley.hpp"

#include <lapacke.h>

#include <Eigen/Dense>
#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>

#include "sl2/rng.hpp"

namespace sl2 {

using boost::multiprecision::cpp_int;

namespace {

std::vector<uint32_t> letter_ranks(const GroupSet& A, bool symmetrize_letters) {
  const Group& G = *A.group();
  std::vector<uint32_t> gens;
  A.for_each([&](uint32_t r) {
    gens.push_back(r);
    if (symmetrize_letters) gens.push_back(G.inv_rank(r));
  });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

// perms[i][v] = rank(letter_i * v)
std::vector<std::vector<uint32_t>> letter_perms(const Group& G,
                                                const std::vector<uint32_t>& letters) {
  std::vector<std::vector<uint32_t>> perms(letters.size());
  for (size_t i = 0; i < letters.size(); ++i) {
    perms[i].resize(G.order());
    const Sl2Elem& a = G.element(letters[i]);
    for (uint32_t v = 0; v < G.order(); ++v)
      perms[i][v] = G.rank_of(G.mul(a, G.element(v)));
  }
  return perms;
}

}  // namespace

BfsReport bfs(const GroupSet& A) {
  if (A.is_empty()) fail(Err::EmptySet, "bfs");
  const Group& G = *A.group();
  std::vector<uint32_t> gens = letter_ranks(A, /*symmetrize_letters=*/true);

  std::vector<bool> seen(G.order(), false);
  std::vector<uint32_t> frontier{G.identity_rank()}, next;
  seen[G.identity_rank()] = true;
  BfsReport rep;
  uint64_t reached = 1;
  rep.ball_sizes.push_back(1);
  while (!frontier.empty() && reached < G.order()) {
    next.clear();
    for (uint32_t v : frontier)
      for (uint32_t a : gens) {
        uint32_t w = G.mul_rank(a, v);
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    if (next.empty()) break;
    reached += next.size();
    rep.ball_sizes.push_back(reached);
    frontier.swap(next);
  }
  if (reached != G.order())
    fail(Err::NotGenerating,
         "reached " + std::to_string(reached) + " of " + std::to_string(G.order()));
  rep.diameter = static_cast<int>(rep.ball_sizes.size()) - 1;
  return rep;
}

int girth(const GroupSet& A, bool count_involution_2cycles) {
  const Group& G = *A.group();
  if (A.is_empty()) fail(Err::EmptySet, "girth");
  if (!A.is_symmetric()) fail(Err::NotSymmetric, "girth needs A = A^{-1}");
  if (A.contains(G.identity_rank())) fail(Err::BadInput, "girth excludes e from A");
  if (!generates(A)) fail(Err::NotGenerating, "girth");

  std::vector<uint32_t> letters = letter_ranks(A, false);
  uint32_t m = static_cast<uint32_t>(letters.size());
  std::vector<uint32_t> ipair(m);  // index of the inverse letter
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t inv = G.inv_rank(letters[i]);
    ipair[i] = static_cast<uint32_t>(
        std::lower_bound(letters.begin(), letters.end(), inv) - letters.begin());
  }

  if (count_involution_2cycles)
    for (uint32_t i = 0; i < m; ++i)
      if (ipair[i] == i) return 2;

  auto perms = letter_perms(G, letters);
  uint64_t n = G.order();
  int best = INT32_MAX;
  std::vector<int32_t> dist(n * m);
  // Shortest cyclically reduced word with value e, by BFS over states
  // (vertex, last letter) for each possible first letter.
  for (uint32_t s = 0; s < m; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<uint64_t> frontier, next;
    uint32_t v0 = perms[s][G.identity_rank()];
    dist[uint64_t{v0} * m + s] = 1;
    frontier.push_back(uint64_t{v0} * m + s);
    int depth = 1;
    while (!frontier.empty() && depth + 1 < best) {
      ++depth;
      next.clear();
      for (uint64_t st : frontier) {
        uint32_t v = static_cast<uint32_t>(st / m);
        uint32_t last = static_cast<uint32_t>(st % m);
        for (uint32_t y = 0; y < m; ++y) {
          if (y == ipair[last]) continue;  // backtracking
          uint32_t w = perms[y][v];
          if (w == G.identity_rank()) {
            if (s != ipair[y]) {  // cyclically reduced
              best = std::min(best, depth);
              break;
            }
            continue;
          }
          uint64_t nst = uint64_t{w} * m + y;
          if (dist[nst] < 0) {
            dist[nst] = depth;
            next.push_back(nst);
          }
        }
      }
      frontier.swap(next);
    }
  }
  if (best == INT32_MAX) fail(Err::BadInput, "no cycle found");  // cannot happen for finite G
  return best;
}

std::vector<double> matvec(const std::vector<double>& f, const GroupSet& A) {
  const Group& G = *A.group();
  if (f.size() != G.order()) fail(Err::DimensionMismatch, "matvec");
  if (A.is_empty()) fail(Err::EmptySet, "matvec");
  std::vector<double> out(f.size(), 0.0);
  double w = 1.0 / A.size();
  A.for_each([&](uint32_t a) {
    const Sl2Elem& ae = G.element(a);
    for (uint32_t v = 0; v < G.order(); ++v)
      out[v] += f[G.rank_of(G.mul(ae, G.element(v)))];
  });
  for (double& x : out) x *= w;
  return out;
}

SpectralReport dense_spectrum(const GroupSet& A, uint32_t dense_cap) {
  const Group& G = *A.group();
  if (A.is_empty()) fail(Err::EmptySet, "dense_spectrum");
  if (G.order() > dense_cap)
    fail(Err::CapExceeded, "dense spectrum capped at " + std::to_string(dense_cap));
  if (!A.is_symmetric()) fail(Err::NotSymmetric, "dense_spectrum needs A = A^{-1}");

  uint32_t n = G.order();
  // LAPACK's divide-and-conquer solver; the QL-iteration solvers can fail
  // to converge on these operators, whose eigenvalues come in clusters of
  // multiplicity >= (q-1)/2.
  std::vector<double> M(size_t{n} * n, 0.0);
  double w = 1.0 / A.size();
  A.for_each([&](uint32_t a) {
    const Sl2Elem& ae = G.element(a);
    for (uint32_t v = 0; v < n; ++v)
      M[size_t{v} * n + G.rank_of(G.mul(ae, G.element(v)))] += w;
  });
  SpectralReport rep;
  rep.eigenvalues.assign(n, 0.0);
  lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', lapack_int(n), M.data(),
                                   lapack_int(n), rep.eigenvalues.data());
  if (info != 0) fail(Err::NoConvergence, "dsyevd info " + std::to_string(info));
  std::reverse(rep.eigenvalues.begin(), rep.eigenvalues.end());

  for (double nu : rep.eigenvalues) {
    if (!rep.clusters.empty() && rep.clusters.back().value - nu <= rep.cluster_tol) {
      ++rep.clusters.back().multiplicity;
    } else {
      rep.clusters.push_back({nu, 1});
    }
  }
  double sum_sq = 0.0;
  for (double nu : rep.eigenvalues) sum_sq += nu * nu;
  double expect = double(n) / A.size();
  rep.trace_identity_residual = std::abs(sum_sq - expect) / expect;
  rep.gap = n > 1 ? 1.0 - rep.eigenvalues[1] : 1.0;
  return rep;
}

Lambda2Result lambda2_sparse(const GroupSet& A, double tol, uint64_t max_iters, uint64_t seed) {
  const Group& G = *A.group();
  if (A.is_empty()) fail(Err::EmptySet, "lambda2_sparse");
  if (!A.is_symmetric()) fail(Err::NotSymmetric, "lambda2_sparse needs A = A^{-1}");
  uint32_t n = G.order();
  std::vector<uint32_t> letters = letter_ranks(A, false);
  auto perms = letter_perms(G, letters);

  // Lanczos on B = (I + A)/2, whose spectrum is [0,1] with the constant
  // eigenvector at 1; the constant direction is projected out of every
  // Krylov vector, so the top Ritz value converges to (1 + nu1)/2. The
  // three-term recurrence keeps memory flat; the residual bound for the
  // top Ritz pair is beta_j * |last eigenvector entry|.
  Rng rng(seed);
  std::vector<double> v(n), v_prev(n, 0.0), w(n);
  for (double& t : v) t = rng.unit_double() - 0.5;

  auto deflate = [&](std::vector<double>& x) {
    double mean = 0.0;
    for (double t : x) mean += t;
    mean /= n;
    for (double& t : x) t -= mean;
  };
  auto norm2 = [&](const std::vector<double>& x) {
    double s = 0.0;
    for (double t : x) s += t * t;
    return std::sqrt(s);
  };
  auto apply_b = [&](const std::vector<double>& in, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto& perm : perms)
      for (uint32_t i = 0; i < n; ++i) out[i] += in[perm[i]];
    double scale = 0.5 / letters.size();
    for (uint32_t i = 0; i < n; ++i) out[i] = scale * out[i] + 0.5 * in[i];
  };

  deflate(v);
  double nv = norm2(v);
  for (double& t : v) t /= nv;

  std::vector<double> alpha, beta;  // tridiagonal entries
  Lambda2Result res;
  res.residual = std::numeric_limits<double>::infinity();
  uint64_t step_cap = std::min<uint64_t>(max_iters, std::max<uint32_t>(n, 2));
  for (uint64_t j = 1; j <= step_cap; ++j) {
    apply_b(v, w);
    deflate(w);
    if (!beta.empty())
      for (uint32_t i = 0; i < n; ++i) w[i] -= beta.back() * v_prev[i];
    double a = 0.0;
    for (uint32_t i = 0; i < n; ++i) a += w[i] * v[i];
    alpha.push_back(a);
    for (uint32_t i = 0; i < n; ++i) w[i] -= a * v[i];
    double b = norm2(w);
    res.iterations = j;

    bool check_now = b < 1e-13 || j % 8 == 0 || j == step_cap;
    if (check_now) {
      size_t m = alpha.size();
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
      for (size_t i = 0; i < m; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      size_t top = m - 1;  // ascending order
      double theta = es.eigenvalues()(top);
      double bound = b * std::abs(es.eigenvectors()(m - 1, top));
      res.nu1 = 2.0 * theta - 1.0;
      res.residual = 2.0 * bound;
      if (b < 1e-13 || res.residual < tol * 0.5) return res;
    }
    if (b < 1e-13) return res;
    beta.push_back(b);
    v_prev.swap(v);
    v.swap(w);
    for (uint32_t i = 0; i < n; ++i) v[i] /= b;
  }
  if (res.residual < tol) return res;
  fail(Err::NoConvergence, std::to_string(res.iterations) + " iterations");
}

bool verify_multiplicity(const SpectralReport& rep, const Field& F) {
  uint32_t need = (F.q() - 1) / 2;
  for (size_t i = 1; i < rep.clusters.size(); ++i)
    if (rep.clusters[i].multiplicity < need) return false;
  return true;
}

bool verify_eig_bound(const SpectralReport& rep, const GroupSet& A) {
  const Group& G = *A.group();
  double denom = (G.field().q() - 1) / 2.0;
  if (denom <= 0) return true;
  double bound = std::sqrt((double(G.order()) / A.size()) / denom) + 1e-9;
  for (size_t j = 1; j < rep.eigenvalues.size(); ++j)
    if (std::abs(rep.eigenvalues[j]) > bound) return false;
  return true;
}

MixingProfile mixing_profile(const GroupSet& A, int L, bool exact_mode, uint64_t op_budget) {
  const Group& G = *A.group();
  if (A.is_empty()) fail(Err::EmptySet, "mixing_profile");
  uint32_t n = G.order();
  if (static_cast<uint64_t>(L) * A.size() * n > op_budget)
    fail(Err::BudgetExceeded, "mixing_profile budget");
  if (exact_mode && (static_cast<uint64_t>(L) * A.size() > 10'000 || L > 256))
    fail(Err::BudgetExceeded, "exact mode capped at L*|A| <= 1e4, L <= 256");

  std::vector<uint32_t> letters = letter_ranks(A, false);
  auto perms = letter_perms(G, letters);
  bool symmetric = A.is_symmetric();

  MixingProfile prof;
  prof.exact = exact_mode;

  // float walk
  std::vector<double> mu(n, 0.0), nxt(n);
  mu[G.identity_rank()] = 1.0;
  double w = 1.0 / A.size();
  std::vector<double> sq_norms;  // |mu^(l)|_2^2
  std::vector<double> at_e;      // mu^(l)(e)

  // exact walk: counts with implicit denominator |A|^l
  std::vector<cpp_int> cnt, cnxt;
  std::vector<cpp_int> exact_sq;
  std::vector<cpp_int> exact_at_e;
  std::vector<cpp_int> pow_a;
  if (exact_mode) {
    cnt.assign(n, 0);
    cnt[G.identity_rank()] = 1;
  }

  for (int l = 1; l <= L; ++l) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (const auto& perm : perms)
      for (uint32_t v = 0; v < n; ++v) nxt[perm[v]] += mu[v];
    for (uint32_t v = 0; v < n; ++v) nxt[v] *= w;
    mu.swap(nxt);
    double s2 = 0.0, mass = 0.0;
    for (double t : mu) {
      s2 += t * t;
      mass += t;
    }
    prof.mass_error = std::max(prof.mass_error, std::abs(mass - 1.0));
    sq_norms.push_back(s2);
    at_e.push_back(mu[G.identity_rank()]);
    prof.l2.push_back(std::sqrt(s2));

    if (exact_mode) {
      cnxt.assign(n, 0);
      for (const auto& perm : perms)
        for (uint32_t v = 0; v < n; ++v)
          if (cnt[v] != 0) cnxt[perm[v]] += cnt[v];
      cnt.swap(cnxt);
      cpp_int s = 0;
      for (const cpp_int& t : cnt) s += t * t;
      exact_sq.push_back(s);
      exact_at_e.push_back(cnt[G.identity_rank()]);
    }
  }

  for (int l = 1; 2 * l <= L; ++l) {
    prof.ratios.push_back(std::log(prof.l2[2 * l - 1]) / std::log(prof.l2[l - 1]));
    if (symmetric) {
      if (exact_mode) {
        // counts: cnt_{2l}(e) == sum_x cnt_l(x)^2
        if (exact_at_e[2 * l - 1] != exact_sq[l - 1]) prof.identity_ok = false;
      } else {
        double r = std::abs(at_e[2 * l - 1] - sq_norms[l - 1]);
        prof.identity_residual = std::max(prof.identity_residual, r);
        if (r > 1e-10) prof.identity_ok = false;
      }
    }
  }
  return prof;
}

std::optional<int> mixing_steps_to_threshold(const GroupSet& A, double threshold_factor,
                                             int max_steps) {
  const Group& G = *A.group();
  if (A.is_empty()) fail(Err::EmptySet, "mixing_steps_to_threshold");
  uint32_t n = G.order();
  std::vector<uint32_t> letters = letter_ranks(A, false);
  auto perms = letter_perms(G, letters);
  std::vector<double> mu(n, 0.0), nxt(n);
  mu[G.identity_rank()] = 1.0;
  double w = 1.0 / A.size();
  double threshold = threshold_factor / n;
  for (int l = 1; l <= max_steps; ++l) {
    std::fill(nxt.begin(), nxt.end(), 0.0);
    for (const auto& perm : perms)
      for (uint32_t v = 0; v < n; ++v) nxt[perm[v]] += mu[v];
    for (uint32_t v = 0; v < n; ++v) nxt[v] *= w;
    mu.swap(nxt);
    double s2 = 0.0;
    for (double t : mu) s2 += t * t;
    if (s2 <= threshold) return l;
  }
  return std::nullopt;
}

ExpansionReport expansion_check(const GroupSet& A, const GroupSet& S) {
  if (S.is_empty()) fail(Err::EmptySet, "expansion_check: S");
  if (A.is_empty()) fail(Err::EmptySet, "expansion_check: A");
  const Group& G = *A.group();
  if (2 * uint64_t{S.size()} > G.order())
    fail(Err::TooLarge, "expansion_check needs |S| <= |G|/2");
  ExpansionReport rep;
  rep.s_size = S.size();
  rep.s_union_as = S.unite(A.product(S)).size();
  rep.ratio = double(rep.s_union_as) / double(rep.s_size);
  return rep;
}

}  // namespace sl2
