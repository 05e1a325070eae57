#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "sl2/structure.hpp"

namespace oracle {

namespace {
int64_t norm(int64_t x, int64_t p) {
  int64_t r = x % p;
  return r < 0 ? r + p : r;
}
}  // namespace

Mat mul_mod(const Mat& x, const Mat& y, int64_t p) {
  return Mat{norm(x[0] * y[0] + x[1] * y[2], p), norm(x[0] * y[1] + x[1] * y[3], p),
             norm(x[2] * y[0] + x[3] * y[2], p), norm(x[2] * y[1] + x[3] * y[3], p)};
}

Mat inv_mod(const Mat& x, int64_t p) {
  return Mat{x[3], norm(-x[1], p), norm(-x[2], p), x[0]};
}

bool is_identity(const Mat& x) { return x[0] == 1 && x[1] == 0 && x[2] == 0 && x[3] == 1; }

std::vector<Mat> enumerate_sl2(int64_t p) {
  std::vector<Mat> out;
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      for (int64_t c = 0; c < p; ++c)
        for (int64_t d = 0; d < p; ++d)
          if (norm(a * d - b * c, p) == 1) out.push_back(Mat{a, b, c, d});
  return out;
}

uint64_t order_sl2(int64_t p, int alpha) {
  if (alpha == 1) return enumerate_sl2(p).size();
  // own tiny F_{p^2}: pairs (u, v) = u + v x mod an irreducible x^2 + s x + t,
  // found by scanning for a quadratic with no root.
  int64_t s = -1, t = -1;
  for (int64_t ss = 0; ss < p && s < 0; ++ss)
    for (int64_t tt = 0; tt < p && s < 0; ++tt) {
      bool has_root = false;
      for (int64_t x = 0; x < p; ++x)
        if (norm(x * x + ss * x + tt, p) == 0) has_root = true;
      if (!has_root) {
        s = ss;
        t = tt;
      }
    }
  auto fmul = [&](std::pair<int64_t, int64_t> u, std::pair<int64_t, int64_t> v) {
    int64_t hi = u.second * v.second % p;
    return std::pair<int64_t, int64_t>{norm(u.first * v.first - t * hi, p),
                                       norm(u.first * v.second + u.second * v.first - s * hi, p)};
  };
  auto fsub = [&](std::pair<int64_t, int64_t> u, std::pair<int64_t, int64_t> v) {
    return std::pair<int64_t, int64_t>{norm(u.first - v.first, p), norm(u.second - v.second, p)};
  };
  int64_t q = p * p;
  auto dec = [&](int64_t code) {
    return std::pair<int64_t, int64_t>{code % p, code / p};
  };
  uint64_t count = 0;
  for (int64_t a = 0; a < q; ++a)
    for (int64_t b = 0; b < q; ++b)
      for (int64_t c = 0; c < q; ++c)
        for (int64_t d = 0; d < q; ++d) {
          auto det = fsub(fmul(dec(a), dec(d)), fmul(dec(b), dec(c)));
          if (det.first == 1 && det.second == 0) ++count;
        }
  return count;
}

uint64_t trace_count(int64_t p, int64_t t) {
  uint64_t n = 0;
  for (const Mat& m : enumerate_sl2(p))
    if (norm(m[0] + m[3], p) == norm(t, p)) ++n;
  return n;
}

uint64_t entry_product_zero_count(int64_t p) {
  uint64_t n = 0;
  for (const Mat& m : enumerate_sl2(p))
    if (norm(m[0] * m[1] % p * m[2] % p * m[3], p) == 0) ++n;
  return n;
}

BallsOracle cayley_balls(int64_t p, const std::vector<Mat>& gens) {
  std::vector<Mat> letters;
  for (const Mat& g : gens) {
    letters.push_back(g);
    letters.push_back(inv_mod(g, p));
  }
  std::map<Mat, int> dist;
  Mat e{1, 0, 0, 1};
  dist[e] = 0;
  std::queue<Mat> queue;
  queue.push(e);
  std::vector<uint64_t> per_radius{1};
  while (!queue.empty()) {
    Mat v = queue.front();
    queue.pop();
    int d = dist[v];
    for (const Mat& a : letters) {
      Mat w = mul_mod(a, v, p);
      if (!dist.count(w)) {
        dist[w] = d + 1;
        if (per_radius.size() <= size_t(d + 1)) per_radius.push_back(0);
        ++per_radius[d + 1];
        queue.push(w);
      }
    }
  }
  BallsOracle out;
  uint64_t cum = 0;
  for (uint64_t x : per_radius) {
    cum += x;
    out.ball_sizes.push_back(cum);
  }
  out.diameter = int(per_radius.size()) - 1;
  return out;
}

int girth_words(int64_t p, const std::vector<Mat>& gens, int max_len) {
  std::vector<Mat> letters;
  for (const Mat& g : gens) {
    Mat gi = inv_mod(g, p);
    auto dup = [&](const Mat& m) {
      return std::find(letters.begin(), letters.end(), m) != letters.end();
    };
    if (!dup(g)) letters.push_back(g);
    if (!dup(gi)) letters.push_back(gi);
  }
  size_t m = letters.size();
  std::vector<size_t> ipair(m);
  for (size_t i = 0; i < m; ++i)
    ipair[i] = std::find(letters.begin(), letters.end(), inv_mod(letters[i], p)) -
               letters.begin();

  // All cyclically reduced words of length len, by DFS over letter indices.
  for (int len = 2; len <= max_len; ++len) {
    std::vector<size_t> word;
    std::vector<Mat> prods;
    // iterative DFS
    struct Frame {
      size_t letter;
      int depth;
    };
    std::vector<Frame> stack;
    for (size_t i = 0; i < m; ++i) stack.push_back({i, 1});
    std::vector<Mat> prefix(size_t(len) + 1);
    prefix[0] = Mat{1, 0, 0, 1};
    std::vector<size_t> chosen(size_t(len) + 1, SIZE_MAX);
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      chosen[f.depth] = f.letter;
      prefix[f.depth] = mul_mod(prefix[f.depth - 1], letters[f.letter], p);
      if (f.depth == len) {
        if (is_identity(prefix[f.depth]) && ipair[chosen[len]] != chosen[1]) return len;
        continue;
      }
      for (size_t y = 0; y < m; ++y) {
        if (y == ipair[f.letter]) continue;
        stack.push_back({y, f.depth + 1});
      }
    }
  }
  return -1;
}

int find_rss_steps(int64_t p, const std::vector<Mat>& gens, int kmax) {
  std::set<Mat> letters;
  letters.insert(Mat{1, 0, 0, 1});
  for (const Mat& g : gens) {
    letters.insert(g);
    letters.insert(inv_mod(g, p));
  }
  std::set<Mat> ball{Mat{1, 0, 0, 1}};
  auto has_rss = [&](const std::set<Mat>& s) {
    for (const Mat& g : s) {
      int64_t tr = norm(g[0] + g[3], p);
      if (tr != norm(2, p) && tr != norm(-2, p)) return true;
    }
    return false;
  };
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      std::set<Mat> next;
      for (const Mat& x : ball)
        for (const Mat& a : letters) next.insert(mul_mod(x, a, p));
      ball = std::move(next);
    }
    if (has_rss(ball)) return k;
  }
  return -1;
}

std::vector<uint64_t> power_sizes(int64_t p, const std::vector<Mat>& a, int kmax) {
  std::set<Mat> base(a.begin(), a.end());
  std::set<Mat> acc = base;
  std::vector<uint64_t> out{acc.size()};
  for (int k = 2; k <= kmax; ++k) {
    std::set<Mat> next;
    for (const Mat& x : acc)
      for (const Mat& y : base) next.insert(mul_mod(x, y, p));
    acc = std::move(next);
    out.push_back(acc.size());
  }
  return out;
}

std::vector<double> dense_spectrum_all(int64_t p, const std::vector<Mat>& gens) {
  std::vector<Mat> verts = enumerate_sl2(p);
  std::map<Mat, int> index;
  for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = int(i);
  int n = int(verts.size());
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (const Mat& a : gens)
    for (int v = 0; v < n; ++v) M(v, index.at(mul_mod(a, verts[v], p))) += 1.0 / gens.size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M, Eigen::EigenvaluesOnly);
  std::vector<double> eig(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::reverse(eig.begin(), eig.end());
  return eig;
}

double dense_nu1(int64_t p, const std::vector<Mat>& gens) {
  return dense_spectrum_all(p, gens)[1];
}

int free_depth_int64(const std::vector<Mat>& gens_z, int64_t p, int depth_cap) {
  std::vector<Mat> letters;
  for (const Mat& g : gens_z) {
    letters.push_back(g);
    letters.push_back(Mat{g[3], -g[1], -g[2], g[0]});
  }
  size_t m = letters.size();
  std::vector<size_t> ipair(m);
  for (size_t i = 0; i < m; ++i) {
    Mat inv{letters[i][3], -letters[i][1], -letters[i][2], letters[i][0]};
    ipair[i] = std::find(letters.begin(), letters.end(), inv) - letters.begin();
  }
  auto imul = [](const Mat& x, const Mat& y) {
    return Mat{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
               x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
  };
  int best = depth_cap + 1;
  struct Frame {
    Mat mat;
    size_t last;
    int depth;
  };
  std::vector<Frame> stack;
  for (size_t i = 0; i < m; ++i) stack.push_back({letters[i], i, 1});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth >= best) continue;
    bool bad = false;
    for (int64_t e : f.mat)
      if (e > p - 2 || e < -(p - 2)) bad = true;
    if (bad) {
      best = f.depth;
      continue;
    }
    if (f.depth + 1 >= best) continue;
    for (size_t y = 0; y < m; ++y) {
      if (y == ipair[f.last]) continue;
      stack.push_back({imul(f.mat, letters[y]), y, f.depth + 1});
    }
  }
  return best - 1;
}

bool phi_injective_mod_sign(const sl2::GroupSet& A, const sl2::Sl2Elem& xi,
                            const sl2::Sl2Elem& g) {
  using namespace sl2;
  GroupPtr G = A.group();
  GroupSet T = centralizer(G, g);
  uint32_t xr = G->rank_of(xi), xir = G->inv_rank(xr);
  auto aranks = A.ranks();
  auto tranks = T.ranks();

  // image (mod sign) -> representative domain pair (mod sign)
  std::map<uint32_t, std::pair<uint32_t, uint32_t>> seen;
  for (uint32_t a : aranks) {
    for (uint32_t t : tranks) {
      uint32_t img = G->mul_rank(G->mul_rank(a, G->mul_rank(xr, t)), xir);
      uint32_t img_key = std::min(img, G->neg_rank(img));
      uint32_t a_key = std::min(a, G->neg_rank(a));
      uint32_t t_key = std::min(t, G->neg_rank(t));
      auto it = seen.find(img_key);
      if (it == seen.end()) {
        seen.emplace(img_key, std::make_pair(a_key, t_key));
      } else if (it->second != std::make_pair(a_key, t_key)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
