#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "sl2/group_set.hpp"

namespace sl2 {

using boost::multiprecision::cpp_int;

/// Integer matrix [a b; c d] with determinant exactly 1.
struct IntMat2 {
  cpp_int a, b, c, d;
};

IntMat2 int_mat(int64_t a, int64_t b, int64_t c, int64_t d);  // DetNotOne
IntMat2 imul(const IntMat2& g, const IntMat2& h);
IntMat2 iinv(const IntMat2& g);
bool is_identity(const IntMat2& g);

/// The generator pairs used throughout: [1 1; 0 1],[1 0; 1 1] and the
/// entry-3 pair [1 3; 0 1],[1 0; 3 1].
std::vector<IntMat2> unipotent_pair();
std::vector<IntMat2> triple3_pair();

/// JSON: {"generators": [[[1,3],[0,1]], [[1,0],[3,1]]]}.
std::vector<IntMat2> generators_from_json(const std::string& json_text);

struct ReduceResult {
  GroupSet set;  // A0 mod p (dedup'd)
  bool generated = false;
};
ReduceResult reduce_mod(const std::vector<IntMat2>& A0, uint32_t p,
                        uint64_t cap = kDefaultGroupCap);

/// Largest L such that every nonempty reduced word (letters from
/// A0 ∪ A0^{-1}, no immediate x x^{-1} backtracking) of length <= L has all
/// integer entries of absolute value <= p-2. No such word can be e mod p,
/// so the Cayley girth of A0 mod p exceeds L. The word tree is walked
/// depth-first and a branch is pruned as soon as an entry leaves the
/// window. Returns min(L, depth_cap).
int free_depth(const std::vector<IntMat2>& A0, uint32_t p, int depth_cap = 64,
               uint64_t node_budget = 100'000'000ull);

/// Distinct values mod p of all reduced words of length <= ell, with the
/// reduced-word count for comparison. For ell <= free_depth the two agree
/// with the free-group ball (2m(2m-1)^{l-1} new words per length l).
struct WordInjectivityReport {
  uint64_t distinct_products = 0;
  uint64_t reduced_words = 0;  // including the empty word
};
WordInjectivityReport word_injectivity_check(const std::vector<IntMat2>& A0, uint32_t p,
                                             int ell, uint64_t cap = kDefaultGroupCap);

/// 1 + sum_{l=1..ell} 2m (2m-1)^{l-1}.
uint64_t free_ball_size(uint32_t m, int ell);

struct FamilyRow {
  uint32_t p = 0;
  bool generated = false;
  std::optional<double> nu1, gap;
  std::optional<int> diameter;
  std::optional<double> diam_over_log;
  int girth_lb = 0;  // free_depth + 1
  std::optional<int> girth_exact;
  std::optional<int> mix_steps;  // least l with |mu^(l)|_2^2 <= 2/|G|
};

struct FamilyBudget {
  uint64_t group_cap = kDefaultGroupCap;
  uint32_t dense_cap = 5000;       // dense spectrum below, power iteration above
  uint64_t girth_cap = 1'500'000;  // skip exact girth above this order
  uint64_t bfs_cap = kDefaultGroupCap;
  int mix_max_steps = 4096;
  double lambda_tol = 1e-7;
};

/// One row per prime, fully independent; cells outside budget are left
/// unset rather than failing the scan.
std::vector<FamilyRow> family_scan(const std::vector<IntMat2>& A0,
                                   const std::vector<uint32_t>& primes,
                                   const FamilyBudget& budget = {});

/// CSV with header comments naming the artifact-chosen thresholds.
std::string family_csv(const std::vector<FamilyRow>& rows);

}  // namespace sl2
