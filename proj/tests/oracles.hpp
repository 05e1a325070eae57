// Independent brute-force oracles for the test suite. Everything here is
// deliberately written against plain integer arithmetic (or Eigen, for the
// dense eigensolve) rather than the library's field/group/set machinery, so
// a golden value produced here never shares a code path with the
// implementation it checks.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/group_set.hpp"

namespace oracle {

using Mat = std::array<int64_t, 4>;  // a b c d over Z/pZ, entries in [0, p)

Mat mul_mod(const Mat& x, const Mat& y, int64_t p);
Mat inv_mod(const Mat& x, int64_t p);
bool is_identity(const Mat& x);

/// Every determinant-1 matrix over Z/pZ, by scanning all p^4 tuples.
std::vector<Mat> enumerate_sl2(int64_t p);

/// |SL2(F_{p^alpha})| by scanning all q^4 tuples of an independently built
/// field (own modulus search, own representation).
uint64_t order_sl2(int64_t p, int alpha);

/// Count of trace-t determinant-1 matrices over Z/pZ.
uint64_t trace_count(int64_t p, int64_t t);

/// Count of determinant-1 matrices with a b c d = 0 over Z/pZ.
uint64_t entry_product_zero_count(int64_t p);

/// BFS ball sizes and diameter of the Cayley graph on gens ∪ gens^{-1} ∪ {e}.
struct BallsOracle {
  std::vector<uint64_t> ball_sizes;
  int diameter;
};
BallsOracle cayley_balls(int64_t p, const std::vector<Mat>& gens);

/// Girth by exhaustive enumeration of cyclically reduced words in
/// gens ∪ gens^{-1}, shortest word multiplying to the identity.
int girth_words(int64_t p, const std::vector<Mat>& gens, int max_len = 24);

/// Smallest k with a trace-not-(±2) element in (S ∪ S^{-1} ∪ {e})^k,
/// by direct breadth-first products.
int find_rss_steps(int64_t p, const std::vector<Mat>& gens, int kmax = 8);

/// Power sizes |A^k| by naive repeated products over sorted tuple sets.
std::vector<uint64_t> power_sizes(int64_t p, const std::vector<Mat>& a, int kmax);

/// nu_1 of the normalized adjacency operator, dense Eigen solve over a
/// naively assembled matrix (gens must be symmetric as a set).
double dense_nu1(int64_t p, const std::vector<Mat>& gens);

/// All eigenvalues, descending.
std::vector<double> dense_spectrum_all(int64_t p, const std::vector<Mat>& gens);

/// Largest L such that all reduced words of length <= L over the integer
/// generators stay inside |entry| <= p-2; plain int64 arithmetic with
/// pruning (entries are tiny at the depths this is used for).
int free_depth_int64(const std::vector<Mat>& gens_z, int64_t p, int depth_cap = 40);

/// Brute-force pivot test: is (a, t) -> a xi t xi^{-1} injective as a map
/// A/± x C(g)/± -> G/±? Enumerates every pair of pairs.
bool phi_injective_mod_sign(const sl2::GroupSet& A, const sl2::Sl2Elem& xi,
                            const sl2::Sl2Elem& g);

}  // namespace oracle
