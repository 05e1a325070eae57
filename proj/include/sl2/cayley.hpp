#pragma once

#include <optional>

#include "sl2/group_set.hpp"

namespace sl2 {

/// Exact ball sizes of the Cayley graph Gamma(G, A ∪ A^{-1} ∪ {e}) around
/// e; by vertex-transitivity the first radius whose ball is everything is
/// the graph diameter. Throws NotGenerating (message carries the reached
/// subgroup size) when A does not generate.
struct BfsReport {
  std::vector<uint64_t> ball_sizes;  // cumulative, ball_sizes[0] = 1
  int diameter = 0;
};
BfsReport bfs(const GroupSet& A);

/// Girth of Gamma(G, A): the shortest cyclically reduced word over A that
/// multiplies to e. A must be symmetric and not contain e. Immediate
/// backtracking a, a^{-1} never counts as a cycle; a repeated involution
/// counts as a 2-cycle only when `count_involution_2cycles` is set.
int girth(const GroupSet& A, bool count_involution_2cycles = false);

/// Normalized adjacency operator: (Af)(g) = (1/|A|) sum_{a in A} f(a g).
std::vector<double> matvec(const std::vector<double>& f, const GroupSet& A);

struct SpectralReport {
  struct Cluster {
    double value = 0.0;
    uint32_t multiplicity = 0;
  };
  std::vector<double> eigenvalues;  // descending, nu_0 first
  std::vector<Cluster> clusters;    // descending, split at gaps > cluster_tol
  double cluster_tol = 1e-8;
  double trace_identity_residual = 0.0;  // relative, against |G|/|A|
  double gap = 0.0;                      // 1 - nu_1
};

/// Full spectrum of the adjacency operator for symmetric A, dense solve.
SpectralReport dense_spectrum(const GroupSet& A, uint32_t dense_cap = 5000);

/// Second-largest eigenvalue via power iteration on (I + A)/2 with the
/// constant eigenvector projected out each step. Converges from below;
/// `residual` is ||A x - nu1 x||_2 at the last iterate.
struct Lambda2Result {
  double nu1 = 0.0;
  uint64_t iterations = 0;
  double residual = 0.0;
};
Lambda2Result lambda2_sparse(const GroupSet& A, double tol = 1e-8,
                             uint64_t max_iters = 2'000'000, uint64_t seed = 0x5eed);

/// Every eigenvalue cluster except the one holding nu_0 = 1 must have
/// multiplicity at least (q-1)/2.
bool verify_multiplicity(const SpectralReport& rep, const Field& F);

/// |nu_j| <= sqrt((|G|/|A|) / ((q-1)/2)) for all j >= 1.
bool verify_eig_bound(const SpectralReport& rep, const GroupSet& A);

/// l2 norms of the convolution powers mu^(l) of the uniform measure on A,
/// l = 1..L, plus the flattening ratios log|mu^(2l)|_2 / log|mu^(l)|_2.
/// In exact mode the walk is tracked in integer word counts (mu^(l) =
/// counts / |A|^l) and the identity mu^(2l)(e) = |mu^(l)|_2^2 is checked
/// exactly; in float mode it is checked to 1e-10.
struct MixingProfile {
  std::vector<double> l2;      // index l-1 holds |mu^(l)|_2
  std::vector<double> ratios;  // index l-1 holds ratio for (l, 2l), 2l <= L
  bool exact = false;
  bool identity_ok = true;
  double identity_residual = 0.0;
  double mass_error = 0.0;  // max |sum mu^(l) - 1|
};
MixingProfile mixing_profile(const GroupSet& A, int L, bool exact_mode = false,
                             uint64_t op_budget = 4'000'000'000ull);

/// Least l with |mu^(l)|_2^2 <= threshold_factor / |G| (threshold_factor 2
/// is the family-scan default, an artifact choice). Returns nullopt if not
/// reached within max_steps.
std::optional<int> mixing_steps_to_threshold(const GroupSet& A, double threshold_factor = 2.0,
                                             int max_steps = 4096);

/// Vertex expansion |S ∪ AS| / |S| for |S| <= |G|/2.
struct ExpansionReport {
  uint64_t s_size = 0, s_union_as = 0;
  double ratio = 0.0;
};
ExpansionReport expansion_check(const GroupSet& A, const GroupSet& S);

}  // namespace sl2
