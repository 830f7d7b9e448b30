#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "commnet/graph.hpp"
#include "commnet/types.hpp"

namespace commnet {

struct CorenessResult {
  std::map<OrgId, double> scores;  // continuous, normalized to unit sum of squares
  std::set<OrgId> core_members;
  std::set<OrgId> periphery_members;
  double fit = 0.0;  // see partition_fit
};

// Continuous core/periphery scores: the nonnegative vector c minimizing
// sum_{i != j} (A_ij - c_i c_j)^2 with the diagonal ignored, found by
// cyclically applying the exact coordinate minimizer
//   c_i <- sum_{j in N(i)} c_j / sum_{j != i} c_j^2
// from a degree-ranked start. Each coordinate step is an exact line minimum,
// so the objective decreases monotonically. The result is scaled to unit sum
// of squares. Requires >= 2 nodes and >= 1 edge.
std::vector<double> continuous_coreness(const IndexedGraph& g);

// Pearson correlation between the observed off-diagonal adjacency and the
// ideal pattern (core-core cells 1, periphery-periphery cells 0, core-
// periphery cells excluded as "don't care"). When either side of the
// correlation is constant it is undefined; those cases are scored by a fixed
// convention so search stays total:
//   exact pattern match and the partition is all-core or all-periphery -> 1.0
//   exact pattern match otherwise                                      -> 0.5
//   anything else                                                      -> 0.0
double partition_fit(const IndexedGraph& g, const std::vector<char>& in_core);

struct AnnealOptions {
  std::uint64_t seed = 1337;
  int restarts = 16;
  int exhaustive_limit = 20;  // below or at this size the search is exact
  int iterations_per_node = 250;
  double t_initial = 0.25;
  double t_final = 1e-4;
};

// Discrete partition maximizing partition_fit; exhaustive up to
// exhaustive_limit nodes, seeded simulated annealing (single-flip moves,
// geometric cooling, greedy polish) beyond it. Ties go to the smaller core,
// then to the lexicographically smaller member list. Deterministic for a
// given graph and options. Also carries the continuous scores.
CorenessResult discrete_partition(const IndexedGraph& g, const AnnealOptions& opts = {});

// Exposed for tests and benchmarks.
std::vector<char> best_partition_exhaustive(const IndexedGraph& g, double* fit_out = nullptr);
std::vector<char> best_partition_annealed(const IndexedGraph& g, const AnnealOptions& opts,
                                          double* fit_out = nullptr);
std::vector<char> best_partition_annealed_serial(const IndexedGraph& g,
                                                 const AnnealOptions& opts,
                                                 double* fit_out = nullptr);

}  // namespace commnet
