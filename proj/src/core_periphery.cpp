#include "commnet/core_periphery.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "commnet/rng.hpp"

namespace commnet {

namespace {

void require_nondegenerate(const IndexedGraph& g) {
  if (g.n() < 2 || g.edge_count() == 0)
    fail(Errc::DegenerateGraph, "core/periphery fit needs >= 2 nodes and >= 1 edge");
}

double fit_from_counts(long long n_core, long long n_periphery, long long e_cc, long long e_pp) {
  const long long cc_cells = n_core * (n_core - 1) / 2;
  const long long pp_cells = n_periphery * (n_periphery - 1) / 2;
  const double n = double(cc_cells + pp_cells);
  if (n <= 0.0) return 0.0;
  const double sp = double(cc_cells);             // pattern ones
  const double so = double(e_cc + e_pp);          // observed ones
  const double var_p = sp * (1.0 - sp / n);
  const double var_o = so * (1.0 - so / n);
  const double cov = double(e_cc) - sp * so / n;
  if (var_p > 0.0 && var_o > 0.0) return cov / std::sqrt(var_p * var_o);
  const bool exact = (e_cc == cc_cells) && (e_pp == 0);
  if (!exact) return 0.0;
  const bool trivial = (n_core == 0) || (n_periphery == 0);
  return trivial ? 1.0 : 0.5;
}

// Incrementally maintained counts; a single flip costs O(deg).
struct PartitionState {
  const IndexedGraph* g = nullptr;
  std::vector<char> in_core;
  std::vector<int> core_neighbors;
  long long n_core = 0, e_cc = 0, e_pp = 0;

  void init(const IndexedGraph& graph, const std::vector<char>& assignment) {
    g = &graph;
    in_core = assignment;
    core_neighbors.assign(std::size_t(graph.n()), 0);
    n_core = e_cc = e_pp = 0;
    for (int v = 0; v < graph.n(); ++v) {
      if (in_core[std::size_t(v)]) ++n_core;
      for (int u : graph.neighbors(v)) {
        if (in_core[std::size_t(u)]) ++core_neighbors[std::size_t(v)];
        if (u < v) continue;  // count each edge once
        bool cu = in_core[std::size_t(v)], cv = in_core[std::size_t(u)];
        if (cu && cv) ++e_cc;
        if (!cu && !cv) ++e_pp;
      }
    }
  }

  void flip(int v) {
    const int deg = g->degree(v);
    const int dc = core_neighbors[std::size_t(v)];
    if (in_core[std::size_t(v)]) {
      in_core[std::size_t(v)] = 0;
      --n_core;
      e_cc -= dc;
      e_pp += deg - dc;
      for (int u : g->neighbors(v)) --core_neighbors[std::size_t(u)];
    } else {
      in_core[std::size_t(v)] = 1;
      ++n_core;
      e_cc += dc;
      e_pp -= deg - dc;
      for (int u : g->neighbors(v)) ++core_neighbors[std::size_t(u)];
    }
  }

  long long n_periphery() const { return g->n() - n_core; }
  double fit() const { return fit_from_counts(n_core, n_periphery(), e_cc, e_pp); }
};

std::vector<OrgId> core_member_ids(const IndexedGraph& g, const std::vector<char>& in_core) {
  std::vector<OrgId> ids;
  for (int v = 0; v < g.n(); ++v)
    if (in_core[std::size_t(v)]) ids.push_back(g.id_of(v));
  std::sort(ids.begin(), ids.end());
  return ids;
}

long long core_size(const std::vector<char>& in_core) {
  return std::count(in_core.begin(), in_core.end(), char(1));
}

// fit desc, then smaller core, then lexicographically smaller member list.
bool better_partition(const IndexedGraph& g, double fit_a, const std::vector<char>& a,
                      double fit_b, const std::vector<char>& b) {
  if (fit_a != fit_b) return fit_a > fit_b;
  long long sa = core_size(a), sb = core_size(b);
  if (sa != sb) return sa < sb;
  return core_member_ids(g, a) < core_member_ids(g, b);
}

std::vector<char> anneal_one_restart(const IndexedGraph& g, const AnnealOptions& opts,
                                     int restart, const std::vector<char>& warm_start,
                                     double* fit_out) {
  const int n = g.n();
  Rng rng(opts.seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(restart + 1));

  std::vector<char> start(std::size_t(n), 0);
  if (restart == 0 && !warm_start.empty()) {
    start = warm_start;
  } else {
    double p = rng.uniform(0.05, 0.5);
    for (int v = 0; v < n; ++v) start[std::size_t(v)] = rng.bernoulli(p) ? 1 : 0;
  }

  PartitionState state;
  state.init(g, start);
  double cur_fit = state.fit();
  std::vector<char> best = state.in_core;
  double best_fit = cur_fit;

  const long long iters = (long long)opts.iterations_per_node * n;
  const double cool = std::pow(opts.t_final / opts.t_initial, 1.0 / double(std::max(1LL, iters)));
  double temp = opts.t_initial;
  for (long long it = 0; it < iters; ++it, temp *= cool) {
    int v = int(rng.uniform_int(0, n - 1));
    state.flip(v);
    double f = state.fit();
    double delta = f - cur_fit;
    if (delta >= 0.0 || rng.uniform() < std::exp(delta / temp)) {
      cur_fit = f;
      if (f > best_fit) {
        best_fit = f;
        best = state.in_core;
      }
    } else {
      state.flip(v);  // revert
    }
  }

  // Greedy polish: accept strict fit gains, and equal-fit flips that shrink
  // the core (keeps the documented tie-break reachable). Terminates because
  // every accepted move raises fit or lowers core size at equal fit.
  state.init(g, best);
  best_fit = state.fit();
  bool improved = true;
  while (improved) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      bool was_core = state.in_core[std::size_t(v)] != 0;
      state.flip(v);
      double f = state.fit();
      if (f > best_fit || (f == best_fit && was_core)) {
        best_fit = f;
        improved = true;
      } else {
        state.flip(v);
      }
    }
  }
  if (fit_out) *fit_out = best_fit;
  return state.in_core;
}

std::vector<char> coreness_warm_start(const IndexedGraph& g) {
  std::vector<double> scores = continuous_coreness(g);
  double max_score = *std::max_element(scores.begin(), scores.end());
  std::vector<char> start(scores.size(), 0);
  for (std::size_t i = 0; i < scores.size(); ++i)
    start[i] = scores[i] > 0.5 * max_score ? 1 : 0;
  return start;
}

std::vector<char> pick_best_restart(const IndexedGraph& g,
                                    const std::vector<std::vector<char>>& candidates,
                                    const std::vector<double>& fits, double* fit_out) {
  std::size_t best = 0;
  for (std::size_t r = 1; r < candidates.size(); ++r)
    if (better_partition(g, fits[r], candidates[r], fits[best], candidates[best])) best = r;
  if (fit_out) *fit_out = fits[best];
  return candidates[best];
}

}  // namespace

std::vector<double> continuous_coreness(const IndexedGraph& g) {
  require_nondegenerate(g);
  const int n = g.n();
  std::vector<double> c(std::size_t(n));
  double norm = 0.0;
  for (int v = 0; v < n; ++v) {
    c[std::size_t(v)] = double(g.degree(v));
    norm += c[std::size_t(v)] * c[std::size_t(v)];
  }
  norm = std::sqrt(norm);
  for (double& x : c) x /= norm;

  double ss = 0.0;
  for (double x : c) ss += x * x;
  std::vector<double> prev(c.size());
  for (int iter = 0; iter < 10000; ++iter) {
    prev = c;
    for (int v = 0; v < n; ++v) {
      double num = 0.0;
      for (int u : g.neighbors(v)) num += c[std::size_t(u)];
      double den = ss - c[std::size_t(v)] * c[std::size_t(v)];
      double next = den > 0.0 ? num / den : 0.0;
      if (next < 0.0) next = 0.0;
      ss += next * next - c[std::size_t(v)] * c[std::size_t(v)];
      c[std::size_t(v)] = next;
    }
    double diff = 0.0, base = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      diff += (c[i] - prev[i]) * (c[i] - prev[i]);
      base += prev[i] * prev[i];
    }
    if (std::sqrt(diff) <= 1e-10 * std::max(std::sqrt(base), 1e-300)) break;
  }

  double total = 0.0;
  for (double x : c) total += x * x;
  if (total > 0.0) {
    total = std::sqrt(total);
    for (double& x : c) x /= total;
  }
  return c;
}

double partition_fit(const IndexedGraph& g, const std::vector<char>& in_core) {
  PartitionState state;
  state.init(g, in_core);
  return state.fit();
}

std::vector<char> best_partition_exhaustive(const IndexedGraph& g, double* fit_out) {
  require_nondegenerate(g);
  const int n = g.n();

  PartitionState state;
  state.init(g, std::vector<char>(std::size_t(n), 0));
  std::vector<char> best = state.in_core;
  double best_fit = state.fit();
  long long best_size = state.n_core;

  // Gray-code walk over all assignments: one flip per step.
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    state.flip(std::countr_zero(k));
    double f = state.fit();
    if (f < best_fit) continue;
    if (f > best_fit || state.n_core < best_size ||
        (state.n_core == best_size &&
         core_member_ids(g, state.in_core) < core_member_ids(g, best))) {
      best_fit = f;
      best = state.in_core;
      best_size = state.n_core;
    }
  }
  if (fit_out) *fit_out = best_fit;
  return best;
}

std::vector<char> best_partition_annealed(const IndexedGraph& g, const AnnealOptions& opts,
                                          double* fit_out) {
  require_nondegenerate(g);
  std::vector<char> warm = coreness_warm_start(g);
  std::vector<std::vector<char>> candidates(std::size_t(opts.restarts));
  std::vector<double> fits(std::size_t(opts.restarts), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int r = 0; r < opts.restarts; ++r)
    candidates[std::size_t(r)] = anneal_one_restart(g, opts, r, warm, &fits[std::size_t(r)]);
  return pick_best_restart(g, candidates, fits, fit_out);
}

std::vector<char> best_partition_annealed_serial(const IndexedGraph& g,
                                                 const AnnealOptions& opts, double* fit_out) {
  require_nondegenerate(g);
  std::vector<char> warm = coreness_warm_start(g);
  std::vector<std::vector<char>> candidates(std::size_t(opts.restarts));
  std::vector<double> fits(std::size_t(opts.restarts), 0.0);
  for (int r = 0; r < opts.restarts; ++r)
    candidates[std::size_t(r)] = anneal_one_restart(g, opts, r, warm, &fits[std::size_t(r)]);
  return pick_best_restart(g, candidates, fits, fit_out);
}

CorenessResult discrete_partition(const IndexedGraph& g, const AnnealOptions& opts) {
  require_nondegenerate(g);
  std::vector<double> scores = continuous_coreness(g);
  double fit = 0.0;
  std::vector<char> in_core = g.n() <= opts.exhaustive_limit
                                  ? best_partition_exhaustive(g, &fit)
                                  : best_partition_annealed(g, opts, &fit);
  CorenessResult result;
  result.fit = fit;
  for (int v = 0; v < g.n(); ++v) {
    result.scores[g.id_of(v)] = scores[std::size_t(v)];
    if (in_core[std::size_t(v)])
      result.core_members.insert(g.id_of(v));
    else
      result.periphery_members.insert(g.id_of(v));
  }
  return result;
}

}  // namespace commnet
