#include "commnet/centrality.hpp"

#include <algorithm>

namespace commnet {

namespace {

// Accumulates this source's pair-dependency delta into `out` (ordered pairs).
void accumulate_source(const IndexedGraph& g, int s, std::vector<double>& out) {
  const int n = g.n();
  std::vector<int> dist(std::size_t(n), -1);
  std::vector<double> sigma(std::size_t(n), 0.0);
  std::vector<double> delta(std::size_t(n), 0.0);
  std::vector<std::vector<int>> preds(std::size_t(n));
  std::vector<int> order;
  order.reserve(std::size_t(n));

  dist[std::size_t(s)] = 0;
  sigma[std::size_t(s)] = 1.0;
  std::vector<int> queue{s};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (dist[std::size_t(w)] < 0) {
        dist[std::size_t(w)] = dist[std::size_t(v)] + 1;
        queue.push_back(w);
      }
      if (dist[std::size_t(w)] == dist[std::size_t(v)] + 1) {
        sigma[std::size_t(w)] += sigma[std::size_t(v)];
        preds[std::size_t(w)].push_back(v);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int w = *it;
    for (int p : preds[std::size_t(w)])
      delta[std::size_t(p)] += sigma[std::size_t(p)] / sigma[std::size_t(w)] *
                               (1.0 + delta[std::size_t(w)]);
    if (w != s) out[std::size_t(w)] += delta[std::size_t(w)];
  }
}

}  // namespace

std::vector<double> betweenness_scores_serial(const IndexedGraph& g) {
  const int n = g.n();
  std::vector<double> bc(std::size_t(n), 0.0);
  std::vector<double> contrib(std::size_t(n));
  for (int s = 0; s < n; ++s) {
    std::fill(contrib.begin(), contrib.end(), 0.0);
    accumulate_source(g, s, contrib);
    for (int v = 0; v < n; ++v) bc[std::size_t(v)] += contrib[std::size_t(v)];
  }
  for (double& x : bc) x *= 0.5;  // ordered pairs -> unordered pairs
  return bc;
}

std::vector<double> betweenness_scores(const IndexedGraph& g) {
  const int n = g.n();
  std::vector<double> bc(std::size_t(n), 0.0);
  constexpr int kChunk = 64;  // bounds the per-source contribution buffers
  std::vector<std::vector<double>> contrib(kChunk);
  for (int base = 0; base < n; base += kChunk) {
    const int hi = std::min(n, base + kChunk);
#pragma omp parallel for schedule(dynamic)
    for (int s = base; s < hi; ++s) {
      auto& slot = contrib[std::size_t(s - base)];
      slot.assign(std::size_t(n), 0.0);
      accumulate_source(g, s, slot);
    }
    for (int s = base; s < hi; ++s) {
      const auto& slot = contrib[std::size_t(s - base)];
      for (int v = 0; v < n; ++v) bc[std::size_t(v)] += slot[std::size_t(v)];
    }
  }
  for (double& x : bc) x *= 0.5;
  return bc;
}

std::map<OrgId, double> betweenness(const GraphSnapshot& snap) {
  IndexedGraph g = IndexedGraph::from_snapshot(snap);
  std::vector<double> scores = betweenness_scores(g);
  std::map<OrgId, double> out;
  for (int v = 0; v < g.n(); ++v) out[g.id_of(v)] = scores[std::size_t(v)];
  return out;
}

IndegreeScore indegree(const ReportGraph& graph, const Registry& registry, const OrgId& org) {
  registry.at(org);  // UnknownOrg on miss
  auto it = graph.distinct_reporters.find(org);
  int value = it == graph.distinct_reporters.end() ? 0 : int(it->second.size());
  return IndegreeScore{org, value};
}

std::vector<std::map<OrgId, double>> betweenness_by_window(
    const std::vector<GraphSnapshot>& snapshots) {
  std::vector<std::map<OrgId, double>> out(snapshots.size());
  for (std::size_t k = 0; k < snapshots.size(); ++k) out[k] = betweenness(snapshots[k]);
  return out;
}

std::vector<CentralitySeries> series_from_windows(
    const std::vector<std::map<OrgId, double>>& windows, const std::vector<OrgId>& orgs) {
  std::vector<CentralitySeries> out;
  out.reserve(orgs.size());
  for (const auto& org : orgs) {
    CentralitySeries s{org, std::vector<double>(windows.size(), 0.0)};
    for (std::size_t k = 0; k < windows.size(); ++k) {
      auto it = windows[k].find(org);
      if (it != windows[k].end()) s.values[k] = it->second;
    }
    out.push_back(std::move(s));
  }
  return out;
}

CentralitySeries betweenness_series(const std::vector<GraphSnapshot>& snapshots,
                                    const OrgId& org, const Registry& registry) {
  registry.at(org);
  if (snapshots.empty()) fail(Errc::InsufficientData, "no snapshots");
  auto windows = betweenness_by_window(snapshots);
  return series_from_windows(windows, {org})[0];
}

}  // namespace commnet
