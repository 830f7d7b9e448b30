#pragma once

#include <map>
#include <vector>

#include "commnet/graph.hpp"
#include "commnet/ingest.hpp"
#include "commnet/types.hpp"

namespace commnet {

struct IndegreeScore {
  OrgId org;
  int value = 0;  // distinct reporting organizations, not events
};

IndegreeScore indegree(const ReportGraph& graph, const Registry& registry, const OrgId& org);

// Unnormalized Freeman betweenness over unordered pairs, exact shortest-path
// counting (Brandes accumulation, one BFS per source). Disconnected pairs
// contribute nothing; isolated nodes score zero.
//
// The parallel kernel farms sources out across threads but folds their
// contribution vectors in fixed source order, so its output is bit-identical
// to the serial reference no matter the schedule or thread count.
std::vector<double> betweenness_scores(const IndexedGraph& g);
std::vector<double> betweenness_scores_serial(const IndexedGraph& g);

std::map<OrgId, double> betweenness(const GraphSnapshot& snap);

struct CentralitySeries {
  OrgId org;
  std::vector<double> values;  // one per window index; 0 where the org is absent
};

CentralitySeries betweenness_series(const std::vector<GraphSnapshot>& snapshots,
                                    const OrgId& org, const Registry& registry);

// Per-window scores for all orgs at once; snapshots are processed
// independently. values[k] maps org -> score in window k.
std::vector<std::map<OrgId, double>> betweenness_by_window(
    const std::vector<GraphSnapshot>& snapshots);

std::vector<CentralitySeries> series_from_windows(
    const std::vector<std::map<OrgId, double>>& windows, const std::vector<OrgId>& orgs);

}  // namespace commnet
