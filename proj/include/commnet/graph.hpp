#pragma once

#include <unordered_map>
#include <vector>

#include "commnet/types.hpp"

namespace commnet {

// Simple undirected graph with nodes mapped to dense indices. Adjacency lists
// are kept sorted so traversal order, and therefore every downstream metric,
// is deterministic.
class IndexedGraph {
public:
  IndexedGraph() = default;
  explicit IndexedGraph(std::vector<OrgId> ids);

  static IndexedGraph from_snapshot(const GraphSnapshot& snap);
  // Full-period aggregate over all events: every registered non-dummy org is
  // a node, an edge joins two orgs with at least one event in either
  // direction. Dummy-partner events are ignored.
  static IndexedGraph aggregate(const std::vector<CommunicationEvent>& events,
                                const Registry& registry);
  // Anonymous graph for tests and benchmarks; ids are "n0", "n1", ...
  static IndexedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return int(ids_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<OrgId>& ids() const { return ids_; }
  const OrgId& id_of(int v) const { return ids_[std::size_t(v)]; }
  int index_of(const OrgId& id) const;  // -1 when absent
  const std::vector<int>& neighbors(int v) const { return adj_[std::size_t(v)]; }
  int degree(int v) const { return int(adj_[std::size_t(v)].size()); }
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);  // ignores self-loops and duplicates
  void finalize();              // sorts adjacency lists

private:
  std::vector<OrgId> ids_;
  std::unordered_map<OrgId, int> index_;
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace commnet
