#include "commnet/graph.hpp"

#include <algorithm>

namespace commnet {

IndexedGraph::IndexedGraph(std::vector<OrgId> ids) : ids_(std::move(ids)) {
  adj_.resize(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) index_.emplace(ids_[i], int(i));
}

int IndexedGraph::index_of(const OrgId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

bool IndexedGraph::has_edge(int u, int v) const {
  const auto& a = adj_[std::size_t(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

void IndexedGraph::add_edge(int u, int v) {
  if (u == v) return;
  auto& au = adj_[std::size_t(u)];
  if (std::find(au.begin(), au.end(), v) != au.end()) return;
  au.push_back(v);
  adj_[std::size_t(v)].push_back(u);
  ++edge_count_;
}

void IndexedGraph::finalize() {
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

IndexedGraph IndexedGraph::from_snapshot(const GraphSnapshot& snap) {
  IndexedGraph g(snap.nodes);
  for (const auto& e : snap.edges) g.add_edge(g.index_of(e.a), g.index_of(e.b));
  g.finalize();
  return g;
}

IndexedGraph IndexedGraph::aggregate(const std::vector<CommunicationEvent>& events,
                                     const Registry& registry) {
  std::vector<OrgId> ids;
  for (const auto& rec : registry.records())
    if (rec.kind != OrgKind::Dummy) ids.push_back(rec.id);
  IndexedGraph g(std::move(ids));
  for (const auto& ev : events) {
    if (ev.partner == kDummyOrg) continue;
    int u = g.index_of(ev.reporter), v = g.index_of(ev.partner);
    if (u >= 0 && v >= 0) g.add_edge(u, v);
  }
  g.finalize();
  return g;
}

IndexedGraph IndexedGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<OrgId> ids(std::size_t(n));
  for (int i = 0; i < n; ++i) ids[std::size_t(i)] = "n" + std::to_string(i);
  IndexedGraph g(std::move(ids));
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

}  // namespace commnet
