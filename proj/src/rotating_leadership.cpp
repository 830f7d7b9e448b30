#include "commnet/rotating_leadership.hpp"

namespace commnet {

RotatingLeadershipScore count_extrema(const CentralitySeries& series, ExtremaConfig) {
  std::vector<double> collapsed;
  collapsed.reserve(series.values.size());
  for (double v : series.values)
    if (collapsed.empty() || collapsed.back() != v) collapsed.push_back(v);

  RotatingLeadershipScore score{series.org, 0, 0, 0};
  for (std::size_t i = 1; i + 1 < collapsed.size(); ++i) {
    if (collapsed[i] > collapsed[i - 1] && collapsed[i] > collapsed[i + 1]) ++score.n_maxima;
    if (collapsed[i] < collapsed[i - 1] && collapsed[i] < collapsed[i + 1]) ++score.n_minima;
  }
  score.rl = score.n_maxima + score.n_minima;
  return score;
}

std::vector<RotatingLeadershipScore> rotating_leadership_all(
    const std::vector<GraphSnapshot>& snapshots, const std::vector<OrgId>& orgs,
    const Registry& registry, ExtremaConfig config) {
  if (snapshots.empty()) fail(Errc::InsufficientData, "no snapshots");
  for (const auto& org : orgs) registry.at(org);
  auto windows = betweenness_by_window(snapshots);
  auto series = series_from_windows(windows, orgs);
  std::vector<RotatingLeadershipScore> out;
  out.reserve(series.size());
  for (const auto& s : series) out.push_back(count_extrema(s, config));
  return out;
}

}  // namespace commnet
