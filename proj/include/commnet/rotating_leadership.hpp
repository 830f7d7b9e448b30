#pragma once

#include <vector>

#include "commnet/centrality.hpp"
#include "commnet/types.hpp"

namespace commnet {

// Both policies are fixed; the enums exist so reports can record exactly what
// was counted.
enum class PlateauPolicy { CollapsePlateaus };
enum class EndpointPolicy { ExcludeEndpoints };

struct ExtremaConfig {
  PlateauPolicy plateau = PlateauPolicy::CollapsePlateaus;
  EndpointPolicy endpoint = EndpointPolicy::ExcludeEndpoints;
};

struct RotatingLeadershipScore {
  OrgId org;
  int n_maxima = 0;
  int n_minima = 0;
  int rl = 0;  // n_maxima + n_minima
};

// Collapses runs of equal consecutive values to single points, then counts
// interior points strictly greater (maxima) or strictly less (minima) than
// both neighbors. Endpoints never count, so constant or monotone series
// score zero.
RotatingLeadershipScore count_extrema(const CentralitySeries& series,
                                      ExtremaConfig config = {});

std::vector<RotatingLeadershipScore> rotating_leadership_all(
    const std::vector<GraphSnapshot>& snapshots, const std::vector<OrgId>& orgs,
    const Registry& registry, ExtremaConfig config = {});

}  // namespace commnet
