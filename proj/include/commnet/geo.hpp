#pragma once

#include <map>
#include <set>

#include "commnet/types.hpp"

namespace commnet {

inline constexpr double kEarthRadiusKm = 6371.0;

struct GeoPoint {
  double latitude = 0.0;   // degrees
  double longitude = 0.0;  // degrees
};

// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(GeoPoint p, GeoPoint q);

// Per biotech firm; throws MissingCoordinates if one lacks a position.
std::map<OrgId, double> distance_from_center(const Registry& registry, GeoPoint center);

// 2x2 classification: (network core vs periphery) x (inside vs outside the
// postal cluster).
enum class ProximityGroup { G1, G2, G3, G4 };

const char* group_name(ProximityGroup g);
ProximityGroup classify_group(bool in_core, bool in_postal_cluster);

// One group per biotech firm.
std::map<OrgId, ProximityGroup> assign_group(const std::set<OrgId>& core_members,
                                             const Registry& registry);

}  // namespace commnet
