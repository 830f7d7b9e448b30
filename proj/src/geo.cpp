#include "commnet/geo.hpp"

#include <cmath>

namespace commnet {

double haversine_km(GeoPoint p, GeoPoint q) {
  constexpr double deg = M_PI / 180.0;
  const double phi1 = p.latitude * deg, phi2 = q.latitude * deg;
  const double dphi = (q.latitude - p.latitude) * deg;
  const double dlam = (q.longitude - p.longitude) * deg;
  const double s1 = std::sin(dphi / 2.0), s2 = std::sin(dlam / 2.0);
  double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  h = std::min(1.0, std::max(0.0, h));
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

std::map<OrgId, double> distance_from_center(const Registry& registry, GeoPoint center) {
  std::map<OrgId, double> out;
  for (const auto& rec : registry.records()) {
    if (!rec.is_biotech()) continue;
    if (!rec.latitude || !rec.longitude)
      fail(Errc::MissingCoordinates, "firm '" + rec.id + "' has no coordinates");
    out[rec.id] = haversine_km({*rec.latitude, *rec.longitude}, center);
  }
  return out;
}

const char* group_name(ProximityGroup g) {
  switch (g) {
    case ProximityGroup::G1: return "G1";
    case ProximityGroup::G2: return "G2";
    case ProximityGroup::G3: return "G3";
    case ProximityGroup::G4: return "G4";
  }
  return "?";
}

ProximityGroup classify_group(bool in_core, bool in_postal_cluster) {
  if (in_core) return in_postal_cluster ? ProximityGroup::G1 : ProximityGroup::G4;
  return in_postal_cluster ? ProximityGroup::G2 : ProximityGroup::G3;
}

std::map<OrgId, ProximityGroup> assign_group(const std::set<OrgId>& core_members,
                                             const Registry& registry) {
  std::map<OrgId, ProximityGroup> out;
  for (const auto& rec : registry.records()) {
    if (!rec.is_biotech()) continue;
    bool inside = rec.in_postal_cluster.value_or(false);
    out[rec.id] = classify_group(core_members.count(rec.id) > 0, inside);
  }
  return out;
}

}  // namespace commnet
