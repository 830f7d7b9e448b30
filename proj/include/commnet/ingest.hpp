#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "commnet/types.hpp"

namespace commnet {

// Registry file: header `id,kind,lat,lon,in_postal_cluster,age,size,patents_2006,patents_2007`.
// Institution and aggregate rows may leave the numeric fields empty.
Registry parse_org_registry(const std::string& text);
std::string write_org_registry(const Registry& registry);

// [start, end) in calendar days.
struct StudyPeriod {
  Date start;
  Date end;
};

// Event file: header `date,reporter,partner`, dates ISO-8601. Events come back
// sorted by date (stable, so same-day file order is preserved). Reporters must
// be registered biotech firms; the partner may be any registered org or the
// dummy id.
std::vector<CommunicationEvent> parse_event_log(
    const std::string& text, const Registry& registry,
    const std::optional<StudyPeriod>& period = std::nullopt);
std::string write_event_log(const std::vector<CommunicationEvent>& events);

// Windowed undirected snapshots. Dummy-partner events never contribute edges.
std::vector<GraphSnapshot> build_snapshots(const std::vector<CommunicationEvent>& events,
                                           const WindowSpec& spec);

// Directed report multigraph over the full period: one arc reporter->partner
// per event. Kept for indegree, which counts distinct reporters.
struct ReportGraph {
  std::vector<std::pair<OrgId, OrgId>> arcs;
  std::map<OrgId, std::set<OrgId>> distinct_reporters;  // partner -> reporters
};

ReportGraph build_report_graph(const std::vector<CommunicationEvent>& events);

// Small file helpers shared by the CLI and tests.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace commnet
