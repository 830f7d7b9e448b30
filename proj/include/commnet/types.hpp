#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace commnet {

// ---------------------------------------------------------------------------
// Errors

enum class Errc {
  // input / parsing
  ParseError,
  DuplicateOrgId,
  MissingRequiredField,
  OutOfRangeCoordinate,
  InvalidRegistry,
  UnknownReporter,
  UnknownPartner,
  SelfLoopEvent,
  DateOutsideStudyPeriod,
  InvalidConfig,
  IoError,
  // data shape / numeric degeneracy
  EmptyStudyPeriod,
  UnknownOrg,
  DegenerateGraph,
  MissingCoordinates,
  InsufficientData,
  ConstantVariable,
  RankDeficient,
  InsufficientObservations,
  DegenerateGroups,
  ZeroWithinVariance,
};

const char* errc_name(Errc c);

// Input-side failures (bad files, bad flags) vs. degenerate-data failures.
// The CLI maps the former to exit code 2 and the latter to exit code 3.
bool is_input_error(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

// ---------------------------------------------------------------------------
// Calendar days. The pipeline has no time-of-day resolution.

struct Date {
  int days = 0;  // days since 1970-01-01
  auto operator<=>(const Date&) const = default;
};

Date parse_date(const std::string& iso);  // "YYYY-MM-DD", validated
std::string format_date(Date d);

inline Date operator+(Date d, int n) { return Date{d.days + n}; }
inline int operator-(Date a, Date b) { return a.days - b.days; }

// ---------------------------------------------------------------------------
// Organizations

using OrgId = std::string;

// Reserved id for the dummy node that absorbs reports whose partner the
// respondent did not specify. Never part of any graph metric.
inline const OrgId kDummyOrg = "UNKNOWN";

enum class OrgKind {
  BiotechInCluster,
  BiotechOutside,
  University,
  BigPharma,
  HospitalAggregate,
  NonProfitAggregate,
  Dummy,
};

const char* org_kind_name(OrgKind k);
std::optional<OrgKind> org_kind_from(const std::string& token);

inline bool is_biotech(OrgKind k) {
  return k == OrgKind::BiotechInCluster || k == OrgKind::BiotechOutside;
}

struct OrgRecord {
  OrgId id;
  OrgKind kind = OrgKind::BiotechInCluster;
  // Required for biotech firms, optional for institutions and aggregates.
  std::optional<double> latitude;
  std::optional<double> longitude;
  std::optional<bool> in_postal_cluster;
  std::optional<double> age;          // years since establishment
  std::optional<long long> size;      // employee count
  std::optional<long long> patents_2006;
  std::optional<long long> patents_2007;

  bool is_biotech() const { return commnet::is_biotech(kind); }
};

// Parsed registry with id lookup. Immutable after construction.
class Registry {
public:
  Registry() = default;
  // Validates: unique ids, at most one hospital/non-profit aggregate,
  // Dummy only under the reserved id, biotech rows complete and in range.
  static Registry from_records(std::vector<OrgRecord> records);

  const std::vector<OrgRecord>& records() const { return records_; }
  const OrgRecord* find(const OrgId& id) const;
  const OrgRecord& at(const OrgId& id) const;  // throws UnknownOrg
  bool contains(const OrgId& id) const { return find(id) != nullptr; }
  std::size_t size() const { return records_.size(); }

  std::vector<OrgId> biotech_ids() const;  // registry order

private:
  std::vector<OrgRecord> records_;
  std::unordered_map<OrgId, std::size_t> index_;
};

// ---------------------------------------------------------------------------
// Events and windows

struct CommunicationEvent {
  Date date;
  OrgId reporter;
  OrgId partner;
  bool operator==(const CommunicationEvent&) const = default;
};

// Half-open sliding windows [start + k*step, start + k*step + window) clipped
// at study_end. A window exists for every k with start + k*step < study_end.
struct WindowSpec {
  int window_days = 182;
  int step_days = 7;
  Date study_start;
  Date study_end;

  void validate() const;  // throws InvalidConfig
  int window_count() const;
  std::pair<Date, Date> window_bounds(int k) const;
};

struct SnapshotEdge {
  OrgId a;  // a < b
  OrgId b;
  int weight = 0;  // events between the pair inside the window
  bool operator==(const SnapshotEdge&) const = default;
};

struct GraphSnapshot {
  int window_index = 0;
  std::vector<OrgId> nodes;         // sorted, distinct, never the dummy
  std::vector<SnapshotEdge> edges;  // sorted by (a, b), no self-loops
};

}  // namespace commnet
