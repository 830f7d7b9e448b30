#include "commnet/types.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

namespace commnet {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateOrgId: return "DuplicateOrgId";
    case Errc::MissingRequiredField: return "MissingRequiredField";
    case Errc::OutOfRangeCoordinate: return "OutOfRangeCoordinate";
    case Errc::InvalidRegistry: return "InvalidRegistry";
    case Errc::UnknownReporter: return "UnknownReporter";
    case Errc::UnknownPartner: return "UnknownPartner";
    case Errc::SelfLoopEvent: return "SelfLoopEvent";
    case Errc::DateOutsideStudyPeriod: return "DateOutsideStudyPeriod";
    case Errc::InvalidConfig: return "InvalidConfig";
    case Errc::IoError: return "IoError";
    case Errc::EmptyStudyPeriod: return "EmptyStudyPeriod";
    case Errc::UnknownOrg: return "UnknownOrg";
    case Errc::DegenerateGraph: return "DegenerateGraph";
    case Errc::MissingCoordinates: return "MissingCoordinates";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::ConstantVariable: return "ConstantVariable";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::InsufficientObservations: return "InsufficientObservations";
    case Errc::DegenerateGroups: return "DegenerateGroups";
    case Errc::ZeroWithinVariance: return "ZeroWithinVariance";
  }
  return "UnknownError";
}

bool is_input_error(Errc c) {
  switch (c) {
    case Errc::ParseError:
    case Errc::DuplicateOrgId:
    case Errc::MissingRequiredField:
    case Errc::OutOfRangeCoordinate:
    case Errc::InvalidRegistry:
    case Errc::UnknownReporter:
    case Errc::UnknownPartner:
    case Errc::SelfLoopEvent:
    case Errc::DateOutsideStudyPeriod:
    case Errc::InvalidConfig:
    case Errc::IoError:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

Date parse_date(const std::string& iso) {
  int y = 0, m = 0, d = 0;
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
      std::from_chars(iso.data(), iso.data() + 4, y).ec != std::errc{} ||
      std::from_chars(iso.data() + 5, iso.data() + 7, m).ec != std::errc{} ||
      std::from_chars(iso.data() + 8, iso.data() + 10, d).ec != std::errc{}) {
    fail(Errc::ParseError, "bad date '" + iso + "', expected YYYY-MM-DD");
  }
  std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                  std::chrono::day{unsigned(d)}};
  if (!ymd.ok()) fail(Errc::ParseError, "invalid calendar date '" + iso + "'");
  auto days = std::chrono::sys_days(ymd).time_since_epoch().count();
  return Date{int(days)};
}

std::string format_date(Date d) {
  std::chrono::year_month_day ymd{std::chrono::sys_days{std::chrono::days{d.days}}};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                unsigned(ymd.day()));
  return buf;
}

const char* org_kind_name(OrgKind k) {
  switch (k) {
    case OrgKind::BiotechInCluster: return "BiotechInCluster";
    case OrgKind::BiotechOutside: return "BiotechOutside";
    case OrgKind::University: return "University";
    case OrgKind::BigPharma: return "BigPharma";
    case OrgKind::HospitalAggregate: return "HospitalAggregate";
    case OrgKind::NonProfitAggregate: return "NonProfitAggregate";
    case OrgKind::Dummy: return "Dummy";
  }
  return "?";
}

std::optional<OrgKind> org_kind_from(const std::string& token) {
  static const std::pair<const char*, OrgKind> table[] = {
      {"BiotechInCluster", OrgKind::BiotechInCluster},
      {"BiotechOutside", OrgKind::BiotechOutside},
      {"University", OrgKind::University},
      {"BigPharma", OrgKind::BigPharma},
      {"HospitalAggregate", OrgKind::HospitalAggregate},
      {"NonProfitAggregate", OrgKind::NonProfitAggregate},
      {"Dummy", OrgKind::Dummy},
  };
  for (const auto& [name, kind] : table)
    if (token == name) return kind;
  return std::nullopt;
}

Registry Registry::from_records(std::vector<OrgRecord> records) {
  Registry r;
  r.records_ = std::move(records);
  int hospitals = 0, nonprofits = 0;
  for (std::size_t i = 0; i < r.records_.size(); ++i) {
    const OrgRecord& rec = r.records_[i];
    if (rec.id.empty()) fail(Errc::MissingRequiredField, "empty org id");
    if (!r.index_.emplace(rec.id, i).second)
      fail(Errc::DuplicateOrgId, "duplicate org id '" + rec.id + "'");
    if (rec.kind == OrgKind::HospitalAggregate && ++hospitals > 1)
      fail(Errc::InvalidRegistry, "more than one HospitalAggregate node");
    if (rec.kind == OrgKind::NonProfitAggregate && ++nonprofits > 1)
      fail(Errc::InvalidRegistry, "more than one NonProfitAggregate node");
    if (rec.kind == OrgKind::Dummy && rec.id != kDummyOrg)
      fail(Errc::InvalidRegistry, "Dummy kind reserved for id '" + kDummyOrg + "'");
    if (rec.kind != OrgKind::Dummy && rec.id == kDummyOrg)
      fail(Errc::InvalidRegistry, "id '" + kDummyOrg + "' reserved for the dummy node");
    if (rec.latitude && (*rec.latitude < -90.0 || *rec.latitude > 90.0))
      fail(Errc::OutOfRangeCoordinate, rec.id + ": latitude " + std::to_string(*rec.latitude));
    if (rec.longitude && (*rec.longitude < -180.0 || *rec.longitude > 180.0))
      fail(Errc::OutOfRangeCoordinate, rec.id + ": longitude " + std::to_string(*rec.longitude));
    if (rec.is_biotech()) {
      if (!rec.latitude || !rec.longitude || !rec.in_postal_cluster || !rec.age || !rec.size ||
          !rec.patents_2006 || !rec.patents_2007)
        fail(Errc::MissingRequiredField, "biotech row '" + rec.id + "' is incomplete");
      if (*rec.age < 0) fail(Errc::InvalidRegistry, rec.id + ": negative age");
      if (*rec.size < 1) fail(Errc::InvalidRegistry, rec.id + ": size < 1");
      if (*rec.patents_2006 < 0 || *rec.patents_2007 < 0)
        fail(Errc::InvalidRegistry, rec.id + ": negative patent count");
    }
  }
  return r;
}

const OrgRecord* Registry::find(const OrgId& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &records_[it->second];
}

const OrgRecord& Registry::at(const OrgId& id) const {
  const OrgRecord* rec = find(id);
  if (!rec) fail(Errc::UnknownOrg, "org '" + id + "' not in registry");
  return *rec;
}

std::vector<OrgId> Registry::biotech_ids() const {
  std::vector<OrgId> out;
  for (const auto& rec : records_)
    if (rec.is_biotech()) out.push_back(rec.id);
  return out;
}

void WindowSpec::validate() const {
  if (step_days < 1 || window_days < step_days)
    fail(Errc::InvalidConfig, "window spec requires window_days >= step_days >= 1");
  if (!(study_start < study_end))
    fail(Errc::InvalidConfig, "study_start must precede study_end");
}

int WindowSpec::window_count() const {
  validate();
  int span = study_end - study_start;
  return (span + step_days - 1) / step_days;  // windows with start strictly inside the period
}

std::pair<Date, Date> WindowSpec::window_bounds(int k) const {
  Date b = study_start + k * step_days;
  Date e = b + window_days;
  if (study_end < e) e = study_end;
  return {b, e};
}

}  // namespace commnet
