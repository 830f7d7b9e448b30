#include "commnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace commnet {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::optional<double> parse_opt_double(const std::string& s, const std::string& ctx) {
  if (s.empty()) return std::nullopt;
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    fail(Errc::ParseError, ctx + ": bad number '" + s + "'");
  return v;
}

std::optional<long long> parse_opt_int(const std::string& s, const std::string& ctx) {
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    fail(Errc::ParseError, ctx + ": bad integer '" + s + "'");
  return v;
}

std::optional<bool> parse_opt_bool(const std::string& s, const std::string& ctx) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  fail(Errc::ParseError, ctx + ": bad boolean '" + s + "' (expected true|false)");
}

const char* kRegistryHeader = "id,kind,lat,lon,in_postal_cluster,age,size,patents_2006,patents_2007";
const char* kEventHeader = "date,reporter,partner";

std::string fmt_double(double v) {
  // Shortest representation that round-trips.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double back = 0;
  std::sscanf(buf, "%lg", &back);
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    std::sscanf(shorter, "%lg", &back);
    if (back == v) return shorter;
  }
  return buf;
}

}  // namespace

Registry parse_org_registry(const std::string& text) {
  auto lines = nonempty_lines(text);
  if (lines.empty() || lines[0] != kRegistryHeader)
    fail(Errc::ParseError, std::string("registry header must be '") + kRegistryHeader + "'");
  std::vector<OrgRecord> records;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = split_csv_line(lines[i]);
    if (f.size() != 9)
      fail(Errc::ParseError, "registry line " + std::to_string(i + 1) + ": expected 9 fields");
    OrgRecord rec;
    rec.id = f[0];
    if (rec.id.empty()) fail(Errc::MissingRequiredField, "registry line " + std::to_string(i + 1) + ": empty id");
    auto kind = org_kind_from(f[1]);
    if (!kind) fail(Errc::ParseError, rec.id + ": unknown kind '" + f[1] + "'");
    rec.kind = *kind;
    rec.latitude = parse_opt_double(f[2], rec.id);
    rec.longitude = parse_opt_double(f[3], rec.id);
    rec.in_postal_cluster = parse_opt_bool(f[4], rec.id);
    rec.age = parse_opt_double(f[5], rec.id);
    rec.size = parse_opt_int(f[6], rec.id);
    rec.patents_2006 = parse_opt_int(f[7], rec.id);
    rec.patents_2007 = parse_opt_int(f[8], rec.id);
    records.push_back(std::move(rec));
  }
  return Registry::from_records(std::move(records));
}

std::string write_org_registry(const Registry& registry) {
  std::string out = kRegistryHeader;
  out += '\n';
  for (const auto& r : registry.records()) {
    out += r.id;
    out += ',';
    out += org_kind_name(r.kind);
    out += ',';
    if (r.latitude) out += fmt_double(*r.latitude);
    out += ',';
    if (r.longitude) out += fmt_double(*r.longitude);
    out += ',';
    if (r.in_postal_cluster) out += *r.in_postal_cluster ? "true" : "false";
    out += ',';
    if (r.age) out += fmt_double(*r.age);
    out += ',';
    if (r.size) out += std::to_string(*r.size);
    out += ',';
    if (r.patents_2006) out += std::to_string(*r.patents_2006);
    out += ',';
    if (r.patents_2007) out += std::to_string(*r.patents_2007);
    out += '\n';
  }
  return out;
}

std::vector<CommunicationEvent> parse_event_log(const std::string& text, const Registry& registry,
                                                const std::optional<StudyPeriod>& period) {
  auto lines = nonempty_lines(text);
  if (lines.empty() || lines[0] != kEventHeader)
    fail(Errc::ParseError, std::string("event header must be '") + kEventHeader + "'");
  std::vector<CommunicationEvent> events;
  events.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = split_csv_line(lines[i]);
    if (f.size() != 3)
      fail(Errc::ParseError, "event line " + std::to_string(i + 1) + ": expected 3 fields");
    CommunicationEvent ev{parse_date(f[0]), f[1], f[2]};
    if (ev.reporter == ev.partner)
      fail(Errc::SelfLoopEvent, "event line " + std::to_string(i + 1) + ": '" + ev.reporter +
                                    "' reported itself");
    const OrgRecord* rep = registry.find(ev.reporter);
    if (!rep || !rep->is_biotech())
      fail(Errc::UnknownReporter,
           "event line " + std::to_string(i + 1) + ": reporter '" + ev.reporter +
               "' is not a registered biotech firm");
    if (ev.partner != kDummyOrg && !registry.contains(ev.partner))
      fail(Errc::UnknownPartner,
           "event line " + std::to_string(i + 1) + ": partner '" + ev.partner + "' unknown");
    if (period && (ev.date < period->start || !(ev.date < period->end)))
      fail(Errc::DateOutsideStudyPeriod,
           "event line " + std::to_string(i + 1) + ": " + format_date(ev.date) +
               " outside [" + format_date(period->start) + ", " + format_date(period->end) + ")");
    events.push_back(std::move(ev));
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const auto& a, const auto& b) { return a.date < b.date; });
  return events;
}

std::string write_event_log(const std::vector<CommunicationEvent>& events) {
  std::string out = kEventHeader;
  out += '\n';
  for (const auto& ev : events) {
    out += format_date(ev.date);
    out += ',';
    out += ev.reporter;
    out += ',';
    out += ev.partner;
    out += '\n';
  }
  return out;
}

std::vector<GraphSnapshot> build_snapshots(const std::vector<CommunicationEvent>& events,
                                           const WindowSpec& spec) {
  spec.validate();
  int count = spec.window_count();
  if (count <= 0) fail(Errc::EmptyStudyPeriod, "no windows fit the study period");
  std::vector<GraphSnapshot> snaps(std::size_t(count));
  for (int k = 0; k < count; ++k) {
    auto [lo, hi] = spec.window_bounds(k);
    std::map<std::pair<OrgId, OrgId>, int> weights;
    for (const auto& ev : events) {
      if (ev.partner == kDummyOrg) continue;
      if (ev.date < lo || !(ev.date < hi)) continue;
      auto key = ev.reporter < ev.partner ? std::make_pair(ev.reporter, ev.partner)
                                          : std::make_pair(ev.partner, ev.reporter);
      ++weights[key];
    }
    GraphSnapshot& s = snaps[std::size_t(k)];
    s.window_index = k;
    std::set<OrgId> nodes;
    for (const auto& [pair, w] : weights) {
      s.edges.push_back(SnapshotEdge{pair.first, pair.second, w});
      nodes.insert(pair.first);
      nodes.insert(pair.second);
    }
    s.nodes.assign(nodes.begin(), nodes.end());
  }
  return snaps;
}

ReportGraph build_report_graph(const std::vector<CommunicationEvent>& events) {
  ReportGraph g;
  g.arcs.reserve(events.size());
  for (const auto& ev : events) {
    g.arcs.emplace_back(ev.reporter, ev.partner);
    g.distinct_reporters[ev.partner].insert(ev.reporter);
  }
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) fail(Errc::IoError, "short write to '" + path + "'");
}

}  // namespace commnet
