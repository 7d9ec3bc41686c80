#include "hncert/report.hpp"

#include <algorithm>
#include <fstream>

#include "hncert/errors.hpp"
#include "json.hpp"

namespace hncert {

using nlohmann::json;

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::prime_certified:
      return "prime-certified";
    case Verdict::not_certified:
      return "not-certified";
    case Verdict::certified:
      return "certified";
    case Verdict::failed:
      return "failed";
    case Verdict::inconsistent:
      return "inconsistent";
  }
  return "failed";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "prime-certified") return Verdict::prime_certified;
  if (s == "not-certified") return Verdict::not_certified;
  if (s == "certified") return Verdict::certified;
  if (s == "failed") return Verdict::failed;
  if (s == "inconsistent") return Verdict::inconsistent;
  throw invalid_input_error("unknown verdict '" + s + "'");
}

void ReportBundle::sort_by_stage() {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CertReport& a, const CertReport& b) { return a.stage < b.stage; });
}

namespace {

json report_json(const CertReport& r, bool with_timings) {
  json clauses = json::array();
  for (const auto& c : r.clauses) {
    clauses.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  }
  json j;
  j["stage"] = r.stage;
  j["verdict"] = to_string(r.verdict);
  j["clauses"] = clauses;
  j["field"] = r.field;
  if (r.seed) {
    j["seed"] = *r.seed;
  } else {
    j["seed"] = nullptr;
  }
  j["ms"] = with_timings ? r.ms : 0;
  return j;
}

CertReport report_from(const json& j) {
  CertReport r;
  r.stage = j.at("stage").get<std::string>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  for (const auto& c : j.at("clauses")) {
    r.add(c.at("name").get<std::string>(), c.at("pass").get<bool>(),
          c.at("witness").get<std::string>());
  }
  r.field = j.at("field").get<std::string>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::int64_t>();
  r.ms = j.at("ms").get<std::int64_t>();
  return r;
}

}  // namespace

std::string report_to_json(const CertReport& r, bool with_timings) {
  return report_json(r, with_timings).dump(2) + "\n";
}

std::string bundle_to_json(const ReportBundle& b, bool with_timings) {
  json arr = json::array();
  for (const auto& r : b.reports) arr.push_back(report_json(r, with_timings));
  return arr.dump(2) + "\n";
}

CertReport report_from_json_text(const std::string& text) {
  return report_from(json::parse(text));
}

ReportBundle bundle_from_json_text(const std::string& text) {
  ReportBundle b;
  for (const auto& j : json::parse(text)) b.reports.push_back(report_from(j));
  return b;
}

std::string report_to_text(const CertReport& r) {
  std::string out = "[" + r.stage + "] verdict=" + to_string(r.verdict) +
                    " field=" + r.field;
  if (r.seed) out += " seed=" + std::to_string(*r.seed);
  out += "\n";
  for (const auto& c : r.clauses) {
    out += "  " + std::string(c.pass ? "PASS" : "FAIL") + " " + c.name;
    if (!c.witness.empty()) out += ": " + c.witness;
    out += "\n";
  }
  return out;
}

std::string bundle_to_text(const ReportBundle& b) {
  std::string out;
  for (const auto& r : b.reports) out += report_to_text(r);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error("cannot open '" + path + "' for writing");
  f << content;
  if (!f.good()) throw error("write to '" + path + "' failed");
}

}  // namespace hncert
