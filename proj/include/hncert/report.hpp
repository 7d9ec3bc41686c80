#ifndef HNCERT_REPORT_HPP
#define HNCERT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hncert {

enum class Verdict { prime_certified, not_certified, certified, failed, inconsistent };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct Clause {
  std::string name;
  bool pass = false;
  std::string witness;
};

// Structured outcome of one certification run / suite stage.
struct CertReport {
  std::string stage;
  Verdict verdict = Verdict::failed;
  std::vector<Clause> clauses;
  std::string field;
  std::optional<std::int64_t> seed;
  std::int64_t ms = 0;

  void add(std::string name, bool pass, std::string witness) {
    clauses.push_back({std::move(name), pass, std::move(witness)});
  }
  bool all_clauses_pass() const {
    for (const auto& c : clauses) {
      if (!c.pass) return false;
    }
    return true;
  }
  bool passed() const {
    return verdict == Verdict::certified || verdict == Verdict::prime_certified;
  }
};

struct ReportBundle {
  std::vector<CertReport> reports;

  bool all_pass() const {
    for (const auto& r : reports) {
      if (!r.passed()) return false;
    }
    return true;
  }
  void sort_by_stage();
};

// JSON per the documented schema:
//   { "stage": str, "verdict": str, "clauses": [{"name","pass","witness"}],
//     "field": str, "seed": int|null, "ms": int }
// Keys are emitted sorted; with_timings=false zeroes "ms" so identical
// runs produce byte-identical output.
std::string report_to_json(const CertReport& r, bool with_timings);
std::string bundle_to_json(const ReportBundle& b, bool with_timings);
CertReport report_from_json_text(const std::string& text);
ReportBundle bundle_from_json_text(const std::string& text);

// One line per clause.
std::string report_to_text(const CertReport& r);
std::string bundle_to_text(const ReportBundle& b);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hncert

#endif
