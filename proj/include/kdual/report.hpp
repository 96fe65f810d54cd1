#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdual/certificate.hpp"
#include "kdual/graded.hpp"

namespace kdual {

inline constexpr const char* kReportSchema = "kdual-report/1";
inline constexpr const char* kToolVersion = "1.0.0";

enum class Status { Pass, Fail, Skip };

struct CheckRecord {
  std::string name;
  Status status = Status::Pass;
  std::string reason;
  nlohmann::json data = nlohmann::json::object();
};

class Report {
 public:
  Report(std::string command, std::string field, uint64_t seed, int weight_cap, std::optional<DegreeRange> window);

  CheckRecord& add(std::string name, Status status, std::string reason = {}, nlohmann::json data = nlohmann::json::object());
  CheckRecord& add_certificate(std::string name, const Certificate& cert, nlohmann::json data = nlohmann::json::object());
  const std::vector<CheckRecord>& checks() const { return checks_; }

  size_t count(Status s) const;
  // 0 when every non-skipped check passes, 1 on any failure, 3 when all
  // checks were skipped.
  int exit_code() const;

  // Checks sorted by name; timing is kept in its own top-level key.
  nlohmann::json to_json(std::optional<double> elapsed_ms = std::nullopt) const;

 private:
  std::string command_, field_;
  uint64_t seed_;
  int weight_cap_;
  std::optional<DegreeRange> window_;
  std::vector<CheckRecord> checks_;
};

std::string status_name(Status s);
nlohmann::json certificate_json(const Certificate& cert);

// Stable serialisation: sorted keys, two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

// Structural difference ignoring "timing"; one line per changed path.
// Throws ParseError when the schemas differ.
std::vector<std::string> report_diff(const nlohmann::json& a, const nlohmann::json& b);

}  // namespace kdual
