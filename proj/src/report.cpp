#include "kdual/report.hpp"

#include <algorithm>

#include "kdual/errors.hpp"

namespace kdual {

using nlohmann::json;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skip:
      return "skip";
  }
  return "";
}

json certificate_json(const Certificate& cert) {
  json checks = json::object();
  for (const auto& c : cert.checks) {
    json w = json::array();
    for (const auto& x : c.witnesses) w.push_back(x);
    checks[c.name] = {{"passed", c.passed}, {"witnesses", w}};
  }
  json out{{"checks", checks}};
  if (!cert.flags.empty()) out["flags"] = cert.flags;
  return out;
}

Report::Report(std::string command, std::string field, uint64_t seed, int weight_cap, std::optional<DegreeRange> window)
    : command_(std::move(command)), field_(std::move(field)), seed_(seed), weight_cap_(weight_cap), window_(window) {}

CheckRecord& Report::add(std::string name, Status status, std::string reason, json data) {
  checks_.push_back({std::move(name), status, std::move(reason), std::move(data)});
  return checks_.back();
}

CheckRecord& Report::add_certificate(std::string name, const Certificate& cert, json data) {
  std::string reason;
  for (const auto& c : cert.checks)
    if (!c.passed) {
      reason = c.name + (c.witnesses.empty() ? "" : " at " + c.witnesses.front());
      break;
    }
  data["certificate"] = certificate_json(cert);
  return add(std::move(name), cert.passed() ? Status::Pass : Status::Fail, std::move(reason), std::move(data));
}

size_t Report::count(Status s) const {
  return static_cast<size_t>(std::count_if(checks_.begin(), checks_.end(), [s](const auto& c) { return c.status == s; }));
}

int Report::exit_code() const {
  if (count(Status::Fail) > 0) return 1;
  if (count(Status::Pass) == 0 && count(Status::Skip) > 0) return 3;
  return 0;
}

json Report::to_json(std::optional<double> elapsed_ms) const {
  std::vector<const CheckRecord*> sorted;
  for (const auto& c : checks_) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->name < b->name; });
  json checks = json::array();
  for (const auto* c : sorted) {
    json e{{"name", c->name}, {"status", status_name(c->status)}, {"data", c->data}};
    if (!c->reason.empty()) e["reason"] = c->reason;
    checks.push_back(std::move(e));
  }
  json out{{"schema", kReportSchema},
           {"tool", "kdual"},
           {"version", kToolVersion},
           {"command", command_},
           {"field", field_},
           {"seed", seed_},
           {"weight_cap", weight_cap_},
           {"checks", checks},
           {"summary",
            {{"pass", count(Status::Pass)}, {"fail", count(Status::Fail)}, {"skip", count(Status::Skip)},
             {"exit_code", exit_code()}}}};
  out["window"] = window_ ? json::array({window_->lo, window_->hi}) : json(nullptr);
  if (elapsed_ms) out["timing"] = {{"elapsed_ms", *elapsed_ms}};
  return out;
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

namespace {

void diff_into(const json& a, const json& b, const std::string& path, std::vector<std::string>& out) {
  if (a.type() != b.type()) {
    out.push_back("~ " + path + ": " + a.dump() + " -> " + b.dump());
    return;
  }
  if (a.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      std::string p = path.empty() ? it.key() : path + "." + it.key();
      if (!b.contains(it.key()))
        out.push_back("- " + p + ": " + it.value().dump());
      else
        diff_into(it.value(), b[it.key()], p, out);
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!a.contains(it.key())) out.push_back("+ " + (path.empty() ? it.key() : path + "." + it.key()) + ": " + it.value().dump());
    return;
  }
  if (a.is_array()) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) diff_into(a[i], b[i], path + "[" + std::to_string(i) + "]", out);
    for (size_t i = n; i < a.size(); ++i) out.push_back("- " + path + "[" + std::to_string(i) + "]: " + a[i].dump());
    for (size_t i = n; i < b.size(); ++i) out.push_back("+ " + path + "[" + std::to_string(i) + "]: " + b[i].dump());
    return;
  }
  if (a != b) out.push_back("~ " + path + ": " + a.dump() + " -> " + b.dump());
}

}  // namespace

std::vector<std::string> report_diff(const json& a, const json& b) {
  auto schema = [](const json& r) { return r.is_object() && r.contains("schema") ? r["schema"] : json(nullptr); };
  if (schema(a) != schema(b) || schema(a) != kReportSchema) throw ParseError("report schemas differ");
  json x = a, y = b;
  for (json* r : {&x, &y}) {
    r->erase("timing");
    if (r->contains("checks") && (*r)["checks"].is_array()) {
      json keyed = json::object();
      for (const auto& c : (*r)["checks"]) keyed[c.value("name", std::string())] = c;
      (*r)["checks"] = keyed;
    }
  }
  std::vector<std::string> out;
  diff_into(x, y, "", out);
  return out;
}

}  // namespace kdual
