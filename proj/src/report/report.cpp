#include "polyzeta/report/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>

namespace polyzeta {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "info";
}

Check& Check::with_family(Family f) {
  family = std::string(to_string(f));
  return *this;
}

Check& Check::with_exact(const Rational& q) {
  exact_value = q.str();
  return *this;
}

Check make_check(std::string name, std::optional<int> n, bool ok) {
  Check c;
  c.name = std::move(name);
  c.n = n;
  c.status = ok ? Status::Pass : Status::Fail;
  return c;
}

Check make_info(std::string name, std::optional<int> n) {
  Check c;
  c.name = std::move(name);
  c.n = n;
  c.status = Status::Info;
  return c;
}

bool Suite::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
}

void Suite::append(std::vector<Check> more) {
  for (auto& c : more) checks.push_back(std::move(c));
}

bool ReportDocument::any_fail() const {
  return std::any_of(suites.begin(), suites.end(), [](const Suite& s) { return s.any_fail(); });
}

nlohmann::ordered_json to_json(const Check& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  if (c.n) j["n"] = *c.n;
  if (c.family) j["family"] = *c.family;
  j["status"] = std::string(to_string(c.status));
  if (c.exact_value) j["exact_value"] = *c.exact_value;
  if (c.numeric_value) j["numeric_value"] = *c.numeric_value;
  if (c.error_estimate) j["error_estimate"] = *c.error_estimate;
  if (c.note) j["note"] = *c.note;
  if (!c.data.is_null()) j["data"] = c.data;
  return j;
}

nlohmann::ordered_json ReportDocument::to_json() const {
  nlohmann::ordered_json meta;
  meta["tool_version"] = tool_version;
  if (timestamp) meta["timestamp"] = *timestamp;
  std::size_t n_pass = 0, n_fail = 0, n_info = 0;
  nlohmann::ordered_json suites_json = nlohmann::ordered_json::array();
  for (const auto& s : suites) {
    nlohmann::ordered_json sj;
    sj["name"] = s.name;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : s.checks) {
      checks.push_back(polyzeta::to_json(c));
      (c.status == Status::Pass ? n_pass : (c.status == Status::Fail ? n_fail : n_info))++;
    }
    sj["checks"] = std::move(checks);
    suites_json.push_back(std::move(sj));
  }
  meta["summary"] = {{"pass", n_pass}, {"fail", n_fail}, {"info", n_info}};
  nlohmann::ordered_json j;
  j["meta"] = std::move(meta);
  j["suites"] = std::move(suites_json);
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace polyzeta
