#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polyzeta/exact/rational.hpp"
#include "polyzeta/poly/even_polynomial.hpp"

namespace polyzeta {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Status { Pass, Fail, Info };
std::string_view to_string(Status s);

// One line of a verification report.
struct Check {
  std::string name;
  std::optional<int> n;
  std::optional<std::string> family;
  Status status = Status::Info;
  std::optional<std::string> exact_value;     // canonical "p/q"
  std::optional<std::string> numeric_value;   // decimal
  std::optional<std::string> error_estimate;  // decimal
  std::optional<std::string> note;
  nlohmann::ordered_json data;  // optional structured payload (null when unused)

  Check& with_family(Family f);
  Check& with_exact(const Rational& q);
};

Check make_check(std::string name, std::optional<int> n, bool ok);
Check make_info(std::string name, std::optional<int> n);

struct Suite {
  std::string name;
  std::vector<Check> checks;

  bool any_fail() const;
  void append(std::vector<Check> more);
};

struct ReportDocument {
  std::string tool_version = std::string(kToolVersion);
  std::optional<std::string> timestamp;
  std::vector<Suite> suites;

  bool any_fail() const;
  nlohmann::ordered_json to_json() const;
};

// UTC timestamp in ISO-8601 form.
std::string utc_timestamp();

nlohmann::ordered_json to_json(const Check& c);

}  // namespace polyzeta
