#include "specht/report.hpp"

#include <algorithm>
#include <cstdio>

namespace specht {

std::string to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::expected_fail: return "expected-fail";
  }
  return "?";
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Status VerificationReport::status() const {
  bool excused = false;
  for (const auto& c : checks) {
    if (c.pass) continue;
    if (!c.outside_hypothesis) return Status::fail;
    excused = true;
  }
  return excused ? Status::expected_fail : Status::pass;
}

Json VerificationReport::to_json() const {
  Json out;
  out["verifier"] = verifier;
  out["case"] = case_id;
  out["field"] = field;
  out["direction"] = direction.empty() ? Json(nullptr) : Json(direction);
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry = {{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
    if (c.outside_hypothesis) entry["outside_hypothesis"] = true;
    list.push_back(std::move(entry));
  }
  out["checks"] = std::move(list);
  out["seed"] = seed;
  out["millis"] = millis;
  out["status"] = to_string(status());
  if (!details.empty()) out["details"] = details;
  return out;
}

std::string VerificationReport::summary_line() const {
  std::string tag;
  switch (status()) {
    case Status::pass: tag = "PASS "; break;
    case Status::fail: tag = "FAIL "; break;
    case Status::expected_fail: tag = "XFAIL"; break;
  }
  std::string line = tag + " " + verifier + " (" + case_id + ") " + field;
  if (!direction.empty()) line += " " + direction;
  std::size_t passed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  line += "  [" + std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks, " +
          std::to_string(millis) + " ms]";
  return line;
}

std::size_t SweepResult::count(Status status) const {
  return std::count_if(reports.begin(), reports.end(),
                       [&](const VerificationReport& r) { return r.status() == status; });
}

Json SweepResult::to_json() const {
  Json cases = Json::array();
  for (const auto& r : reports) cases.push_back(r.to_json());
  return {{"cases", std::move(cases)},
          {"summary",
           {{"total", reports.size()},
            {"pass", count(Status::pass)},
            {"fail", count(Status::fail)},
            {"expected-fail", count(Status::expected_fail)}}},
          {"millis", millis}};
}

}  // namespace specht
