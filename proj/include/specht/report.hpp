#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "specht/field.hpp"
#include "specht/partition.hpp"
#include "specht/polynomial.hpp"

namespace specht {

using Json = nlohmann::ordered_json;

/// GF(p) residues as JSON integers, rationals as "num/den" strings.
inline Json scalar_json(const PrimeField&, PrimeField::Element value) { return value; }
inline Json scalar_json(const RationalField& field, const RationalField::Element& value) {
  return field.to_string(value);
}

template <ExactField F>
Json polynomial_json(const Polynomial<F>& poly) {
  return poly.to_string();
}

struct Check {
  std::string name;
  Json expected;
  Json computed;
  bool pass = false;
  /// A failure here is a violation the theory allows: the case lies outside
  /// the theorem's hypotheses.
  bool outside_hypothesis = false;
};

enum class Status { pass, fail, expected_fail };
std::string to_string(Status status);

struct VerificationReport {
  std::string verifier;
  std::string case_id;  // the partition, "6,1,1,1"
  std::string field;    // "Q" or "GF(p)"
  std::string direction;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  long long millis = 0;
  /// Free-form structured detail: block components, certificates.
  Json details = Json::object();

  void add(std::string name, Json expected, Json computed) {
    bool pass = expected == computed;
    checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
  void add(std::string name, Json expected, Json computed, bool pass) {
    checks.push_back({std::move(name), std::move(expected), std::move(computed), pass});
  }
  Check& last() { return checks.back(); }

  bool all_pass() const;
  /// fail if any check fails inside the hypotheses; expected-fail if only
  /// checks outside them fail.
  Status status() const;
  Json to_json() const;
  /// "PASS  min-poly (2,1) Q restrict  [3 checks, 1 ms]"
  std::string summary_line() const;
};

struct SweepResult {
  std::vector<VerificationReport> reports;
  long long millis = 0;

  std::size_t count(Status status) const;
  bool any_fail() const { return count(Status::fail) > 0; }
  Json to_json() const;
};

}  // namespace specht
