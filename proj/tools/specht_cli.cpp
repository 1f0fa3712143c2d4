// specht: command-line front end for the branching verifiers.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specht/verify.hpp"

using namespace specht;

namespace {

struct Common {
  std::string lambda;
  std::string field = "0";
  std::string direction;
  std::uint64_t seed = 1;
  std::string json_path;
  bool no_timing = false;
  bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_lambda, bool wants_direction) {
  if (needs_lambda) cmd->add_option("--lambda", c.lambda, "partition, e.g. 6,1,1,1")->required();
  cmd->add_option("--field", c.field, "Q (or 0) or a prime p for GF(p)");
  if (wants_direction) cmd->add_option("--direction", c.direction, "restrict or induce");
  cmd->add_option("--seed", c.seed, "seed for randomized searches");
  cmd->add_option("--json", c.json_path, "write the JSON report to this path ('-' for stdout)");
  cmd->add_flag("--no-timing", c.no_timing, "report millis as 0, for byte-identical reruns");
  cmd->add_flag("-v,--verbose", c.verbose, "print every check");
}

void write_json(const std::string& path, const Json& value) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << value.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << value.dump(2) << "\n";
}

void print_report(const VerificationReport& report, bool verbose) {
  std::cout << report.summary_line() << "\n";
  for (const auto& c : report.checks) {
    if (!verbose && c.pass) continue;
    std::cout << "    " << (c.pass ? "ok   " : (c.outside_hypothesis ? "xfail" : "FAIL ")) << " " << c.name
              << ": expected " << c.expected.dump() << ", computed " << c.computed.dump() << "\n";
  }
}

int finish(VerificationReport report, const Common& c) {
  if (c.no_timing) report.millis = 0;
  bool to_stdout = c.json_path == "-";
  if (!to_stdout) print_report(report, c.verbose);
  write_json(c.json_path, report.to_json());
  return report.status() == Status::fail ? 1 : 0;
}

Direction direction_or(const Common& c, Direction fallback) {
  return c.direction.empty() ? fallback : parse_direction(c.direction);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verifiers for branching of Specht modules over exact fields"};
  app.require_subcommand(1);

  Common c;
  auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of the transposition sum on R or I");
  add_common(minpoly, c, true, true);
  auto* en_scalar = app.add_subcommand("en-scalar", "E_n acts on S^lambda as the scalar E(lambda)");
  add_common(en_scalar, c, true, false);
  auto* coeff = app.add_subcommand("coeff-lemma", "coefficient pattern of e_t L^i at the target tabloid");
  add_common(coeff, c, true, true);
  auto* transfer = app.add_subcommand("poly-transfer", "polynomials in E_{n-1}, E_{n+1} versus Murphy elements");
  add_common(transfer, c, true, false);
  auto* branching = app.add_subcommand("branching", "block split and indecomposability certificates");
  add_common(branching, c, true, true);
  auto* blocks = app.add_subcommand("blocks", "block components of R or I");
  add_common(blocks, c, true, true);
  auto* decomp = app.add_subcommand("decompose", "indecomposable summands of S^lambda, R or I");
  add_common(decomp, c, true, true);
  auto* counter = app.add_subcommand("counterexamples", "the characteristic 2 counterexamples");
  add_common(counter, c, false, false);

  auto* sweep_cmd = app.add_subcommand("sweep", "run every verifier over all partitions up to n-max");
  int n_max = 4;
  std::string fields = "0,3";
  std::string directions = "restrict,induce";
  bool force = false;
  add_common(sweep_cmd, c, false, false);
  sweep_cmd->add_option("--n-max", n_max, "largest n");
  sweep_cmd->add_option("--fields", fields, "comma-separated fields, e.g. 0,2,3,5");
  sweep_cmd->add_option("--directions", directions, "comma-separated directions");
  sweep_cmd->add_option("--lambda", c.lambda, "only this partition");
  sweep_cmd->add_flag("--force", force, "allow n-max above the guardrail");

  CLI11_PARSE(app, argc, argv);

  try {
    CertifyOptions certify;
    certify.seed = c.seed;
    const auto field = FieldSpec::parse(c.field);
    Partition lambda;
    if (!c.lambda.empty()) lambda = Partition::parse(c.lambda);

    if (minpoly->parsed())
      return finish(verify_min_poly(lambda, field, direction_or(c, Direction::restrict)), c);
    if (en_scalar->parsed()) return finish(verify_en_scalar(lambda, field), c);
    if (coeff->parsed()) {
      auto d = direction_or(c, Direction::restrict);
      return finish(d == Direction::restrict ? verify_coefficient_restriction(lambda, field)
                                             : verify_coefficient_induction(lambda, field),
                    c);
    }
    if (transfer->parsed()) return finish(verify_poly_transfer(lambda, field, c.seed), c);
    if (branching->parsed()) {
      auto d = direction_or(c, Direction::restrict);
      return finish(field.is_rational() ? verify_blocks(lambda, field, d)
                                        : verify_branching(lambda, field.characteristic(), d, certify),
                    c);
    }
    if (blocks->parsed()) return finish(verify_blocks(lambda, field, direction_or(c, Direction::restrict)), c);
    if (decomp->parsed()) {
      std::optional<Direction> d;
      if (!c.direction.empty()) d = parse_direction(c.direction);
      return finish(verify_decompose(lambda, field, d, certify), c);
    }
    if (counter->parsed()) return finish(run_char2_counterexamples(certify), c);

    SweepOptions options;
    options.n_max = n_max;
    options.force = force;
    options.seed = c.seed;
    options.fields.clear();
    for (const auto& f : split_list(fields)) options.fields.push_back(FieldSpec::parse(f));
    options.directions.clear();
    for (const auto& d : split_list(directions)) options.directions.push_back(parse_direction(d));
    if (!c.lambda.empty()) options.only = lambda;
    const bool to_stdout = c.json_path == "-";
    options.progress = [&](const VerificationReport& r) {
      if (!to_stdout) print_report(r, c.verbose);
    };
    auto result = sweep(options);
    if (c.no_timing) {
      result.millis = 0;
      for (auto& r : result.reports) r.millis = 0;
    }
    if (!to_stdout)
      std::cout << "sweep: " << result.reports.size() << " cases, " << result.count(Status::pass) << " pass, "
                << result.count(Status::expected_fail) << " expected-fail, " << result.count(Status::fail)
                << " fail, " << result.millis << " ms\n";
    write_json(c.json_path, result.to_json());
    return result.any_fail() ? 1 : 0;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
}
