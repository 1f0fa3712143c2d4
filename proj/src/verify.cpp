#include "specht/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "specht/central.hpp"
#include "specht/residues.hpp"
#include "specht/tabloid.hpp"

namespace specht {

namespace {

class Stopwatch {
 public:
  long long millis() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport make_report(std::string verifier, const Partition& lambda, FieldSpec field,
                               std::optional<Direction> direction = std::nullopt) {
  VerificationReport report;
  report.verifier = std::move(verifier);
  report.case_id = lambda.to_string();
  report.field = field.name();
  if (direction) report.direction = to_string(*direction);
  return report;
}

Json partitions_json(const std::vector<Partition>& parts) {
  Json out = Json::array();
  for (const auto& p : parts) out.push_back(p.pretty());
  return out;
}

int smallest_outside(const std::vector<int>& region, const std::vector<int>& excluded) {
  for (int x : region)
    if (!std::binary_search(excluded.begin(), excluded.end(), x)) return x;
  throw std::logic_error("region V_u \\ H_{u-1} is empty");
}

std::vector<int> chosen_symbols(const Tableau& t, int count) {
  std::vector<int> out;
  for (int u = 1; u <= count; ++u) out.push_back(smallest_outside(region_V(t, u), region_H(t, u - 1)));
  return out;
}

/// Cycle (top, x_k, ..., x_1).
Permutation descending_cycle(int degree, int top, const std::vector<int>& xs, int k) {
  std::vector<int> points{top};
  for (int u = k; u >= 1; --u) points.push_back(xs[static_cast<std::size_t>(u - 1)]);
  return Permutation::cycle(degree, points);
}

template <ExactField F>
ModuleVector<F> horner(const Polynomial<F>& poly, const ModuleVector<F>& v,
                       const std::function<ModuleVector<F>(const ModuleVector<F>&)>& op) {
  ModuleVector<F> acc(v.space_ptr(), v.field());
  for (int i = poly.degree(); i >= 0; --i) acc = op(acc) + v.scaled(poly.coefficient(i));
  return acc;
}

template <ExactField F>
Json certificate_json(const DecompositionCertificate<F>& cert, const F& field) {
  Json out = {{"verdict", to_string(cert.verdict)},
              {"branch", to_string(cert.branch)},
              {"commutant_dim", cert.commutant_dim},
              {"elements_tested", cert.elements_tested},
              {"seed", cert.seed}};
  if (cert.verdict == Verdict::decomposable) {
    Json coeffs = Json::array();
    for (const auto& c : cert.witness_coefficients) coeffs.push_back(scalar_json(field, c));
    out["witness_coefficients"] = std::move(coeffs);
    out["split_dims"] = {cert.split_dims.first, cert.split_dims.second};
  }
  return out;
}

std::uint64_t dimension_sum(const std::vector<Partition>& parts) {
  std::uint64_t out = 0;
  for (const auto& p : parts) out += specht_dimension(p);
  return out;
}

template <ExactField F>
void en_scalar(VerificationReport& report, const Partition& lambda, const F& field) {
  auto module = build_specht(lambda, field);
  auto action = action_matrix(module, transposition_sum(lambda.size()));
  auto expected = residue_sum(lambda, field);
  report.add("E_n acts as the scalar E(lambda)", scalar_json(field, expected),
             action.is_zero() || action == Matrix<F>::scalar(field, action.rows(), action(0, 0))
                 ? scalar_json(field, action.rows() ? action(0, 0) : expected)
                 : Json("not a scalar matrix"));
}

template <ExactField F>
void min_poly(VerificationReport& report, const Partition& lambda, Direction direction, const F& field) {
  auto module = build_module(lambda, direction, field);
  auto action = action_matrix(module, transposition_sum(module.degree()));
  auto computed = minimal_polynomial(action);
  auto predicted = predicted_min_poly(lambda, direction, field);
  const int bound = lambda.distinct_parts() + (direction == Direction::induce ? 1 : 0);
  report.add("module dimension", dimension_sum(factor_partitions(lambda, direction)), module.dim());
  report.add("minimal polynomial", polynomial_json(predicted), polynomial_json(computed));
  report.add("degree", bound, computed.degree());
  report.add("degree at most " + std::to_string(bound), "<= " + std::to_string(bound), computed.degree(),
             computed.degree() <= bound);
}

template <ExactField F>
void poly_transfer(VerificationReport& report, const Partition& lambda, const F& field, std::uint64_t seed) {
  const int n = lambda.size();
  const int m = lambda.distinct_parts();
  std::mt19937_64 rng(seed);
  auto random_scalar = [&] {
    if constexpr (is_finite_field_v<F>)
      return field.from_integer(static_cast<long long>(rng() % field.order()));
    else
      return field.from_integer(static_cast<long long>(rng() % 11) - 5);
  };
  auto tableaux = standard_tableaux(lambda);
  const auto e_lambda = residue_sum(lambda, field);
  auto small_space = std::make_shared<const TabloidSpace>(lambda);
  auto big_space = std::make_shared<const TabloidSpace>(induce_at(lambda, m + 1));
  const auto e_below = transposition_sum(n - 1);
  const auto e_above = transposition_sum(n + 1);
  const auto l_n = murphy_element(n);
  const auto l_next = murphy_element(n + 1);

  constexpr int trials = 3;
  for (int trial = 0; trial < trials; ++trial) {
    const int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(m + 2));
    std::vector<typename F::Element> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto& c : coeffs) c = random_scalar();
    if (trial == 0) coeffs.assign(1, field.one());  // f = 1
    Polynomial<F> poly(field, coeffs);
    const auto& t = tableaux[rng() % tableaux.size()];
    const std::string tag = " #" + std::to_string(trial + 1) + " f=" + poly.to_string() + " t=" + t.to_string();

    auto e_t = polytabloid(small_space, t, field);
    auto lhs = horner<F>(poly, e_t, [&](const ModuleVector<F>& v) { return v.acted(e_below); });
    auto rhs = horner<F>(poly, e_t, [&](const ModuleVector<F>& v) { return v.scaled(e_lambda) - v.acted(l_n); });
    report.add("restriction transfer" + tag, true, lhs == rhs);

    auto e_big = induced_polytabloid(big_space, t.extension(), lambda, field);
    auto lhs_up = horner<F>(poly, e_big, [&](const ModuleVector<F>& v) { return v.acted(e_above); });
    auto rhs_up =
        horner<F>(poly, e_big, [&](const ModuleVector<F>& v) { return v.scaled(e_lambda) + v.acted(l_next); });
    report.add("induction transfer" + tag, true, lhs_up == rhs_up);
  }
}

/// Coefficient of {target} in source_vector L^i for i = 0..last.
template <ExactField F>
void coefficient_pattern(VerificationReport& report, ModuleVector<F> v, const Tableau& target,
                         const AlgebraElement& murphy, int last, const F& field) {
  for (int i = 0; i <= last; ++i) {
    if (i > 0) v = v.acted(murphy);
    auto expected = field.from_integer(i == last ? 1 : 0);
    report.add("coefficient at i=" + std::to_string(i), scalar_json(field, expected),
               scalar_json(field, v.coefficient(target)));
  }
}

template <ExactField F>
void coefficient_restriction(VerificationReport& report, const Partition& lambda, const F& field) {
  auto setup = restriction_lemma_tableaux(lambda);
  auto space = std::make_shared<const TabloidSpace>(lambda);
  const int m = lambda.distinct_parts();
  report.details = {{"t", setup.source.to_string()}, {"s", setup.target.to_string()}, {"x", setup.chosen}};
  coefficient_pattern(report, polytabloid(space, setup.source, field), setup.target, murphy_element(lambda.size()),
                      m - 1, field);
}

template <ExactField F>
void coefficient_induction(VerificationReport& report, const Partition& lambda, const F& field) {
  auto setup = induction_lemma_tableaux(lambda);
  auto space = std::make_shared<const TabloidSpace>(setup.source.shape());
  const int m = lambda.distinct_parts();
  report.details = {{"T", setup.source.to_string()}, {"S", setup.target.to_string()}, {"x", setup.chosen}};
  coefficient_pattern(report, induced_polytabloid(space, setup.source, lambda, field), setup.target,
                      murphy_element(lambda.size() + 1), m, field);
}

template <ExactField F>
std::vector<BlockComponent<F>> checked_block_split(VerificationReport& report, const GroupActionModule<F>& module,
                                                   const std::vector<Partition>& factors) {
  report.add("module dimension", dimension_sum(factors), module.dim());
  try {
    auto components = block_split(module, factors);
    std::size_t total = 0;
    for (const auto& c : components) total += c.subspace.dim();
    report.add("block components are invariant, independent and exhaustive", module.dim(), total);
    return components;
  } catch (const std::logic_error& error) {
    report.add("block components are invariant, independent and exhaustive", "block split", error.what(), false);
    return {};
  }
}

template <ExactField F>
Json component_json(const BlockComponent<F>& component) {
  return {{"core", component.label.core.pretty()},
          {"dim", component.subspace.dim()},
          {"factors", partitions_json(component.factor_partitions)}};
}

template <ExactField F>
void branching(VerificationReport& report, const Partition& lambda, Direction direction, const F& field,
               const CertifyOptions& options) {
  const unsigned p = field.characteristic();
  const bool hypothesis = p != 2;
  const bool counterexample = p == 2 && is_known_char2_counterexample(lambda, direction);
  auto module = build_module(lambda, direction, field);
  auto factors = factor_partitions(lambda, direction);
  auto components = checked_block_split(report, module, factors);

  std::set<Partition> cores;
  Json core_map = Json::array();
  for (const auto& mu : factors) {
    auto core = p_core(mu, static_cast<int>(p));
    cores.insert(core);
    core_map.push_back({{"factor", mu.pretty()}, {"core", core.pretty()}});
  }

  Json listed = Json::array();
  std::size_t summands = 0;
  bool all_deterministic = true;
  for (const auto& component : components) {
    auto piece = module.submodule(component.subspace);
    auto cert = certify_indecomposable(piece, options);
    Json entry = component_json(component);
    entry["certificate"] = certificate_json(cert, field);
    listed.push_back(std::move(entry));
    all_deterministic = all_deterministic && cert.deterministic();
    std::string verdict = to_string(cert.verdict);
    if (cert.branch == CertificateBranch::probabilistic) verdict += " (probabilistic)";

    report.add("component " + component.label.core.pretty() + " indecomposable", "indecomposable", verdict);
    report.last().outside_hypothesis = !hypothesis;
    if (counterexample)
      report.add("counterexample component " + component.label.core.pretty() + " decomposable", "decomposable",
                 to_string(cert.verdict), cert.verdict == Verdict::decomposable);

    if (cert.verdict == Verdict::indecomposable)
      summands += 1;
    else if (cert.verdict == Verdict::decomposable)
      summands += decompose(piece, options).size();
  }
  report.add("certificates deterministic", true, all_deterministic);
  report.add("indecomposable summands = distinct p-cores", cores.size(), summands);
  report.last().outside_hypothesis = !hypothesis;
  report.details = {{"factor_cores", std::move(core_map)}, {"components", std::move(listed)}};
}

template <ExactField F>
void blocks(VerificationReport& report, const Partition& lambda, Direction direction, const F& field) {
  auto module = build_module(lambda, direction, field);
  auto factors = factor_partitions(lambda, direction);
  auto components = checked_block_split(report, module, factors);

  std::vector<BlockLabel<F>> labels;
  for (const auto& mu : factors) {
    auto label = BlockLabel<F>::of(mu, field);
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) labels.push_back(label);
  }
  report.add("components = distinct block labels", labels.size(), components.size());

  Json listed = Json::array();
  for (const auto& c : components) listed.push_back(component_json(c));
  report.details = {{"components", std::move(listed)}};

  if (field.characteristic() == 0 && direction == Direction::restrict) {
    std::vector<std::uint64_t> expected, computed;
    for (const auto& mu : factors) expected.push_back(specht_dimension(mu));
    bool simple = true;
    for (const auto& c : components) {
      computed.push_back(c.subspace.dim());
      simple = simple && EndoAlgebra<F>(module.submodule(c.subspace)).dim() == 1;
    }
    report.add("classical branching: m summands", lambda.distinct_parts(), components.size());
    report.add("classical branching: summand dimensions", expected, computed);
    report.add("classical branching: summands have scalar commutant", true, simple);
  }
}

template <ExactField F>
void decompose_case(VerificationReport& report, const Partition& lambda, std::optional<Direction> direction,
                    const F& field, const CertifyOptions& options) {
  auto module = direction ? build_module(lambda, *direction, field) : build_specht(lambda, field);
  auto summands = decompose(module, options);
  Json listed = Json::array();
  std::size_t total = 0;
  bool deterministic = true;
  for (const auto& s : summands) {
    total += s.subspace.dim();
    deterministic = deterministic && s.certificate.deterministic();
    listed.push_back({{"dim", s.subspace.dim()}, {"certificate", certificate_json(s.certificate, field)}});
  }
  report.add("summands are exhaustive", module.dim(), total);
  report.add("certificates deterministic", true, deterministic);
  report.details = {{"module", module.label()}, {"summands", std::move(listed)}};
}

void counterexamples(VerificationReport& report, const CertifyOptions& options) {
  const PrimeField field(2);
  const auto big = Partition({6, 1, 1, 1});
  auto specht = build_specht(big, field);

  // (a) S^(6,1,1,1) = S^(8,1) + S^(6,3).
  auto summands = decompose(specht, options);
  std::vector<std::size_t> dims;
  for (const auto& s : summands) dims.push_back(s.subspace.dim());
  std::sort(dims.begin(), dims.end());
  report.add("S^(6,1,1,1) summand dimensions", std::vector<std::size_t>{8, 48}, dims);
  const std::vector<std::pair<std::size_t, Partition>> targets{{8, Partition({8, 1})}, {48, Partition({6, 3})}};
  for (const auto& [dim, shape] : targets) {
    bool iso = false;
    for (const auto& s : summands)
      if (s.subspace.dim() == dim)
        iso = is_isomorphic(specht.submodule(s.subspace), build_specht(shape, field), options);
    report.add("dim-" + std::to_string(dim) + " summand isomorphic to S^" + shape.pretty(), true, iso);
  }

  // (b) The restriction to S_8 lies in the principal block and is decomposable.
  auto restricted = build_restriction(big, field);
  auto r_blocks = block_split(restricted, restrictions(big));
  Json r_cores = Json::array();
  for (const auto& c : r_blocks) r_cores.push_back(c.label.core.pretty());
  report.add("restriction block cores", Json::array({"()"}), r_cores);
  auto r_cert = certify_indecomposable(restricted, options);
  report.add("restriction verdict", "decomposable", to_string(r_cert.verdict));

  // (c) The (2,1)-core component of the induced module is S^(6,1,1,1).
  const auto small = Partition({6, 1, 1});
  auto induced = build_induction(small, field);
  Json factor_cores = Json::array();
  for (const auto& mu : inductions(small)) factor_cores.push_back(p_core(mu, 2).pretty());
  report.add("induction factor cores", Json::array({"(1)", "(1)", "(2,1)"}), factor_cores);
  auto i_blocks = block_split(induced, inductions(small));
  const BlockComponent<PrimeField>* target = nullptr;
  for (const auto& c : i_blocks)
    if (c.label.core == Partition({2, 1})) target = &c;
  report.add("(2,1)-core component dimension", 56, target ? target->subspace.dim() : 0);
  if (target) {
    auto piece = induced.submodule(target->subspace);
    report.add("(2,1)-core component isomorphic to S^(6,1,1,1)", true, is_isomorphic(piece, specht, options));
    auto cert = certify_indecomposable(piece, options);
    report.add("(2,1)-core component verdict", "decomposable", to_string(cert.verdict));
    report.details["induced_component_certificate"] = certificate_json(cert, field);
  }
  report.details["restriction_certificate"] = certificate_json(r_cert, field);
}

}  // namespace

LemmaTableaux restriction_lemma_tableaux(const Partition& lambda) {
  const int n = lambda.size();
  const int m = lambda.distinct_parts();
  if (m < 1) throw std::invalid_argument("the coefficient lemma needs a nonempty partition");
  auto t = Tableau::row_reading(lambda);
  auto v_m = region_V(t, m);
  auto h_prev = region_H(t, m - 1);
  if (!std::binary_search(v_m.begin(), v_m.end(), n) || std::binary_search(h_prev.begin(), h_prev.end(), n))
    throw std::logic_error("n is not in V_m(t) \\ H_{m-1}(t)");
  auto xs = chosen_symbols(t, m - 1);
  auto s = t.apply(descending_cycle(n, n, xs, m - 1));
  return {t, xs, s};
}

LemmaTableaux induction_lemma_tableaux(const Partition& lambda) {
  const int n = lambda.size();
  const int m = lambda.distinct_parts();
  if (m < 1) throw std::invalid_argument("the coefficient lemma needs a nonempty partition");
  auto t = Tableau::row_reading(lambda);
  auto xs = chosen_symbols(t, m);
  auto big = t.extension();
  auto target = big.apply(descending_cycle(n + 1, n + 1, xs, m));
  return {big, xs, target};
}

bool is_known_char2_counterexample(const Partition& lambda, Direction direction) {
  return (direction == Direction::restrict && lambda == Partition({6, 1, 1, 1})) ||
         (direction == Direction::induce && lambda == Partition({6, 1, 1}));
}

VerificationReport verify_en_scalar(const Partition& lambda, FieldSpec field) {
  Stopwatch clock;
  auto report = make_report("en-scalar", lambda, field);
  visit_field(field, [&](const auto& f) { en_scalar(report, lambda, f); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_min_poly(const Partition& lambda, FieldSpec field, Direction direction) {
  Stopwatch clock;
  auto report = make_report("min-poly", lambda, field, direction);
  visit_field(field, [&](const auto& f) { min_poly(report, lambda, direction, f); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_poly_transfer(const Partition& lambda, FieldSpec field, std::uint64_t seed) {
  if (lambda.size() < 2) throw std::invalid_argument("polynomial transfer needs n >= 2");
  Stopwatch clock;
  auto report = make_report("poly-transfer", lambda, field);
  report.seed = seed;
  visit_field(field, [&](const auto& f) { poly_transfer(report, lambda, f, seed); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_coefficient_restriction(const Partition& lambda, FieldSpec field) {
  Stopwatch clock;
  auto report = make_report("coeff-lemma", lambda, field, Direction::restrict);
  visit_field(field, [&](const auto& f) { coefficient_restriction(report, lambda, f); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_coefficient_induction(const Partition& lambda, FieldSpec field) {
  Stopwatch clock;
  auto report = make_report("coeff-lemma", lambda, field, Direction::induce);
  visit_field(field, [&](const auto& f) { coefficient_induction(report, lambda, f); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_branching(const Partition& lambda, unsigned p, Direction direction,
                                    const CertifyOptions& options) {
  if (p == 0) throw std::invalid_argument("branching needs a prime; use verify_blocks over Q");
  Stopwatch clock;
  const FieldSpec spec(p);
  auto report = make_report("branching", lambda, spec, direction);
  report.seed = options.seed;
  branching(report, lambda, direction, PrimeField(p), options);
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_blocks(const Partition& lambda, FieldSpec field, Direction direction) {
  Stopwatch clock;
  auto report = make_report("blocks", lambda, field, direction);
  visit_field(field, [&](const auto& f) { blocks(report, lambda, direction, f); });
  report.millis = clock.millis();
  return report;
}

VerificationReport verify_decompose(const Partition& lambda, FieldSpec field, std::optional<Direction> direction,
                                    const CertifyOptions& options) {
  Stopwatch clock;
  auto report = make_report("decompose", lambda, field, direction);
  report.seed = options.seed;
  visit_field(field, [&](const auto& f) { decompose_case(report, lambda, direction, f, options); });
  report.millis = clock.millis();
  return report;
}

VerificationReport run_char2_counterexamples(const CertifyOptions& options) {
  Stopwatch clock;
  auto report = make_report("counterexamples", Partition({6, 1, 1, 1}), FieldSpec(2));
  report.seed = options.seed;
  counterexamples(report, options);
  report.millis = clock.millis();
  return report;
}

SweepResult sweep(const SweepOptions& options) {
  if (options.n_max < 1) throw std::invalid_argument("n_max must be positive");
  if (options.n_max > sweep_guardrail && !options.force)
    throw std::invalid_argument("n_max above " + std::to_string(sweep_guardrail) + " needs --force");
  if (options.n_max > max_induction_degree &&
      std::find(options.directions.begin(), options.directions.end(), Direction::induce) != options.directions.end())
    throw std::invalid_argument("induction is limited to n <= " + std::to_string(max_induction_degree));

  Stopwatch clock;
  SweepResult result;
  auto record = [&](VerificationReport report) {
    if (options.progress) options.progress(report);
    result.reports.push_back(std::move(report));
  };
  CertifyOptions certify;
  certify.seed = options.seed;

  for (int n = 1; n <= options.n_max; ++n) {
    std::vector<Partition> shapes;
    if (options.only) {
      if (options.only->size() == n) shapes.push_back(*options.only);
    } else {
      shapes = partitions_of(n);
    }
    for (const auto& lambda : shapes)
      for (const auto& field : options.fields) {
        record(verify_en_scalar(lambda, field));
        for (auto direction : options.directions) {
          if (direction == Direction::restrict && n < 2) continue;
          record(verify_min_poly(lambda, field, direction));
        }
        for (auto direction : options.directions)
          record(direction == Direction::restrict ? verify_coefficient_restriction(lambda, field)
                                                  : verify_coefficient_induction(lambda, field));
        if (n >= 2) record(verify_poly_transfer(lambda, field, options.seed));
        for (auto direction : options.directions) {
          if (direction == Direction::restrict && n < 2) continue;
          record(field.is_rational() ? verify_blocks(lambda, field, direction)
                                     : verify_branching(lambda, field.characteristic(), direction, certify));
        }
      }
  }
  result.millis = clock.millis();
  return result;
}

}  // namespace specht
