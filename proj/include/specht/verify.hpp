#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "specht/endo.hpp"
#include "specht/field.hpp"
#include "specht/module.hpp"
#include "specht/partition.hpp"
#include "specht/report.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// Tableaux used by the coefficient lemmas: the source t (or its extension
/// T), the chosen symbols x_u, and the target tableau whose tabloid
/// coefficient is tracked.
struct LemmaTableaux {
  Tableau source;
  std::vector<int> chosen;  // x_1, x_2, ...
  Tableau target;
};

/// t = row-reading tableau; x_u = smallest symbol of V_u(t) \ H_{u-1}(t);
/// s = t (n, x_{m-1}, ..., x_1). Throws std::logic_error if n is not in
/// V_m(t) \ H_{m-1}(t).
LemmaTableaux restriction_lemma_tableaux(const Partition& lambda);
/// T = extension of the row-reading tableau; S = T (n+1, x_m, ..., x_1).
LemmaTableaux induction_lemma_tableaux(const Partition& lambda);

/// R(6,1,1,1) and I(6,1,1) over GF(2), where a block component decomposes.
bool is_known_char2_counterexample(const Partition& lambda, Direction direction);

VerificationReport verify_en_scalar(const Partition& lambda, FieldSpec field);
VerificationReport verify_min_poly(const Partition& lambda, FieldSpec field, Direction direction);
VerificationReport verify_poly_transfer(const Partition& lambda, FieldSpec field, std::uint64_t seed = 1);
VerificationReport verify_coefficient_restriction(const Partition& lambda, FieldSpec field);
VerificationReport verify_coefficient_induction(const Partition& lambda, FieldSpec field);
/// Block split, then a certificate for every component; p must be prime.
VerificationReport verify_branching(const Partition& lambda, unsigned p, Direction direction,
                                    const CertifyOptions& options = {});
/// Block split only. Over Q with restriction it also checks the classical
/// branching rule: m components, of dimensions f^{lambda restricted at u},
/// each with scalar commutant.
VerificationReport verify_blocks(const Partition& lambda, FieldSpec field, Direction direction);
/// Decomposes S^lambda, or its restriction or induction.
VerificationReport verify_decompose(const Partition& lambda, FieldSpec field, std::optional<Direction> direction,
                                    const CertifyOptions& options = {});
VerificationReport run_char2_counterexamples(const CertifyOptions& options = {});

/// Largest n_max accepted by sweep without force.
inline constexpr int sweep_guardrail = 9;

struct SweepOptions {
  int n_max = 4;
  std::vector<FieldSpec> fields{FieldSpec(0), FieldSpec(3)};
  std::vector<Direction> directions{Direction::restrict, Direction::induce};
  bool force = false;
  /// Restrict the sweep to a single partition.
  std::optional<Partition> only;
  std::uint64_t seed = 1;
  /// Called after every case, in sweep order.
  std::function<void(const VerificationReport&)> progress;
};

/// Runs every verifier over all lambda with |lambda| <= n_max, every field
/// and every direction, ordered by (n, lambda, field, verifier, direction).
/// Throws std::invalid_argument if n_max exceeds the guardrail without force.
SweepResult sweep(const SweepOptions& options);

}  // namespace specht
