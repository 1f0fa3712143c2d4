#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specht/linalg.hpp"
#include "specht/module.hpp"

namespace specht {

/// Basis of Hom(M1, M2): all X with A_i X = X B_i for every generator, where
/// A_i, B_i are the generator matrices of M1 and M2. Solved by spinning M1
/// from seed vectors, so the unknowns are the images of the seeds only.
/// Every returned matrix is re-checked against all generators.
template <ExactField F>
std::vector<Matrix<F>> hom_space(const GroupActionModule<F>& first, const GroupActionModule<F>& second);

/// The commutant of a module with its multiplication table.
template <ExactField F>
class EndoAlgebra {
 public:
  /// Computes hom_space(M, M) and the structure constants; throws
  /// std::logic_error if a product leaves the span.
  explicit EndoAlgebra(const GroupActionModule<F>& module);

  const F& field() const { return field_; }
  std::size_t module_dim() const { return module_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix<F>>& basis() const { return basis_; }

  /// Coordinates of basis[i] * basis[j].
  const Vec<F>& structure(std::size_t i, std::size_t j) const { return structure_[i * dim() + j]; }

  /// sum coeffs[i] * basis[i]
  Matrix<F> element(std::span<const typename F::Element> coeffs) const;
  /// Matrix of left multiplication by the element on the algebra itself, in
  /// the basis coordinates. Faithful because the algebra is unital.
  Matrix<F> left_regular(std::span<const typename F::Element> coeffs) const;

 private:
  F field_;
  std::size_t module_dim_;
  std::vector<Matrix<F>> basis_;
  std::vector<Vec<F>> structure_;
};

enum class Verdict { zero, indecomposable, decomposable };
std::string to_string(Verdict verdict);

/// How a verdict was reached.
enum class CertificateBranch {
  zero_module,
  scalar_commutant,   // commutant is the scalars
  exhaustive,         // every element of a finite commutant was tested
  search,             // witness found by the deterministic or seeded search
  probabilistic,      // search budget exhausted without a witness
};
std::string to_string(CertificateBranch branch);

template <ExactField F>
struct DecompositionCertificate {
  Verdict verdict = Verdict::zero;
  CertificateBranch branch = CertificateBranch::zero_module;
  std::size_t commutant_dim = 0;
  std::uint64_t seed = 0;
  /// Number of commutant elements tested.
  std::uint64_t elements_tested = 0;
  /// For decomposable: coordinates of the witness in the commutant basis,
  /// the witness matrix, and the dimensions of ker(w^d) and im(w^d).
  Vec<F> witness_coefficients;
  std::optional<Matrix<F>> witness;
  std::pair<std::size_t, std::size_t> split_dims{0, 0};

  bool deterministic() const { return branch != CertificateBranch::probabilistic; }
};

struct CertifyOptions {
  std::uint64_t seed = 1;
  /// Enumerate the whole commutant when q^dim is at most this.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Random elements tried once the structured search fails.
  std::size_t random_trials = 200;
};

template <ExactField F>
DecompositionCertificate<F> certify_indecomposable(const GroupActionModule<F>& module,
                                                   const CertifyOptions& options = {});

template <ExactField F>
struct Summand {
  Subspace<F> subspace;
  DecompositionCertificate<F> certificate;
};

/// Splits M by Fitting decompositions of witnesses until every summand is
/// certified. Summands are invariant, independent and exhaustive (checked).
template <ExactField F>
std::vector<Summand<F>> decompose(const GroupActionModule<F>& module, const CertifyOptions& options = {});

/// An invertible element of Hom(M1, M2), if one is found. Exhaustive over a
/// finite field when q^dim Hom is within the cap; otherwise basis elements
/// and then seeded random combinations.
template <ExactField F>
std::optional<Matrix<F>> find_isomorphism(const GroupActionModule<F>& first, const GroupActionModule<F>& second,
                                          const CertifyOptions& options = {});

template <ExactField F>
bool is_isomorphic(const GroupActionModule<F>& first, const GroupActionModule<F>& second,
                   const CertifyOptions& options = {}) {
  return find_isomorphism(first, second, options).has_value();
}

/// A vector tau with tau, tau z, ..., tau z^{degree-1} independent. Tries
/// unit vectors, then sums of two unit vectors, then seeded random vectors.
/// Throws std::invalid_argument("no separating vector") if the minimal
/// polynomial of z has smaller degree.
template <ExactField F>
Vec<F> find_separating_vector(const GroupActionModule<F>& module, const Matrix<F>& z, int expected_degree,
                              std::uint64_t seed = 1);

}  // namespace specht
