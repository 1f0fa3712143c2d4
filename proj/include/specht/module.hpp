#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "specht/algebra_element.hpp"
#include "specht/field.hpp"
#include "specht/linalg.hpp"
#include "specht/matrix.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/tabloid.hpp"

namespace specht {

enum class Direction { restrict, induce };

std::string to_string(Direction direction);
/// "restrict" or "induce".
Direction parse_direction(std::string_view text);

/// Basis of a module written inside a permutation module M^mu, so that
/// permutations of the full tabloid degree can act and be solved back.
template <ExactField F>
struct AmbientEmbedding {
  std::shared_ptr<const TabloidSpace> space;
  std::shared_ptr<const SpanSolver<F>> solver;

  const Matrix<F>& basis() const { return solver->basis(); }
};

/// Finite-dimensional F S_k-module given by the matrices of the Coxeter
/// generators s_1, ..., s_{k-1} acting on row vectors.
template <ExactField F>
class GroupActionModule {
 public:
  GroupActionModule(F field, int degree, std::size_t dim, std::vector<Matrix<F>> generators,
                    std::optional<AmbientEmbedding<F>> embedding = std::nullopt, std::string label = {});

  const F& field() const { return field_; }
  int degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<F>>& generators() const { return generators_; }
  /// Matrix of s_i, 1 <= i < degree.
  const Matrix<F>& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }
  bool has_embedding() const { return embedding_.has_value(); }
  const AmbientEmbedding<F>& embedding() const { return embedding_.value(); }
  const std::string& label() const { return label_; }

  /// Matrix of a permutation of degree at most degree(), as a product of
  /// generator matrices along its bubble-sort word.
  Matrix<F> permutation_matrix(const Permutation& pi) const;

  /// The submodule on an invariant subspace, in the subspace's coordinates.
  /// Throws std::logic_error if the subspace is not invariant.
  GroupActionModule submodule(const Subspace<F>& subspace, std::string label = {}) const;

  /// Restriction to S_{new_degree}: keeps s_1, ..., s_{new_degree - 1}.
  GroupActionModule restricted(int new_degree, std::string label = {}) const;

 private:
  F field_;
  int degree_;
  std::size_t dim_;
  std::vector<Matrix<F>> generators_;
  std::optional<AmbientEmbedding<F>> embedding_;
  std::string label_;
};

/// Largest n accepted by build_specht and build_induction.
inline constexpr int max_specht_degree = 11;
inline constexpr int max_induction_degree = 10;

/// S^lambda with the standard polytabloid basis, in standard tableau order.
template <ExactField F>
GroupActionModule<F> build_specht(const Partition& lambda, const F& field);

/// S^lambda restricted to S_{n-1}; same basis as build_specht.
template <ExactField F>
GroupActionModule<F> build_restriction(const Partition& lambda, const F& field);

/// S^lambda induced to S_{n+1}, realised as the span of the
/// (lambda, T)-polytabloids inside M^{lambda induced at m+1}.
template <ExactField F>
GroupActionModule<F> build_induction(const Partition& lambda, const F& field);

template <ExactField F>
GroupActionModule<F> build_module(const Partition& lambda, Direction direction, const F& field) {
  return direction == Direction::restrict ? build_restriction(lambda, field) : build_induction(lambda, field);
}

/// Matrix of a group-ring element. Elements of degree up to the ambient
/// tabloid degree act through the embedding; otherwise the degree must not
/// exceed the module degree. Throws std::logic_error if the image leaves the
/// module.
template <ExactField F>
Matrix<F> action_matrix(const GroupActionModule<F>& module, const AlgebraElement& element);

/// Every generator squares to the identity, and the braid and commuting
/// relations hold.
template <ExactField F>
bool satisfies_coxeter_relations(const GroupActionModule<F>& module);

/// M1 + M2 with block-diagonal generators.
template <ExactField F>
GroupActionModule<F> direct_sum(const GroupActionModule<F>& first, const GroupActionModule<F>& second);

}  // namespace specht
