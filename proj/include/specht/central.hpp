#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specht/linalg.hpp"
#include "specht/module.hpp"
#include "specht/partition.hpp"
#include "specht/polynomial.hpp"
#include "specht/residues.hpp"

namespace specht {

/// Block of a factor partition mu. For p > 0 the core is the p-core of mu;
/// for p = 0 every content multiset is its own block and core = mu.
/// character_values[k - 1] = e_k(residues of mu), k = 1..|mu|.
template <ExactField F>
struct BlockLabel {
  Partition core;
  unsigned p = 0;
  Vec<F> character_values;

  static BlockLabel of(const Partition& mu, const F& field);
  bool operator==(const BlockLabel& other) const { return core == other.core && p == other.p; }
};

template <ExactField F>
struct BlockComponent {
  BlockLabel<F> label;
  Subspace<F> subspace;
  std::vector<Partition> factor_partitions;
};

/// e_k of the residues of mu: the scalar by which e_k(L_1, ..., L_|mu|) acts
/// on S^mu.
template <ExactField F>
typename F::Element predicted_scalar(const Partition& mu, int k, const F& field) {
  if (k < 1) throw std::invalid_argument("predicted_scalar needs k >= 1");
  return elementary_symmetric_of_contents(mu, k, field);
}

/// The factor partitions lambda restricted at u (u = 1..m) or induced at u
/// (u = 1..m+1).
std::vector<Partition> factor_partitions(const Partition& lambda, Direction direction);

/// Product of (x - E(mu)) over the factor partitions, with duplicates kept.
template <ExactField F>
Polynomial<F> predicted_min_poly(const Partition& lambda, Direction direction, const F& field);

/// Lazily computed matrices of e_k(L_1, ..., L_N) on a module of degree N.
template <ExactField F>
class CentralActions {
 public:
  explicit CentralActions(const GroupActionModule<F>& module) : module_(module) {}

  /// 1 <= k <= degree.
  const Matrix<F>& symmetric(int k);
  const Matrix<F>& murphy(int i);

 private:
  const GroupActionModule<F>& module_;
  std::vector<std::optional<Matrix<F>>> murphy_;
  // table_[i][k]: e_k(L_1, ..., L_i) for k <= i.
  std::vector<std::vector<std::optional<Matrix<F>>>> table_;
  std::optional<Matrix<F>> sum_;
  const Matrix<F>& entry(int i, int k);
};

/// e_k(L_1, ..., L_degree) acting on M, via the recurrence
/// e_k(L_1..L_i) = e_k(L_1..L_{i-1}) + e_{k-1}(L_1..L_{i-1}) L_i.
template <ExactField F>
Matrix<F> central_symmetric_action(const GroupActionModule<F>& module, int k);

/// Splits M into simultaneous generalised eigenspaces of the central
/// elements e_k(L), one per block label of the candidate factors. Labels are
/// returned in order of first appearance. Throws std::logic_error if the
/// components are not invariant, independent and exhaustive, or if a
/// component dimension differs from its predicted Specht dimension sum.
template <ExactField F>
std::vector<BlockComponent<F>> block_split(const GroupActionModule<F>& module,
                                           const std::vector<Partition>& candidate_factors);

}  // namespace specht
