#include "specht/central.hpp"

#include <numeric>
#include <stdexcept>

namespace specht {

template <ExactField F>
BlockLabel<F> BlockLabel<F>::of(const Partition& mu, const F& field) {
  BlockLabel out;
  out.p = field.characteristic();
  out.core = out.p == 0 ? mu : p_core(mu, static_cast<int>(out.p));
  for (int k = 1; k <= mu.size(); ++k) out.character_values.push_back(predicted_scalar(mu, k, field));
  return out;
}

std::vector<Partition> factor_partitions(const Partition& lambda, Direction direction) {
  return direction == Direction::restrict ? restrictions(lambda) : inductions(lambda);
}

template <ExactField F>
Polynomial<F> predicted_min_poly(const Partition& lambda, Direction direction, const F& field) {
  if (direction == Direction::restrict && lambda.size() < 2)
    throw std::invalid_argument("restriction needs n >= 2");
  Vec<F> roots;
  for (const auto& mu : factor_partitions(lambda, direction)) roots.push_back(residue_sum(mu, field));
  return poly_product_from_roots(field, std::span<const typename F::Element>(roots));
}

template <ExactField F>
const Matrix<F>& CentralActions<F>::murphy(int i) {
  const int n = module_.degree();
  if (i < 1 || i > n) throw std::out_of_range("Murphy element index out of range");
  if (murphy_.empty()) murphy_.resize(static_cast<std::size_t>(n) + 1);
  auto& slot = murphy_[static_cast<std::size_t>(i)];
  if (!slot) slot = action_matrix(module_, murphy_element(i));
  return *slot;
}

template <ExactField F>
const Matrix<F>& CentralActions<F>::entry(int i, int k) {
  if (table_.empty()) table_.resize(static_cast<std::size_t>(module_.degree()) + 1);
  auto& row = table_[static_cast<std::size_t>(i)];
  if (row.empty()) row.resize(static_cast<std::size_t>(i) + 1);
  auto& slot = row[static_cast<std::size_t>(k)];
  if (slot) return *slot;
  const auto& field = module_.field();
  if (k == 0) {
    slot = Matrix<F>::identity(field, module_.dim());
  } else if (k == i) {
    slot = i == 1 ? murphy(1) : entry(i - 1, k - 1) * murphy(i);
  } else {
    Matrix<F> value = entry(i - 1, k);
    value = value + entry(i - 1, k - 1) * murphy(i);
    slot = std::move(value);
  }
  return *slot;
}

template <ExactField F>
const Matrix<F>& CentralActions<F>::symmetric(int k) {
  const int n = module_.degree();
  if (k < 1 || k > n) throw std::out_of_range("symmetric function index out of range");
  if (k == 1) {
    // e_1(L) is the sum of all transpositions; one pass instead of n.
    if (!sum_) sum_ = action_matrix(module_, transposition_sum(n));
    return *sum_;
  }
  return entry(n, k);
}

template <ExactField F>
Matrix<F> central_symmetric_action(const GroupActionModule<F>& module, int k) {
  CentralActions<F> actions(module);
  return actions.symmetric(k);
}

template <ExactField F>
std::vector<BlockComponent<F>> block_split(const GroupActionModule<F>& module,
                                           const std::vector<Partition>& candidate_factors) {
  const auto& field = module.field();
  const int n = module.degree();
  const std::size_t dim = module.dim();

  std::vector<BlockComponent<F>> components;
  std::vector<std::size_t> expected;
  for (const auto& mu : candidate_factors) {
    if (mu.size() != n) throw std::invalid_argument("factor partition " + mu.pretty() + " has the wrong size");
    auto label = BlockLabel<F>::of(mu, field);
    std::size_t g = 0;
    while (g < components.size() && !(components[g].label == label)) ++g;
    if (g == components.size()) {
      components.push_back({label, Subspace<F>::full(field, dim), {}});
      expected.push_back(0);
    }
    components[g].factor_partitions.push_back(mu);
    expected[g] += specht_dimension(mu);
  }
  if (std::accumulate(expected.begin(), expected.end(), std::size_t{0}) != dim)
    throw std::logic_error("factor dimensions do not add up to the module dimension");

  auto settled = [&] {
    for (std::size_t g = 0; g < components.size(); ++g)
      if (components[g].subspace.dim() != expected[g]) return false;
    return true;
  };

  CentralActions<F> actions(module);
  for (int k = 1; k <= n && !settled(); ++k) {
    const auto& central = actions.symmetric(k);
    for (auto& component : components) {
      auto& space = component.subspace;
      if (space.dim() == 0) continue;
      auto local = restrict_to(central, space);
      auto eigen = generalized_eigenspace(local, component.label.character_values[static_cast<std::size_t>(k - 1)]);
      space = space.from_coordinates(eigen);
    }
  }

  std::vector<Subspace<F>> parts;
  for (std::size_t g = 0; g < components.size(); ++g) {
    const auto& space = components[g].subspace;
    if (space.dim() != expected[g])
      throw std::logic_error("block component " + components[g].label.core.pretty() + " has dimension " +
                             std::to_string(space.dim()) + ", expected " + std::to_string(expected[g]));
    for (const auto& gen : module.generators())
      if (!space.is_invariant(gen)) throw std::logic_error("block component is not a submodule");
    parts.push_back(space);
  }
  if (!independent(parts)) throw std::logic_error("block components are not independent");
  return components;
}

#define SPECHT_INSTANTIATE_CENTRAL(F)                                                                  \
  template struct BlockLabel<F>;                                                                       \
  template Polynomial<F> predicted_min_poly(const Partition&, Direction, const F&);                    \
  template class CentralActions<F>;                                                                    \
  template Matrix<F> central_symmetric_action(const GroupActionModule<F>&, int);                       \
  template std::vector<BlockComponent<F>> block_split(const GroupActionModule<F>&,                     \
                                                      const std::vector<Partition>&);

SPECHT_INSTANTIATE_CENTRAL(PrimeField)
SPECHT_INSTANTIATE_CENTRAL(RationalField)

}  // namespace specht
