#include "specht/module.hpp"

#include <stdexcept>

#include "specht/tableau.hpp"

namespace specht {

std::string to_string(Direction direction) { return direction == Direction::restrict ? "restrict" : "induce"; }

Direction parse_direction(std::string_view text) {
  if (text == "restrict" || text == "restriction") return Direction::restrict;
  if (text == "induce" || text == "induction") return Direction::induce;
  throw std::invalid_argument("direction must be 'restrict' or 'induce'");
}

namespace {

template <ExactField F>
Vec<F> permute_coordinates(std::span<const typename F::Element> v, const std::vector<std::uint32_t>& images,
                           const F& field) {
  Vec<F> out(v.size(), field.zero());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) out[images[i]] = v[i];
  return out;
}

/// Generator matrices of s_1..s_{degree-1} on the span of `embedding`,
/// through the tabloid action.
template <ExactField F>
std::vector<Matrix<F>> generators_from_embedding(const AmbientEmbedding<F>& embedding, int degree, const F& field) {
  const auto& basis = embedding.basis();
  const std::size_t dim = basis.rows();
  std::vector<Matrix<F>> gens;
  for (int i = 1; i < degree; ++i) {
    auto images =
        embedding.space->index_permutation(Permutation::transposition(embedding.space->degree(), i, i + 1));
    Matrix<F> gen(field, dim, dim);
    for (std::size_t b = 0; b < dim; ++b) {
      auto coords = embedding.solver->coordinates(permute_coordinates(basis.row(b), images, field));
      if (!coords) throw std::logic_error("straightening failure: generator image left the module");
      std::copy(coords->begin(), coords->end(), gen.row(b).begin());
    }
    gens.push_back(std::move(gen));
  }
  return gens;
}

}  // namespace

template <ExactField F>
GroupActionModule<F>::GroupActionModule(F field, int degree, std::size_t dim, std::vector<Matrix<F>> generators,
                                        std::optional<AmbientEmbedding<F>> embedding, std::string label)
    : field_(std::move(field)),
      degree_(degree),
      dim_(dim),
      generators_(std::move(generators)),
      embedding_(std::move(embedding)),
      label_(std::move(label)) {
  if (degree_ < 1) throw std::invalid_argument("module degree must be positive");
  if (static_cast<int>(generators_.size()) != degree_ - 1)
    throw std::invalid_argument("expected one generator matrix per Coxeter generator");
  for (const auto& g : generators_)
    if (g.rows() != dim_ || g.cols() != dim_) throw std::invalid_argument("generator matrix has wrong size");
  if (embedding_ && embedding_->basis().rows() != dim_)
    throw std::invalid_argument("embedding dimension does not match module");
}

template <ExactField F>
Matrix<F> GroupActionModule<F>::permutation_matrix(const Permutation& pi) const {
  if (pi.degree() > degree_) throw std::invalid_argument("permutation degree exceeds module degree");
  auto word = pi.adjacent_word();
  Matrix<F> out = Matrix<F>::identity(field_, dim_);
  for (int i : word) out = out * generator(i);
  return out;
}

template <ExactField F>
GroupActionModule<F> GroupActionModule<F>::submodule(const Subspace<F>& subspace, std::string label) const {
  if (subspace.ambient_dim() != dim_) throw std::invalid_argument("subspace does not live in this module");
  std::vector<Matrix<F>> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(restrict_to(g, subspace));
  std::optional<AmbientEmbedding<F>> embedding;
  if (embedding_) {
    auto rows = subspace.basis() * embedding_->basis();
    embedding = AmbientEmbedding<F>{embedding_->space, std::make_shared<const SpanSolver<F>>(rows)};
  }
  return GroupActionModule(field_, degree_, subspace.dim(), std::move(gens), std::move(embedding),
                           label.empty() ? label_ + " (submodule)" : std::move(label));
}

template <ExactField F>
GroupActionModule<F> GroupActionModule<F>::restricted(int new_degree, std::string label) const {
  if (new_degree < 1 || new_degree > degree_) throw std::invalid_argument("cannot restrict to that degree");
  std::vector<Matrix<F>> gens(generators_.begin(), generators_.begin() + (new_degree - 1));
  return GroupActionModule(field_, new_degree, dim_, std::move(gens), embedding_,
                           label.empty() ? label_ + " restricted" : std::move(label));
}

template <ExactField F>
GroupActionModule<F> build_specht(const Partition& lambda, const F& field) {
  const int n = lambda.size();
  if (n < 1) throw std::invalid_argument("Specht module needs n >= 1");
  if (n > max_specht_degree)
    throw std::invalid_argument("build_specht refuses n > " + std::to_string(max_specht_degree));
  auto space = std::make_shared<const TabloidSpace>(lambda);
  auto tableaux = standard_tableaux(lambda);
  Matrix<F> basis(field, 0, space->size());
  for (const auto& t : tableaux) basis.append_row(polytabloid(space, t, field).coords());
  AmbientEmbedding<F> embedding{space, std::make_shared<const SpanSolver<F>>(basis)};
  auto gens = generators_from_embedding(embedding, n, field);
  return GroupActionModule<F>(field, n, tableaux.size(), std::move(gens), std::move(embedding),
                              "S^" + lambda.pretty() + " over " + field.spec().name());
}

template <ExactField F>
GroupActionModule<F> build_restriction(const Partition& lambda, const F& field) {
  if (lambda.size() < 2) throw std::invalid_argument("restriction needs n >= 2");
  auto specht = build_specht(lambda, field);
  return specht.restricted(lambda.size() - 1, "S^" + lambda.pretty() + " restricted to S_" +
                                                  std::to_string(lambda.size() - 1) + " over " +
                                                  field.spec().name());
}

template <ExactField F>
GroupActionModule<F> build_induction(const Partition& lambda, const F& field) {
  const int n = lambda.size();
  if (n > max_induction_degree)
    throw std::invalid_argument("build_induction refuses n > " + std::to_string(max_induction_degree));
  if (n < 1) throw std::invalid_argument("induction needs n >= 1");
  const int m = lambda.distinct_parts();
  auto big_shape = induce_at(lambda, m + 1);
  auto space = std::make_shared<const TabloidSpace>(big_shape);
  auto tableaux = standard_tableaux(lambda);
  const std::size_t expected = static_cast<std::size_t>(n + 1) * tableaux.size();

  // Candidates: extensions of standard tableaux, translated by the right coset
  // representatives 1, (1, n+1), ..., (n, n+1) of S_n in S_{n+1}.
  IncrementalEchelon<F> echelon(field, space->size());
  Matrix<F> basis(field, 0, space->size());
  std::vector<Permutation> cosets{Permutation::identity(n + 1)};
  for (int j = 1; j <= n; ++j) cosets.push_back(Permutation::transposition(n + 1, j, n + 1));
  for (const auto& coset : cosets) {
    for (const auto& t : tableaux) {
      auto v = induced_polytabloid(space, t.extension().apply(coset), lambda, field);
      if (echelon.insert(v.coords())) basis.append_row(v.coords());
    }
  }
  if (basis.rows() != expected)
    throw std::logic_error("induced module has dimension " + std::to_string(basis.rows()) + ", expected " +
                           std::to_string(expected));
  AmbientEmbedding<F> embedding{space, std::make_shared<const SpanSolver<F>>(basis)};
  auto gens = generators_from_embedding(embedding, n + 1, field);
  return GroupActionModule<F>(field, n + 1, expected, std::move(gens), std::move(embedding),
                              "S^" + lambda.pretty() + " induced to S_" + std::to_string(n + 1) + " over " +
                                  field.spec().name());
}

template <ExactField F>
Matrix<F> action_matrix(const GroupActionModule<F>& module, const AlgebraElement& element) {
  const auto& field = module.field();
  const std::size_t dim = module.dim();
  Matrix<F> out(field, dim, dim);
  if (module.has_embedding() && element.degree <= module.embedding().space->degree()) {
    const auto& embedding = module.embedding();
    const int ambient_degree = embedding.space->degree();
    const auto& basis = embedding.basis();
    std::vector<std::pair<std::vector<std::uint32_t>, typename F::Element>> terms;
    for (const auto& [pi, c] : element.terms) {
      auto coeff = field.from_integer(c);
      if (field.is_zero(coeff)) continue;
      terms.emplace_back(embedding.space->index_permutation(pi.extended(ambient_degree)), coeff);
    }
    for (std::size_t b = 0; b < dim; ++b) {
      auto row = basis.row(b);
      Vec<F> image(row.size(), field.zero());
      for (const auto& [images, coeff] : terms)
        for (std::size_t i = 0; i < row.size(); ++i)
          if (!field.is_zero(row[i])) image[images[i]] = field.add(image[images[i]], field.mul(coeff, row[i]));
      auto coords = embedding.solver->coordinates(image);
      if (!coords) throw std::logic_error("group-ring element moves the module outside itself");
      std::copy(coords->begin(), coords->end(), out.row(b).begin());
    }
    return out;
  }
  if (element.degree > module.degree())
    throw std::invalid_argument("element degree exceeds module degree and no embedding is available");
  for (const auto& [pi, c] : element.terms) {
    auto coeff = field.from_integer(c);
    if (field.is_zero(coeff)) continue;
    out.add_scaled(coeff, module.permutation_matrix(pi.extended(module.degree())));
  }
  return out;
}

template <ExactField F>
bool satisfies_coxeter_relations(const GroupActionModule<F>& module) {
  const auto& gens = module.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] * gens[i]).is_identity()) return false;
    if (i + 1 < gens.size() && !(gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]))
      return false;
    for (std::size_t j = i + 2; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
  }
  return true;
}

template <ExactField F>
GroupActionModule<F> direct_sum(const GroupActionModule<F>& first, const GroupActionModule<F>& second) {
  if (first.degree() != second.degree()) throw std::invalid_argument("direct sum needs equal degrees");
  const auto& field = first.field();
  const std::size_t d1 = first.dim(), d2 = second.dim();
  std::vector<Matrix<F>> gens;
  for (int i = 1; i < first.degree(); ++i) {
    Matrix<F> g(field, d1 + d2, d1 + d2);
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t c = 0; c < d1; ++c) g(r, c) = first.generator(i)(r, c);
    for (std::size_t r = 0; r < d2; ++r)
      for (std::size_t c = 0; c < d2; ++c) g(d1 + r, d1 + c) = second.generator(i)(r, c);
    gens.push_back(std::move(g));
  }
  return GroupActionModule<F>(field, first.degree(), d1 + d2, std::move(gens), std::nullopt,
                              first.label() + " + " + second.label());
}

#define SPECHT_INSTANTIATE_MODULE(F)                                                            \
  template class GroupActionModule<F>;                                                          \
  template GroupActionModule<F> build_specht(const Partition&, const F&);                      \
  template GroupActionModule<F> build_restriction(const Partition&, const F&);                 \
  template GroupActionModule<F> build_induction(const Partition&, const F&);                   \
  template Matrix<F> action_matrix(const GroupActionModule<F>&, const AlgebraElement&);        \
  template bool satisfies_coxeter_relations(const GroupActionModule<F>&);                      \
  template GroupActionModule<F> direct_sum(const GroupActionModule<F>&, const GroupActionModule<F>&);

SPECHT_INSTANTIATE_MODULE(PrimeField)
SPECHT_INSTANTIATE_MODULE(RationalField)

}  // namespace specht
