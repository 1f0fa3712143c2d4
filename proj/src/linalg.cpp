#include "specht/linalg.hpp"

#include <stdexcept>

namespace specht {

template <ExactField F>
RowEchelon<F> rref(Matrix<F> a) {
  const auto& field = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && field.is_zero(a(pivot, col))) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) std::swap_ranges(a.row(pivot).begin(), a.row(pivot).end(), a.row(row).begin());
    field.scale(a.row(row), field.inv(a(row, col)));
    for (std::size_t other = 0; other < a.rows(); ++other) {
      if (other == row || field.is_zero(a(other, col))) continue;
      field.axpy(a.row(other), field.neg(a(other, col)), a.row(row));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), row, std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& a) {
  return rref(a).rank;
}

template <ExactField F>
Subspace<F> Subspace<F>::zero(const F& field, std::size_t ambient) {
  return Subspace(Matrix<F>(field, 0, ambient), {});
}

template <ExactField F>
Subspace<F> Subspace<F>::full(const F& field, std::size_t ambient) {
  std::vector<std::size_t> pivots(ambient);
  for (std::size_t i = 0; i < ambient; ++i) pivots[i] = i;
  return Subspace(Matrix<F>::identity(field, ambient), std::move(pivots));
}

template <ExactField F>
Subspace<F> Subspace<F>::span_of(const Matrix<F>& rows) {
  auto echelon = rref(rows);
  return Subspace(echelon.reduced.row_block(0, echelon.rank), std::move(echelon.pivots));
}

template <ExactField F>
std::optional<Vec<F>> Subspace<F>::coordinates(std::span<const Element> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("dimension mismatch in solve_in_span");
  const auto& f = field();
  Vec<F> coords(dim(), f.zero());
  Vec<F> residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    coords[k] = v[pivots_[k]];
    if (!f.is_zero(coords[k])) f.axpy(residual, f.neg(coords[k]), basis_.row(k));
  }
  for (const auto& x : residual)
    if (!f.is_zero(x)) return std::nullopt;
  return coords;
}

template <ExactField F>
bool Subspace<F>::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

template <ExactField F>
Subspace<F> Subspace<F>::sum(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  Matrix<F> stacked = basis_;
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.append_row(other.basis_.row(i));
  return span_of(stacked);
}

template <ExactField F>
Subspace<F> Subspace<F>::intersect(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
  // x * [B; -C] = 0 with x = (a, b) gives a * B = b * C.
  Matrix<F> stacked = basis_;
  const auto& f = field();
  for (std::size_t i = 0; i < other.dim(); ++i) {
    auto row = other.basis_.row_vector(i);
    for (auto& x : row) x = f.neg(x);
    stacked.append_row(row);
  }
  auto relations = kernel(stacked);
  Matrix<F> vectors(f, 0, ambient_dim());
  for (std::size_t i = 0; i < relations.dim(); ++i) {
    auto rel = relations.basis().row(i);
    vectors.append_row(basis_.apply(rel.subspan(0, dim())));
  }
  return span_of(vectors);
}

template <ExactField F>
bool Subspace<F>::is_invariant(const Matrix<F>& a) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(a.apply(basis_.row(i)))) return false;
  return true;
}

template <ExactField F>
Subspace<F> Subspace<F>::from_coordinates(const Subspace& coords) const {
  if (coords.ambient_dim() != dim()) throw std::invalid_argument("coordinate dimension mismatch");
  return span_of(coords.basis() * basis_);
}

template <ExactField F>
Subspace<F> kernel(const Matrix<F>& a) {
  const auto& f = a.field();
  Matrix<F> augmented(f, a.rows(), a.cols() + a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto src = a.row(i);
    std::copy(src.begin(), src.end(), augmented.row(i).begin());
    augmented(i, a.cols() + i) = f.one();
  }
  auto echelon = rref(std::move(augmented));
  // Rows whose left block vanished carry the relations.
  Matrix<F> relations(f, 0, a.rows());
  for (std::size_t i = 0; i < echelon.rank; ++i) {
    if (echelon.pivots[i] < a.cols()) continue;
    auto row = echelon.reduced.row(i);
    relations.append_row(row.subspan(a.cols()));
  }
  return Subspace<F>::span_of(relations);
}

template <ExactField F>
Subspace<F> image(const Matrix<F>& a) {
  return Subspace<F>::span_of(a);
}

template <ExactField F>
std::optional<Vec<F>> solve_in_span(const Subspace<F>& b, std::span<const typename F::Element> v) {
  return b.coordinates(v);
}

template <ExactField F>
SpanSolver<F>::SpanSolver(const Matrix<F>& basis)
    : basis_(basis), reduced_(basis.field(), 0, 0), transform_(basis.field(), 0, 0) {
  const auto& f = basis.field();
  const std::size_t d = basis.rows();
  const std::size_t n = basis.cols();
  Matrix<F> augmented(f, d, n + d);
  for (std::size_t i = 0; i < d; ++i) {
    auto src = basis.row(i);
    std::copy(src.begin(), src.end(), augmented.row(i).begin());
    augmented(i, n + i) = f.one();
  }
  auto echelon = rref(std::move(augmented));
  if (echelon.rank != d || (d > 0 && echelon.pivots.back() >= n))
    throw std::invalid_argument("SpanSolver basis rows are linearly dependent");
  pivots_ = std::move(echelon.pivots);
  reduced_ = Matrix<F>(f, d, n);
  transform_ = Matrix<F>(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto row = echelon.reduced.row(i);
    std::copy(row.begin(), row.begin() + n, reduced_.row(i).begin());
    std::copy(row.begin() + n, row.end(), transform_.row(i).begin());
  }
}

template <ExactField F>
std::optional<Vec<F>> SpanSolver<F>::coordinates(std::span<const Element> v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("dimension mismatch in SpanSolver");
  const auto& f = basis_.field();
  Vec<F> echelon_coords(dim(), f.zero());
  Vec<F> residual(v.begin(), v.end());
  for (std::size_t k = 0; k < dim(); ++k) {
    echelon_coords[k] = v[pivots_[k]];
    if (!f.is_zero(echelon_coords[k])) f.axpy(residual, f.neg(echelon_coords[k]), reduced_.row(k));
  }
  for (const auto& x : residual)
    if (!f.is_zero(x)) return std::nullopt;
  return transform_.apply(echelon_coords);
}

template <ExactField F>
typename IncrementalEchelon<F>::Reduction IncrementalEchelon<F>::reduce(std::span<const Element> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch in echelon reduction");
  Reduction out;
  out.residual.assign(v.begin(), v.end());
  out.coeffs.assign(rows_.size(), field_.zero());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    auto factor = out.residual[pivots_[k]];
    if (field_.is_zero(factor)) continue;
    field_.axpy(out.residual, field_.neg(factor), rows_[k]);
    field_.axpy(std::span(out.coeffs).subspan(0, combos_[k].size()), factor, combos_[k]);
  }
  out.residual_zero = true;
  for (const auto& x : out.residual)
    if (!field_.is_zero(x)) {
      out.residual_zero = false;
      break;
    }
  return out;
}

template <ExactField F>
void IncrementalEchelon<F>::insert_reduced(const Reduction& reduction) {
  if (reduction.residual_zero) throw std::logic_error("inserting a dependent vector");
  std::size_t pivot = 0;
  while (field_.is_zero(reduction.residual[pivot])) ++pivot;
  auto inv = field_.inv(reduction.residual[pivot]);
  Vec<F> row = reduction.residual;
  field_.scale(row, inv);
  // residual = new - sum coeffs * inserted
  Vec<F> combo(rows_.size() + 1, field_.zero());
  for (std::size_t i = 0; i < reduction.coeffs.size(); ++i) combo[i] = field_.neg(field_.mul(reduction.coeffs[i], inv));
  combo.back() = inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
}

template <ExactField F>
bool IncrementalEchelon<F>::insert(std::span<const Element> v) {
  auto reduction = reduce(v);
  if (reduction.in_span()) return false;
  insert_reduced(reduction);
  return true;
}

template <ExactField F>
Polynomial<F> local_minimal_polynomial(const Matrix<F>& a, std::span<const typename F::Element> v) {
  const auto& f = a.field();
  IncrementalEchelon<F> chain(f, a.rows());
  Vec<F> current(v.begin(), v.end());
  while (true) {
    auto reduction = chain.reduce(current);
    if (reduction.in_span()) {
      std::vector<typename F::Element> coeffs(chain.size() + 1, f.zero());
      for (std::size_t i = 0; i < chain.size(); ++i) coeffs[i] = f.neg(reduction.coeffs[i]);
      coeffs.back() = f.one();
      return Polynomial<F>(f, std::move(coeffs));
    }
    chain.insert_reduced(reduction);
    current = a.apply(current);
  }
}

template <ExactField F>
Polynomial<F> minimal_polynomial(const Matrix<F>& a) {
  if (!a.square()) throw std::invalid_argument("minimal polynomial needs a square matrix");
  const auto& f = a.field();
  auto result = Polynomial<F>::constant(f, f.one());
  Vec<F> unit(a.rows(), f.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    unit[i] = f.one();
    auto image = result.apply(a, unit);
    bool annihilated = true;
    for (const auto& x : image)
      if (!f.is_zero(x)) {
        annihilated = false;
        break;
      }
    if (!annihilated) result = Polynomial<F>::lcm(result, local_minimal_polynomial(a, unit));
    unit[i] = f.zero();
  }
  if (!result.evaluate(a).is_zero()) throw std::logic_error("minimal polynomial does not annihilate the matrix");
  return result;
}

template <ExactField F>
Subspace<F> generalized_eigenspace(const Matrix<F>& a, const typename F::Element& c) {
  if (!a.square()) throw std::invalid_argument("eigenspace needs a square matrix");
  const auto& f = a.field();
  Matrix<F> shifted = a;
  for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) = f.sub(shifted(i, i), c);
  // ker B^j grows until it stabilises, and then equals ker B^d.
  Matrix<F> power = shifted;
  std::size_t previous_rank = a.rows();
  while (true) {
    std::size_t r = rank(power);
    if (r == previous_rank || r == 0) return kernel(power);
    previous_rank = r;
    power = power * shifted;
  }
}

template <ExactField F>
std::pair<Subspace<F>, Subspace<F>> fitting_split(const Matrix<F>& a) {
  if (!a.square()) throw std::invalid_argument("Fitting split needs a square matrix");
  Matrix<F> power = a;
  std::size_t previous_rank = a.rows();
  while (true) {
    std::size_t r = rank(power);
    if (r == previous_rank || r == 0) return {kernel(power), image(power)};
    previous_rank = r;
    power = power * a;
  }
}

template <ExactField F>
Polynomial<F> poly_product_from_roots(const F& field, std::span<const typename F::Element> roots) {
  auto out = Polynomial<F>::constant(field, field.one());
  for (const auto& r : roots) out = out * Polynomial<F>::linear(field, r);
  return out;
}

template <ExactField F>
Matrix<F> restrict_to(const Matrix<F>& a, const Subspace<F>& s) {
  Matrix<F> out(a.field(), s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto coords = s.coordinates(a.apply(s.basis().row(i)));
    if (!coords) throw std::logic_error("subspace is not invariant under the operator");
    std::copy(coords->begin(), coords->end(), out.row(i).begin());
  }
  return out;
}

template <ExactField F>
bool independent(const std::vector<Subspace<F>>& parts) {
  if (parts.empty()) return true;
  std::size_t total = 0;
  Matrix<F> stacked(parts.front().field(), 0, parts.front().ambient_dim());
  for (const auto& part : parts) {
    total += part.dim();
    for (std::size_t i = 0; i < part.dim(); ++i) stacked.append_row(part.basis().row(i));
  }
  return rank(stacked) == total;
}

#define SPECHT_INSTANTIATE_LINALG(F)                                                                \
  template RowEchelon<F> rref(Matrix<F>);                                                           \
  template std::size_t rank(const Matrix<F>&);                                                      \
  template class Subspace<F>;                                                                       \
  template Subspace<F> kernel(const Matrix<F>&);                                                    \
  template Subspace<F> image(const Matrix<F>&);                                                     \
  template std::optional<Vec<F>> solve_in_span(const Subspace<F>&, std::span<const F::Element>);    \
  template class SpanSolver<F>;                                                                     \
  template class IncrementalEchelon<F>;                                                             \
  template Polynomial<F> local_minimal_polynomial(const Matrix<F>&, std::span<const F::Element>);   \
  template Polynomial<F> minimal_polynomial(const Matrix<F>&);                                      \
  template Subspace<F> generalized_eigenspace(const Matrix<F>&, const F::Element&);                 \
  template std::pair<Subspace<F>, Subspace<F>> fitting_split(const Matrix<F>&);                     \
  template Polynomial<F> poly_product_from_roots(const F&, std::span<const F::Element>);            \
  template Matrix<F> restrict_to(const Matrix<F>&, const Subspace<F>&);                             \
  template bool independent(const std::vector<Subspace<F>>&);

SPECHT_INSTANTIATE_LINALG(PrimeField)
SPECHT_INSTANTIATE_LINALG(RationalField)

}  // namespace specht
