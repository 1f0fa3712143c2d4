#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "specht/field.hpp"
#include "specht/matrix.hpp"
#include "specht/polynomial.hpp"

namespace specht {

template <ExactField F>
struct RowEchelon {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <ExactField F>
RowEchelon<F> rref(Matrix<F> a);

template <ExactField F>
std::size_t rank(const Matrix<F>& a);

/// A subspace of F^n stored as a basis in reduced row-echelon form, one basis
/// vector per row.
template <ExactField F>
class Subspace {
 public:
  using Element = typename F::Element;

  static Subspace zero(const F& field, std::size_t ambient);
  static Subspace full(const F& field, std::size_t ambient);
  /// Span of the rows of a matrix; the rows need not be independent.
  static Subspace span_of(const Matrix<F>& rows);

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Coordinates c with c * basis = v, or nullopt when v is outside the span.
  std::optional<Vec<F>> coordinates(std::span<const Element> v) const;
  bool contains(std::span<const Element> v) const { return coordinates(v).has_value(); }
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// v * A stays inside for every v in the subspace.
  bool is_invariant(const Matrix<F>& a) const;

  /// Subspace of F^m given by coordinates with respect to this basis, mapped
  /// into the ambient space.
  Subspace from_coordinates(const Subspace& coords) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

/// Left kernel {v : v * A = 0}.
template <ExactField F>
Subspace<F> kernel(const Matrix<F>& a);

/// Row space {v * A}.
template <ExactField F>
Subspace<F> image(const Matrix<F>& a);

/// Coordinates of v with respect to the basis of b, or nullopt.
template <ExactField F>
std::optional<Vec<F>> solve_in_span(const Subspace<F>& b, std::span<const typename F::Element> v);

/// Solves c * B = v for a fixed full-row-rank B that is not in echelon form.
/// Coordinates are read off the pivot columns of rref([B | I]) and then
/// checked against the residual.
template <ExactField F>
class SpanSolver {
 public:
  using Element = typename F::Element;

  /// Throws std::invalid_argument if the rows of basis are dependent.
  explicit SpanSolver(const Matrix<F>& basis);

  std::size_t dim() const { return transform_.rows(); }
  std::size_t ambient_dim() const { return reduced_.cols(); }
  const Matrix<F>& basis() const { return basis_; }

  std::optional<Vec<F>> coordinates(std::span<const Element> v) const;

 private:
  Matrix<F> basis_;
  Matrix<F> reduced_;
  Matrix<F> transform_;
  std::vector<std::size_t> pivots_;
};

/// Echelon form grown one vector at a time, remembering how each reduced
/// row is expressed in terms of the vectors inserted so far.
template <ExactField F>
class IncrementalEchelon {
 public:
  using Element = typename F::Element;

  IncrementalEchelon(F field, std::size_t ambient) : field_(std::move(field)), ambient_(ambient) {}

  struct Reduction {
    Vec<F> residual;
    /// v = residual + sum coeffs[i] * inserted[i]
    Vec<F> coeffs;
    bool in_span() const { return residual_zero; }
    bool residual_zero = true;
  };

  Reduction reduce(std::span<const Element> v) const;
  /// Inserts v if independent; returns whether it was.
  bool insert(std::span<const Element> v);
  /// Inserts the residual of a reduction computed against the current state.
  void insert_reduced(const Reduction& reduction);

  std::size_t size() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec<F>> combos_;
};

/// Monic polynomial of least degree annihilating v under A.
template <ExactField F>
Polynomial<F> local_minimal_polynomial(const Matrix<F>& a, std::span<const typename F::Element> v);

/// Least common multiple of the local minimal polynomials of the standard
/// basis vectors; verified by evaluating at A.
template <ExactField F>
Polynomial<F> minimal_polynomial(const Matrix<F>& a);

/// kernel((A - cI)^d) with d the dimension.
template <ExactField F>
Subspace<F> generalized_eigenspace(const Matrix<F>& a, const typename F::Element& c);

/// (ker A^d, im A^d).
template <ExactField F>
std::pair<Subspace<F>, Subspace<F>> fitting_split(const Matrix<F>& a);

/// Monic product of (x - r) over the roots, duplicates kept.
template <ExactField F>
Polynomial<F> poly_product_from_roots(const F& field, std::span<const typename F::Element> roots);

/// Matrix of A on an A-invariant subspace, in the subspace's coordinates.
/// Throws std::logic_error if the subspace is not invariant.
template <ExactField F>
Matrix<F> restrict_to(const Matrix<F>& a, const Subspace<F>& s);

/// True iff the subspaces are independent, i.e. their dimensions add up to
/// the dimension of their sum.
template <ExactField F>
bool independent(const std::vector<Subspace<F>>& parts);

/// Returns an invertible-matrix test via rank.
template <ExactField F>
bool is_invertible(const Matrix<F>& a) {
  return a.square() && rank(a) == a.rows();
}

template <ExactField F>
bool is_nilpotent(const Matrix<F>& a) {
  if (!a.square()) return false;
  // Ranks of successive powers strictly decrease until they stabilise.
  Matrix<F> power = a;
  std::size_t previous = a.rows();
  for (std::size_t step = 0; step <= a.rows(); ++step) {
    std::size_t r = rank(power);
    if (r == 0) return true;
    if (r == previous) return false;
    previous = r;
    power = power * a;
  }
  return false;
}

}  // namespace specht
