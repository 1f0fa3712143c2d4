#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "specht/algebra_element.hpp"
#include "specht/field.hpp"
#include "specht/matrix.hpp"
#include "specht/partition.hpp"
#include "specht/permutation.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// Enumeration of all lambda-tabloids. A tabloid is stored as its row word:
/// entry x - 1 holds the (0-based) row containing symbol x. Tabloids are
/// indexed by the lexicographic rank of their row word, which is a perfect
/// hash onto [0, n! / prod lambda_i!).
class TabloidSpace {
 public:
  /// Refuses spaces with more than max_tabloids tabloids.
  explicit TabloidSpace(Partition shape);

  static constexpr std::size_t max_tabloids = 4'000'000;

  const Partition& shape() const { return shape_; }
  int degree() const { return shape_.size(); }
  std::size_t size() const { return count_; }

  std::span<const std::uint8_t> row_word(std::size_t index) const {
    return {words_.data() + index * static_cast<std::size_t>(degree()), static_cast<std::size_t>(degree())};
  }
  std::size_t index_of(std::span<const std::uint8_t> word) const;
  /// Index of {t}.
  std::size_t index_of(const Tableau& t) const;
  /// Index of {t} pi for the tabloid {t} at index.
  std::size_t image_index(std::size_t index, const Permutation& pi) const;
  /// image_index for every tabloid at once.
  std::vector<std::uint32_t> index_permutation(const Permutation& pi) const;

  /// Sorted symbol sets of the rows.
  std::vector<std::vector<int>> row_sets(std::size_t index) const;
  /// "(1 2 | 3)"
  std::string format(std::size_t index) const;

 private:
  Partition shape_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> words_;
};

/// Element of the permutation module M^lambda, stored densely over the
/// tabloid basis.
template <ExactField F>
class ModuleVector {
 public:
  using Element = typename F::Element;

  ModuleVector(std::shared_ptr<const TabloidSpace> space, F field)
      : space_(std::move(space)), field_(std::move(field)), coords_(space_->size(), field_.zero()) {}

  ModuleVector(std::shared_ptr<const TabloidSpace> space, F field, Vec<F> coords)
      : space_(std::move(space)), field_(std::move(field)), coords_(std::move(coords)) {
    if (coords_.size() != space_->size()) throw std::invalid_argument("coordinate length mismatch");
  }

  static ModuleVector tabloid(std::shared_ptr<const TabloidSpace> space, F field, std::size_t index) {
    ModuleVector out(std::move(space), std::move(field));
    out.coords_.at(index) = out.field_.one();
    return out;
  }

  const TabloidSpace& space() const { return *space_; }
  const std::shared_ptr<const TabloidSpace>& space_ptr() const { return space_; }
  const F& field() const { return field_; }
  std::span<const Element> coords() const { return coords_; }
  std::span<Element> coords() { return coords_; }

  Element coefficient(std::size_t index) const { return coords_.at(index); }
  /// Coefficient of the tabloid {t}.
  Element coefficient(const Tableau& t) const { return coords_.at(space_->index_of(t)); }
  void add_to(std::size_t index, const Element& c) { coords_.at(index) = field_.add(coords_.at(index), c); }

  /// v pi
  ModuleVector acted(const Permutation& pi) const {
    check_degree(pi.degree());
    ModuleVector out(space_, field_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!field_.is_zero(coords_[i])) out.coords_[space_->image_index(i, pi)] = coords_[i];
    return out;
  }

  /// v a, for a group-ring element of degree at most the tabloid degree.
  ModuleVector acted(const AlgebraElement& a) const {
    ModuleVector out(space_, field_);
    for (const auto& [pi, c] : a.terms) {
      auto perm = pi.degree() < space_->degree() ? pi.extended(space_->degree()) : pi;
      check_degree(perm.degree());
      auto coeff = field_.from_integer(c);
      if (field_.is_zero(coeff)) continue;
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (field_.is_zero(coords_[i])) continue;
        auto j = space_->image_index(i, perm);
        out.coords_[j] = field_.add(out.coords_[j], field_.mul(coeff, coords_[i]));
      }
    }
    return out;
  }

  ModuleVector operator+(const ModuleVector& other) const {
    check_same_space(other);
    ModuleVector out = *this;
    field_.axpy(out.coords_, field_.one(), other.coords_);
    return out;
  }

  ModuleVector operator-(const ModuleVector& other) const {
    check_same_space(other);
    ModuleVector out = *this;
    field_.axpy(out.coords_, field_.neg(field_.one()), other.coords_);
    return out;
  }

  ModuleVector scaled(const Element& c) const {
    ModuleVector out = *this;
    field_.scale(out.coords_, c);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : coords_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  std::size_t support_size() const {
    std::size_t out = 0;
    for (const auto& x : coords_)
      if (!field_.is_zero(x)) ++out;
    return out;
  }

  bool operator==(const ModuleVector& other) const {
    return space_->shape() == other.space_->shape() && coords_ == other.coords_;
  }

  /// One line "coeff : (row1 | row2 | ...)" per nonzero coefficient, in
  /// tabloid index order.
  std::string dump() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (!field_.is_zero(coords_[i])) out += field_.to_string(coords_[i]) + " : " + space_->format(i) + "\n";
    return out;
  }

 private:
  void check_degree(int degree) const {
    if (degree != space_->degree()) throw std::invalid_argument("permutation degree does not match tabloids");
  }
  void check_same_space(const ModuleVector& other) const {
    if (space_->shape() != other.space_->shape()) throw std::invalid_argument("vectors live in different M^lambda");
  }

  std::shared_ptr<const TabloidSpace> space_;
  F field_;
  Vec<F> coords_;
};

/// Order of the column stabiliser: product of column lengths factorial.
std::uint64_t column_stabilizer_order(const Tableau& t);

/// Calls visit(tabloid index, sign) for every pi in the column stabiliser of
/// `columns_of`, where the tabloid is {T pi} in `space` and T is `filling`
/// (whose shape is space.shape()). `columns_of` must be `filling` restricted
/// to a subdiagram.
void for_each_column_permuted(const TabloidSpace& space, const Tableau& filling, const Tableau& columns_of,
                              const std::function<void(std::size_t, int)>& visit);

/// e_t = sum over the column stabiliser of sgn(pi) {t pi}.
template <ExactField F>
ModuleVector<F> polytabloid(std::shared_ptr<const TabloidSpace> space, const Tableau& t, const F& field) {
  if (space->shape() != t.shape()) throw std::invalid_argument("tableau shape does not match tabloid space");
  ModuleVector<F> out(space, field);
  auto plus = field.one();
  auto minus = field.neg(field.one());
  for_each_column_permuted(*space, t, t, [&](std::size_t index, int sign) {
    out.add_to(index, sign > 0 ? plus : minus);
  });
  return out;
}

/// The (lambda, T)-polytabloid: signed sum of {T pi} over the column
/// stabiliser of t = T restricted to [lambda]. T has shape lambda with one
/// extra node.
template <ExactField F>
ModuleVector<F> induced_polytabloid(std::shared_ptr<const TabloidSpace> space, const Tableau& big,
                                    const Partition& lambda, const F& field) {
  if (space->shape() != big.shape()) throw std::invalid_argument("tableau shape does not match tabloid space");
  if (lambda.size() + 1 != big.shape().size()) throw std::invalid_argument("shape mismatch for induced polytabloid");
  auto small = big.restricted_to(lambda);
  ModuleVector<F> out(space, field);
  auto plus = field.one();
  auto minus = field.neg(field.one());
  for_each_column_permuted(*space, big, small, [&](std::size_t index, int sign) {
    out.add_to(index, sign > 0 ? plus : minus);
  });
  return out;
}

}  // namespace specht
