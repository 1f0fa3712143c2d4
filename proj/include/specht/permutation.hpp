#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace specht {

/// Permutation of {1..n} stored in one-line notation. Permutations act on
/// the right, so (x)(pi * sigma) = ((x)pi)sigma.
class Permutation {
 public:
  Permutation() = default;
  /// images[i - 1] is the image of i. Throws unless images is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  /// The transposition (i, j).
  static Permutation transposition(int degree, int i, int j);
  /// The cycle (a_1, a_2, ..., a_k): a_1 -> a_2 -> ... -> a_k -> a_1.
  static Permutation cycle(int degree, std::span<const int> points);
  static Permutation cycle(int degree, std::initializer_list<int> points) {
    return cycle(degree, std::span<const int>(points.begin(), points.size()));
  }
  /// Product of adjacent transpositions s_{w_1} s_{w_2} ... (s_1 first).
  static Permutation from_word(int degree, std::span<const int> word);

  int degree() const { return static_cast<int>(images_.size()); }
  /// Image of x.
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  /// Apply this, then other.
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  /// Same permutation on a larger point set, fixing the new points.
  Permutation extended(int degree) const;

  /// Word (w_1, ..., w_k) in the Coxeter generators s_i = (i, i+1) with
  /// *this == s_{w_1} s_{w_2} ... s_{w_k}; found by bubble sort, so k is the
  /// number of inversions.
  std::vector<int> adjacent_word() const;

  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

}  // namespace specht
