#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specht/permutation.hpp"

namespace specht {

/// Element of the integral group ring Z[S_k]; coefficients are reduced into
/// the working field when the element acts.
struct AlgebraElement {
  int degree = 0;
  std::vector<std::pair<Permutation, long long>> terms;

  static AlgebraElement identity(int degree) { return {degree, {{Permutation::identity(degree), 1}}}; }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement scaled(long long c) const;
  /// Same terms viewed in S_degree for a larger degree.
  AlgebraElement extended(int degree) const;

  std::string to_string() const;
};

/// L_k = sum of (j, k) over j < k; L_1 = 0 (no terms).
AlgebraElement murphy_element(int k);
/// E_k = sum of all transpositions (i, j), i < j <= k.
AlgebraElement transposition_sum(int k);

}  // namespace specht
