#pragma once

#include <stdexcept>
#include <vector>

#include "specht/field.hpp"
#include "specht/partition.hpp"

namespace specht {

/// E(lambda): the sum of the residues of all nodes. Summed as an integer and
/// reduced into the field last, so characteristic 2 needs no halving.
template <ExactField F>
typename F::Element residue_sum(const Partition& lambda, const F& field) {
  return field.from_integer(content_sum(lambda));
}

/// e_k evaluated at the residues of lambda (e_0 = 1).
template <ExactField F>
typename F::Element elementary_symmetric_of_contents(const Partition& lambda, int k, const F& field) {
  if (k < 0 || k > lambda.size())
    throw std::out_of_range("elementary symmetric index out of range");
  // coeffs[j] = e_j of the residues seen so far.
  std::vector<typename F::Element> coeffs(static_cast<std::size_t>(k) + 1, field.zero());
  coeffs[0] = field.one();
  int seen = 0;
  for (int c : contents(lambda)) {
    auto residue = field.from_integer(c);
    ++seen;
    for (int j = std::min(seen, k); j >= 1; --j)
      coeffs[j] = field.add(coeffs[j], field.mul(coeffs[j - 1], residue));
  }
  return coeffs[k];
}

}  // namespace specht
