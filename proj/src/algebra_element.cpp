#include "specht/algebra_element.hpp"

#include <stdexcept>

namespace specht {

AlgebraElement AlgebraElement::operator+(const AlgebraElement& other) const {
  if (degree != other.degree) throw std::invalid_argument("algebra element degree mismatch");
  AlgebraElement out = *this;
  out.terms.insert(out.terms.end(), other.terms.begin(), other.terms.end());
  return out;
}

AlgebraElement AlgebraElement::scaled(long long c) const {
  AlgebraElement out = *this;
  for (auto& term : out.terms) term.second *= c;
  return out;
}

AlgebraElement AlgebraElement::extended(int new_degree) const {
  AlgebraElement out{new_degree, {}};
  for (const auto& [pi, c] : terms) out.terms.emplace_back(pi.extended(new_degree), c);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [pi, c] : terms) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*" + pi.to_string();
  }
  return out;
}

AlgebraElement murphy_element(int k) {
  if (k < 1) throw std::invalid_argument("Murphy element index must be positive");
  AlgebraElement out{k, {}};
  for (int j = 1; j < k; ++j) out.terms.emplace_back(Permutation::transposition(k, j, k), 1);
  return out;
}

AlgebraElement transposition_sum(int k) {
  if (k < 1) throw std::invalid_argument("transposition sum degree must be positive");
  AlgebraElement out{k, {}};
  for (int j = 2; j <= k; ++j)
    for (int i = 1; i < j; ++i) out.terms.emplace_back(Permutation::transposition(k, i, j), 1);
  return out;
}

}  // namespace specht
