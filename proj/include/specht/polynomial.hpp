#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "specht/field.hpp"
#include "specht/matrix.hpp"

namespace specht {

/// Univariate polynomial, coefficients lowest degree first with no trailing
/// zeros. The zero polynomial has no coefficients and degree -1.
template <ExactField F>
class Polynomial {
 public:
  using Element = typename F::Element;

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(const F& field, const Element& c) { return Polynomial(field, {c}); }
  static Polynomial x(const F& field) { return Polynomial(field, {field.zero(), field.one()}); }
  /// x - root
  static Polynomial linear(const F& field, const Element& root) {
    return Polynomial(field, {field.neg(root), field.one()});
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Element coefficient(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : field_.zero();
  }
  Element leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && field_.is_one(coeffs_.back()); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    auto inv = field_.inv(leading());
    auto out = *this;
    for (auto& c : out.coeffs_) c = field_.mul(c, inv);
    return out;
  }

  Polynomial operator+(const Polynomial& other) const {
    std::vector<Element> out(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = field_.add(coefficient(static_cast<int>(i)), other.coefficient(static_cast<int>(i)));
    return Polynomial(field_, std::move(out));
  }

  Polynomial operator-(const Polynomial& other) const {
    std::vector<Element> out(std::max(coeffs_.size(), other.coeffs_.size()), field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = field_.sub(coefficient(static_cast<int>(i)), other.coefficient(static_cast<int>(i)));
    return Polynomial(field_, std::move(out));
  }

  Polynomial operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial(field_);
    std::vector<Element> out(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], other.coeffs_[j]));
    return Polynomial(field_, std::move(out));
  }

  /// (quotient, remainder). Throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    Polynomial remainder = *this;
    if (degree() < divisor.degree()) return {Polynomial(field_), remainder};
    std::vector<Element> quotient(coeffs_.size() - divisor.coeffs_.size() + 1, field_.zero());
    auto lead_inv = field_.inv(divisor.leading());
    while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
      int shift = remainder.degree() - divisor.degree();
      auto factor = field_.mul(remainder.leading(), lead_inv);
      quotient[shift] = factor;
      for (int i = 0; i <= divisor.degree(); ++i)
        remainder.coeffs_[i + shift] =
            field_.sub(remainder.coeffs_[i + shift], field_.mul(factor, divisor.coeffs_[i]));
      remainder.trim();
    }
    return {Polynomial(field_, std::move(quotient)), remainder};
  }

  Polynomial operator%(const Polynomial& divisor) const { return divmod(divisor).second; }

  /// Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Monic lcm of nonzero polynomials.
  static Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    auto g = gcd(a, b);
    return (a.divmod(g).first * b).monic();
  }

  Element evaluate(const Element& value) const {
    Element acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, value), *it);
    return acc;
  }

  /// f(A) by Horner's rule.
  Matrix<F> evaluate(const Matrix<F>& a) const {
    if (!a.square()) throw std::invalid_argument("polynomial evaluation needs a square matrix");
    Matrix<F> acc(field_, a.rows(), a.cols());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * a;
      for (std::size_t i = 0; i < a.rows(); ++i) acc(i, i) = field_.add(acc(i, i), *it);
    }
    return acc;
  }

  /// v * f(A), without forming f(A).
  Vec<F> apply(const Matrix<F>& a, std::span<const Element> v) const {
    Vec<F> acc(v.size(), field_.zero());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = a.apply(acc);
      field_.axpy(acc, *it, v);
    }
    return acc;
  }

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  /// Human readable form such as "x^3 + 4*x + 1"; GF(p) coefficients are
  /// printed as residues, rational ones with their sign.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const auto& c = coeffs_[i];
      if (field_.is_zero(c)) continue;
      std::string coeff = field_.to_string(c);
      bool negative = !coeff.empty() && coeff.front() == '-';
      if (negative) coeff.erase(0, 1);
      if (out.empty())
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      bool unit = coeff == "1";
      if (i == 0)
        out += coeff;
      else {
        if (!unit) out += coeff + "*";
        out += i == 1 ? "x" : "x^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  F field_;
  std::vector<Element> coeffs_;
};

}  // namespace specht
