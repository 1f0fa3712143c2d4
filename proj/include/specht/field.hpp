#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace specht {

bool is_prime(unsigned long long value);

/// Characteristic of the coefficient field: 0 for the rationals, otherwise a
/// prime p standing for GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws std::invalid_argument unless characteristic is 0 or a prime below 2^16.
  explicit FieldSpec(unsigned characteristic);

  /// Accepts "0", "Q", or a prime such as "3".
  static FieldSpec parse(std::string_view text);

  unsigned characteristic() const { return characteristic_; }
  bool is_rational() const { return characteristic_ == 0; }
  std::string to_string() const { return std::to_string(characteristic_); }
  /// "Q" or "GF(p)".
  std::string name() const;

  auto operator<=>(const FieldSpec&) const = default;

 private:
  unsigned characteristic_ = 0;
};

/// GF(p) with residues stored as 32-bit integers in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return FieldSpec(p_); }
  /// Number of elements.
  std::uint64_t order() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_integer(long long value) const {
    long long r = value % static_cast<long long>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws std::domain_error on zero.
  Element inv(Element a) const;
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  /// y += a * x
  void axpy(std::span<Element> y, Element a, std::span<const Element> x) const;
  /// y *= a
  void scale(std::span<Element> y, Element a) const;
  /// Sum of a[i] * b[i].
  Element dot(std::span<const Element> a, std::span<const Element> b) const;

  std::string to_string(Element a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP; values are kept in lowest terms.
class RationalField {
 public:
  using Element = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return FieldSpec(0); }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_integer(long long value) const { return Element(static_cast<long>(value)); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  void axpy(std::span<Element> y, const Element& a, std::span<const Element> x) const;
  void scale(std::span<Element> y, const Element& a) const;
  Element dot(std::span<const Element> a, std::span<const Element> b) const;

  /// "n" for integers, "num/den" otherwise.
  std::string to_string(const Element& a) const { return a.get_str(); }

  bool operator==(const RationalField&) const = default;
};

template <class F>
concept ExactField = requires(const F f, const typename F::Element a, long long i) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_integer(i) } -> std::same_as<typename F::Element>;
  { f.add(a, a) } -> std::same_as<typename F::Element>;
  { f.mul(a, a) } -> std::same_as<typename F::Element>;
  { f.inv(a) } -> std::same_as<typename F::Element>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.to_string(a) } -> std::same_as<std::string>;
  { f.spec() } -> std::same_as<FieldSpec>;
};

template <class F>
inline constexpr bool is_finite_field_v = std::is_same_v<F, PrimeField>;

/// Calls fn with the concrete field object matching spec.
template <class Fn>
decltype(auto) visit_field(FieldSpec spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField(spec.characteristic()));
}

}  // namespace specht
