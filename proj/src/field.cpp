#include "specht/field.hpp"

#include <charconv>
#include <utility>

namespace specht {

bool is_prime(unsigned long long value) {
  if (value < 2) return false;
  for (unsigned long long d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(unsigned characteristic) : characteristic_(characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
  if (characteristic >= (1u << 16))
    throw std::invalid_argument("prime fields are limited to p < 65536");
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return FieldSpec(0);
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed field '" + std::string(text) + "'");
  return FieldSpec(value);
}

std::string FieldSpec::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(characteristic_) + ")";
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 16)) throw std::invalid_argument("GF(p) needs a prime p < 65536");
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p_) + ")");
  long long t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return from_integer(t);
}

void PrimeField::axpy(std::span<Element> y, Element a, std::span<const Element> x) const {
  if (a == 0) return;
  const std::uint64_t factor = a;
  const std::size_t n = y.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == 0) continue;
    y[j] = static_cast<Element>((y[j] + factor * x[j]) % p_);
  }
}

void PrimeField::scale(std::span<Element> y, Element a) const {
  for (auto& v : y) v = mul(v, a);
}

PrimeField::Element PrimeField::dot(std::span<const Element> a, std::span<const Element> b) const {
  std::uint64_t acc = 0;
  const std::size_t n = a.size();
  // Each product is below 2^32, so 2^31 of them fit before reducing.
  std::size_t pending = 0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<std::uint64_t>(a[i]) * b[i];
    if (++pending == (1u << 31)) {
      acc %= p_;
      pending = 0;
    }
  }
  return static_cast<Element>(acc % p_);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
  return Element(1) / a;
}

void RationalField::axpy(std::span<Element> y, const Element& a, std::span<const Element> x) const {
  if (sgn(a) == 0) return;
  mpq_class tmp;
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    tmp = a * x[j];
    y[j] += tmp;
  }
}

void RationalField::scale(std::span<Element> y, const Element& a) const {
  for (auto& v : y) v *= a;
}

RationalField::Element RationalField::dot(std::span<const Element> a, std::span<const Element> b) const {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

}  // namespace specht
