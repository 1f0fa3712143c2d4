#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "specht/field.hpp"

namespace specht {

template <ExactField F>
using Vec = std::vector<typename F::Element>;

/// Dense row-major matrix over an exact field. Vectors are rows and matrices
/// act on the right: v -> v * A.
template <ExactField F>
class Matrix {
 public:
  using Element = typename F::Element;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = field.one();
    return out;
  }

  static Matrix scalar(const F& field, std::size_t n, const Element& value) {
    Matrix out(field, n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = value;
    return out;
  }

  static Matrix from_rows(const F& field, const std::vector<Vec<F>>& rows, std::size_t cols) {
    Matrix out(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
    }
    return out;
  }

  /// Convenience for tests: integer entries reduced into the field.
  static Matrix from_integers(const F& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix out(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = field.from_integer(rows[i][j]);
    }
    return out;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<F> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  void append_row(std::span<const Element> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  /// v * A
  Vec<F> apply(std::span<const Element> v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector length mismatch");
    Vec<F> out(cols_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      if (!field_.is_zero(v[i])) field_.axpy(out, v[i], row(i));
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(field_, rows_, other.cols_);
    if constexpr (std::is_same_v<F, PrimeField>) {
      const std::uint64_t p = field_.characteristic();
      std::vector<std::uint64_t> acc(other.cols_);
      for (std::size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < cols_; ++k) {
          const std::uint64_t a = (*this)(i, k);
          if (a == 0) continue;
          const Element* b = other.data_.data() + k * other.cols_;
          for (std::size_t j = 0; j < other.cols_; ++j) acc[j] += a * b[j];
          // Products are below 2^32; reduce well before the 64-bit limit.
          if ((k & 0x3fffffu) == 0x3fffffu)
            for (auto& x : acc) x %= p;
        }
        auto dest = out.row(i);
        for (std::size_t j = 0; j < other.cols_; ++j) dest[j] = static_cast<Element>(acc[j] % p);
      }
    } else {
      for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
          if (!field_.is_zero((*this)(i, k))) field_.axpy(out.row(i), (*this)(i, k), other.row(k));
    }
    return out;
  }

  Matrix operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.add(data_[i], other.data_[i]);
    return out;
  }

  Matrix operator-(const Matrix& other) const {
    check_same_shape(other);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_.sub(data_[i], other.data_[i]);
    return out;
  }

  Matrix scaled(const Element& c) const {
    Matrix out = *this;
    field_.scale(out.data_, c);
    return out;
  }

  /// this + c * other
  Matrix& add_scaled(const Element& c, const Matrix& other) {
    check_same_shape(other);
    field_.axpy(data_, c, other.data_);
    return *this;
  }

  Matrix transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Rows [begin, end).
  Matrix row_block(std::size_t begin, std::size_t end) const {
    Matrix out(field_, end - begin, cols_);
    std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_, out.data_.begin());
    return out;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Element& x) { return field_.is_zero(x); });
  }

  bool is_identity() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& x = (*this)(i, j);
        if (i == j ? !field_.is_one(x) : !field_.is_zero(x)) return false;
      }
    return true;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

  const std::vector<Element>& data() const { return data_; }
  std::vector<Element>& data() { return data_; }

  /// Plain text grid, one row per line.
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out << ' ';
        out << field_.to_string((*this)(i, j));
      }
      out << '\n';
    }
    return out.str();
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

}  // namespace specht
