#include "specht/tabloid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specht {

namespace {

/// Multinomial ranking: the number of words with the given remaining row
/// counts that precede `word` lexicographically.
std::size_t rank_word(std::span<const std::uint8_t> word, std::vector<int> counts, std::size_t total) {
  std::size_t rank = 0;
  std::size_t remaining = word.size();
  // total = multinomial(remaining; counts)
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    const int row = word[pos];
    for (int r = 0; r < row; ++r)
      if (counts[r] > 0) rank += total * static_cast<std::size_t>(counts[r]) / remaining;
    total = total * static_cast<std::size_t>(counts[row]) / remaining;
    --counts[row];
    --remaining;
  }
  return rank;
}

}  // namespace

TabloidSpace::TabloidSpace(Partition shape) : shape_(std::move(shape)) {
  if (shape_.size() > 20) throw std::invalid_argument("tabloid degree too large");
  count_ = tabloid_count(shape_);
  if (count_ > max_tabloids)
    throw std::length_error("tabloid space for " + shape_.pretty() + " has " + std::to_string(count_) +
                            " tabloids, above the limit");
  const int n = degree();
  words_.reserve(count_ * static_cast<std::size_t>(n));
  std::vector<int> counts = shape_.parts();
  std::vector<std::uint8_t> word(n);
  auto recurse = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      words_.insert(words_.end(), word.begin(), word.end());
      return;
    }
    for (int r = 0; r < shape_.length(); ++r) {
      if (counts[r] == 0) continue;
      --counts[r];
      word[pos] = static_cast<std::uint8_t>(r);
      self(self, pos + 1);
      ++counts[r];
    }
  };
  recurse(recurse, 0);
}

std::size_t TabloidSpace::index_of(std::span<const std::uint8_t> word) const {
  if (static_cast<int>(word.size()) != degree()) throw std::invalid_argument("row word length mismatch");
  std::vector<int> seen(shape_.length(), 0);
  for (auto r : word) {
    if (r >= shape_.length()) throw std::invalid_argument("row word out of range");
    ++seen[r];
  }
  if (seen != shape_.parts()) throw std::invalid_argument("row word does not match shape");
  return rank_word(word, shape_.parts(), count_);
}

std::size_t TabloidSpace::index_of(const Tableau& t) const {
  if (t.shape() != shape_ || t.degree() != degree()) throw std::invalid_argument("tableau does not match tabloid space");
  std::vector<std::uint8_t> word(degree());
  for (int r = 0; r < shape_.length(); ++r)
    for (int x : t.rows()[r]) word[x - 1] = static_cast<std::uint8_t>(r);
  return rank_word(word, shape_.parts(), count_);
}

std::size_t TabloidSpace::image_index(std::size_t index, const Permutation& pi) const {
  const int n = degree();
  auto word = row_word(index);
  std::uint8_t image[64];
  for (int x = 1; x <= n; ++x) image[pi(x) - 1] = word[x - 1];
  return rank_word({image, static_cast<std::size_t>(n)}, shape_.parts(), count_);
}

std::vector<std::uint32_t> TabloidSpace::index_permutation(const Permutation& pi) const {
  if (pi.degree() != degree()) throw std::invalid_argument("permutation degree does not match tabloids");
  std::vector<std::uint32_t> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = static_cast<std::uint32_t>(image_index(i, pi));
  return out;
}

std::vector<std::vector<int>> TabloidSpace::row_sets(std::size_t index) const {
  std::vector<std::vector<int>> rows(shape_.length());
  auto word = row_word(index);
  for (int x = 1; x <= degree(); ++x) rows[word[x - 1]].push_back(x);
  return rows;
}

std::string TabloidSpace::format(std::size_t index) const {
  std::string out = "(";
  auto rows = row_sets(index);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += " | ";
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(rows[r][k]);
    }
  }
  return out + ")";
}

std::uint64_t column_stabilizer_order(const Tableau& t) {
  std::uint64_t out = 1;
  const auto conj = t.shape().conjugate();
  for (int len : conj.parts()) out *= factorial(len);
  return out;
}

void for_each_column_permuted(const TabloidSpace& space, const Tableau& filling, const Tableau& columns_of,
                              const std::function<void(std::size_t, int)>& visit) {
  const int n = space.degree();
  std::vector<std::uint8_t> word(n);
  for (int r = 0; r < filling.shape().length(); ++r)
    for (int x : filling.rows()[r]) word[x - 1] = static_cast<std::uint8_t>(r);

  auto columns = columns_of.columns();
  // Each column's entries are redistributed over rows 0..h-1 of that column.
  auto recurse = [&](auto&& self, std::size_t col, int sign) -> void {
    if (col == columns.size()) {
      visit(space.index_of(word), sign);
      return;
    }
    const auto& entries = columns[col];
    std::vector<int> rows(entries.size());
    std::iota(rows.begin(), rows.end(), 0);
    do {
      int inversions = 0;
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = a + 1; b < rows.size(); ++b)
          if (rows[a] > rows[b]) ++inversions;
      for (std::size_t k = 0; k < entries.size(); ++k) word[entries[k] - 1] = static_cast<std::uint8_t>(rows[k]);
      self(self, col + 1, inversions % 2 == 0 ? sign : -sign);
    } while (std::next_permutation(rows.begin(), rows.end()));
    for (std::size_t k = 0; k < entries.size(); ++k) word[entries[k] - 1] = static_cast<std::uint8_t>(k);
  };
  recurse(recurse, 0, 1);
}

}  // namespace specht
