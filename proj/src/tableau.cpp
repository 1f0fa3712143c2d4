#include "specht/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows, int degree)
    : shape_(std::move(shape)), rows_(std::move(rows)), degree_(degree) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    throw std::invalid_argument("tableau row count does not match its shape");
  std::vector<bool> seen(degree_ + 1, false);
  for (int r = 1; r <= shape_.length(); ++r) {
    if (static_cast<int>(rows_[r - 1].size()) != shape_.part(r))
      throw std::invalid_argument("tableau row length does not match its shape");
    for (int x : rows_[r - 1]) {
      if (x < 1 || x > degree_ || seen[x]) throw std::invalid_argument("tableau entries must be distinct symbols");
      seen[x] = true;
    }
  }
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : Tableau(shape, std::move(rows), shape.size()) {}

Tableau Tableau::row_reading(const Partition& shape) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int part : shape.parts()) {
    std::vector<int> row(part);
    for (auto& x : row) x = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(shape, std::move(rows));
}

std::vector<std::vector<int>> Tableau::columns() const {
  std::vector<std::vector<int>> cols(shape_.part(1));
  for (const auto& row : rows_)
    for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
  return cols;
}

Node Tableau::position_of(int symbol) const {
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_.part(r); ++c)
      if (entry(r, c) == symbol) return {r, c};
  throw std::invalid_argument("symbol " + std::to_string(symbol) + " not in tableau");
}

Tableau Tableau::apply(const Permutation& pi) const {
  if (pi.degree() != degree_) throw std::invalid_argument("permutation degree does not match tableau");
  auto rows = rows_;
  for (auto& row : rows)
    for (auto& x : row) x = pi(x);
  return Tableau(shape_, std::move(rows), degree_);
}

bool Tableau::is_standard() const {
  for (int r = 1; r <= shape_.length(); ++r)
    for (int c = 1; c <= shape_.part(r); ++c) {
      if (c > 1 && entry(r, c - 1) >= entry(r, c)) return false;
      if (r > 1 && entry(r - 1, c) >= entry(r, c)) return false;
    }
  return true;
}

Tableau Tableau::extension() const {
  auto parts = shape_.parts();
  parts.push_back(1);
  auto rows = rows_;
  rows.push_back({degree_ + 1});
  return Tableau(Partition(std::move(parts)), std::move(rows), degree_ + 1);
}

Tableau Tableau::restricted_to(const Partition& sub) const {
  std::vector<std::vector<int>> rows;
  for (int r = 1; r <= sub.length(); ++r) {
    if (sub.part(r) > shape_.part(r)) throw std::invalid_argument("not a subdiagram");
    rows.emplace_back(rows_[r - 1].begin(), rows_[r - 1].begin() + sub.part(r));
  }
  return Tableau(sub, std::move(rows), degree_);
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  auto place = [&](auto&& self, int symbol) -> void {
    if (symbol > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len >= shape.parts()[r]) continue;
      if (r > 0 && static_cast<int>(rows[r - 1].size()) <= len) continue;
      rows[r].push_back(symbol);
      self(self, symbol + 1);
      rows[r].pop_back();
    }
  };
  place(place, 1);
  return out;
}

std::vector<int> region_H(const Tableau& t, int u) {
  if (u == 0) return {};
  auto removable = removable_nodes(t.shape());
  if (u < 1 || u > static_cast<int>(removable.size())) throw std::out_of_range("region index out of range");
  std::vector<int> out;
  for (int r = 1; r <= removable[u - 1].row; ++r)
    out.insert(out.end(), t.rows()[r - 1].begin(), t.rows()[r - 1].end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> region_V(const Tableau& t, int u) {
  auto removable = removable_nodes(t.shape());
  const int m = static_cast<int>(removable.size());
  if (u < 1 || u > m) throw std::out_of_range("region index out of range");
  int first = (u == m ? 0 : removable[u].col) + 1;
  int last = removable[u - 1].col;
  std::vector<int> out;
  for (const auto& row : t.rows())
    for (int c = first; c <= last && c <= static_cast<int>(row.size()); ++c) out.push_back(row[c - 1]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace specht
