#pragma once

#include <string>
#include <vector>

#include "specht/partition.hpp"
#include "specht/permutation.hpp"

namespace specht {

/// A filling of a Young diagram by distinct symbols from {1..degree}. A
/// lambda-tableau in the usual sense has degree |lambda|; restrictions of
/// larger tableaux keep the degree of the tableau they came from.
class Tableau {
 public:
  /// Throws std::invalid_argument if the row lengths do not match the shape
  /// or symbols repeat or fall outside {1..degree}.
  Tableau(Partition shape, std::vector<std::vector<int>> rows, int degree);
  Tableau(Partition shape, std::vector<std::vector<int>> rows);

  /// 1..n filled row by row.
  static Tableau row_reading(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  std::vector<std::vector<int>> columns() const;
  /// Node holding symbol; throws if absent.
  Node position_of(int symbol) const;

  /// t pi: every entry x replaced by its image under pi.
  Tableau apply(const Permutation& pi) const;
  bool is_standard() const;

  /// Appends degree + 1 at the bottom of the first column.
  Tableau extension() const;
  /// The entries at the nodes of a subdiagram; the degree is kept.
  Tableau restricted_to(const Partition& sub) const;

  /// "1 2 / 3"
  std::string to_string() const;

  auto operator<=>(const Tableau&) const = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  int degree_ = 0;
};

/// Standard tableaux in lexicographic order of the row sequence of
/// 1, 2, ..., n; the row-reading tableau comes first.
std::vector<Tableau> standard_tableaux(const Partition& shape);

/// H_u(t): entries in the top r_u rows, sorted. 1 <= u <= m; u = 0 gives
/// the empty set.
std::vector<int> region_H(const Tableau& t, int u);
/// V_u(t): entries in columns c_{u+1} + 1 .. c_u, sorted. 1 <= u <= m.
std::vector<int> region_V(const Tableau& t, int u);

}  // namespace specht
