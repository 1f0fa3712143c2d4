#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace specht {

/// A node (r, c) of a Young diagram. Rows and columns are 1-based, row 1 at
/// the top and column 1 at the left.
struct Node {
  int row = 0;
  int col = 0;

  /// Content (col - row) of the node as an integer; its residue is this
  /// value reduced into the field.
  int content() const { return col - row; }

  auto operator<=>(const Node&) const = default;
};

/// Integer partition with weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly
  /// decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "a,b,c". The empty partition is written "" or "()"; surrounding
  /// parentheses are accepted. Zero or negative parts are rejected.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Part i (1-based); zero beyond the last row.
  int part(int row) const;

  /// Number of distinct part sizes, i.e. the number of removable nodes.
  int distinct_parts() const;

  bool contains(Node node) const;
  Partition conjugate() const;
  /// All nodes in row-reading order.
  std::vector<Node> nodes() const;

  /// "6,1,1,1"; the empty partition renders as "".
  std::string to_string() const;
  /// "(6,1,1,1)"; the empty partition renders as "()".
  std::string pretty() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(int n);

/// Removable nodes (r_1, c_1), ..., (r_m, c_m), rows strictly increasing.
std::vector<Node> removable_nodes(const Partition& lambda);
/// The m + 1 addable nodes (r_u + 1, c_{u+1} + 1), u = 0..m.
std::vector<Node> addable_nodes(const Partition& lambda);

/// Removes the u-th removable node (1 <= u <= m).
Partition restrict_at(const Partition& lambda, int u);
/// Adds the u-th addable node (1 <= u <= m + 1); u = m + 1 appends a new row
/// of length one.
Partition induce_at(const Partition& lambda, int u);

/// All restrictions lambda restricted at u, u = 1..m.
std::vector<Partition> restrictions(const Partition& lambda);
/// All inductions lambda induced at u, u = 1..m+1.
std::vector<Partition> inductions(const Partition& lambda);

/// Sum of c - r over all nodes, as an integer.
long long content_sum(const Partition& lambda);
/// Contents of all nodes in row-reading order.
std::vector<int> contents(const Partition& lambda);

/// The p-core, computed on a p-runner abacus of |lambda| beads.
Partition p_core(const Partition& lambda, int p);

/// Beta-numbers lambda_i + N - i for i = 1..N (parts padded with zeros).
std::vector<int> beta_numbers(const Partition& lambda, int beads);
/// Inverse of beta_numbers; trailing zero parts are stripped.
Partition from_beta_numbers(std::vector<int> betas);

/// True iff mu is dominated by lambda. Throws if the sizes differ.
bool dominates(const Partition& mu, const Partition& lambda);

/// Hook length of a node of lambda.
int hook_length(const Partition& lambda, Node node);
/// n! / product of hook lengths.
std::uint64_t specht_dimension(const Partition& lambda);
/// n! / (lambda_1! lambda_2! ...), the number of lambda-tabloids.
std::uint64_t tabloid_count(const Partition& lambda);

std::uint64_t factorial(int n);

}  // namespace specht
