#include "specht/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("unbalanced parentheses in partition");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("malformed partition part '" + std::string(token) + "'");
    if (value <= 0) throw std::invalid_argument("partition parts must be positive");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

int Partition::part(int row) const {
  if (row < 1 || row > length()) return 0;
  return parts_[row - 1];
}

int Partition::distinct_parts() const {
  int m = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i + 1 == parts_.size() || parts_[i] != parts_[i + 1]) ++m;
  return m;
}

bool Partition::contains(Node node) const {
  return node.row >= 1 && node.col >= 1 && node.col <= part(node.row);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int c = 1; c <= part(1); ++c) {
    int len = 0;
    while (len < length() && parts_[len] >= c) ++len;
    conj.push_back(len);
  }
  return Partition(std::move(conj));
}

std::vector<Node> Partition::nodes() const {
  std::vector<Node> out;
  out.reserve(size_);
  for (int r = 1; r <= length(); ++r)
    for (int c = 1; c <= parts_[r - 1]; ++c) out.push_back({r, c});
  return out;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::pretty() const { return "(" + to_string() + ")"; }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("empty partition");
  std::vector<Node> out;
  for (int r = 1; r <= lambda.length(); ++r)
    if (lambda.part(r) > lambda.part(r + 1)) out.push_back({r, lambda.part(r)});
  return out;
}

std::vector<Node> addable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  if (lambda.empty()) return {{1, 1}};
  auto removable = removable_nodes(lambda);
  int m = static_cast<int>(removable.size());
  for (int u = 0; u <= m; ++u) {
    int r_u = u == 0 ? 0 : removable[u - 1].row;
    int c_next = u == m ? 0 : removable[u].col;
    out.push_back({r_u + 1, c_next + 1});
  }
  return out;
}

Partition restrict_at(const Partition& lambda, int u) {
  auto removable = removable_nodes(lambda);
  if (u < 1 || u > static_cast<int>(removable.size()))
    throw std::out_of_range("removable node index out of range");
  auto parts = lambda.parts();
  int row = removable[u - 1].row;
  if (--parts[row - 1] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

Partition induce_at(const Partition& lambda, int u) {
  auto addable = addable_nodes(lambda);
  if (u < 1 || u > static_cast<int>(addable.size()))
    throw std::out_of_range("addable node index out of range");
  auto parts = lambda.parts();
  int row = addable[u - 1].row;
  if (row > static_cast<int>(parts.size()))
    parts.push_back(1);
  else
    ++parts[row - 1];
  return Partition(std::move(parts));
}

std::vector<Partition> restrictions(const Partition& lambda) {
  std::vector<Partition> out;
  int m = lambda.distinct_parts();
  for (int u = 1; u <= m; ++u) out.push_back(restrict_at(lambda, u));
  return out;
}

std::vector<Partition> inductions(const Partition& lambda) {
  std::vector<Partition> out;
  int count = static_cast<int>(addable_nodes(lambda).size());
  for (int u = 1; u <= count; ++u) out.push_back(induce_at(lambda, u));
  return out;
}

long long content_sum(const Partition& lambda) {
  long long total = 0;
  for (auto node : lambda.nodes()) total += node.content();
  return total;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> out;
  for (auto node : lambda.nodes()) out.push_back(node.content());
  return out;
}

std::vector<int> beta_numbers(const Partition& lambda, int beads) {
  if (beads < lambda.length()) throw std::invalid_argument("too few beads for partition");
  std::vector<int> betas(beads);
  for (int i = 1; i <= beads; ++i) betas[i - 1] = lambda.part(i) + beads - i;
  return betas;
}

Partition from_beta_numbers(std::vector<int> betas) {
  std::sort(betas.begin(), betas.end(), std::greater<>());
  int beads = static_cast<int>(betas.size());
  std::vector<int> parts;
  for (int i = 1; i <= beads; ++i) {
    int part = betas[i - 1] - (beads - i);
    if (part < 0) throw std::invalid_argument("beta-numbers are not distinct non-negative integers");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Partition p_core(const Partition& lambda, int p) {
  if (p < 2) throw std::invalid_argument("p-core needs p >= 2");
  int beads = std::max(lambda.size(), 1);
  auto betas = beta_numbers(lambda, beads);
  std::vector<int> per_runner(p, 0);
  for (int b : betas) ++per_runner[b % p];
  std::vector<int> slid;
  for (int runner = 0; runner < p; ++runner)
    for (int k = 0; k < per_runner[runner]; ++k) slid.push_back(runner + k * p);
  return from_beta_numbers(std::move(slid));
}

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    throw std::invalid_argument("dominance needs partitions of the same integer");
  int partial_mu = 0;
  int partial_lambda = 0;
  int rows = std::max(mu.length(), lambda.length());
  for (int k = 1; k <= rows; ++k) {
    partial_mu += mu.part(k);
    partial_lambda += lambda.part(k);
    if (partial_mu > partial_lambda) return false;
  }
  return true;
}

int hook_length(const Partition& lambda, Node node) {
  if (!lambda.contains(node)) throw std::invalid_argument("node outside the diagram");
  int arm = lambda.part(node.row) - node.col;
  int leg = 0;
  while (lambda.part(node.row + leg + 1) >= node.col) ++leg;
  return arm + leg + 1;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t specht_dimension(const Partition& lambda) {
  std::uint64_t hooks = 1;
  for (auto node : lambda.nodes()) hooks *= static_cast<std::uint64_t>(hook_length(lambda, node));
  return factorial(lambda.size()) / hooks;
}

std::uint64_t tabloid_count(const Partition& lambda) {
  std::uint64_t denom = 1;
  for (int part : lambda.parts()) denom *= factorial(part);
  return factorial(lambda.size()) / denom;
}

}  // namespace specht
