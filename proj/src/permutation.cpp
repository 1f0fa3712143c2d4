#include "specht/permutation.hpp"

#include <stdexcept>

namespace specht {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > degree() || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int degree, int i, int j) {
  if (i < 1 || j < 1 || i > degree || j > degree || i == j)
    throw std::invalid_argument("invalid transposition");
  auto out = identity(degree);
  out.images_[i - 1] = j;
  out.images_[j - 1] = i;
  return out;
}

Permutation Permutation::cycle(int degree, std::span<const int> points) {
  auto out = identity(degree);
  std::vector<bool> used(degree + 1, false);
  for (std::size_t k = 0; k < points.size(); ++k) {
    int a = points[k];
    if (a < 1 || a > degree || used[a]) throw std::invalid_argument("invalid cycle");
    used[a] = true;
    out.images_[a - 1] = points[(k + 1) % points.size()];
  }
  return out;
}

Permutation Permutation::from_word(int degree, std::span<const int> word) {
  auto out = identity(degree);
  for (int i : word) out = out * transposition(degree, i, i + 1);
  return out;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree()) throw std::invalid_argument("permutation degree mismatch");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = other.images_[images_[i] - 1];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(images));
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int parity = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (std::size_t x = start; !visited[x]; x = images_[x] - 1) {
      visited[x] = true;
      ++length;
    }
    parity += length - 1;
  }
  return parity % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("cannot shrink a permutation");
  auto images = images_;
  for (int i = this->degree() + 1; i <= degree; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::vector<int> Permutation::adjacent_word() const {
  // s_i * pi swaps the images at positions i and i+1. Sorting the one-line
  // array with such swaps gives s_{a_k} ... s_{a_1} pi = id, hence
  // pi = s_{a_1} ... s_{a_k}.
  auto line = images_;
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
  }
  return word;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

}  // namespace specht
