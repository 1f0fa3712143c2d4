#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "specht/linalg.hpp"
#include "specht/tabloid.hpp"

using namespace specht;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

Tableau tableau_from(const Partition& shape, const Permutation& pi) {
  return Tableau::row_reading(shape).apply(pi);
}

}  // namespace

TEST_CASE("tabloid enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : partitions_of(n)) {
      TabloidSpace space(shape);
      REQUIRE(space.size() == tabloid_count(shape));
      for (std::size_t i = 0; i < space.size(); ++i) CHECK(space.index_of(space.row_word(i)) == i);
    }
  TabloidSpace space(Partition({2, 1}));
  CHECK(space.size() == 3);
  CHECK(space.format(space.index_of(Tableau::row_reading(Partition({2, 1})))) == "(1 2 | 3)");
  CHECK(space.row_sets(0).size() == 2);
}

TEST_CASE("tabloids ignore row order") {
  auto shape = Partition({3, 2});
  TabloidSpace space(shape);
  Tableau a(shape, {{1, 2, 3}, {4, 5}});
  Tableau b(shape, {{3, 1, 2}, {5, 4}});
  CHECK(space.index_of(a) == space.index_of(b));
}

TEST_CASE("right action law on tabloids and vectors") {
  std::mt19937_64 rng(2024);
  PrimeField field(5);
  for (const auto& shape : {Partition({3, 2}), Partition({2, 2, 1}), Partition({4, 1, 1})}) {
    auto space = std::make_shared<const TabloidSpace>(shape);
    const int n = shape.size();
    for (int trial = 0; trial < 20; ++trial) {
      auto pi = random_permutation(n, rng), sigma = random_permutation(n, rng);
      auto t = tableau_from(shape, random_permutation(n, rng));
      // {t} pi = {t pi}
      CHECK(space->image_index(space->index_of(t), pi) == space->index_of(t.apply(pi)));
      ModuleVector<PrimeField> v(space, field);
      for (std::size_t i = 0; i < space->size(); ++i) v.add_to(i, static_cast<std::uint32_t>(rng() % 5));
      CHECK(v.acted(pi * sigma) == v.acted(pi).acted(sigma));
      auto images = space->index_permutation(pi);
      std::vector<std::uint32_t> sorted = images;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t i = 0; i < sorted.size(); ++i) CHECK(sorted[i] == i);
    }
  }
}

TEST_CASE("polytabloid of shape (2,1)") {
  RationalField q;
  auto shape = Partition({2, 1});
  auto space = std::make_shared<const TabloidSpace>(shape);
  Tableau t(shape, {{1, 2}, {3}});
  auto e = polytabloid(space, t, q);
  CHECK(e.support_size() == 2);
  CHECK(e.coefficient(t) == 1);
  CHECK(e.coefficient(Tableau(shape, {{3, 2}, {1}})) == -1);
  CHECK(e.dump() == "1 : (1 2 | 3)\n-1 : (2 3 | 1)\n");
  CHECK(column_stabilizer_order(t) == 2);
}

TEST_CASE("polytabloids are equivariant and have the column sign") {
  std::mt19937_64 rng(99);
  PrimeField field(3);
  for (const auto& shape : {Partition({3, 2}), Partition({2, 2, 1}), Partition({3, 1, 1})}) {
    auto space = std::make_shared<const TabloidSpace>(shape);
    const int n = shape.size();
    for (int trial = 0; trial < 10; ++trial) {
      auto t = tableau_from(shape, random_permutation(n, rng));
      auto pi = random_permutation(n, rng);
      CHECK(polytabloid(space, t, field).acted(pi) == polytabloid(space, t.apply(pi), field));
      auto column = t.columns().front();
      auto swap = Permutation::transposition(n, column[0], column[1]);
      CHECK(polytabloid(space, t, field).acted(swap) == polytabloid(space, t, field).scaled(field.neg(1)));
    }
  }
}

TEST_CASE("Garnir sums vanish") {
  // A = column j from row i down, B = column j+1 from the top to row i; the
  // signed sum of e_t sigma over S_{A u B} is zero.
  RationalField q;
  for (const auto& shape : {Partition({2, 2}), Partition({3, 2, 1}), Partition({2, 2, 2}), Partition({3, 3})}) {
    auto space = std::make_shared<const TabloidSpace>(shape);
    auto t = Tableau::row_reading(shape);
    const int n = shape.size();
    auto cols = t.columns();
    for (std::size_t j = 0; j + 1 < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j + 1].size(); ++i) {
        std::vector<int> points(cols[j].begin() + static_cast<long>(i), cols[j].end());
        points.insert(points.end(), cols[j + 1].begin(), cols[j + 1].begin() + static_cast<long>(i) + 1);
        std::sort(points.begin(), points.end());
        auto e = polytabloid(space, t, q);
        ModuleVector<RationalField> total(space, q);
        auto order = points;
        do {
          std::vector<int> images(n);
          std::iota(images.begin(), images.end(), 1);
          for (std::size_t k = 0; k < points.size(); ++k) images[points[k] - 1] = order[k];
          Permutation sigma(images);
          total = total + e.acted(sigma).scaled(q.from_integer(sigma.sign()));
        } while (std::next_permutation(order.begin(), order.end()));
        CHECK(total.is_zero());
      }
  }
}

TEST_CASE("standard polytabloids are independent") {
  PrimeField f2(2);
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n)) {
      auto space = std::make_shared<const TabloidSpace>(shape);
      auto tableaux = standard_tableaux(shape);
      CHECK(tableaux.size() == specht_dimension(shape));
      CHECK(tableaux.front() == Tableau::row_reading(shape));
      Matrix<PrimeField> rows(f2, 0, space->size());
      for (const auto& t : tableaux) {
        CHECK(t.is_standard());
        rows.append_row(polytabloid(space, t, f2).coords());
      }
      CHECK(rank(rows) == tableaux.size());
    }
}

TEST_CASE("tableau regions") {
  // lambda = (3,1,1): removable nodes (1,3), (3,1).
  auto shape = Partition({3, 1, 1});
  auto t = Tableau::row_reading(shape);
  CHECK(t.to_string() == "1 2 3 / 4 / 5");
  CHECK(region_H(t, 0).empty());
  CHECK(region_H(t, 1) == std::vector<int>{1, 2, 3});
  CHECK(region_H(t, 2) == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(region_V(t, 1) == std::vector<int>{2, 3});
  CHECK(region_V(t, 2) == std::vector<int>{1, 4, 5});
  CHECK_THROWS(region_V(t, 3));
  auto ext = t.extension();
  CHECK(ext.shape() == Partition({3, 1, 1, 1}));
  CHECK(ext.entry(4, 1) == 6);
  CHECK(ext.restricted_to(shape) == Tableau(shape, {{1, 2, 3}, {4}, {5}}, 6));
  CHECK_THROWS(Tableau(shape, {{1, 2, 3}, {4}, {4}}));
}

TEST_CASE("induced polytabloid") {
  RationalField q;
  auto lambda = Partition({1});
  auto big = Tableau::row_reading(lambda).extension();
  auto space = std::make_shared<const TabloidSpace>(big.shape());
  auto e = induced_polytabloid(space, big, lambda, q);
  CHECK(e.support_size() == 1);
  CHECK(e.coefficient(big) == 1);

  // For (2,1) the sum runs over the column stabiliser of the top part only.
  auto shape = Partition({2, 1});
  auto ext = Tableau::row_reading(shape).extension();
  auto big_space = std::make_shared<const TabloidSpace>(ext.shape());
  auto v = induced_polytabloid(big_space, ext, shape, q);
  CHECK(v.support_size() == 2);
  CHECK(v.coefficient(ext) == 1);
  CHECK(v.coefficient(ext.apply(Permutation::transposition(4, 1, 3))) == -1);
}

TEST_CASE("group ring action on vectors") {
  RationalField q;
  auto shape = Partition({2, 1});
  auto space = std::make_shared<const TabloidSpace>(shape);
  auto e = polytabloid(space, Tableau::row_reading(shape), q);
  // E_3 acts on S^(2,1) as E((2,1)) = 0.
  CHECK(e.acted(transposition_sum(3)).is_zero());
  CHECK(e.acted(AlgebraElement::identity(3)) == e);
  CHECK_THROWS(e.acted(Permutation::identity(4)));
}
