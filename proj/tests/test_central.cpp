#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "specht/central.hpp"

using namespace specht;

namespace {

template <ExactField F>
void check_block_split(const Partition& lambda, Direction direction, const F& field) {
  auto module = build_module(lambda, direction, field);
  auto factors = factor_partitions(lambda, direction);
  auto blocks = block_split(module, factors);
  // Oracle: group the factors by p-core (by the partition itself over Q).
  std::map<Partition, std::size_t> by_core;
  const unsigned p = field.characteristic();
  for (const auto& mu : factors) by_core[p ? p_core(mu, static_cast<int>(p)) : mu] += specht_dimension(mu);
  REQUIRE(blocks.size() == by_core.size());
  std::vector<Subspace<F>> parts;
  std::size_t total = 0;
  for (const auto& b : blocks) {
    CHECK(b.label.p == p);
    CHECK(b.subspace.dim() == by_core.at(b.label.core));
    for (const auto& g : module.generators()) CHECK(b.subspace.is_invariant(g));
    parts.push_back(b.subspace);
    total += b.subspace.dim();
  }
  CHECK(total == module.dim());
  CHECK(independent(parts));
}

}  // namespace

TEST_CASE("predicted scalars and minimal polynomials") {
  RationalField q;
  CHECK(predicted_scalar(Partition({2, 1}), 1, q) == 0);
  CHECK(predicted_scalar(Partition({3}), 1, q) == 3);
  CHECK(predicted_scalar(Partition({3}), 2, q) == 2);
  CHECK(predicted_scalar(Partition({3}), 3, q) == 0);
  CHECK_THROWS(predicted_scalar(Partition({3}), 0, q));
  CHECK(predicted_min_poly(Partition({2, 1}), Direction::restrict, q).to_string() == "x^2 - 1");
  CHECK(predicted_min_poly(Partition({2, 1}), Direction::induce, q).to_string() == "x^3 - 4*x");
  CHECK_THROWS(predicted_min_poly(Partition({1}), Direction::restrict, q));
  // Over GF(2) the factors of S^(6,1,1) induced have E = 1 + 0 + 0 = 1, 0, 1.
  PrimeField f2(2);
  auto poly = predicted_min_poly(Partition({6, 1, 1}), Direction::induce, f2);
  CHECK(poly.degree() == 3);
  CHECK(factor_partitions(Partition({6, 1, 1}), Direction::induce).size() == 3);
}

TEST_CASE("central symmetric actions") {
  for (const auto& lambda : {Partition({3, 1}), Partition({2, 2, 1}), Partition({3, 2})}) {
    PrimeField f(5);
    RationalField q;
    auto s = build_specht(lambda, q);
    const int n = lambda.size();
    CentralActions<RationalField> actions(s);
    CHECK(actions.symmetric(1) == action_matrix(s, transposition_sum(n)));
    for (int k = 1; k <= n; ++k) {
      auto a = central_symmetric_action(s, k);
      CHECK(a == Matrix<RationalField>::scalar(q, s.dim(), predicted_scalar(lambda, k, q)));
      CHECK(a == actions.symmetric(k));
    }
    CHECK(actions.symmetric(n).is_zero());
    CHECK_THROWS(actions.symmetric(n + 1));
    CHECK_THROWS(actions.murphy(0));

    auto r = build_restriction(lambda, f);
    CentralActions<PrimeField> on_r(r);
    for (int k = 1; k < n; ++k)
      for (const auto& g : r.generators()) CHECK(on_r.symmetric(k) * g == g * on_r.symmetric(k));
  }
}

TEST_CASE("block split examples") {
  PrimeField f2(2), f3(3);
  auto r21 = block_split(build_restriction(Partition({2, 1}), f3),
                         factor_partitions(Partition({2, 1}), Direction::restrict));
  REQUIRE(r21.size() == 2);
  CHECK(r21[0].label.core == Partition({1, 1}));
  CHECK(r21[1].label.core == Partition({2}));
  CHECK(r21[0].subspace.dim() == 1);
  CHECK(r21[1].subspace.dim() == 1);

  auto r6111 = block_split(build_restriction(Partition({6, 1, 1, 1}), f2),
                           factor_partitions(Partition({6, 1, 1, 1}), Direction::restrict));
  REQUIRE(r6111.size() == 1);
  CHECK(r6111[0].label.core.empty());
  CHECK(r6111[0].subspace.dim() == 56);
  CHECK(r6111[0].factor_partitions.size() == 2);

  auto i611 = block_split(build_induction(Partition({6, 1, 1}), f2),
                          factor_partitions(Partition({6, 1, 1}), Direction::induce));
  REQUIRE(i611.size() == 2);
  CHECK(i611[0].label.core == Partition({1}));
  CHECK(i611[0].subspace.dim() == 133);
  CHECK(i611[1].label.core == Partition({2, 1}));
  CHECK(i611[1].subspace.dim() == 56);

  CHECK_THROWS(block_split(build_restriction(Partition({2, 1}), f3), {Partition({2, 1})}));
}

TEST_CASE("block split agrees with the core oracle") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& lambda : partitions_of(n)) {
      for (unsigned p : {2u, 3u, 5u}) {
        PrimeField f(p);
        if (n >= 2) check_block_split(lambda, Direction::restrict, f);
        check_block_split(lambda, Direction::induce, f);
      }
      RationalField q;
      if (n >= 2) check_block_split(lambda, Direction::restrict, q);
      check_block_split(lambda, Direction::induce, q);
    }
}

TEST_CASE("minimal polynomial degree bound") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& lambda : partitions_of(n))
      for (auto direction : {Direction::restrict, Direction::induce}) {
        const int m = lambda.distinct_parts() + (direction == Direction::induce ? 1 : 0);
        for (unsigned p : {2u, 3u}) {
          PrimeField f(p);
          auto module = build_module(lambda, direction, f);
          auto poly = minimal_polynomial(action_matrix(module, transposition_sum(module.degree())));
          CHECK(poly.degree() <= m);
          // The minimal polynomial divides the predicted product.
          CHECK(predicted_min_poly(lambda, direction, f).divmod(poly).second.is_zero());
        }
      }
}
