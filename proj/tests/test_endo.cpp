#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "specht/central.hpp"
#include "specht/endo.hpp"

using namespace specht;

namespace {

// Oracle: solve A_g X = X B_g directly with one unknown per entry of X.
template <ExactField F>
std::size_t hom_dim_direct(const GroupActionModule<F>& first, const GroupActionModule<F>& second) {
  const auto& field = first.field();
  const std::size_t d1 = first.dim(), d2 = second.dim(), unknowns = d1 * d2;
  const std::size_t gens = first.generators().size();
  Matrix<F> system(field, unknowns, std::max<std::size_t>(1, gens * unknowns));
  for (std::size_t g = 0; g < gens; ++g) {
    const auto& a = first.generators()[g];
    const auto& b = second.generators()[g];
    const std::size_t base = g * unknowns;
    for (std::size_t r = 0; r < d1; ++r)
      for (std::size_t c = 0; c < d2; ++c) {
        const std::size_t eq = base + r * d2 + c;
        for (std::size_t k = 0; k < d1; ++k)
          system(k * d2 + c, eq) = field.add(system(k * d2 + c, eq), a(r, k));
        for (std::size_t k = 0; k < d2; ++k)
          system(r * d2 + k, eq) = field.sub(system(r * d2 + k, eq), b(k, c));
      }
  }
  return kernel(system).dim();
}

template <ExactField F>
bool intertwines(const GroupActionModule<F>& first, const GroupActionModule<F>& second, const Matrix<F>& x) {
  for (std::size_t g = 0; g < first.generators().size(); ++g)
    if (!(first.generators()[g] * x == x * second.generators()[g])) return false;
  return true;
}

template <ExactField F>
void check_hom(const GroupActionModule<F>& first, const GroupActionModule<F>& second) {
  auto hom = hom_space(first, second);
  CHECK(hom.size() == hom_dim_direct(first, second));
  for (const auto& x : hom) CHECK(intertwines(first, second, x));
}

}  // namespace

TEST_CASE("hom spaces match the direct linear system") {
  RationalField q;
  PrimeField f2(2), f3(3);
  for (int n = 2; n <= 4; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        check_hom(build_specht(a, q), build_specht(b, q));
        check_hom(build_specht(a, f2), build_specht(b, f2));
        check_hom(build_restriction(a, f3), build_restriction(b, f3));
      }
  check_hom(build_induction(Partition({2, 1}), f2), build_induction(Partition({2, 1}), f2));
  check_hom(build_induction(Partition({2, 1}), q), build_induction(Partition({3}), q));
}

TEST_CASE("hom space examples") {
  RationalField q;
  auto s21 = build_specht(Partition({2, 1}), q);
  CHECK(hom_space(s21, s21).size() == 1);
  CHECK(hom_space(build_specht(Partition({3}), q), build_specht(Partition({1, 1, 1}), q)).empty());
  auto r = build_restriction(Partition({3, 1}), q);
  auto identity = Matrix<RationalField>::identity(q, r.dim());
  Matrix<RationalField> flat(q, 0, r.dim() * r.dim());
  for (const auto& x : hom_space(r, r)) flat.append_row(x.data());
  CHECK(Subspace<RationalField>::span_of(flat).contains(identity.data()));
}

TEST_CASE("commutants of direct sums") {
  RationalField q;
  auto a = build_specht(Partition({3}), q), b = build_specht(Partition({2, 1}), q);
  EndoAlgebra<RationalField> two(direct_sum(a, b));
  CHECK(two.dim() == 2);
  EndoAlgebra<RationalField> four(direct_sum(b, b));
  CHECK(four.dim() == 4);
  // Structure constants reproduce the products.
  for (std::size_t i = 0; i < four.dim(); ++i)
    for (std::size_t j = 0; j < four.dim(); ++j)
      CHECK(four.element(four.structure(i, j)) == four.basis()[i] * four.basis()[j]);
  Vec<RationalField> one(four.dim(), q.zero());
  one[0] = q.one();
  auto regular = four.left_regular(one);
  CHECK(regular.rows() == 4);
  auto cert = certify_indecomposable(direct_sum(b, b));
  CHECK(cert.verdict == Verdict::decomposable);
  CHECK(cert.witness.has_value());
  CHECK(cert.split_dims.first + cert.split_dims.second == 4);
}

TEST_CASE("indecomposability certificates") {
  RationalField q;
  PrimeField f2(2), f3(3);
  auto s21 = certify_indecomposable(build_specht(Partition({2, 1}), q));
  CHECK(s21.verdict == Verdict::indecomposable);
  CHECK(s21.branch == CertificateBranch::scalar_commutant);
  CHECK(s21.deterministic());

  // S^(2,1) over GF(2) restricted to S_2 is the regular module.
  auto regular = certify_indecomposable(build_restriction(Partition({2, 1}), f2));
  CHECK(regular.verdict == Verdict::indecomposable);
  CHECK(regular.branch == CertificateBranch::exhaustive);
  CHECK(regular.commutant_dim == 2);
  CHECK(regular.elements_tested == 3);  // the nonzero elements

  auto r21 = certify_indecomposable(build_restriction(Partition({2, 1}), q));
  CHECK(r21.verdict == Verdict::decomposable);
  CHECK(r21.branch == CertificateBranch::search);

  auto split = certify_indecomposable(build_restriction(Partition({2, 1}), f3));
  CHECK(split.verdict == Verdict::decomposable);
  CHECK(split.branch == CertificateBranch::exhaustive);

  auto zero = certify_indecomposable(GroupActionModule<PrimeField>(f2, 2, 0, {Matrix<PrimeField>(f2, 0, 0)}));
  CHECK(zero.verdict == Verdict::zero);
  CHECK(to_string(Verdict::decomposable) == "decomposable");
  CHECK(to_string(CertificateBranch::scalar_commutant) == "scalar-commutant");
}

TEST_CASE("certificates are deterministic for a fixed seed") {
  PrimeField f5(5);
  CertifyOptions options;
  options.seed = 17;
  options.enumeration_cap = 10;
  auto m = build_induction(Partition({2, 1}), f5);
  auto first = certify_indecomposable(m, options);
  auto second = certify_indecomposable(m, options);
  CHECK(first.verdict == second.verdict);
  CHECK(first.branch == second.branch);
  CHECK(first.elements_tested == second.elements_tested);
  CHECK(first.witness_coefficients == second.witness_coefficients);
  CHECK(first.seed == 17);
}

TEST_CASE("decompositions") {
  RationalField q;
  auto r21 = decompose(build_restriction(Partition({2, 1}), q));
  REQUIRE(r21.size() == 2);
  for (const auto& s : r21) {
    CHECK(s.subspace.dim() == 1);
    CHECK(s.certificate.verdict == Verdict::indecomposable);
  }
  PrimeField f2(2);
  auto s = decompose(build_restriction(Partition({6, 1, 1, 1}), f2));
  std::vector<std::size_t> dims;
  for (const auto& part : s) {
    dims.push_back(part.subspace.dim());
    CHECK(part.certificate.deterministic());
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{8, 48});
}

TEST_CASE("isomorphisms") {
  PrimeField f3(3);
  auto a = build_specht(Partition({2, 1}), f3);
  auto b = direct_sum(build_specht(Partition({2}), f3), build_specht(Partition({1, 1}), f3));
  auto r = build_restriction(Partition({2, 1}), f3);
  CHECK(is_isomorphic(a, a));
  CHECK(is_isomorphic(r, b));
  CHECK_FALSE(is_isomorphic(build_specht(Partition({3}), f3), build_specht(Partition({1, 1, 1}), f3)));
  auto x = find_isomorphism(r, b);
  REQUIRE(x.has_value());
  CHECK(is_invertible(*x));
  CHECK(intertwines(r, b, *x));
}

TEST_CASE("separating vectors") {
  RationalField q;
  auto r = build_induction(Partition({2, 1}), q);
  auto z = action_matrix(r, transposition_sum(r.degree()));
  auto tau = find_separating_vector(r, z, 3);
  Matrix<RationalField> krylov(q, 0, r.dim());
  Vec<RationalField> v = tau;
  for (int i = 0; i < 3; ++i) {
    krylov.append_row(v);
    v = z.apply(v);
  }
  CHECK(rank(krylov) == 3);
  auto scalar = Matrix<RationalField>::scalar(q, r.dim(), q.from_integer(2));
  CHECK_THROWS_WITH(find_separating_vector(r, scalar, 2), "no separating vector");
}
