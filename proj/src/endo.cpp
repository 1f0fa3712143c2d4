#include "specht/endo.hpp"

#include <random>
#include <stdexcept>

namespace specht {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::zero: return "zero";
    case Verdict::indecomposable: return "indecomposable";
    case Verdict::decomposable: return "decomposable";
  }
  return "?";
}

std::string to_string(CertificateBranch branch) {
  switch (branch) {
    case CertificateBranch::zero_module: return "zero-module";
    case CertificateBranch::scalar_commutant: return "scalar-commutant";
    case CertificateBranch::exhaustive: return "exhaustive";
    case CertificateBranch::search: return "search";
    case CertificateBranch::probabilistic: return "probabilistic";
  }
  return "?";
}

namespace {

template <ExactField F>
typename F::Element random_element(const F& field, std::mt19937_64& rng) {
  if constexpr (is_finite_field_v<F>) {
    return static_cast<typename F::Element>(rng() % field.order());
  } else {
    return field.from_integer(static_cast<long long>(rng() % 15) - 7);
  }
}

/// q^exponent, saturating just above cap.
std::uint64_t bounded_power(std::uint64_t q, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > cap / q) return cap + 1;
    out *= q;
  }
  return out;
}

/// Calls visit on every nonzero coefficient vector of length r over GF(q), in
/// odometer order, until visit returns true.
template <class Visit>
bool enumerate_nonzero(const PrimeField& field, std::size_t r, Visit&& visit) {
  Vec<PrimeField> coeffs(r, 0);
  const auto q = static_cast<std::uint32_t>(field.order());
  while (true) {
    std::size_t i = 0;
    while (i < r && coeffs[i] == q - 1) coeffs[i++] = 0;
    if (i == r) return false;
    ++coeffs[i];
    if (visit(std::as_const(coeffs))) return true;
  }
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& a) {
  const auto& f = a.field();
  const std::size_t d = a.rows();
  Matrix<F> augmented(f, d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), augmented.row(i).begin());
    augmented(i, d + i) = f.one();
  }
  auto echelon = rref(std::move(augmented));
  if (echelon.rank != d || (d > 0 && echelon.pivots.back() >= d)) throw std::logic_error("matrix is singular");
  Matrix<F> out(f, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto row = echelon.reduced.row(i);
    std::copy(row.begin() + d, row.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace

template <ExactField F>
std::vector<Matrix<F>> hom_space(const GroupActionModule<F>& first, const GroupActionModule<F>& second) {
  if (first.degree() != second.degree()) throw std::invalid_argument("hom_space needs modules of equal degree");
  if (!(first.field() == second.field())) throw std::invalid_argument("hom_space needs modules over one field");
  const auto& field = first.field();
  const std::size_t d1 = first.dim(), d2 = second.dim();
  if (d1 == 0 || d2 == 0) return {};
  const std::size_t gens = first.generators().size();

  // Spanning vectors b_j of M1, and for each the matrix theta_j (r x d2) whose
  // rows give the image of b_j under each of the r free parameters.
  IncrementalEchelon<F> span(field, d1);
  std::vector<Vec<F>> vectors;
  std::vector<Matrix<F>> theta;
  std::size_t params = 0;

  auto impose = [&](const Matrix<F>& condition) {
    auto solutions = kernel(condition);
    if (solutions.dim() == params) return;
    for (auto& t : theta) t = solutions.basis() * t;
    params = solutions.dim();
  };

  for (std::size_t i = 0; i < d1 && span.size() < d1; ++i) {
    Vec<F> unit(d1, field.zero());
    unit[i] = field.one();
    auto reduction = span.reduce(unit);
    if (reduction.in_span()) continue;
    // A new seed brings d2 fresh parameters.
    for (auto& t : theta) {
      Matrix<F> grown(field, params + d2, d2);
      std::copy(t.data().begin(), t.data().end(), grown.data().begin());
      t = std::move(grown);
    }
    Matrix<F> seed(field, params + d2, d2);
    for (std::size_t k = 0; k < d2; ++k) seed(params + k, k) = field.one();
    params += d2;
    span.insert_reduced(reduction);
    vectors.push_back(std::move(unit));
    theta.push_back(std::move(seed));

    for (std::size_t q = vectors.size() - 1; q < vectors.size(); ++q) {
      for (std::size_t g = 0; g < gens; ++g) {
        auto next = first.generators()[g].apply(vectors[q]);
        auto step = span.reduce(next);
        Matrix<F> image = theta[q] * second.generators()[g];
        if (!step.in_span()) {
          span.insert_reduced(step);
          vectors.push_back(std::move(next));
          theta.push_back(std::move(image));
          continue;
        }
        for (std::size_t k = 0; k < step.coeffs.size(); ++k)
          if (!field.is_zero(step.coeffs[k])) image.add_scaled(field.neg(step.coeffs[k]), theta[k]);
        if (!image.is_zero()) impose(image);
        if (params == 0) return {};
      }
    }
  }

  // Row j of P is b_j, so X = P^{-1} Y with Y_j the image of b_j.
  Matrix<F> spanning(field, 0, d1);
  for (const auto& v : vectors) spanning.append_row(v);
  auto to_standard = inverse(spanning);
  std::vector<Matrix<F>> out;
  for (std::size_t s = 0; s < params; ++s) {
    Matrix<F> images(field, d1, d2);
    for (std::size_t j = 0; j < d1; ++j) std::copy(theta[j].row(s).begin(), theta[j].row(s).end(), images.row(j).begin());
    auto x = to_standard * images;
    for (std::size_t g = 0; g < gens; ++g)
      if (!(first.generators()[g] * x == x * second.generators()[g]))
        throw std::logic_error("hom_space produced a map that does not intertwine");
    out.push_back(std::move(x));
  }
  return out;
}

template <ExactField F>
EndoAlgebra<F>::EndoAlgebra(const GroupActionModule<F>& module)
    : field_(module.field()), module_dim_(module.dim()), basis_(hom_space(module, module)) {
  const std::size_t r = basis_.size();
  if (r == 0) return;
  Matrix<F> flat(field_, 0, module_dim_ * module_dim_);
  for (const auto& b : basis_) flat.append_row(b.data());
  SpanSolver<F> solver(flat);
  structure_.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      auto coords = solver.coordinates((basis_[i] * basis_[j]).data());
      if (!coords) throw std::logic_error("commutant is not closed under multiplication");
      structure_.push_back(std::move(*coords));
    }
}

template <ExactField F>
Matrix<F> EndoAlgebra<F>::element(std::span<const typename F::Element> coeffs) const {
  if (coeffs.size() != dim()) throw std::invalid_argument("coefficient count does not match commutant");
  Matrix<F> out(field_, module_dim_, module_dim_);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!field_.is_zero(coeffs[i])) out.add_scaled(coeffs[i], basis_[i]);
  return out;
}

template <ExactField F>
Matrix<F> EndoAlgebra<F>::left_regular(std::span<const typename F::Element> coeffs) const {
  const std::size_t r = dim();
  if (coeffs.size() != r) throw std::invalid_argument("coefficient count does not match commutant");
  // Row j: coordinates of a * basis[j].
  Matrix<F> out(field_, r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (field_.is_zero(coeffs[i])) continue;
    for (std::size_t j = 0; j < r; ++j) field_.axpy(out.row(j), coeffs[i], structure(i, j));
  }
  return out;
}

template <ExactField F>
DecompositionCertificate<F> certify_indecomposable(const GroupActionModule<F>& module, const CertifyOptions& options) {
  DecompositionCertificate<F> cert;
  cert.seed = options.seed;
  if (module.dim() == 0) return cert;

  EndoAlgebra<F> algebra(module);
  const std::size_t r = algebra.dim();
  cert.commutant_dim = r;
  if (r == 1) {
    cert.verdict = Verdict::indecomposable;
    cert.branch = CertificateBranch::scalar_commutant;
    return cert;
  }

  // An element of a finite-dimensional algebra that is neither invertible nor
  // nilpotent gives a nontrivial Fitting split of the module.
  auto splits = [&](std::span<const typename F::Element> coeffs) {
    ++cert.elements_tested;
    auto regular = algebra.left_regular(coeffs);
    return !is_invertible(regular) && !is_nilpotent(regular);
  };
  auto accept = [&](Vec<F> coeffs, CertificateBranch branch) {
    auto witness = algebra.element(coeffs);
    auto [ker, im] = fitting_split(witness);
    if (ker.dim() == 0 || im.dim() == 0 || ker.dim() + im.dim() != module.dim())
      throw std::logic_error("witness does not give a Fitting split");
    for (const auto& gen : module.generators())
      if (!ker.is_invariant(gen) || !im.is_invariant(gen)) throw std::logic_error("Fitting parts are not submodules");
    cert.verdict = Verdict::decomposable;
    cert.branch = branch;
    cert.witness_coefficients = std::move(coeffs);
    cert.witness = std::move(witness);
    cert.split_dims = {ker.dim(), im.dim()};
  };

  const auto& field = module.field();
  if constexpr (is_finite_field_v<F>) {
    if (bounded_power(field.order(), r, options.enumeration_cap) <= options.enumeration_cap) {
      Vec<F> found;
      bool hit = enumerate_nonzero(field, r, [&](const Vec<F>& coeffs) {
        if (!splits(coeffs)) return false;
        found = coeffs;
        return true;
      });
      if (hit) {
        accept(std::move(found), CertificateBranch::exhaustive);
      } else {
        cert.verdict = Verdict::indecomposable;
        cert.branch = CertificateBranch::exhaustive;
      }
      return cert;
    }
  }

  auto unit = [&](std::size_t i) {
    Vec<F> v(r, field.zero());
    v[i] = field.one();
    return v;
  };
  for (std::size_t i = 0; i < r; ++i)
    if (auto v = unit(i); splits(v)) return accept(std::move(v), CertificateBranch::search), cert;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      auto v = unit(i);
      v[j] = field.one();
      if (splits(v)) return accept(std::move(v), CertificateBranch::search), cert;
      if (auto w = algebra.structure(i, j); splits(w)) return accept(std::move(w), CertificateBranch::search), cert;
    }
  std::mt19937_64 rng(options.seed);
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    Vec<F> v(r);
    for (auto& x : v) x = random_element(field, rng);
    if (splits(v)) return accept(std::move(v), CertificateBranch::search), cert;
  }
  cert.verdict = Verdict::indecomposable;
  cert.branch = CertificateBranch::probabilistic;
  return cert;
}

template <ExactField F>
std::vector<Summand<F>> decompose(const GroupActionModule<F>& module, const CertifyOptions& options) {
  const auto& field = module.field();
  std::vector<Summand<F>> out;
  if (module.dim() == 0) return out;

  // embed: rows are the basis of the piece in the coordinates of `module`.
  auto split = [&](auto&& self, const GroupActionModule<F>& piece, const Matrix<F>& embed) -> void {
    auto cert = certify_indecomposable(piece, options);
    if (cert.verdict != Verdict::decomposable) {
      out.push_back({Subspace<F>::span_of(embed), std::move(cert)});
      return;
    }
    auto [ker, im] = fitting_split(*cert.witness);
    for (const auto* part : {&ker, &im}) self(self, piece.submodule(*part), part->basis() * embed);
  };
  split(split, module, Matrix<F>::identity(field, module.dim()));

  std::vector<Subspace<F>> parts;
  std::size_t total = 0;
  for (const auto& s : out) {
    for (const auto& gen : module.generators())
      if (!s.subspace.is_invariant(gen)) throw std::logic_error("summand is not a submodule");
    parts.push_back(s.subspace);
    total += s.subspace.dim();
  }
  if (total != module.dim() || !independent(parts)) throw std::logic_error("summands do not decompose the module");
  return out;
}

template <ExactField F>
std::optional<Matrix<F>> find_isomorphism(const GroupActionModule<F>& first, const GroupActionModule<F>& second,
                                          const CertifyOptions& options) {
  if (first.dim() != second.dim()) return std::nullopt;
  if (first.dim() == 0) return Matrix<F>(first.field(), 0, 0);
  auto homs = hom_space(first, second);
  const std::size_t h = homs.size();
  if (h == 0) return std::nullopt;
  const auto& field = first.field();
  auto combine = [&](std::span<const typename F::Element> coeffs) {
    Matrix<F> out(field, first.dim(), second.dim());
    for (std::size_t i = 0; i < h; ++i)
      if (!field.is_zero(coeffs[i])) out.add_scaled(coeffs[i], homs[i]);
    return out;
  };

  if constexpr (is_finite_field_v<F>) {
    if (bounded_power(field.order(), h, options.enumeration_cap) <= options.enumeration_cap) {
      std::optional<Matrix<F>> found;
      enumerate_nonzero(field, h, [&](const Vec<F>& coeffs) {
        auto x = combine(coeffs);
        if (!is_invertible(x)) return false;
        found = std::move(x);
        return true;
      });
      return found;
    }
  }
  for (const auto& x : homs)
    if (is_invertible(x)) return x;
  std::mt19937_64 rng(options.seed);
  for (std::size_t trial = 0; trial < options.random_trials; ++trial) {
    Vec<F> coeffs(h);
    for (auto& c : coeffs) c = random_element(field, rng);
    auto x = combine(coeffs);
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

template <ExactField F>
Vec<F> find_separating_vector(const GroupActionModule<F>& module, const Matrix<F>& z, int expected_degree,
                              std::uint64_t seed) {
  const auto& field = module.field();
  const std::size_t d = module.dim();
  if (z.rows() != d || z.cols() != d) throw std::invalid_argument("operator does not act on the module");
  if (expected_degree < 1 || minimal_polynomial(z).degree() < expected_degree)
    throw std::invalid_argument("no separating vector");

  auto separates = [&](const Vec<F>& tau) {
    IncrementalEchelon<F> chain(field, d);
    Vec<F> current = tau;
    for (int i = 0; i < expected_degree; ++i) {
      if (!chain.insert(current)) return false;
      current = z.apply(current);
    }
    return true;
  };
  auto unit = [&](std::size_t i) {
    Vec<F> v(d, field.zero());
    v[i] = field.one();
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    if (auto v = unit(i); separates(v)) return v;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto v = unit(i);
      v[j] = field.one();
      if (separates(v)) return v;
    }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 1000; ++trial) {
    Vec<F> v(d);
    for (auto& x : v) x = random_element(field, rng);
    if (separates(v)) return v;
  }
  throw std::logic_error("separating vector search failed");
}

#define SPECHT_INSTANTIATE_ENDO(F)                                                                             \
  template std::vector<Matrix<F>> hom_space(const GroupActionModule<F>&, const GroupActionModule<F>&);          \
  template class EndoAlgebra<F>;                                                                                \
  template DecompositionCertificate<F> certify_indecomposable(const GroupActionModule<F>&, const CertifyOptions&); \
  template std::vector<Summand<F>> decompose(const GroupActionModule<F>&, const CertifyOptions&);               \
  template std::optional<Matrix<F>> find_isomorphism(const GroupActionModule<F>&, const GroupActionModule<F>&,  \
                                                     const CertifyOptions&);                                    \
  template Vec<F> find_separating_vector(const GroupActionModule<F>&, const Matrix<F>&, int, std::uint64_t);

SPECHT_INSTANTIATE_ENDO(PrimeField)
SPECHT_INSTANTIATE_ENDO(RationalField)

}  // namespace specht
