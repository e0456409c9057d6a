#pragma once

// q-permutation modules x_rho H and homomorphisms from and to the trivial module.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra_rep.hpp"
#include "hecke_algebra.hpp"
#include "linalg.hpp"
#include "permutation.hpp"

namespace hecke {

template <FieldScalar S>
struct PermutationModule {
  std::vector<Permutation> reps;  ///< d in D_rho, indexing the basis x_rho T_d
  ModuleRep<S> module;
};

/// The right ideal x_rho H of H_q(n) with basis x_rho T_d, d in D_rho, over
/// the presentation `alg` (generators T1 .. T_{n-1}).
template <FieldScalar S>
PermutationModule<S> permutation_module(const HeckePtr<S>& H, const Composition& rho, const AlgebraPtr<S>& alg) {
  const int n = H->degree();
  const auto& f = H->field();
  if (rho.range().hi > n) throw std::invalid_argument("permutation_module: composition exceeds degree");
  if (alg->num_generators() + 1 != static_cast<std::size_t>(n))
    throw std::invalid_argument("permutation_module: presentation is not H_q(" + std::to_string(n) + ")");
  auto reps = distinguished_reps_in(n, rho);
  std::map<BasisIndex, std::size_t> position;
  for (std::size_t k = 0; k < reps.size(); ++k) position[H->index_of(reps[k])] = k;

  const auto x = x_comp(H, rho);
  std::vector<HeckeElement<S>> basis;
  for (const auto& d : reps) basis.push_back(x * t_basis(H, d));

  const std::size_t dim = reps.size();
  std::vector<Matrix<S>> act;
  for (int i = 1; i < n; ++i) {
    auto A = Matrix<S>::zero(dim, dim, f);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto image = mult_by_generator(basis[k], i);
      auto rebuilt = zero_element(H);
      for (const auto& [w, c] : image.terms()) {
        auto it = position.find(w);
        if (it == position.end()) continue;
        A(k, it->second) = c;
        rebuilt += c * basis[it->second];
      }
      if (!(rebuilt == image)) throw std::logic_error("permutation_module: x_rho H is not spanned by x_rho T_d");
    }
    act.push_back(std::move(A));
  }
  return {std::move(reps), ModuleRep<S>(alg, dim, std::move(act))};
}

template <FieldScalar S>
struct TrivialHoms {
  std::vector<Vec<S>> embeddings;  ///< v with v T_i = q v
  std::vector<Vec<S>> quotients;   ///< lambda with lambda(m T_i) = q lambda(m), as coordinate rows
};

/// Homomorphisms K -> M and M -> K where every generator acts on K by q.
template <FieldScalar S>
TrivialHoms<S> trivial_hom_spaces(const ModuleRep<S>& M) {
  const auto& f = M.field();
  const std::size_t d = M.dim();
  const std::size_t g = M.algebra().num_generators();
  const S q = f.q();
  Matrix<S> wide(d, d * g, f.zero()), tall(d * g, d, f.zero());
  for (std::size_t i = 0; i < g; ++i) {
    auto A = M.action(static_cast<int>(i)) - q * Matrix<S>::identity(d, f);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        wide(a, i * d + b) = A(a, b);
        tall(i * d + a, b) = A(a, b);
      }
  }
  return {left_kernel(wide, f), right_kernel(tall, f)};
}

/// psi(phi(1)) for phi: 1 -> v and psi = lambda.
template <FieldScalar S>
S compose_hom(const Vec<S>& v, const Vec<S>& lambda, const FieldOf<S>& f) {
  S s = f.zero();
  for (std::size_t a = 0; a < v.size(); ++a) s += v[a] * lambda[a];
  return s;
}

/// Number of trivial direct summands: the rank of the pairing
/// Hom(K, M) x Hom(M, K) -> End(K) = K.
template <FieldScalar S>
std::size_t trivial_summand_multiplicity(const TrivialHoms<S>& homs, const FieldOf<S>& f) {
  Matrix<S> pairing(homs.embeddings.size(), homs.quotients.size(), f.zero());
  for (std::size_t i = 0; i < homs.embeddings.size(); ++i)
    for (std::size_t j = 0; j < homs.quotients.size(); ++j)
      pairing(i, j) = compose_hom(homs.embeddings[i], homs.quotients[j], f);
  return rank(pairing);
}

/// Kernel of a linear form, as a basis of row vectors.
template <FieldScalar S>
std::vector<Vec<S>> form_kernel(const Vec<S>& lambda, const FieldOf<S>& f) {
  Matrix<S> col(lambda.size(), 1, f.zero());
  for (std::size_t a = 0; a < lambda.size(); ++a) col(a, 0) = lambda[a];
  return left_kernel(col, f);
}

}  // namespace hecke
