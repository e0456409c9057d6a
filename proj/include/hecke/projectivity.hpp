#pragma once

// The sigma element of the basic algebra, the sigma-annihilator test, splitting oracles for
// projectivity, and Jordan types.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra_rep.hpp"
#include "basic_block.hpp"
#include "linalg.hpp"
#include "report.hpp"

namespace hecke {

/// Default scalars: all 1, except in characteristic 2 where even r gets q.
template <FieldScalar S>
std::vector<S> default_sigma_scalars(const FieldOf<S>& f, int l) {
  std::vector<S> c;
  for (int r = 1; r <= l - 2; ++r) c.push_back(f.characteristic() == 2 && r % 2 == 0 ? f.q() : f.one());
  return c;
}

template <FieldScalar S>
struct SigmaData {
  int l = 0;
  std::vector<S> scalars;  ///< c_1 .. c_{l-2}
  HeckeElement<S> alpha_sum;
  HeckeElement<S> beta_sum;  ///< sum of c_r beta_r
  HeckeElement<S> sigma;
  HeckeElement<S> sigma_squared;
};

template <FieldScalar S>
SigmaData<S> build_sigma(const BlockConstruction<S>& block, std::optional<std::vector<S>> scalars = std::nullopt) {
  const int l = block.l();
  if (l < 3) throw std::invalid_argument("build_sigma: requires l >= 3");
  const auto& f = block.field();
  std::vector<S> c = scalars ? *scalars : default_sigma_scalars<S>(f, l);
  if (c.size() != static_cast<std::size_t>(l - 2)) throw std::invalid_argument("build_sigma: need l-2 scalars");
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c[r].is_zero()) throw std::invalid_argument("build_sigma: c_" + std::to_string(r + 1) + " is zero");
    if (r + 1 < c.size() && (c[r] + c[r + 1]).is_zero())
      throw std::invalid_argument("build_sigma: c_" + std::to_string(r + 1) + " + c_" + std::to_string(r + 2) +
                                  " is zero");
  }
  const auto& H = block.algebra();
  auto a = zero_element(H), b = zero_element(H);
  for (int r = 1; r <= l - 2; ++r) {
    a += block.alpha(r);
    b += c[r - 1] * block.beta(r);
  }
  auto s = a + b;
  auto s2 = s * s;
  return SigmaData<S>{l, std::move(c), std::move(a), std::move(b), std::move(s), std::move(s2)};
}

/// Checks the nilpotency and socle properties of sigma.
template <FieldScalar S>
Report verify_sigma(const BlockConstruction<S>& block, const SigmaData<S>& sd) {
  Report rep;
  const int l = sd.l;
  rep.add("alpha~^2 = 0", (sd.alpha_sum * sd.alpha_sum).is_zero());
  rep.add("beta~^2 = 0", (sd.beta_sum * sd.beta_sum).is_zero());
  rep.add("sigma^2 != 0", !sd.sigma_squared.is_zero());
  rep.add("sigma^3 = 0", (sd.sigma_squared * sd.sigma).is_zero());
  std::vector<std::string> bad;
  for (int r = 1; r < l; ++r)
    if ((block.epsilon(r) * sd.sigma_squared * block.epsilon(r)).is_zero()) bad.push_back(std::to_string(r));
  std::string w;
  for (const auto& x : bad) w += (w.empty() ? "r=" : ",") + x;
  rep.add("eps_r sigma^2 eps_r != 0 for all r", bad.empty(), w);

  // sigma^2 = c_1 a_1 b_1 + sum_{r=2}^{l-2} (c_{r-1}+c_r) a_r b_r + c_{l-2} b_{l-2} a_{l-2}
  const auto& c = sd.scalars;
  auto expected = c[0] * (block.alpha(1) * block.beta(1));
  for (int r = 2; r <= l - 2; ++r) expected += (c[r - 2] + c[r - 1]) * (block.alpha(r) * block.beta(r));
  expected += c[l - 3] * (block.beta(l - 2) * block.alpha(l - 2));
  rep.add("sigma^2 expands over the socle paths", sd.sigma_squared == expected);
  return rep;
}

// ---------------------------------------------------------------------------
// Jordan type

/// Jordan block sizes (descending) of a nilpotent matrix with N^bound = 0.
template <FieldScalar S>
std::vector<int> jordan_type(const Matrix<S>& N, int bound, const FieldOf<S>& f) {
  if (N.rows() != N.cols()) throw std::invalid_argument("jordan_type: matrix is not square");
  const std::size_t d = N.rows();
  std::vector<std::size_t> ranks{d};
  auto P = Matrix<S>::identity(d, f);
  for (int k = 1; k <= bound; ++k) {
    P = P * N;
    ranks.push_back(rank(P));
    if (ranks.back() == 0) break;
  }
  if (ranks.back() != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent within the bound");
  // at_least[k] = number of blocks of size >= k
  std::vector<int> sizes;
  const std::size_t K = ranks.size() - 1;
  for (std::size_t k = K; k >= 1; --k) {
    const std::size_t at_least = ranks[k - 1] - ranks[k];
    const std::size_t bigger = k < K ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t i = 0; i < at_least - bigger; ++i) sizes.push_back(static_cast<int>(k));
  }
  return sizes;
}

inline bool all_equal_to(const std::vector<int>& sizes, int v) {
  return !sizes.empty() && std::all_of(sizes.begin(), sizes.end(), [v](int x) { return x == v; });
}

inline std::string partition_str(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Modules over tensor powers of an algebra

/// Coordinates of x^{(x) m} in A^{(x) m}.
template <FieldScalar S>
Vec<S> tensor_repeat(const Vec<S>& x, int m, const FieldOf<S>& f) {
  return tensor_coordinates(std::vector<Vec<S>>(static_cast<std::size_t>(m), x), f);
}

struct AnnihilatorResult {
  bool nonzero = false;  ///< M (sigma_1 ... sigma_m)^2 != 0
  std::size_t rank = 0;  ///< rank of the action of (sigma_1 ... sigma_m)^2
};

/// (sigma_1 ... sigma_m)^2 = (sigma^2)^{(x) m}; the test asks whether it acts
/// non-trivially on M.  For decomposable M a positive answer means M has a
/// projective summand.
template <FieldScalar S>
AnnihilatorResult annihilator_test(const ModuleRep<S>& M, const AlgebraPtr<S>& A, const Vec<S>& sigma_squared,
                                   int m) {
  const auto& B = M.algebra();
  std::size_t d = 1;
  for (int i = 0; i < m; ++i) d *= A->dim();
  if (!B.has_structure() || B.dim() != d || B.num_generators() != A->num_generators() * static_cast<std::size_t>(m))
    throw std::invalid_argument("annihilator_test: module is not over the " + std::to_string(m) +
                                "-fold tensor power of " + A->label());
  const auto X = M.element_matrix(tensor_repeat(sigma_squared, m, A->field()));
  AnnihilatorResult out;
  out.rank = rank(X);
  out.nonzero = out.rank > 0;
  return out;
}

/// Greedy generating set of the submodule spanned by `candidates`.
template <FieldScalar S>
std::vector<Vec<S>> module_generators(const ModuleRep<S>& M, const std::vector<Vec<S>>& candidates) {
  const auto& f = M.field();
  std::vector<Vec<S>> gens;
  EchelonBasis<S> closure(M.dim(), f);
  for (const auto& v : candidates) {
    if (closure.contains(v)) continue;
    gens.push_back(v);
    std::vector<Vec<S>> queue{v};
    closure.add(v);
    while (!queue.empty()) {
      Vec<S> x = std::move(queue.back());
      queue.pop_back();
      for (const auto& A : M.action()) {
        Vec<S> y = vec_mat(x, A, f.zero());
        if (closure.add(y)) queue.push_back(std::move(y));
      }
    }
  }
  return gens;
}

template <FieldScalar S>
std::vector<Vec<S>> standard_basis(std::size_t d, const FieldOf<S>& f) {
  std::vector<Vec<S>> out(d, Vec<S>(d, f.zero()));
  for (std::size_t i = 0; i < d; ++i) out[i][i] = f.one();
  return out;
}

/// Decides projectivity of M over an algebra with structure constants by
/// asking whether a surjection pi: A^k -> M from module generators splits.
/// A homomorphism s: M -> A^k is fixed by f_j = s(m_j); it is well defined
/// iff sum_j f_j n_j = 0 for every (n_1..n_k) in ker pi, and pi s = id iff
/// pi(f_j) = m_j.
template <FieldScalar S>
bool splitting_projectivity_oracle(const ModuleRep<S>& M) {
  const auto& A = M.algebra();
  const auto& f = M.field();
  const std::size_t d = A.dim(), dm = M.dim();
  if (dm == 0) return true;
  const auto gens = module_generators(M, standard_basis<S>(dm, f));
  const std::size_t k = gens.size();

  std::vector<Matrix<S>> basis_action;  // rho(b_c)
  for (std::size_t c = 0; c < d; ++c) basis_action.push_back(M.word_matrix(A.structure().basis_words[c]));

  // pi: row (j, c) -> m_j rho(b_c)
  Matrix<S> pi(k * d, dm, f.zero());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t c = 0; c < d; ++c) pi.set_row(j * d + c, vec_mat(gens[j], basis_action[c], f.zero()));

  // ker pi as a submodule of the free module A^k; only its generators are needed.
  std::vector<Matrix<S>> free_action;
  for (const auto& R : A.structure().right) {
    auto F = Matrix<S>::zero(k * d, k * d, f);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) F(j * d + a, j * d + b) = R(a, b);
    free_action.push_back(std::move(F));
  }
  ModuleRep<S> free(M.algebra_ptr(), k * d, std::move(free_action));
  const auto kernel_gens = module_generators(free, left_kernel(pi, f));

  // unknown (j, i, c): coefficient of b_c in component i of f_j
  const std::size_t U = k * k * d;
  auto unknown = [&](std::size_t j, std::size_t i, std::size_t c) { return (j * k + i) * d + c; };
  std::vector<Vec<S>> columns;  // each equation is a column of the system x A = b
  Vec<S> rhs;
  for (const auto& n : kernel_gens) {
    std::vector<Matrix<S>> Rn;
    for (std::size_t j = 0; j < k; ++j) Rn.push_back(A.right_matrix(Vec<S>(n.begin() + j * d, n.begin() + (j + 1) * d)));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t e = 0; e < d; ++e) {
        Vec<S> col(U, f.zero());
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t c = 0; c < d; ++c) col[unknown(j, i, c)] = Rn[j](c, e);
        columns.push_back(std::move(col));
        rhs.push_back(f.zero());
      }
  }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t e = 0; e < dm; ++e) {
      Vec<S> col(U, f.zero());
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < d; ++c) col[unknown(j, i, c)] = pi(i * d + c, e);
      columns.push_back(std::move(col));
      rhs.push_back(gens[j][e]);
    }
  Matrix<S> system(U, columns.size(), f.zero());
  for (std::size_t e = 0; e < columns.size(); ++e)
    for (std::size_t u = 0; u < U; ++u) system(u, e) = columns[e][u];
  return solve_left(system, rhs, f).has_value();
}

/// Actions rho(T_w) of all basis elements of H_q(n) on a module given by
/// matrices for T_1 .. T_{n-1}.
template <FieldScalar S>
std::vector<Matrix<S>> hecke_basis_action(const ModuleRep<S>& M, const HeckePtr<S>& H) {
  if (M.algebra().num_generators() + 1 != static_cast<std::size_t>(H->degree()))
    throw std::invalid_argument("hecke_basis_action: module is not over H_q(" + std::to_string(H->degree()) + ")");
  std::vector<Matrix<S>> P(H->dimension());
  P[H->identity_index()] = Matrix<S>::identity(M.dim(), M.field());
  // Indices are not length-ordered; walk up the parent chain on demand.
  std::vector<char> done(H->dimension(), 0);
  done[H->identity_index()] = 1;
  for (BasisIndex w = 0; w < H->dimension(); ++w) {
    std::vector<BasisIndex> chain;
    for (BasisIndex x = w; !done[x]; x = H->parent(x)) chain.push_back(x);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      P[*it] = P[H->parent(*it)] * M.action(H->last_generator(*it) - 1);
      done[*it] = 1;
    }
  }
  return P;
}

/// Splitting oracle for modules over H_q(n) without the regular representation.
/// H_q(n) is symmetric with dual bases T_w and q^{-l(w)} T_{w^{-1}}, so every
/// homomorphism M -> H is m -> sum_w q^{-l(w)} lambda(m T_{w^{-1}}) T_w for a
/// linear form lambda.  The surjection H^k -> M, e_j -> m_j, splits iff the
/// identity is a combination of the resulting maps pi s.
template <FieldScalar S>
bool hecke_splitting_oracle(const ModuleRep<S>& M, const HeckePtr<S>& H) {
  const auto& f = M.field();
  const std::size_t dm = M.dim();
  if (dm == 0) return true;
  const auto P = hecke_basis_action(M, H);
  const auto gens = module_generators(M, standard_basis<S>(dm, f));
  const std::size_t k = gens.size();
  // unknown (j, c); equation (a, b): sum Q_{j,c}[a][b] x_{j,c} = delta_ab
  Matrix<S> system(k * dm, dm * dm, f.zero());
  for (BasisIndex w = 0; w < H->dimension(); ++w) {
    const S scale = H->q_power(-H->length(w));
    const auto& Pinv = P[H->inverse_index(w)];
    for (std::size_t j = 0; j < k; ++j) {
      const Vec<S> image = vec_mat(gens[j], P[w], f.zero());
      for (std::size_t c = 0; c < dm; ++c)
        for (std::size_t a = 0; a < dm; ++a) {
          if (Pinv(a, c).is_zero()) continue;
          const S t = scale * Pinv(a, c);
          for (std::size_t b = 0; b < dm; ++b)
            if (!image[b].is_zero()) system(j * dm + c, a * dm + b) += t * image[b];
        }
    }
  }
  Vec<S> rhs(dm * dm, f.zero());
  for (std::size_t a = 0; a < dm; ++a) rhs[a * dm + a] = f.one();
  return solve_left(system, rhs, f).has_value();
}

// ---------------------------------------------------------------------------
// Standard modules of tensor powers of the basic algebra

/// The right ideal e A^{(x) m} for e = eps_{r_1} (x) ... (x) eps_{r_m}.
template <FieldScalar S>
ModuleRep<S> idempotent_ideal(const AlgebraPtr<S>& B, const Vec<S>& e) {
  const auto& f = B->field();
  std::vector<Vec<S>> span;
  for (std::size_t k = 0; k < B->dim(); ++k) span.push_back(vec_mat(e, B->right_basis_matrix(k), f.zero()));
  return submodule(regular_module(B), span);
}

/// One-dimensional simple module at the vertex tuple: eps generators act by
/// 1 on their own vertex and 0 elsewhere; arrows act by 0.
template <FieldScalar S>
ModuleRep<S> vertex_simple(const AlgebraPtr<S>& B, const std::vector<int>& vertices) {
  const auto& f = B->field();
  std::vector<Matrix<S>> act;
  for (const auto& g : B->generators()) {
    const auto at = g.rfind('@');
    const std::size_t factor = at == std::string::npos ? 0 : std::stoul(g.substr(at + 1)) - 1;
    const std::string base = g.substr(0, at);
    auto m = Matrix<S>::zero(1, 1, f);
    if (base.rfind("eps_", 0) == 0 && std::stoi(base.substr(4)) == vertices.at(factor)) m(0, 0) = f.one();
    act.push_back(std::move(m));
  }
  return ModuleRep<S>(B, 1, std::move(act));
}

}  // namespace hecke
