#pragma once

// Verification suites shared by the command-line tool and the acceptance checks: sigma and
// projectivity checks on the basic algebra, and the q-permutation module scenario over GF(4).

#include <optional>
#include <string>
#include <vector>

#include "algebra_rep.hpp"
#include "basic_block.hpp"
#include "finite_field.hpp"
#include "permutation_module.hpp"
#include "projectivity.hpp"
#include "report.hpp"

namespace hecke {

/// Jordan type of right multiplication by sigma on A and on each eps_r A.
template <FieldScalar S>
struct SigmaJordan {
  std::vector<int> on_algebra;
  std::vector<std::vector<int>> on_summand;  ///< index r-1
  std::vector<std::size_t> summand_dim;
  std::vector<bool> summand_invariant;
};

template <FieldScalar S>
SigmaJordan<S> sigma_jordan(const BasicAlgebra<S>& A, const Vec<S>& sigma, int l) {
  const auto& f = A.algebra->field();
  SigmaJordan<S> out;
  const auto N = A.algebra->right_matrix(sigma);
  out.on_algebra = jordan_type(N, 3, f);
  for (int r = 1; r < l; ++r) {
    const auto e = A.algebra->basis_vector(static_cast<std::size_t>(r - 1));
    std::vector<Vec<S>> span;
    for (std::size_t k = 0; k < A.algebra->dim(); ++k)
      span.push_back(A.algebra->multiply(e, A.algebra->basis_vector(k)));
    EchelonBasis<S> basis(A.algebra->dim(), f);
    for (const auto& v : span) basis.add(v);
    const auto& rows = basis.originals();
    bool invariant = true;
    for (const auto& v : rows) invariant = invariant && basis.contains(vec_mat(v, N, f.zero()));
    out.summand_invariant.push_back(invariant);
    out.summand_dim.push_back(rows.size());
    if (!invariant) {
      out.on_summand.emplace_back();
      continue;
    }
    CoordinateSystem<S> coords(rows, A.algebra->dim(), f);
    Matrix<S> restricted(rows.size(), rows.size(), f.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) restricted.set_row(i, *coords.coordinates(vec_mat(rows[i], N, f.zero())));
    out.on_summand.push_back(jordan_type(restricted, 3, f));
  }
  return out;
}

/// sigma, the freeness dichotomy over K[sigma], and the annihilator test
/// against the splitting oracle on projectives and simples of A^{(x) m}.
template <FieldScalar S>
Report verify_modrep(const BlockConstruction<S>& block) {
  Report rep;
  const int l = block.l();
  if (l < 3) return rep;
  const auto& f = block.field();
  const auto sd = build_sigma(block);
  rep.append(verify_sigma(block, sd));

  const auto A = basic_algebra(block);
  rep.add("basic algebra relations hold on its regular module", regular_module(A.algebra).relation_audit().empty());
  const auto sigma = A.coordinates(sd.sigma);
  const auto sigma2 = A.coordinates(sd.sigma_squared);
  if (!sigma || !sigma2) {
    rep.add("sigma lies in the basic algebra", false);
    return rep;
  }

  const auto jt = sigma_jordan(A, *sigma, l);
  std::string summands;
  bool all_invariant = true, all_free = true;
  for (int r = 1; r < l; ++r) {
    all_invariant = all_invariant && jt.summand_invariant[r - 1];
    all_free = all_free && all_equal_to(jt.on_summand[r - 1], 3);
    summands += (r > 1 ? " " : "") + std::string("dim eps_") + std::to_string(r) + "A=" +
                std::to_string(jt.summand_dim[r - 1]) + partition_str(jt.on_summand[r - 1]);
  }
  rep.add("each eps_r A is sigma-invariant", all_invariant, summands);
  const bool free = all_equal_to(jt.on_algebra, 3);
  rep.add("freeness of A over K[sigma] agrees with the summands", free == all_free, summands);
  const std::string witness = "jordan=" + partition_str(jt.on_algebra) + " " + summands;
  if (l == 3)
    rep.add("A is free over K[sigma]/(sigma^3): jordan type all threes", free, witness);
  else
    rep.add_expected_negative("A is not free over K[sigma]/(sigma^3) for l != 3", !free, witness);

  // Projectives e A^{(x) m} and one-dimensional simples.
  const std::vector<int> powers = l == 3 ? std::vector<int>{1, 2} : l == 4 ? std::vector<int>{1} : std::vector<int>{};
  for (int m : powers) {
    const auto B = tensor_power(A.algebra, m);
    std::vector<std::vector<int>> tuples{{}};
    for (int i = 0; i < m; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& t : tuples)
        for (int r = 1; r < l; ++r) {
          auto u = t;
          u.push_back(r);
          next.push_back(std::move(u));
        }
      tuples = std::move(next);
    }
    std::vector<std::string> disagree;
    std::size_t projective_ok = 0, simple_ok = 0;
    for (const auto& t : tuples) {
      std::vector<Vec<S>> parts;
      std::string name;
      for (int r : t) {
        parts.push_back(A.algebra->basis_vector(static_cast<std::size_t>(r - 1)));
        name += (name.empty() ? "" : ",") + std::to_string(r);
      }
      const auto P = idempotent_ideal(B, tensor_coordinates(parts, f));
      const bool ann_p = annihilator_test(P, A.algebra, *sigma2, m).nonzero;
      const bool orc_p = splitting_projectivity_oracle(P);
      if (ann_p && orc_p && P.relation_audit().empty()) ++projective_ok;
      else disagree.push_back("P(" + name + ")");
      const auto Sm = vertex_simple(B, t);
      const bool ann_s = annihilator_test(Sm, A.algebra, *sigma2, m).nonzero;
      const bool orc_s = splitting_projectivity_oracle(Sm);
      if (!ann_s && !orc_s && Sm.relation_audit().empty()) ++simple_ok;
      else disagree.push_back("S(" + name + ")");
    }
    std::string w = "m=" + std::to_string(m) + " dim=" + std::to_string(B->dim()) +
                    " projectives=" + std::to_string(projective_ok) + "/" + std::to_string(tuples.size()) +
                    " simples=" + std::to_string(simple_ok) + "/" + std::to_string(tuples.size());
    for (const auto& d : disagree) w += " " + d;
    rep.add("annihilator test agrees with splitting oracle on A^(x)" + std::to_string(m), disagree.empty(), w);
  }
  return rep;
}

/// Facts about the q-permutation module x_(3,3) H_q(6) over GF(4), l = 3.
struct PermModDemo {
  Report report;
  std::size_t dim_m = 0;
  std::size_t embeddings = 0;
  std::size_t quotients = 0;
  bool composite_zero = false;
  std::size_t dim_v = 0;
  std::size_t annihilator_rank = 0;
  bool projective_over_parabolic_annihilator = false;
  bool projective_over_parabolic_oracle = false;
  std::size_t trivial_summands_restricted = 0;
  std::optional<bool> projective_over_h;  ///< only with the slow oracle
};

inline PermModDemo run_permmod_demo(bool slow) {
  using S = GaloisElement;
  PermModDemo out;
  auto& rep = out.report;
  const auto F = GaloisField::create(2, 2, 3);
  const Composition rho({3, 3}, 0);

  const auto H = HeckeAlgebra<S>::create(6, F);
  const auto presentation = hecke_algebra_by_generators(H, false);
  const auto pm = permutation_module(H, rho, presentation);
  const auto& M = pm.module;
  out.dim_m = M.dim();
  rep.add("dim M^(3,3) = 20", out.dim_m == 20, "dim=" + std::to_string(out.dim_m));
  rep.add("H_q(6) relations hold on M^(3,3)", M.relation_audit().empty());

  const auto homs = trivial_hom_spaces(M);
  out.embeddings = homs.embeddings.size();
  out.quotients = homs.quotients.size();
  rep.add("Hom(K, M) and Hom(M, K) are one-dimensional", out.embeddings == 1 && out.quotients == 1,
          "embeddings=" + std::to_string(out.embeddings) + " quotients=" + std::to_string(out.quotients));
  if (out.embeddings != 1 || out.quotients != 1) return out;
  const auto& v = homs.embeddings[0];
  const auto& lambda = homs.quotients[0];
  out.composite_zero = compose_hom(v, lambda, *F).is_zero();
  rep.add("psi o phi = 0", out.composite_zero);
  if (!out.composite_zero) return out;

  const auto V = subquotient(M, {v}, form_kernel(lambda, *F));
  out.dim_v = V.dim();
  rep.add("dim V = 18", out.dim_v == 18, "dim=" + std::to_string(out.dim_v));

  // l = 3: the basic algebra of H_q(3) is H_q(3) itself.
  const auto block = BlockConstruction<S>::build(F);
  rep.add("eps_1 + eps_2 = 1 in H_q(3)", block.epsilon(1) + block.epsilon(2) == one(block.algebra()));
  const auto sd = build_sigma(block);
  const auto H3 = hecke_algebra_by_generators(block.algebra(), true);
  const auto Hrho = tensor_power(H3, 2);
  const auto Vr = restrict_module(V, rho, Hrho);
  rep.add("H_q(3)(x)H_q(3) relations hold on V", Vr.relation_audit().empty());
  const auto ann = annihilator_test(Vr, H3, to_dense(sd.sigma_squared), 2);
  out.annihilator_rank = ann.rank;
  out.projective_over_parabolic_annihilator = ann.nonzero;
  out.projective_over_parabolic_oracle = splitting_projectivity_oracle(Vr);
  rep.add("V (sigma_1 sigma_2)^2 != 0", ann.nonzero, "rank=" + std::to_string(ann.rank));
  rep.add("V is projective over H_rho by the splitting oracle", out.projective_over_parabolic_oracle);

  const auto Mr = restrict_module(M, rho, Hrho);
  const auto restricted_homs = trivial_hom_spaces(Mr);
  out.trivial_summands_restricted = trivial_summand_multiplicity(restricted_homs, *F);
  rep.add("M^(3,3) restricted to H_rho has exactly two trivial direct summands", out.trivial_summands_restricted == 2,
          "multiplicity=" + std::to_string(out.trivial_summands_restricted) +
              " trivial submodules=" + std::to_string(restricted_homs.embeddings.size()));

  if (slow) {
    out.projective_over_h = hecke_splitting_oracle(V, H);
    rep.add("V is not projective over H_q(6) by the splitting oracle", !*out.projective_over_h);
  }
  return out;
}

}  // namespace hecke
