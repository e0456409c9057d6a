#pragma once

// Algebras given by generators and relations, their tensor products, and finite-dimensional right
// modules given by action matrices. An algebra with structure carries a basis b_0 .. b_{d-1}, each
// a word in the generators (the empty word is the unit), and the right and left multiplication
// matrices of the generators in that basis. Without structure it is just a presentation, which is
// enough to audit modules.

#include <algorithm>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "basic_block.hpp"
#include "hecke_algebra.hpp"
#include "linalg.hpp"

namespace hecke {

/// sum of coefficient * (product of generators along word).
template <FieldScalar S>
struct WordCombination {
  std::string name;
  std::vector<std::pair<S, std::vector<int>>> terms;
};

template <FieldScalar S>
class AlgebraByGenerators {
 public:
  struct Structure {
    std::size_t dim = 0;
    std::vector<std::vector<int>> basis_words;
    std::vector<Matrix<S>> right;  ///< coordinates of b_k g, row k
    std::vector<Matrix<S>> left;   ///< coordinates of g b_k, row k
    Vec<S> unit;
  };

  AlgebraByGenerators(std::string label, FieldPtr<S> field, std::vector<std::string> generators,
                      std::vector<WordCombination<S>> relations, std::optional<Structure> structure = std::nullopt)
      : label_(std::move(label)),
        field_(std::move(field)),
        generators_(std::move(generators)),
        relations_(std::move(relations)),
        structure_(std::move(structure)) {
    if (structure_) validate_structure();
  }

  const std::string& label() const { return label_; }
  const FieldOf<S>& field() const { return *field_; }
  const FieldPtr<S>& field_ptr() const { return field_; }
  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<WordCombination<S>>& relations() const { return relations_; }

  int generator_index(const std::string& name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) throw std::invalid_argument("algebra " + label_ + ": unknown generator " + name);
    return static_cast<int>(it - generators_.begin());
  }

  bool has_structure() const { return structure_.has_value(); }
  const Structure& structure() const {
    if (!structure_) throw std::logic_error("algebra " + label_ + " has no structure constants");
    return *structure_;
  }
  std::size_t dim() const { return structure().dim; }

  /// Right multiplication by the basis element b_k on the regular module.
  Matrix<S> right_basis_matrix(std::size_t k) const {
    const auto& st = structure();
    auto m = Matrix<S>::identity(st.dim, *field_);
    for (int g : st.basis_words[k]) m = m * st.right[g];
    return m;
  }

  /// Right multiplication by an element given in coordinates.
  Matrix<S> right_matrix(const Vec<S>& x) const {
    const auto& st = structure();
    auto m = Matrix<S>::zero(st.dim, st.dim, *field_);
    for (std::size_t k = 0; k < st.dim; ++k)
      if (!x[k].is_zero()) m += x[k] * right_basis_matrix(k);
    return m;
  }

  /// Product x * y in coordinates.
  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const { return vec_mat(x, right_matrix(y), field_->zero()); }

  Vec<S> basis_vector(std::size_t k) const {
    Vec<S> v(dim(), field_->zero());
    v[k] = field_->one();
    return v;
  }

 private:
  void validate_structure() const {
    const auto& st = *structure_;
    if (st.right.size() != generators_.size() || st.left.size() != generators_.size() ||
        st.basis_words.size() != st.dim || st.unit.size() != st.dim)
      throw std::invalid_argument("algebra " + label_ + ": inconsistent structure sizes");
    // Each basis word applied to the unit must give the matching basis vector.
    for (std::size_t k = 0; k < st.dim; ++k) {
      Vec<S> v = st.unit;
      for (int g : st.basis_words[k]) v = vec_mat(v, st.right[g], field_->zero());
      Vec<S> e(st.dim, field_->zero());
      e[k] = field_->one();
      if (v != e) throw std::invalid_argument("algebra " + label_ + ": basis word does not reproduce basis vector");
    }
    // Left and right multiplications commute (associativity on generators).
    for (std::size_t a = 0; a < generators_.size(); ++a)
      for (std::size_t b = 0; b < generators_.size(); ++b)
        if (!(st.left[a] * st.right[b] == st.right[b] * st.left[a]))
          throw std::invalid_argument("algebra " + label_ + ": left and right actions do not commute");
  }

  std::string label_;
  FieldPtr<S> field_;
  std::vector<std::string> generators_;
  std::vector<WordCombination<S>> relations_;
  std::optional<Structure> structure_;
};

template <FieldScalar S>
using AlgebraPtr = std::shared_ptr<const AlgebraByGenerators<S>>;

/// Finite-dimensional right module: row vectors, generator g acts by x -> x * action[g].
template <FieldScalar S>
class ModuleRep {
 public:
  ModuleRep(AlgebraPtr<S> alg, std::size_t dim, std::vector<Matrix<S>> action)
      : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
    if (action_.size() != alg_->num_generators()) throw std::invalid_argument("module: wrong number of matrices");
    for (const auto& m : action_)
      if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("module: action matrix of wrong size");
  }

  const AlgebraByGenerators<S>& algebra() const { return *alg_; }
  const AlgebraPtr<S>& algebra_ptr() const { return alg_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<S>>& action() const { return action_; }
  const Matrix<S>& action(int g) const { return action_.at(g); }
  const Matrix<S>& action(const std::string& g) const { return action_.at(alg_->generator_index(g)); }
  const FieldOf<S>& field() const { return alg_->field(); }

  Matrix<S> word_matrix(const std::vector<int>& word) const {
    auto m = Matrix<S>::identity(dim_, field());
    for (int g : word) m = m * action_.at(g);
    return m;
  }

  Matrix<S> combination_matrix(const WordCombination<S>& c) const {
    auto m = Matrix<S>::zero(dim_, dim_, field());
    for (const auto& [coef, word] : c.terms) m += coef * word_matrix(word);
    return m;
  }

  /// Action of an algebra element given in basis coordinates.
  Matrix<S> element_matrix(const Vec<S>& x) const {
    const auto& st = alg_->structure();
    auto m = Matrix<S>::zero(dim_, dim_, field());
    for (std::size_t k = 0; k < st.dim; ++k)
      if (!x[k].is_zero()) m += x[k] * word_matrix(st.basis_words[k]);
    return m;
  }

  /// Names of defining relations that fail on the action matrices.
  std::vector<std::string> relation_audit() const {
    std::vector<std::string> bad;
    for (const auto& rel : alg_->relations())
      if (!combination_matrix(rel).is_zero()) bad.push_back(rel.name);
    if (alg_->has_structure() && !(element_matrix(alg_->structure().unit) == Matrix<S>::identity(dim_, field())))
      bad.push_back("unit");
    return bad;
  }

 private:
  AlgebraPtr<S> alg_;
  std::size_t dim_;
  std::vector<Matrix<S>> action_;
};

// ---------------------------------------------------------------------------
// Constructions

/// Regular right module of an algebra with structure.
template <FieldScalar S>
ModuleRep<S> regular_module(const AlgebraPtr<S>& A) {
  return ModuleRep<S>(A, A->dim(), A->structure().right);
}

/// Tensor product A (x) B with generators "g@1", "h@2" (existing suffixes are
/// shifted so that iterated products number the factors consecutively).
template <FieldScalar S>
AlgebraPtr<S> tensor_product(const AlgebraPtr<S>& A, const AlgebraPtr<S>& B, std::size_t max_dim = 10000) {
  const auto& f = A->field();
  auto factors = [](const AlgebraByGenerators<S>& X) {
    int m = 1;
    for (const auto& g : X.generators()) {
      auto at = g.rfind('@');
      if (at != std::string::npos) m = std::max(m, std::stoi(g.substr(at + 1)));
    }
    return m;
  };
  auto relabel = [](const std::string& g, int shift) {
    auto at = g.rfind('@');
    if (at == std::string::npos) return g + "@" + std::to_string(shift + 1);
    return g.substr(0, at) + "@" + std::to_string(std::stoi(g.substr(at + 1)) + shift);
  };
  const int ma = factors(*A), mb = factors(*B);
  const bool a_plain = std::none_of(A->generators().begin(), A->generators().end(),
                                    [](const std::string& g) { return g.find('@') != std::string::npos; });
  const int na = static_cast<int>(A->num_generators());

  std::vector<std::string> gens;
  for (const auto& g : A->generators()) gens.push_back(a_plain ? g + "@1" : g);
  for (const auto& g : B->generators()) gens.push_back(relabel(g, a_plain ? 1 : ma));
  (void)mb;

  std::vector<WordCombination<S>> rels;
  for (const auto& r : A->relations()) rels.push_back({r.name + "@left", r.terms});
  for (const auto& r : B->relations()) {
    WordCombination<S> c{r.name + "@right", {}};
    for (const auto& [coef, word] : r.terms) {
      std::vector<int> w;
      for (int g : word) w.push_back(g + na);
      c.terms.emplace_back(coef, std::move(w));
    }
    rels.push_back(std::move(c));
  }
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < static_cast<int>(B->num_generators()); ++b)
      rels.push_back({"[" + gens[a] + "," + gens[na + b] + "]", {{f.one(), {a, na + b}}, {-f.one(), {na + b, a}}}});

  std::optional<typename AlgebraByGenerators<S>::Structure> st;
  if (A->has_structure() && B->has_structure()) {
    const auto& sa = A->structure();
    const auto& sb = B->structure();
    if (sa.dim * sb.dim > max_dim) throw std::invalid_argument("tensor product: dimension exceeds guard");
    typename AlgebraByGenerators<S>::Structure s;
    s.dim = sa.dim * sb.dim;
    const auto Ia = Matrix<S>::identity(sa.dim, f), Ib = Matrix<S>::identity(sb.dim, f);
    for (const auto& m : sa.right) s.right.push_back(kronecker(m, Ib, f.zero()));
    for (const auto& m : sb.right) s.right.push_back(kronecker(Ia, m, f.zero()));
    for (const auto& m : sa.left) s.left.push_back(kronecker(m, Ib, f.zero()));
    for (const auto& m : sb.left) s.left.push_back(kronecker(Ia, m, f.zero()));
    for (std::size_t i = 0; i < sa.dim; ++i)
      for (std::size_t j = 0; j < sb.dim; ++j) {
        std::vector<int> w = sa.basis_words[i];
        for (int g : sb.basis_words[j]) w.push_back(g + na);
        s.basis_words.push_back(std::move(w));
      }
    s.unit = Vec<S>(s.dim, f.zero());
    for (std::size_t i = 0; i < sa.dim; ++i)
      for (std::size_t j = 0; j < sb.dim; ++j) s.unit[i * sb.dim + j] = sa.unit[i] * sb.unit[j];
    st = std::move(s);
  }
  return std::make_shared<const AlgebraByGenerators<S>>("(" + A->label() + ")(x)(" + B->label() + ")",
                                                       A->field_ptr(), std::move(gens), std::move(rels),
                                                       std::move(st));
}

/// A^{(x) m}; m = 1 returns A itself.
template <FieldScalar S>
AlgebraPtr<S> tensor_power(const AlgebraPtr<S>& A, int m, std::size_t max_dim = 10000) {
  if (m < 1) throw std::invalid_argument("tensor_power: m must be positive");
  if (A->has_structure()) {
    std::size_t d = 1;
    for (int i = 0; i < m; ++i) {
      d *= A->dim();
      if (d > max_dim) throw std::invalid_argument("tensor_power: dimension exceeds guard");
    }
  }
  AlgebraPtr<S> out = A;
  for (int i = 1; i < m; ++i) out = tensor_product(out, A, max_dim);
  return out;
}

/// Coordinates of x_1 (x) ... (x) x_m in A^{(x) m}.
template <FieldScalar S>
Vec<S> tensor_coordinates(const std::vector<Vec<S>>& parts, const FieldOf<S>& f) {
  Vec<S> acc{f.one()};
  for (const auto& p : parts) {
    Vec<S> next(acc.size() * p.size(), f.zero());
    for (std::size_t i = 0; i < acc.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) next[i * p.size() + j] = acc[i] * p[j];
    acc = std::move(next);
  }
  return acc;
}

/// Defining relations of H_q(n) on generators T1 .. T_{n-1}.
template <FieldScalar S>
std::vector<WordCombination<S>> hecke_relations(int n, const FieldOf<S>& f) {
  std::vector<WordCombination<S>> rels;
  const S q = f.q(), one = f.one();
  for (int i = 0; i + 1 < n; ++i) {
    const auto T = "T" + std::to_string(i + 1);
    rels.push_back({"quadratic " + T, {{one, {i, i}}, {one - q, {i}}, {-q, {}}}});
  }
  for (int i = 0; i + 2 < n; ++i)
    rels.push_back({"braid T" + std::to_string(i + 1), {{one, {i, i + 1, i}}, {-one, {i + 1, i, i + 1}}}});
  for (int i = 0; i + 1 < n; ++i)
    for (int j = i + 2; j + 1 < n; ++j)
      rels.push_back({"commute T" + std::to_string(i + 1) + " T" + std::to_string(j + 1), {{one, {i, j}}, {-one, {j, i}}}});
  return rels;
}

/// H_q(n) with generators T1 .. T_{n-1}; with structure the basis is T_w in
/// lexicographic order with reduced words.
template <FieldScalar S>
AlgebraPtr<S> hecke_algebra_by_generators(const HeckePtr<S>& H, bool with_structure) {
  const int n = H->degree();
  const auto& f = H->field();
  std::vector<std::string> gens;
  for (int i = 1; i < n; ++i) gens.push_back("T" + std::to_string(i));
  std::optional<typename AlgebraByGenerators<S>::Structure> st;
  if (with_structure) {
    typename AlgebraByGenerators<S>::Structure s;
    s.dim = H->dimension();
    for (BasisIndex w = 0; w < s.dim; ++w) {
      auto word = reduced_word(H->permutation(w));
      for (auto& g : word) g -= 1;
      s.basis_words.push_back(std::move(word));
    }
    for (int i = 1; i < n; ++i) {
      auto R = Matrix<S>::zero(s.dim, s.dim, f), L = R;
      const auto Ti = t_generator(H, i);
      for (BasisIndex w = 0; w < s.dim; ++w) {
        const auto right = mult_by_generator(t_basis(H, w), i);
        const auto left = Ti * t_basis(H, w);
        for (const auto& [v, c] : right.terms()) R(w, v) = c;
        for (const auto& [v, c] : left.terms()) L(w, v) = c;
      }
      s.right.push_back(std::move(R));
      s.left.push_back(std::move(L));
    }
    s.unit = Vec<S>(s.dim, f.zero());
    s.unit[H->identity_index()] = f.one();
    st = std::move(s);
  }
  return std::make_shared<const AlgebraByGenerators<S>>("H_q(" + std::to_string(n) + ")", H->field_ptr(),
                                                       std::move(gens), hecke_relations<S>(n, f), std::move(st));
}

/// Coordinates of a Hecke element in the structure basis of hecke_algebra_by_generators.
template <FieldScalar S>
Vec<S> hecke_coordinates(const HeckeElement<S>& h) {
  return to_dense(h);
}

/// The basic algebra B = eps H eps as an algebra by generators, with
/// generators eps_r, alpha_r, beta_r and the labelled basis of the block.
template <FieldScalar S>
struct BasicAlgebra {
  AlgebraPtr<S> algebra;
  std::vector<std::string> basis_labels;
  std::vector<HeckeElement<S>> basis_elements;

  /// Coordinates of a Hecke element lying in B.
  std::optional<Vec<S>> coordinates(const HeckeElement<S>& h) const {
    return coords->coordinates(to_dense(h));
  }
  std::shared_ptr<const CoordinateSystem<S>> coords;
};

template <FieldScalar S>
BasicAlgebra<S> basic_algebra(const BlockConstruction<S>& block) {
  const int l = block.l();
  const auto& H = block.algebra();
  const auto& f = block.field();
  if (l < 3) throw std::invalid_argument("basic_algebra: requires l >= 3");
  const auto basis = block.algebra_basis();

  BasicAlgebra<S> out;
  std::vector<Vec<S>> dense;
  for (const auto& [name, h] : basis) {
    out.basis_labels.push_back(name);
    out.basis_elements.push_back(h);
    dense.push_back(to_dense(h));
  }
  out.coords = std::make_shared<const CoordinateSystem<S>>(dense, H->dimension(), f);

  std::vector<std::string> gens;
  std::vector<HeckeElement<S>> gen_elems;
  for (int r = 1; r < l; ++r) {
    gens.push_back(block.eps_name(r));
    gen_elems.push_back(block.epsilon(r));
  }
  for (int r = 1; r <= l - 2; ++r) {
    gens.push_back(block.alpha_name(r));
    gen_elems.push_back(block.alpha(r));
  }
  for (int r = 1; r <= l - 2; ++r) {
    gens.push_back(block.beta_name(r));
    gen_elems.push_back(block.beta(r));
  }

  typename AlgebraByGenerators<S>::Structure st;
  st.dim = basis.size();
  for (std::size_t g = 0; g < gen_elems.size(); ++g) {
    auto R = Matrix<S>::zero(st.dim, st.dim, f), L = R;
    for (std::size_t k = 0; k < st.dim; ++k) {
      auto rc = out.coords->coordinates(to_dense(basis[k].second * gen_elems[g]));
      auto lc = out.coords->coordinates(to_dense(gen_elems[g] * basis[k].second));
      if (!rc || !lc) throw std::logic_error("basic_algebra: products leave the span of the basis");
      R.set_row(k, *rc);
      L.set_row(k, *lc);
    }
    st.right.push_back(std::move(R));
    st.left.push_back(std::move(L));
  }
  auto gen_index = [&](const std::string& name) {
    return static_cast<int>(std::find(gens.begin(), gens.end(), name) - gens.begin());
  };
  for (const auto& label : out.basis_labels) {
    std::vector<int> word;
    std::size_t start = 0;
    while (true) {
      const auto stop = label.find('*', start);
      word.push_back(gen_index(label.substr(start, stop - start)));
      if (stop == std::string::npos) break;
      start = stop + 1;
    }
    st.basis_words.push_back(std::move(word));
  }
  st.unit = Vec<S>(st.dim, f.zero());
  for (int r = 1; r < l; ++r) st.unit[r - 1] = f.one();

  // Relations: orthogonal idempotents, arrows absorbing their end idempotents, quiver relations.
  std::vector<WordCombination<S>> rels;
  const S one = f.one();
  for (int r = 1; r < l; ++r)
    for (int u = 1; u < l; ++u) {
      WordCombination<S> c{"eps_" + std::to_string(r) + "*eps_" + std::to_string(u), {{one, {r - 1, u - 1}}}};
      if (r == u) c.terms.push_back({-one, {r - 1}});
      rels.push_back(std::move(c));
    }
  for (int r = 1; r <= l - 2; ++r) {
    const int a = gen_index(block.alpha_name(r)), b = gen_index(block.beta_name(r));
    rels.push_back({"eps_r*alpha_r " + std::to_string(r), {{one, {r - 1, a}}, {-one, {a}}}});
    rels.push_back({"alpha_r*eps_r+1 " + std::to_string(r), {{one, {a, r}}, {-one, {a}}}});
    rels.push_back({"eps_r+1*beta_r " + std::to_string(r), {{one, {r, b}}, {-one, {b}}}});
    rels.push_back({"beta_r*eps_r " + std::to_string(r), {{one, {b, r - 1}}, {-one, {b}}}});
  }
  auto parse_path_combination = [&](const std::string& expr) {
    WordCombination<S> c{expr, {}};
    std::istringstream in(expr);
    std::string tok;
    bool negative = false;
    while (in >> tok) {
      if (tok == "+" || tok == "-") {
        negative = tok == "-";
        continue;
      }
      std::vector<int> word;
      std::size_t start = 0;
      while (true) {
        const auto stop = tok.find('*', start);
        word.push_back(gen_index(tok.substr(start, stop - start)));
        if (stop == std::string::npos) break;
        start = stop + 1;
      }
      c.terms.emplace_back(negative ? -one : one, std::move(word));
      negative = false;
    }
    return c;
  };
  for (const auto& rel : block.relations()) rels.push_back(parse_path_combination(rel));
  for (const auto& zp : block.zero_paths()) rels.push_back(parse_path_combination(zp));

  out.algebra = std::make_shared<const AlgebraByGenerators<S>>("B(l=" + std::to_string(l) + ")", H->field_ptr(),
                                                              std::move(gens), std::move(rels), std::move(st));
  return out;
}

// ---------------------------------------------------------------------------
// Submodules, quotients, restriction

/// Smallest submodule containing the given vectors (echelon basis of its span).
template <FieldScalar S>
EchelonBasis<S> submodule_closure(const ModuleRep<S>& M, const std::vector<Vec<S>>& seeds) {
  const auto& f = M.field();
  EchelonBasis<S> span(M.dim(), f);
  std::vector<Vec<S>> queue;
  for (const auto& v : seeds)
    if (span.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec<S> v = std::move(queue.back());
    queue.pop_back();
    for (const auto& A : M.action()) {
      Vec<S> w = vec_mat(v, A, f.zero());
      if (span.add(w)) queue.push_back(std::move(w));
    }
  }
  return span;
}

/// True iff the row span of `basis` is invariant under every generator.
template <FieldScalar S>
bool is_invariant(const ModuleRep<S>& M, const std::vector<Vec<S>>& basis) {
  EchelonBasis<S> span(M.dim(), M.field());
  for (const auto& v : basis) span.add(v);
  for (const auto& v : basis)
    for (const auto& A : M.action())
      if (!span.contains(vec_mat(v, A, M.field().zero()))) return false;
  return true;
}

/// sub2 / sub1 for invariant subspaces sub1 <= sub2 (given by spanning rows).
/// The quotient basis completes sub1 inside sub2 with vectors of sub2 in order.
template <FieldScalar S>
ModuleRep<S> subquotient(const ModuleRep<S>& M, const std::vector<Vec<S>>& sub1, const std::vector<Vec<S>>& sub2) {
  const auto& f = M.field();
  if (!is_invariant(M, sub1) || !is_invariant(M, sub2))
    throw std::invalid_argument("subquotient: subspace is not invariant");
  EchelonBasis<S> lower(M.dim(), f);
  for (const auto& v : sub1) lower.add(v);
  EchelonBasis<S> upper(M.dim(), f);
  for (const auto& v : sub2) upper.add(v);
  for (const auto& v : sub1)
    if (!upper.contains(v)) throw std::invalid_argument("subquotient: sub1 is not contained in sub2");

  std::vector<Vec<S>> full;
  for (const auto& v : lower.originals()) full.push_back(v);
  const std::size_t k1 = full.size();
  EchelonBasis<S> grow = lower;
  for (const auto& v : upper.originals())
    if (grow.add(v)) full.push_back(v);
  const std::size_t k = full.size() - k1;
  CoordinateSystem<S> coords(full, M.dim(), f);

  std::vector<Matrix<S>> act;
  for (const auto& A : M.action()) {
    auto Q = Matrix<S>::zero(k, k, f);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = coords.coordinates(vec_mat(full[k1 + i], A, f.zero()));
      if (!c) throw std::logic_error("subquotient: image left the subspace");
      for (std::size_t j = 0; j < k; ++j) Q(i, j) = (*c)[k1 + j];
    }
    act.push_back(std::move(Q));
  }
  return ModuleRep<S>(M.algebra_ptr(), k, std::move(act));
}

template <FieldScalar S>
ModuleRep<S> submodule(const ModuleRep<S>& M, const std::vector<Vec<S>>& basis) {
  return subquotient(M, {}, basis);
}

/// Restriction of an H_q(n)-module to H_rho, re-labelled onto `target`.
/// The generator T_i with s_i in the j-th non-trivial block (starting at a)
/// becomes "T{i-a+1}@j", or "T{i-a+1}" when rho has a single non-trivial block.
template <FieldScalar S>
ModuleRep<S> restrict_module(const ModuleRep<S>& M, const Composition& rho, const AlgebraPtr<S>& target) {
  std::vector<std::pair<std::string, int>> names;  // target label -> source generator index
  const auto blocks = rho.support();
  int nontrivial = 0;
  for (const auto& iv : blocks) nontrivial += iv.size() > 1 ? 1 : 0;
  int j = 0;
  for (const auto& iv : blocks) {
    if (iv.size() <= 1) continue;
    ++j;
    for (int i = iv.lo; i < iv.hi; ++i) {
      std::string label = "T" + std::to_string(i - iv.lo + 1);
      if (nontrivial > 1) label += "@" + std::to_string(j);
      names.emplace_back(label, M.algebra().generator_index("T" + std::to_string(i)));
    }
  }
  if (names.size() != target->num_generators()) throw std::invalid_argument("restrict: generator count mismatch");
  std::vector<Matrix<S>> act(target->num_generators());
  for (const auto& [label, src] : names) act[target->generator_index(label)] = M.action(src);
  return ModuleRep<S>(target, M.dim(), std::move(act));
}

}  // namespace hecke
