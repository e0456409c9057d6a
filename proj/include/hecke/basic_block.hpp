#pragma once

// The basic algebra of the principal block of H_q(l), realized inside H_q(l) by idempotents eps_1
// .. eps_{l-1} and arrows alpha_r, beta_r. eps_r = c_r x_{[1,l-r]} y_{[l-r+1,l]} r odd eps_r = c_r
// y_{[1,r]} x_{[r+1,l]} r even with c_r chosen so that eps_r is idempotent. The quiver is the line
// 1 - 2 - ... - (l-1) with alpha_r : r -> r+1 and beta_r : r+1 -> r, and relations beta_i alpha_i =
// alpha_{i+1} beta_{i+1} (1 <= i <= l-3) alpha_1 beta_1 alpha_1 = 0 = beta_{l-2} alpha_{l-2}
// beta_{l-2} after rescaling beta_2, ..., beta_{l-2}. For l = 2 the algebra is H_q(2) = K[X]/(X^2)
// with X = T_1 + 1.

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hecke_algebra.hpp"
#include "linalg.hpp"
#include "permutation.hpp"
#include "report.hpp"

namespace hecke {

template <FieldScalar S>
Vec<S> to_dense(const HeckeElement<S>& h) {
  const auto& alg = h.algebra();
  Vec<S> v(alg.dimension(), alg.zero());
  for (const auto& [w, c] : h.terms()) v[w] = c;
  return v;
}

template <FieldScalar S>
HeckeElement<S> from_dense(const HeckePtr<S>& alg, const Vec<S>& v) {
  std::vector<typename HeckeElement<S>::Term> terms;
  for (std::size_t w = 0; w < v.size(); ++w)
    if (!v[w].is_zero()) terms.emplace_back(static_cast<BasisIndex>(w), v[w]);
  return HeckeElement<S>(alg, std::move(terms));
}

/// Rank of a family of Hecke elements.
template <FieldScalar S>
std::size_t span_dimension(const HeckePtr<S>& alg, const std::vector<HeckeElement<S>>& elems) {
  EchelonBasis<S> span(alg->dimension(), alg->field());
  for (const auto& h : elems)
    if (!h.is_zero()) span.add(to_dense(h));
  return span.dim();
}

/// Composition of [1,l] carried by eps_r: (l-r, r) for r odd, (r, l-r) for r even.
inline Composition idempotent_composition(int l, int r) {
  return r % 2 ? Composition({l - r, r}) : Composition({r, l - r});
}

/// x_{[1,a]} y_{[a+1,n]} (x-leading) or y_{[1,a]} x_{[a+1,n]} for lambda = (a, n-a).
template <FieldScalar S>
HeckeElement<S> two_part_element(const HeckePtr<S>& H, const Composition& lambda, bool x_leading) {
  require_two_parts(lambda, "two_part_element");
  const int a = lambda.parts()[0], n = lambda.size();
  const Interval first{1, a}, second{a + 1, n};
  return x_leading ? x_or_one(H, first) * y_or_one(H, second) : y_or_one(H, first) * x_or_one(H, second);
}

template <FieldScalar S>
struct NuFactorization {
  NuDecomposition nu;
  HeckeElement<S> zeta;        ///< eps_lambda = zeta * (product over the factors of U)
  HeckeElement<S> u_part;      ///< product of x/y over the factors of U
  HeckeElement<S> epsilon_nu;  ///< eps_lambda T_d = (zeta T_d) epsilon_nu
};

/// For two-part lambda = (r, s), mu = (u, v), d in D_{lambda,mu} and
/// eps_lambda = y_{[1,r]} x_{[r+1,n]} (or x/y swapped when x_leading):
///   epsilon_nu = y_{[1,t]} y_{[u+1,u+r-t]} x_{[t+1,u]} x_{[u+r-t+1,n]}.
template <FieldScalar S>
NuFactorization<S> epsilon_nu(const HeckePtr<S>& H, const Composition& lambda, const Composition& mu,
                              const Permutation& d, bool x_leading) {
  NuFactorization<S> out{nu_decomposition(lambda, mu, d), one(H), one(H), one(H)};
  const int n = H->degree(), r = lambda.parts()[0], u = mu.parts()[0], t = out.nu.t;
  // First half carries y (or x when x_leading), second half the other one.
  auto first = [&](const Interval& iv) { return x_leading ? x_or_one(H, iv) : y_or_one(H, iv); };
  auto second = [&](const Interval& iv) { return x_leading ? y_or_one(H, iv) : x_or_one(H, iv); };

  const Composition rho1({t, r - t}, 0);
  const Composition rho2({u - t, n - (u + r - t)}, r);
  const auto f1 = star(coset_factor(H, rho1, /*signed=*/!x_leading));
  const auto f2 = star(coset_factor(H, rho2, /*signed=*/x_leading));
  out.zeta = f1 * f2;
  out.u_part = first({1, t}) * first({t + 1, r}) * second({r + 1, u + r - t}) * second({u + r - t + 1, n});
  out.epsilon_nu = first({1, t}) * first({u + 1, u + r - t}) * second({t + 1, u}) * second({u + r - t + 1, n});
  return out;
}

template <FieldScalar S>
struct QuiverArrow {
  std::string name;
  int source = 0;
  int target = 0;
  Permutation representative;  ///< d with arrow = eps_src T_d eps_dst (before rescaling)
  HeckeElement<S> element;
};

template <FieldScalar S>
struct QuiverPresentation {
  int l = 0;
  FieldSpec field;
  std::vector<int> vertices;
  std::vector<HeckeElement<S>> vertex_elements;
  std::vector<QuiverArrow<S>> arrows;
  std::vector<std::string> relations;
  std::vector<std::string> zero_paths;  ///< paths vanishing because the end vertices are not adjacent
  std::vector<std::pair<int, S>> rescale;
  std::size_t dimension = 0;
};

template <FieldScalar S>
struct RadicalSocle {
  int vertex = 0;
  std::vector<std::string> radical_labels;
  std::vector<HeckeElement<S>> radical;
  std::string socle_label;
  HeckeElement<S> socle;
  std::size_t projective_dimension = 0;  ///< dim eps_r B
};

template <FieldScalar S>
class BlockConstruction {
 public:
  static BlockConstruction build(const FieldPtr<S>& field) { return BlockConstruction(field); }

  int l() const { return l_; }
  const HeckePtr<S>& algebra() const { return H_; }
  const FieldOf<S>& field() const { return H_->field(); }

  /// eps_r, 1 <= r <= l-1.
  const HeckeElement<S>& epsilon(int r) const { return eps_.at(r - 1); }
  /// The unnormalized product x..y.. or y..x.. behind eps_r.
  const HeckeElement<S>& raw_epsilon(int r) const { return raw_.at(r - 1); }
  /// c_r, obtained from z^2 = kappa z.
  const S& normalization(int r) const { return c_.at(r - 1); }
  /// kappa^{-1} from [a]_q! [b]_{q^{-1}}! for the x-part of size a and y-part of size b.
  S closed_form_normalization(int r) const {
    return (quantum_factorial(l_ - r, H_->q()) * quantum_factorial(r, H_->q_inverse())).inverse();
  }
  Composition composition(int r) const { return idempotent_composition(l_, r); }
  bool x_leading(int r) const { return r % 2 == 1; }

  const HeckeElement<S>& alpha(int r) const { return alpha_.at(r - 1); }
  /// beta_r after rescaling.
  const HeckeElement<S>& beta(int r) const { return beta_.at(r - 1); }
  const HeckeElement<S>& beta_unscaled(int r) const { return beta_raw_.at(r - 1); }
  const Permutation& alpha_representative(int r) const { return alpha_rep_.at(r - 1); }
  const Permutation& beta_representative(int r) const { return beta_rep_.at(r - 1); }
  /// a_r with beta_r = a_r * beta_unscaled(r); a_1 = 1.
  const S& rescale_factor(int r) const { return a_.at(r - 1); }

  /// X = T_1 + 1 for l = 2.
  const HeckeElement<S>& loop() const { return loop_; }

  /// dim eps_r H eps_u as the rank of { eps_r T_d eps_u : d in D_{lambda,mu} }.
  std::size_t hom_space_dim(int r, int u) const {
    std::vector<HeckeElement<S>> gens;
    for (const auto& d : double_coset_reps(composition(r), composition(u)))
      gens.push_back(epsilon(r) * t_basis(H_, d) * epsilon(u));
    return span_dimension(H_, gens);
  }

  /// Same space spanned by eps_r T_w eps_u over all w.
  std::size_t hom_space_dim_all(int r, int u) const {
    std::vector<HeckeElement<S>> gens;
    for (BasisIndex w = 0; w < H_->dimension(); ++w) gens.push_back(epsilon(r) * t_basis(H_, w) * epsilon(u));
    return span_dimension(H_, gens);
  }

  std::vector<std::vector<std::size_t>> dims_matrix() const {
    std::vector<std::vector<std::size_t>> m(l_ - 1, std::vector<std::size_t>(l_ - 1));
    for (int r = 1; r < l_; ++r)
      for (int u = 1; u < l_; ++u) m[r - 1][u - 1] = hom_space_dim(r, u);
    return m;
  }

  /// Double-coset representatives d with eps_r T_d eps_u != 0.
  std::vector<Permutation> nonvanishing_representatives(int r, int u) const {
    std::vector<Permutation> out;
    for (const auto& d : double_coset_reps(composition(r), composition(u)))
      if (!(epsilon(r) * t_basis(H_, d) * epsilon(u)).is_zero()) out.push_back(d);
    return out;
  }

  /// Labelled basis of B = eps H eps: vertices, arrows, the two-cycles
  /// alpha_r beta_r, and beta_{l-2} alpha_{l-2}.
  std::vector<std::pair<std::string, HeckeElement<S>>> algebra_basis() const {
    std::vector<std::pair<std::string, HeckeElement<S>>> out;
    if (l_ == 2) {
      out.emplace_back("eps_1", eps_[0]);
      out.emplace_back("X", loop_);
      return out;
    }
    for (int r = 1; r < l_; ++r) out.emplace_back(eps_name(r), epsilon(r));
    for (int r = 1; r <= l_ - 2; ++r) out.emplace_back(alpha_name(r), alpha(r));
    for (int r = 1; r <= l_ - 2; ++r) out.emplace_back(beta_name(r), beta(r));
    for (int r = 1; r <= l_ - 2; ++r) out.emplace_back(alpha_name(r) + "*" + beta_name(r), alpha(r) * beta(r));
    out.emplace_back(beta_name(l_ - 2) + "*" + alpha_name(l_ - 2), beta(l_ - 2) * alpha(l_ - 2));
    return out;
  }

  static std::string eps_name(int r) { return "eps_" + std::to_string(r); }
  static std::string alpha_name(int r) { return "alpha_" + std::to_string(r); }
  static std::string beta_name(int r) { return "beta_" + std::to_string(r); }

  /// Element named by a vertex or arrow label.
  HeckeElement<S> named(const std::string& name) const {
    auto index = [&](std::size_t prefix) { return std::stoi(name.substr(prefix)); };
    if (name == "X" && l_ == 2) return loop_;
    if (name.rfind("eps_", 0) == 0) return epsilon(index(4));
    if (name.rfind("alpha_", 0) == 0) return alpha(index(6));
    if (name.rfind("beta_", 0) == 0) return beta(index(5));
    throw std::invalid_argument("unknown quiver label: " + name);
  }

  /// Evaluates a formal combination such as "beta_1*alpha_1 - alpha_2*beta_2".
  HeckeElement<S> evaluate(const std::string& expr) const {
    std::istringstream in(expr);
    std::string tok;
    HeckeElement<S> acc = zero_element(H_);
    bool negative = false;
    while (in >> tok) {
      if (tok == "+" || tok == "-") {
        negative = tok == "-";
        continue;
      }
      HeckeElement<S> term = one(H_);
      std::size_t start = 0;
      while (start <= tok.size()) {
        const auto stop = tok.find('*', start);
        term = term * named(tok.substr(start, stop - start));
        if (stop == std::string::npos) break;
        start = stop + 1;
      }
      if (negative)
        acc -= term;
      else
        acc += term;
      negative = false;
    }
    return acc;
  }

  QuiverPresentation<S> presentation() const {
    QuiverPresentation<S> p;
    p.l = l_;
    p.field = field().spec();
    if (l_ == 2) {
      p.vertices = {1};
      p.vertex_elements = {eps_[0]};
      p.arrows.push_back({"X", 1, 1, Permutation::simple(2, 1), loop_});
      p.relations = relations();
      p.dimension = 2;
      return p;
    }
    for (int r = 1; r < l_; ++r) {
      p.vertices.push_back(r);
      p.vertex_elements.push_back(epsilon(r));
    }
    for (int r = 1; r <= l_ - 2; ++r) p.arrows.push_back({alpha_name(r), r, r + 1, alpha_representative(r), alpha(r)});
    for (int r = 1; r <= l_ - 2; ++r) p.arrows.push_back({beta_name(r), r + 1, r, beta_representative(r), beta(r)});
    p.relations = relations();
    p.zero_paths = zero_paths();
    for (int r = 2; r <= l_ - 2; ++r) p.rescale.emplace_back(r, rescale_factor(r));
    std::size_t dim = 0;
    for (const auto& row : dims_matrix())
      for (auto x : row) dim += x;
    p.dimension = dim;
    return p;
  }

  RadicalSocle<S> radical_socle_bases(int r) const {
    if (l_ < 3 || r < 1 || r >= l_) throw std::out_of_range("radical_socle_bases: vertex out of range");
    RadicalSocle<S> rs{r, {}, {}, {}, one(H_), 0};
    if (r <= l_ - 2) {
      rs.radical_labels.push_back(alpha_name(r));
      rs.radical.push_back(alpha(r));
    }
    if (r >= 2) {
      rs.radical_labels.push_back(beta_name(r - 1));
      rs.radical.push_back(beta(r - 1));
    }
    if (r <= l_ - 2) {
      rs.socle_label = alpha_name(r) + "*" + beta_name(r);
      rs.socle = alpha(r) * beta(r);
    } else {
      rs.socle_label = beta_name(l_ - 2) + "*" + alpha_name(l_ - 2);
      rs.socle = beta(l_ - 2) * alpha(l_ - 2);
    }
    rs.radical_labels.push_back(rs.socle_label);
    rs.radical.push_back(rs.socle);
    rs.projective_dimension = rs.radical.size() + 1;
    return rs;
  }

  /// Runs every structural check; failures are recorded, not thrown.
  Report verify_presentation() const {
    Report rep;
    if (l_ == 2) {
      rep.add("loop X = T_1 + 1 is non-zero", !loop_.is_zero());
      rep.add("X^2 = 0", (loop_ * loop_).is_zero());
      rep.add("dim B = 2", span_dimension(H_, {one(H_), loop_}) == 2);
      return rep;
    }
    const std::string L = "l=" + std::to_string(l_);
    auto fail_list = [](const std::vector<std::string>& bad) {
      std::string s;
      for (const auto& b : bad) s += (s.empty() ? "" : ", ") + b;
      return s;
    };

    {
      std::vector<std::string> bad;
      for (int r = 1; r < l_; ++r)
        for (int u = 1; u < l_; ++u) {
          const auto p = epsilon(r) * epsilon(u);
          if (r == u ? !(p == epsilon(r)) : !p.is_zero())
            bad.push_back(std::to_string(r) + "," + std::to_string(u));
        }
      rep.add("idempotents are orthogonal idempotents", bad.empty(), fail_list(bad));
    }
    {
      std::vector<std::string> bad, seen;
      for (int r = 1; r < l_; ++r) {
        seen.push_back("c_" + std::to_string(r) + "=" + normalization(r).str());
        if (!(normalization(r) == closed_form_normalization(r))) bad.push_back(std::to_string(r));
      }
      rep.add("normalization matches quantum factorial closed form", bad.empty(),
              bad.empty() ? fail_list(seen) : fail_list(bad));
    }
    {
      HeckeElement<S> sum = zero_element(H_);
      for (int r = 1; r < l_; ++r) sum += epsilon(r);
      rep.add("eps = sum of eps_r is idempotent", sum * sum == sum);
      if (l_ == 3) rep.add("eps_1 + eps_2 = 1", sum == one(H_));
    }

    const auto dims = dims_matrix();
    {
      bool ok = true;
      std::size_t total = 0;
      std::string text;
      for (int r = 1; r < l_; ++r) {
        text += r > 1 ? ";" : "";
        for (int u = 1; u < l_; ++u) {
          const int gap = r > u ? r - u : u - r;
          const std::size_t expect = gap == 0 ? 2 : gap == 1 ? 1 : 0;
          ok = ok && dims[r - 1][u - 1] == expect;
          total += dims[r - 1][u - 1];
          text += (u > 1 ? "," : "") + std::to_string(dims[r - 1][u - 1]);
        }
      }
      rep.add("dimension matrix has the 0/1/2 pattern", ok, "[" + text + "]");
      rep.add("dim B = 4(l-1)-2", total == static_cast<std::size_t>(4 * (l_ - 1) - 2),
              L + " dim=" + std::to_string(total));
      const auto basis = algebra_basis();
      std::vector<HeckeElement<S>> elems;
      for (const auto& [name, h] : basis) elems.push_back(h);
      rep.add("named basis of B is linearly independent", span_dimension(H_, elems) == basis.size(),
              "size=" + std::to_string(basis.size()));
    }

    {
      std::vector<std::string> bad;
      for (int r = 1; r <= l_ - 2; ++r) {
        const auto& a = alpha(r);
        const auto& b = beta(r);
        if (a.is_zero() || b.is_zero()) bad.push_back("zero arrow " + std::to_string(r));
        if (!(epsilon(r) * a == a) || !(a * epsilon(r + 1) == a)) bad.push_back(alpha_name(r));
        if (!(epsilon(r + 1) * b == b) || !(b * epsilon(r) == b)) bad.push_back(beta_name(r));
      }
      rep.add("arrows are non-zero and lie in eps_r H eps_{r+1}, eps_{r+1} H eps_r", bad.empty(), fail_list(bad));
    }
    {
      std::vector<std::string> bad;
      for (int r = 1; r <= l_ - 2; ++r) {
        const auto reps = nonvanishing_representatives(r, r + 1);
        if (reps.size() != 1 || reps.front() != alpha_representative(r)) bad.push_back(alpha_name(r));
        const auto breps = nonvanishing_representatives(r + 1, r);
        if (breps.size() != 1 || breps.front() != beta_representative(r)) bad.push_back(beta_name(r));
      }
      rep.add("arrow representative is the unique non-vanishing double coset", bad.empty(), fail_list(bad));
    }
    {
      std::vector<std::string> bad;
      for (int r = 1; r <= l_ - 3; ++r) {
        if (!(alpha(r) * alpha(r + 1)).is_zero()) bad.push_back(alpha_name(r) + "*" + alpha_name(r + 1));
        if (!(beta(r + 1) * beta(r)).is_zero()) bad.push_back(beta_name(r + 1) + "*" + beta_name(r));
      }
      rep.add("paths between non-adjacent vertices vanish", bad.empty(), fail_list(bad));
    }
    {
      std::vector<std::string> bad, values;
      for (int r = 1; r <= l_ - 2; ++r) {
        const auto ab = alpha(r) * beta(r);
        const auto ba = beta(r) * alpha(r);
        const S f = symmetrizing_form(ab, one(H_));
        values.push_back("f(" + alpha_name(r) + "*" + beta_name(r) + ",1)=" + f.str());
        if (ab.is_zero() || ba.is_zero() || f.is_zero()) bad.push_back(std::to_string(r));
      }
      rep.add("two-cycles are non-zero and f(alpha_r beta_r, 1) != 0", bad.empty(),
              bad.empty() ? fail_list(values) : fail_list(bad));
    }
    {
      std::vector<std::string> bad;
      for (int r = 1; r <= l_ - 2; ++r) {
        if (!(alpha(r) * beta(r) * alpha(r)).is_zero()) bad.push_back("aba_" + std::to_string(r));
        if (!(beta(r) * alpha(r) * beta(r)).is_zero()) bad.push_back("bab_" + std::to_string(r));
      }
      rep.add("alpha_r beta_r alpha_r = 0 = beta_r alpha_r beta_r", bad.empty(), fail_list(bad));
    }
    {
      std::vector<std::string> bad, scalars;
      for (int r = 2; r <= l_ - 2; ++r) {
        scalars.push_back("a_" + std::to_string(r) + "=" + rescale_factor(r).str());
        if (rescale_factor(r).is_zero()) bad.push_back("a_" + std::to_string(r) + "=0");
      }
      for (const auto& rel : relations())
        if (!evaluate(rel).is_zero()) bad.push_back(rel);
      rep.add("relations hold after rescaling", bad.empty(), bad.empty() ? fail_list(scalars) : fail_list(bad));
    }
    {
      const auto x = x_interval(H_, {1, l_});
      const bool ok = (x * alpha(1)).is_zero();
      rep.add("x_[1,l] alpha_1 = 0", ok);
      const bool basis_ok = epsilon(1) * x * epsilon(1) == x && (x * x).is_zero() &&
                            span_dimension(H_, {epsilon(1), x}) == 2 && hom_space_dim(1, 1) == 2 &&
                            scalar_ratio(alpha(1) * beta(1), x).has_value();
      rep.add("eps_1 H eps_1 has basis eps_1, x_[1,l] and is K[X]/(X^2)", basis_ok);
    }
    {
      std::vector<std::string> bad;
      std::size_t total = 0;
      for (int r = 1; r < l_; ++r) {
        const auto rs = radical_socle_bases(r);
        std::vector<HeckeElement<S>> all{epsilon(r)};
        for (const auto& h : rs.radical) all.push_back(h);
        std::size_t row = 0;
        for (int u = 1; u < l_; ++u) row += dims[r - 1][u - 1];
        total += rs.projective_dimension;
        const std::size_t expect = (r == 1 || r == l_ - 1) ? 3 : 4;
        if (span_dimension(H_, all) != rs.projective_dimension || row != rs.projective_dimension ||
            rs.projective_dimension != expect)
          bad.push_back("dim eps_" + std::to_string(r) + "B");
        if (rs.socle.is_zero()) bad.push_back("socle " + std::to_string(r));
        for (int j = 1; j <= l_ - 2; ++j)
          if (!(rs.socle * alpha(j)).is_zero() || !(rs.socle * beta(j)).is_zero())
            bad.push_back(rs.socle_label + " not killed by arrow " + std::to_string(j));
        for (const auto& h : rs.radical)
          for (const auto& g : rs.radical)
            if (!(h * g).is_zero() && !scalar_ratio(h * g, rs.socle).has_value())
              bad.push_back("radical product outside the socle at " + std::to_string(r));
      }
      if (total != static_cast<std::size_t>(4 * (l_ - 1) - 2)) bad.push_back("sum of dim eps_r B");
      rep.add("radical and socle bases of eps_r B", bad.empty(), fail_list(bad));
    }
    return rep;
  }

  /// Defining relations as formal path combinations.
  std::vector<std::string> relations() const {
    if (l_ == 2) return {"X*X"};
    std::vector<std::string> rel;
    for (int i = 1; i <= l_ - 3; ++i)
      rel.push_back(beta_name(i) + "*" + alpha_name(i) + " - " + alpha_name(i + 1) + "*" + beta_name(i + 1));
    rel.push_back(alpha_name(1) + "*" + beta_name(1) + "*" + alpha_name(1));
    rel.push_back(beta_name(l_ - 2) + "*" + alpha_name(l_ - 2) + "*" + beta_name(l_ - 2));
    return rel;
  }

  std::vector<std::string> zero_paths() const {
    std::vector<std::string> out;
    for (int r = 1; r <= l_ - 3; ++r) {
      out.push_back(alpha_name(r) + "*" + alpha_name(r + 1));
      out.push_back(beta_name(r + 1) + "*" + beta_name(r));
    }
    return out;
  }

 private:
  explicit BlockConstruction(const FieldPtr<S>& field)
      : l_(field->order()), H_(HeckeAlgebra<S>::create(field->order(), field)), loop_(H_) {
    if (l_ > kMaxDegree) throw std::invalid_argument("block construction: l too large");
    if (l_ == 2) {
      eps_ = {one(H_)};
      raw_ = {one(H_)};
      c_ = {H_->one_scalar()};
      loop_ = t_generator(H_, 1) + one(H_);
      return;
    }
    build_idempotents();
    build_arrows();
    rescale_betas();
  }

  void build_idempotents() {
    for (int r = 1; r < l_; ++r) {
      auto z = two_part_element(H_, composition(r), x_leading(r));
      auto kappa = scalar_ratio(z * z, z);
      if (!kappa || kappa->is_zero())
        throw std::logic_error("idempotent normalization: z^2 is not a non-zero multiple of z");
      c_.push_back(kappa->inverse());
      raw_.push_back(z);
      eps_.push_back(c_.back() * z);
    }
  }

  void build_arrows() {
    for (int r = 1; r <= l_ - 2; ++r) {
      Permutation d;  // eps_r T_d eps_{r+1} != 0
      if (r % 2 == 0) {
        const int s = l_ - r;
        d = matrix_to_perm(MarginMatrix(0, s - 1, r, 1), Composition({r, s}), Composition({s - 1, r + 1}));
      } else {
        const int e = r + 1, s = l_ - e;
        const Permutation dp =
            matrix_to_perm(MarginMatrix(1, s, e - 1, 0), Composition({e, s}), Composition({s + 1, e - 1}));
        d = dp.inverse();
      }
      alpha_rep_.push_back(d);
      beta_rep_.push_back(d.inverse());
      alpha_.push_back(epsilon(r) * t_basis(H_, d) * epsilon(r + 1));
      beta_raw_.push_back(epsilon(r + 1) * t_basis(H_, d.inverse()) * epsilon(r));
      if (alpha_.back().is_zero() || beta_raw_.back().is_zero())
        throw std::logic_error("arrow construction: chosen representative gives zero");
    }
  }

  void rescale_betas() {
    beta_ = beta_raw_;
    a_.assign(l_ - 2, H_->one_scalar());
    for (int r = 1; r <= l_ - 3; ++r) {
      const auto lhs = beta(r) * alpha(r);
      const auto rhs = alpha(r + 1) * beta_raw_[r];
      if (rhs.is_zero()) throw std::logic_error("rescaling: alpha_{r+1} beta_{r+1} vanishes");
      auto a = scalar_ratio(lhs, rhs);
      if (!a || a->is_zero()) throw std::logic_error("rescaling: two-cycles are not proportional");
      a_[r] = *a;
      beta_[r] = *a * beta_raw_[r];
    }
  }

  int l_;
  HeckePtr<S> H_;
  std::vector<HeckeElement<S>> eps_, raw_;
  std::vector<S> c_;
  std::vector<HeckeElement<S>> alpha_, beta_raw_, beta_;
  std::vector<Permutation> alpha_rep_, beta_rep_;
  std::vector<S> a_;
  HeckeElement<S> loop_;
};

}  // namespace hecke
