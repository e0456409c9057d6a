#pragma once

// The Iwahori-Hecke algebra H_q(n) on the basis {T_w}. Multiplication is right multiplication by
// generators: T_w T_i = T_{w s_i} if l(w s_i) > l(w) T_w T_i = q T_{w s_i} + (q - 1) T_w otherwise
// A general product a * b walks the prefix tree of the support of b, where every w != 1 has parent
// w s_j for the smallest right descent j, so that a T_w = (a T_{parent(w)}) T_j.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "scalar.hpp"

namespace hecke {

using BasisIndex = std::uint32_t;

template <FieldScalar S>
class HeckeAlgebra {
 public:
  using scalar_type = S;

  static std::shared_ptr<const HeckeAlgebra> create(int n, FieldPtr<S> field) {
    if (n < 1 || n > kMaxDegree) throw std::invalid_argument("hecke algebra: degree out of range");
    if (!field) throw std::invalid_argument("hecke algebra: null field");
    return std::shared_ptr<const HeckeAlgebra>(new HeckeAlgebra(n, std::move(field)));
  }

  int degree() const { return n_; }
  std::size_t dimension() const { return perms_.size(); }
  const FieldOf<S>& field() const { return *field_; }
  const FieldPtr<S>& field_ptr() const { return field_; }

  const S& q() const { return q_; }
  const S& q_inverse() const { return q_inv_; }
  S zero() const { return field_->zero(); }
  S one_scalar() const { return field_->one(); }

  /// (-q)^k for |k| <= l(w_0).
  const S& neg_q_power(int k) const { return neg_q_pow_[static_cast<std::size_t>(k + max_length_)]; }
  /// q^k for |k| <= l(w_0).
  const S& q_power(int k) const { return q_pow_[static_cast<std::size_t>(k + max_length_)]; }

  const Permutation& permutation(BasisIndex w) const { return perms_[w]; }
  BasisIndex index_of(const Permutation& w) const {
    if (w.degree() != n_) throw std::invalid_argument("hecke algebra: permutation of wrong degree");
    return static_cast<BasisIndex>(lex_rank(w));
  }
  BasisIndex identity_index() const { return 0; }

  int length(BasisIndex w) const { return lengths_[w]; }
  int max_length() const { return max_length_; }

  /// Index of w s_i.
  BasisIndex times_generator(BasisIndex w, int i) const { return right_[w * (n_ - 1) + (i - 1)]; }
  /// l(w s_i) < l(w).
  bool descent(BasisIndex w, int i) const { return lengths_[times_generator(w, i)] < lengths_[w]; }
  BasisIndex inverse_index(BasisIndex w) const { return inverse_[w]; }

  /// w = parent(w) s_{last_generator(w)} with lengths adding; undefined for the identity.
  BasisIndex parent(BasisIndex w) const { return parent_[w]; }
  int last_generator(BasisIndex w) const { return last_[w]; }

 private:
  HeckeAlgebra(int n, FieldPtr<S> field) : n_(n), field_(std::move(field)) {
    perms_ = all_permutations(n);
    const std::size_t N = perms_.size();
    lengths_.resize(N);
    inverse_.resize(N);
    parent_.assign(N, 0);
    last_.assign(N, 0);
    right_.resize(N * static_cast<std::size_t>(std::max(n - 1, 0)));
    std::vector<Permutation> simples;
    for (int i = 1; i < n; ++i) simples.push_back(Permutation::simple(n, i));
    for (BasisIndex w = 0; w < N; ++w) {
      lengths_[w] = hecke::length(perms_[w]);
      inverse_[w] = index_of(perms_[w].inverse());
      for (int i = 1; i < n; ++i)
        right_[w * (n - 1) + (i - 1)] = index_of(compose(perms_[w], simples[i - 1]));
    }
    for (BasisIndex w = 0; w < N; ++w) {
      for (int i = 1; i < n; ++i) {
        if (descent(w, i)) {
          parent_[w] = times_generator(w, i);
          last_[w] = i;
          break;
        }
      }
    }
    max_length_ = n * (n - 1) / 2;
    q_ = field_->q();
    q_inv_ = q_.inverse();
    const S minus_q = -q_;
    const S minus_q_inv = minus_q.inverse();
    neg_q_pow_.resize(2 * max_length_ + 1);
    q_pow_.resize(2 * max_length_ + 1);
    neg_q_pow_[max_length_] = field_->one();
    q_pow_[max_length_] = field_->one();
    for (int k = 1; k <= max_length_; ++k) {
      neg_q_pow_[max_length_ + k] = neg_q_pow_[max_length_ + k - 1] * minus_q;
      neg_q_pow_[max_length_ - k] = neg_q_pow_[max_length_ - k + 1] * minus_q_inv;
      q_pow_[max_length_ + k] = q_pow_[max_length_ + k - 1] * q_;
      q_pow_[max_length_ - k] = q_pow_[max_length_ - k + 1] * q_inv_;
    }
  }

  int n_;
  FieldPtr<S> field_;
  std::vector<Permutation> perms_;
  std::vector<int> lengths_;
  std::vector<BasisIndex> inverse_;
  std::vector<BasisIndex> right_;
  std::vector<BasisIndex> parent_;
  std::vector<int> last_;
  int max_length_ = 0;
  S q_, q_inv_;
  std::vector<S> neg_q_pow_, q_pow_;
};

template <FieldScalar S>
using HeckePtr = std::shared_ptr<const HeckeAlgebra<S>>;

/// Sparse element of H_q(n): sorted (basis index, non-zero coefficient) pairs.
template <FieldScalar S>
class HeckeElement {
 public:
  using Term = std::pair<BasisIndex, S>;

  explicit HeckeElement(HeckePtr<S> alg) : alg_(std::move(alg)) {}
  HeckeElement(HeckePtr<S> alg, std::vector<Term> terms) : alg_(std::move(alg)), terms_(std::move(terms)) {
    canonicalize();
  }

  const HeckeAlgebra<S>& algebra() const { return *alg_; }
  const HeckePtr<S>& algebra_ptr() const { return alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  S coefficient(BasisIndex w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, BasisIndex x) { return t.first < x; });
    if (it != terms_.end() && it->first == w) return it->second;
    return alg_->zero();
  }
  S coefficient(const Permutation& w) const { return coefficient(alg_->index_of(w)); }

  HeckeElement& operator+=(const HeckeElement& o) { return merge(o, false); }
  HeckeElement& operator-=(const HeckeElement& o) { return merge(o, true); }
  HeckeElement& operator*=(const S& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
  }

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const S& c, HeckeElement a) { return a *= c; }
  HeckeElement operator-() const {
    HeckeElement r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.alg_ == b.alg_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const HeckeElement& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("hecke element: algebra mismatch");
  }

  HeckeElement& merge(const HeckeElement& o, bool subtract) {
    require_same(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        out.push_back(std::move(terms_[i++]));
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        out.emplace_back(o.terms_[j].first, subtract ? -o.terms_[j].second : o.terms_[j].second);
        ++j;
      } else {
        S c = subtract ? terms_[i].second - o.terms_[j].second : terms_[i].second + o.terms_[j].second;
        if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (t.first >= alg_->dimension()) throw std::out_of_range("hecke element: basis index out of range");
      if (!out.empty() && out.back().first == t.first)
        out.back().second += t.second;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
    terms_ = std::move(out);
  }

  HeckePtr<S> alg_;
  std::vector<Term> terms_;
};

namespace detail {

/// Dense scratch vector over the T-basis with a touched list.
template <FieldScalar S>
class Accumulator {
 public:
  explicit Accumulator(std::size_t dim) : values_(dim), live_(dim, 0) {}

  void add(BasisIndex w, const S& c) {
    if (!live_[w]) {
      live_[w] = 1;
      touched_.push_back(w);
      values_[w] = c;
    } else {
      values_[w] += c;
    }
  }

  std::vector<typename HeckeElement<S>::Term> take() {
    std::sort(touched_.begin(), touched_.end());
    std::vector<typename HeckeElement<S>::Term> out;
    out.reserve(touched_.size());
    for (BasisIndex w : touched_) {
      if (!values_[w].is_zero()) out.emplace_back(w, std::move(values_[w]));
      values_[w] = S{};
      live_[w] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<S> values_;
  std::vector<char> live_;
  std::vector<BasisIndex> touched_;
};

template <FieldScalar S>
std::vector<typename HeckeElement<S>::Term> right_generator(const HeckeAlgebra<S>& alg,
                                                            const std::vector<typename HeckeElement<S>::Term>& in,
                                                            int i, Accumulator<S>& acc) {
  for (const auto& [w, c] : in) {
    const BasisIndex ws = alg.times_generator(w, i);
    if (alg.length(ws) > alg.length(w)) {
      acc.add(ws, c);
    } else {
      S cq = c.times_q();
      acc.add(w, cq - c);
      acc.add(ws, cq);
    }
  }
  return acc.take();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors

template <FieldScalar S>
HeckeElement<S> zero_element(const HeckePtr<S>& alg) {
  return HeckeElement<S>(alg);
}

template <FieldScalar S>
HeckeElement<S> t_basis(const HeckePtr<S>& alg, const Permutation& w) {
  return HeckeElement<S>(alg, {{alg->index_of(w), alg->one_scalar()}});
}

template <FieldScalar S>
HeckeElement<S> t_basis(const HeckePtr<S>& alg, BasisIndex w) {
  return HeckeElement<S>(alg, {{w, alg->one_scalar()}});
}

/// T_i = T_{s_i}.
template <FieldScalar S>
HeckeElement<S> t_generator(const HeckePtr<S>& alg, int i) {
  return t_basis(alg, Permutation::simple(alg->degree(), i));
}

template <FieldScalar S>
HeckeElement<S> one(const HeckePtr<S>& alg) {
  return t_basis(alg, alg->identity_index());
}

template <FieldScalar S>
HeckeElement<S> scalar_element(const HeckePtr<S>& alg, const S& c) {
  return HeckeElement<S>(alg, {{alg->identity_index(), c}});
}

// ---------------------------------------------------------------------------
// Multiplication

template <FieldScalar S>
HeckeElement<S> mult_by_generator(const HeckeElement<S>& h, int i) {
  const auto& alg = h.algebra();
  if (i < 1 || i >= alg.degree()) throw std::out_of_range("mult_by_generator: index out of range");
  detail::Accumulator<S> acc(alg.dimension());
  return HeckeElement<S>(h.algebra_ptr(), detail::right_generator(alg, h.terms(), i, acc));
}

template <FieldScalar S>
HeckeElement<S> multiply(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw std::invalid_argument("multiply: algebra mismatch");
  const auto& alg = a.algebra();
  if (a.is_zero() || b.is_zero()) return HeckeElement<S>(a.algebra_ptr());

  // Prefix tree of supp(b).
  const std::size_t N = alg.dimension();
  std::vector<char> needed(N, 0);
  std::vector<std::vector<BasisIndex>> children(N);
  needed[alg.identity_index()] = 1;
  for (const auto& [v, c] : b.terms()) {
    BasisIndex x = v;
    while (!needed[x]) {
      needed[x] = 1;
      children[alg.parent(x)].push_back(x);
      x = alg.parent(x);
    }
  }
  std::vector<const S*> coef_b(N, nullptr);
  for (const auto& [v, c] : b.terms()) coef_b[v] = &c;

  using Terms = std::vector<typename HeckeElement<S>::Term>;
  detail::Accumulator<S> step(N), result(N);
  auto visit = [&](auto& self, BasisIndex v, const Terms& value) -> void {
    if (coef_b[v])
      for (const auto& [w, c] : value) result.add(w, c * *coef_b[v]);
    for (BasisIndex u : children[v]) {
      Terms next = detail::right_generator(alg, value, alg.last_generator(u), step);
      self(self, u, next);
    }
  };
  visit(visit, alg.identity_index(), a.terms());
  return HeckeElement<S>(a.algebra_ptr(), result.take());
}

template <FieldScalar S>
HeckeElement<S> operator*(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  return multiply(a, b);
}

/// Product of a sequence of elements, left to right.
template <FieldScalar S>
HeckeElement<S> product(std::initializer_list<HeckeElement<S>> factors) {
  auto it = factors.begin();
  HeckeElement<S> acc = *it;
  for (++it; it != factors.end(); ++it) acc = multiply(acc, *it);
  return acc;
}

// ---------------------------------------------------------------------------
// x_R, y_R and friends

namespace detail {

template <FieldScalar S>
void check_interval(const HeckeAlgebra<S>& alg, const Interval& R) {
  if (R.empty() || R.lo < 1 || R.hi > alg.degree())
    throw std::invalid_argument("interval " + R.str() + " is not a non-empty interval inside [1,n]");
}

/// Elements of W_R as indices.
template <FieldScalar S>
std::vector<BasisIndex> parabolic_elements(const HeckeAlgebra<S>& alg, const Interval& R) {
  std::vector<BasisIndex> out;
  for (const auto& local : all_permutations(R.size())) {
    auto img = Permutation::identity(alg.degree()).one_line();
    for (int j = 0; j < R.size(); ++j) img[R.lo - 1 + j] = R.lo - 1 + local(j + 1);
    out.push_back(alg.index_of(Permutation(std::move(img))));
  }
  return out;
}

}  // namespace detail

/// x_R = sum over W_R of T_w.
template <FieldScalar S>
HeckeElement<S> x_interval(const HeckePtr<S>& alg, const Interval& R) {
  detail::check_interval(*alg, R);
  std::vector<typename HeckeElement<S>::Term> terms;
  for (BasisIndex w : detail::parabolic_elements(*alg, R)) terms.emplace_back(w, alg->one_scalar());
  return HeckeElement<S>(alg, std::move(terms));
}

/// y_R = sum over W_R of (-q)^{-l(w)} T_w.
template <FieldScalar S>
HeckeElement<S> y_interval(const HeckePtr<S>& alg, const Interval& R) {
  detail::check_interval(*alg, R);
  std::vector<typename HeckeElement<S>::Term> terms;
  for (BasisIndex w : detail::parabolic_elements(*alg, R)) terms.emplace_back(w, alg->neg_q_power(-alg->length(w)));
  return HeckeElement<S>(alg, std::move(terms));
}

/// x or y of an interval given possibly empty (returns one).
template <FieldScalar S>
HeckeElement<S> x_or_one(const HeckePtr<S>& alg, const Interval& R) {
  return R.size() <= 1 ? one(alg) : x_interval(alg, R);
}

template <FieldScalar S>
HeckeElement<S> y_or_one(const HeckePtr<S>& alg, const Interval& R) {
  return R.size() <= 1 ? one(alg) : y_interval(alg, R);
}

/// x_rho: product of x_{rho_i} over the support intervals of rho.
template <FieldScalar S>
HeckeElement<S> x_comp(const HeckePtr<S>& alg, const Composition& rho) {
  HeckeElement<S> acc = one(alg);
  for (const auto& iv : rho.support())
    if (iv.size() > 1) acc = multiply(acc, x_interval(alg, iv));
  return acc;
}

template <FieldScalar S>
HeckeElement<S> y_comp(const HeckePtr<S>& alg, const Composition& rho) {
  HeckeElement<S> acc = one(alg);
  for (const auto& iv : rho.support())
    if (iv.size() > 1) acc = multiply(acc, y_interval(alg, iv));
  return acc;
}

/// sigma = sum_{d in D_rho} (-q)^{-l(d)} T_d (signed) or psi = sum_{d in D_rho} T_d,
/// with D_rho taken inside W_R for the interval R covered by rho.
template <FieldScalar S>
HeckeElement<S> coset_factor(const HeckePtr<S>& alg, const Composition& rho, bool signed_factor) {
  std::vector<typename HeckeElement<S>::Term> terms;
  for (const auto& d : distinguished_reps_in(alg->degree(), rho)) {
    const BasisIndex w = alg->index_of(d);
    terms.emplace_back(w, signed_factor ? alg->neg_q_power(-alg->length(w)) : alg->one_scalar());
  }
  return HeckeElement<S>(alg, std::move(terms));
}

// ---------------------------------------------------------------------------
// Involutions and forms

/// Anti-involution T_w -> T_{w^{-1}}.
template <FieldScalar S>
HeckeElement<S> star(const HeckeElement<S>& h) {
  std::vector<typename HeckeElement<S>::Term> terms;
  terms.reserve(h.size());
  for (const auto& [w, c] : h.terms()) terms.emplace_back(h.algebra().inverse_index(w), c);
  return HeckeElement<S>(h.algebra_ptr(), std::move(terms));
}

/// h T_i^{-1} with T_i^{-1} = q^{-1} T_i + (q^{-1} - 1).
template <FieldScalar S>
HeckeElement<S> mult_by_generator_inverse(const HeckeElement<S>& h, int i) {
  const auto& alg = h.algebra();
  HeckeElement<S> r = mult_by_generator(h, i);
  r *= alg.q_inverse();
  r += (alg.q_inverse() - alg.one_scalar()) * h;
  return r;
}

/// T_w^{-1}, from the reversed reduced word of w.
template <FieldScalar S>
HeckeElement<S> t_inverse(const HeckePtr<S>& alg, const Permutation& w) {
  auto word = reduced_word(w);
  HeckeElement<S> acc = one(alg);
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mult_by_generator_inverse(acc, *it);
  return acc;
}

/// Automorphism T_w -> (-q)^{l(w)} (T_{w^{-1}})^{-1}.
template <FieldScalar S>
HeckeElement<S> sharp(const HeckeElement<S>& h) {
  const auto& alg = h.algebra();
  HeckeElement<S> acc(h.algebra_ptr());
  for (const auto& [w, c] : h.terms()) {
    HeckeElement<S> img = t_inverse(h.algebra_ptr(), alg.permutation(alg.inverse_index(w)));
    img *= c * alg.neg_q_power(alg.length(w));
    acc += img;
  }
  return acc;
}

/// (T_u, T_v) = q^{l(u)} if u = v, else 0.
template <FieldScalar S>
S bilinear_form(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  if (a.algebra_ptr() != b.algebra_ptr()) throw std::invalid_argument("bilinear_form: algebra mismatch");
  const auto& alg = a.algebra();
  S acc = alg.zero();
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].first < tb[j].first) {
      ++i;
    } else if (tb[j].first < ta[i].first) {
      ++j;
    } else {
      acc += ta[i].second * tb[j].second * alg.q_power(alg.length(ta[i].first));
      ++i;
      ++j;
    }
  }
  return acc;
}

/// f(a, b) = (a, b^*).
template <FieldScalar S>
S symmetrizing_form(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  return bilinear_form(a, star(b));
}

/// c with a = c * b, if one exists (b non-zero).
template <FieldScalar S>
std::optional<S> scalar_ratio(const HeckeElement<S>& a, const HeckeElement<S>& b) {
  if (b.is_zero()) return std::nullopt;
  const auto& [w, bc] = b.terms().front();
  S c = a.coefficient(w) * bc.inverse();
  if (!(c * b == a)) return std::nullopt;
  return c;
}

}  // namespace hecke
