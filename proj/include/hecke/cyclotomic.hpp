#pragma once

// Exact arithmetic in Q(zeta_l) = Q[z]/(Phi_l(z)) with GMP rationals. Elements carry a pointer to
// their field; the field must outlive them. A default-constructed element is a field-less zero
// which adopts the field of the other operand in binary operations.

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "field_spec.hpp"

namespace hecke {

namespace detail {

/// Integer polynomial, index = degree, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division by a monic divisor; throws if the remainder is non-zero.
inline ZPoly divide_monic(ZPoly num, const ZPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("divide_monic: degree too small");
  ZPoly quo(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    mpz_class c = num[k];
    if (c == 0) continue;
    quo[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("divide_monic: non-zero remainder");
  return quo;
}

/// Phi_l as the quotient of z^l - 1 by Phi_d over the proper divisors d of l.
inline ZPoly cyclotomic_polynomial(int l) {
  ZPoly p(static_cast<std::size_t>(l) + 1, 0);
  p[0] = -1;
  p[l] = 1;
  for (int d = 1; d < l; ++d)
    if (l % d == 0) p = divide_monic(p, cyclotomic_polynomial(d));
  return p;
}

}  // namespace detail

class CyclotomicField;

class Cyclotomic {
 public:
  using field_type = CyclotomicField;

  Cyclotomic() = default;
  Cyclotomic(const CyclotomicField* field, const std::vector<mpq_class>& coeffs);

  const CyclotomicField* field_ptr() const { return field_; }
  bool is_zero() const { return n_.empty(); }
  /// Rational coefficients, index = degree.
  std::vector<mpq_class> coefficients() const {
    std::vector<mpq_class> out;
    for (const auto& x : n_) {
      out.emplace_back(x, d_);
      out.back().canonicalize();
    }
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return add(o, false); }
  Cyclotomic& operator-=(const Cyclotomic& o) { return add(o, true); }
  Cyclotomic& operator*=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.n_) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    return r;
  }

  /// Multiplication by the generator z (= q).
  Cyclotomic times_q() const;
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.d_ == b.d_ && a.n_ == b.n_; }

  std::string str() const { return poly_text::render_rational(coefficients()); }

 private:
  // value = (sum n_[i] z^i) / d_ with d_ > 0 and gcd(n_, d_) = 1
  void adopt(const Cyclotomic& o) {
    if (!field_) field_ = o.field_;
  }
  void trim() {
    while (!n_.empty() && sgn(n_.back()) == 0) n_.pop_back();
    if (n_.empty()) d_ = 1;
  }
  void normalize() {
    trim();
    if (d_ == 1) return;
    mpz_class g = d_;
    for (const auto& x : n_) {
      if (sgn(x) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
    for (auto& x : n_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
  }
  Cyclotomic& add(const Cyclotomic& o, bool subtract);
  void reduce();

  const CyclotomicField* field_ = nullptr;
  std::vector<mpz_class> n_;
  mpz_class d_ = 1;
};

class CyclotomicField {
 public:
  using element_type = Cyclotomic;

  static std::shared_ptr<const CyclotomicField> create(int l) {
    if (l < 2) throw std::invalid_argument("cyclotomic field: l must be at least 2");
    auto f = std::shared_ptr<CyclotomicField>(new CyclotomicField(l));
    f->verify_order();
    return f;
  }

  int order() const { return l_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  int characteristic() const { return 0; }
  const detail::ZPoly& modulus() const { return phi_; }

  Cyclotomic zero() const { return Cyclotomic(this, {}); }
  Cyclotomic one() const { return from_int(1); }
  Cyclotomic from_int(long v) const { return Cyclotomic(this, {mpq_class(v)}); }
  Cyclotomic from_rational(const mpq_class& v) const { return Cyclotomic(this, {v}); }
  Cyclotomic q() const { return Cyclotomic(this, {mpq_class(0), mpq_class(1)}); }

  Cyclotomic parse(std::string_view text) const {
    auto terms = poly_text::parse(text);
    std::vector<mpq_class> c;
    for (const auto& [deg, coef] : terms) {
      if (deg < 0) throw std::invalid_argument("scalar parse: negative degree");
      if (c.size() <= static_cast<std::size_t>(deg)) c.resize(deg + 1);
      c[deg] += coef;
    }
    return Cyclotomic(this, std::move(c));
  }

  FieldSpec spec() const {
    FieldSpec s;
    s.kind = FieldKind::cyclotomic;
    s.l = l_;
    s.p = 0;
    s.k = degree();
    std::vector<mpq_class> m(phi_.begin(), phi_.end());
    s.modulus = poly_text::render_rational(m);
    s.q = q().str();
    return s;
  }

 private:
  explicit CyclotomicField(int l) : l_(l), phi_(detail::cyclotomic_polynomial(l)) {}

  void verify_order() const {
    Cyclotomic x = one();
    for (int m = 1; m <= l_; ++m) {
      x = x.times_q();
      if ((x == one()) != (m == l_)) throw std::logic_error("cyclotomic field: q does not have order l");
    }
  }

  int l_;
  detail::ZPoly phi_;
};

inline Cyclotomic::Cyclotomic(const CyclotomicField* field, const std::vector<mpq_class>& coeffs) : field_(field) {
  for (const auto& c : coeffs)
    if (sgn(c) != 0) mpz_lcm(d_.get_mpz_t(), d_.get_mpz_t(), c.get_den_mpz_t());
  n_.reserve(coeffs.size());
  for (const auto& c : coeffs) n_.push_back(c.get_num() * (d_ / c.get_den()));
  reduce();
  normalize();
}

inline void Cyclotomic::reduce() {
  trim();
  if (!field_) return;
  const auto& phi = field_->modulus();
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = n_.size(); k-- > d;) {
    if (sgn(n_[k]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (sgn(phi[j]) != 0) mpz_submul(n_[k - d + j].get_mpz_t(), n_[k].get_mpz_t(), phi[j].get_mpz_t());
    n_[k] = 0;
  }
  trim();
}

inline Cyclotomic& Cyclotomic::add(const Cyclotomic& o, bool subtract) {
  adopt(o);
  if (o.n_.empty()) return *this;
  auto op = subtract ? mpz_sub : mpz_add;
  if (d_ == o.d_) {
    if (n_.size() < o.n_.size()) n_.resize(o.n_.size());
    for (std::size_t i = 0; i < o.n_.size(); ++i) op(n_[i].get_mpz_t(), n_[i].get_mpz_t(), o.n_[i].get_mpz_t());
  } else {
    if (n_.size() < o.n_.size()) n_.resize(o.n_.size());
    for (auto& x : n_) x *= o.d_;
    mpz_class t;
    for (std::size_t i = 0; i < o.n_.size(); ++i) {
      mpz_mul(t.get_mpz_t(), o.n_[i].get_mpz_t(), d_.get_mpz_t());
      op(n_[i].get_mpz_t(), n_[i].get_mpz_t(), t.get_mpz_t());
    }
    d_ *= o.d_;
  }
  normalize();
  return *this;
}

inline Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  adopt(o);
  if (n_.empty() || o.n_.empty()) {
    n_.clear();
    d_ = 1;
    return *this;
  }
  std::vector<mpz_class> prod(n_.size() + o.n_.size() - 1);
  for (std::size_t i = 0; i < n_.size(); ++i) {
    if (sgn(n_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.n_.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), n_[i].get_mpz_t(), o.n_[j].get_mpz_t());
  }
  n_ = std::move(prod);
  d_ *= o.d_;
  reduce();
  normalize();
  return *this;
}

inline Cyclotomic Cyclotomic::times_q() const {
  if (n_.empty()) return *this;
  Cyclotomic r;
  r.field_ = field_;
  r.d_ = d_;
  r.n_.reserve(n_.size() + 1);
  r.n_.emplace_back(0);
  r.n_.insert(r.n_.end(), n_.begin(), n_.end());
  r.reduce();
  return r;
}

inline Cyclotomic Cyclotomic::inverse() const {
  if (n_.empty()) throw std::domain_error("cyclotomic: division by zero");
  if (!field_) throw std::logic_error("cyclotomic: inverse of a field-less element");
  // Solve (a * x) = 1 through the d x d multiplication matrix of a over Q.
  const int d = field_->degree();
  std::vector<std::vector<mpq_class>> M(d, std::vector<mpq_class>(d + 1));
  Cyclotomic col = *this;
  for (int j = 0; j < d; ++j) {
    const auto c = col.coefficients();
    for (int i = 0; i < d; ++i) M[i][j] = i < static_cast<int>(c.size()) ? c[i] : mpq_class(0);
    col = col.times_q();
  }
  M[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && sgn(M[piv][c]) == 0) ++piv;
    if (piv == d) throw std::logic_error("cyclotomic: singular multiplication matrix");
    std::swap(M[piv], M[c]);
    mpq_class inv = 1 / M[c][c];
    for (int j = c; j <= d; ++j) M[c][j] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c || sgn(M[i][c]) == 0) continue;
      mpq_class f = M[i][c];
      for (int j = c; j <= d; ++j) M[i][j] -= f * M[c][j];
    }
  }
  std::vector<mpq_class> x(d);
  for (int i = 0; i < d; ++i) x[i] = M[i][d];
  return Cyclotomic(field_, x);
}

}  // namespace hecke
