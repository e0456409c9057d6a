#pragma once

// GF(p^k), p^k <= 2^16, with table-free polynomial arithmetic. An element is packed as the integer
// sum c_i p^i of its coefficients in the basis 1, z, ..., z^{k-1}, where z is a root of the (first
// irreducible, in packed order) monic modulus of degree k. q is the first element of exact
// multiplicative order l in packed order.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "field_spec.hpp"

namespace hecke {

class GaloisField;

class GaloisElement {
 public:
  using field_type = GaloisField;

  GaloisElement() = default;
  GaloisElement(const GaloisField* field, std::uint32_t packed) : field_(field), v_(packed) {}

  const GaloisField* field_ptr() const { return field_; }
  std::uint32_t packed() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  GaloisElement& operator+=(const GaloisElement& o);
  GaloisElement& operator-=(const GaloisElement& o);
  GaloisElement& operator*=(const GaloisElement& o);
  friend GaloisElement operator+(GaloisElement a, const GaloisElement& b) { return a += b; }
  friend GaloisElement operator-(GaloisElement a, const GaloisElement& b) { return a -= b; }
  friend GaloisElement operator*(GaloisElement a, const GaloisElement& b) { return a *= b; }
  GaloisElement operator-() const;

  GaloisElement times_q() const;
  GaloisElement inverse() const;

  friend bool operator==(const GaloisElement& a, const GaloisElement& b) { return a.v_ == b.v_; }

  std::string str() const;

 private:
  void adopt(const GaloisElement& o) {
    if (!field_) field_ = o.field_;
  }
  const GaloisField* field_ = nullptr;
  std::uint32_t v_ = 0;
};

class GaloisField {
 public:
  using element_type = GaloisElement;
  static constexpr std::uint32_t kMaxSize = 1u << 16;

  static std::shared_ptr<const GaloisField> create(int p, int k, int l) {
    if (l < 2) throw std::invalid_argument("finite field: l must be at least 2");
    if (p < 2 || k < 1) throw std::invalid_argument("finite field: need p >= 2 and k >= 1");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("finite field: p must be prime");
    std::uint64_t size = 1;
    for (int i = 0; i < k; ++i) {
      size *= static_cast<std::uint64_t>(p);
      if (size > kMaxSize) throw std::invalid_argument("finite field: p^k exceeds 2^16");
    }
    if (l % p == 0) throw std::invalid_argument("finite field: l must be prime to p");
    if ((size - 1) % static_cast<std::uint64_t>(l) != 0)
      throw std::invalid_argument("finite field: no primitive l-th root of unity (l does not divide p^k - 1)");
    auto f = std::shared_ptr<GaloisField>(new GaloisField(p, k, l, static_cast<std::uint32_t>(size)));
    f->choose_modulus();
    f->choose_q();
    return f;
  }

  int order() const { return l_; }
  int degree() const { return k_; }
  int characteristic() const { return p_; }
  std::uint32_t size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  GaloisElement zero() const { return {this, 0}; }
  GaloisElement one() const { return {this, 1}; }
  GaloisElement q() const { return {this, q_}; }
  GaloisElement from_int(long v) const {
    long r = v % p_;
    if (r < 0) r += p_;
    return {this, static_cast<std::uint32_t>(r)};
  }
  GaloisElement from_digits(const std::vector<int>& digits) const { return {this, reduce_digits(digits)}; }

  GaloisElement parse(std::string_view text) const {
    auto terms = poly_text::parse(text);
    std::vector<int> digits;
    for (const auto& [deg, coef] : terms) {
      if (deg < 0) throw std::invalid_argument("scalar parse: negative degree");
      if (digits.size() <= static_cast<std::size_t>(deg)) digits.resize(deg + 1, 0);
      mpz_class num = coef.get_num() % p_, den = coef.get_den() % p_;
      if (den == 0) throw std::invalid_argument("scalar parse: denominator divisible by p");
      long n = num.get_si(), dn = den.get_si();
      digits[deg] = static_cast<int>(((n % p_ + p_) % p_) * inv_mod(static_cast<int>((dn + p_) % p_)) % p_);
    }
    return from_digits(digits);
  }

  std::vector<int> digits(std::uint32_t v) const {
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) {
      d[i] = static_cast<int>(v % p_);
      v /= p_;
    }
    return d;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      std::uint32_t s = (a % p_ + b % p_) % p_;
      r += s * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint32_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
      std::uint32_t s = (p_ - a % p_) % p_;
      r += s * scale;
      a /= p_;
      scale *= p_;
    }
    return r;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (k_ == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    if (p_ == 2) {
      std::uint32_t prod = 0;
      for (int i = 0; i < k_; ++i)
        if ((b >> i) & 1u) prod ^= a << i;
      for (int i = 2 * k_ - 2; i >= k_; --i)
        if ((prod >> i) & 1u) prod ^= mod_bits_ << (i - k_);  // mod_bits_ includes z^k
      return prod;
    }
    std::array<int, 32> da{}, db{}, pr{};
    for (int i = 0; i < k_; ++i) {
      da[i] = static_cast<int>(a % p_);
      a /= p_;
      db[i] = static_cast<int>(b % p_);
      b /= p_;
    }
    for (int i = 0; i < k_; ++i) {
      if (!da[i]) continue;
      for (int j = 0; j < k_; ++j) pr[i + j] = (pr[i + j] + da[i] * db[j]) % p_;
    }
    return reduce_array(pr.data(), 2 * k_ - 1);
  }

  std::uint32_t power(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("finite field: division by zero");
    return power(a, size_ - 2);
  }

  std::string render(std::uint32_t v) const {
    auto d = digits(v);
    return poly_text::render(
        d, [](int x) { return x == 0; }, [](int) { return false; }, [](int x) { return std::to_string(x); });
  }

  FieldSpec spec() const {
    FieldSpec s;
    s.kind = FieldKind::finite;
    s.l = l_;
    s.p = p_;
    s.k = k_;
    s.modulus = poly_text::render(
        modulus_, [](int x) { return x == 0; }, [](int) { return false; },
        [](int x) { return std::to_string(x); });
    s.q = render(q_);
    return s;
  }

 private:
  GaloisField(int p, int k, int l, std::uint32_t size) : p_(p), k_(k), l_(l), size_(size) {}

  int inv_mod(int a) const {
    for (int x = 1; x < p_; ++x)
      if ((static_cast<long long>(a) * x) % p_ == 1) return x;
    throw std::invalid_argument("finite field: non-invertible integer");
  }

  /// Reduce coefficients c[0..len) modulo the monic modulus; returns packed value.
  std::uint32_t reduce_array(int* c, int len) const {
    for (int i = len - 1; i >= k_; --i) {
      int lead = c[i] % p_;
      if (!lead) continue;
      for (int j = 0; j <= k_; ++j) c[i - k_ + j] = ((c[i - k_ + j] - lead * modulus_[j]) % p_ + p_) % p_;
    }
    std::uint32_t r = 0;
    for (int i = k_ - 1; i >= 0; --i) r = r * p_ + static_cast<std::uint32_t>((c[i] % p_ + p_) % p_);
    return r;
  }

  std::uint32_t reduce_digits(std::vector<int> d) const {
    if (d.size() < static_cast<std::size_t>(k_)) d.resize(k_, 0);
    for (auto& x : d) x = ((x % p_) + p_) % p_;
    return reduce_array(d.data(), static_cast<int>(d.size()));
  }

  /// Monic polynomial of degree `deg` from its packed lower coefficients.
  std::vector<int> monic_from(std::uint32_t low, int deg) const {
    std::vector<int> m(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
      m[i] = static_cast<int>(low % p_);
      low /= p_;
    }
    m[deg] = 1;
    return m;
  }

  /// Remainder of a modulo monic b over GF(p).
  std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& b) const {
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      int lead = a[i] % p_;
      if (!lead) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - lead * b[j]) % p_ + p_) % p_;
    }
    a.resize(std::max(db, 0));
    return a;
  }

  bool irreducible(const std::vector<int>& f) const {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
      std::uint32_t count = 1;
      for (int i = 0; i < d; ++i) count *= p_;
      for (std::uint32_t low = 0; low < count; ++low) {
        auto rem = poly_rem(f, monic_from(low, d));
        bool zero = true;
        for (int x : rem) zero = zero && x == 0;
        if (zero) return false;
      }
    }
    return true;
  }

  void choose_modulus() {
    std::uint32_t count = size_;
    for (std::uint32_t low = 0; low < count; ++low) {
      auto m = monic_from(low, k_);
      if (irreducible(m)) {
        modulus_ = std::move(m);
        mod_bits_ = 0;
        if (p_ == 2)
          for (int i = 0; i <= k_; ++i) mod_bits_ |= static_cast<std::uint32_t>(modulus_[i]) << i;
        return;
      }
    }
    throw std::logic_error("finite field: no irreducible modulus found");
  }

  void choose_q() {
    for (std::uint32_t g = 1; g < size_; ++g) {
      std::uint32_t x = 1;
      bool exact = true;
      for (int m = 1; m <= l_; ++m) {
        x = mul(x, g);
        if ((x == 1) != (m == l_)) {
          exact = false;
          break;
        }
      }
      if (exact) {
        q_ = g;
        return;
      }
    }
    throw std::invalid_argument("finite field: no element of exact order l");
  }

  int p_, k_, l_;
  std::uint32_t size_;
  std::vector<int> modulus_;
  std::uint32_t mod_bits_ = 0;
  std::uint32_t q_ = 1;
};

inline GaloisElement& GaloisElement::operator+=(const GaloisElement& o) {
  adopt(o);
  if (o.v_ == 0) return *this;
  if (v_ == 0) {
    v_ = o.v_;
    return *this;
  }
  v_ = field_->add(v_, o.v_);
  return *this;
}

inline GaloisElement& GaloisElement::operator-=(const GaloisElement& o) {
  adopt(o);
  if (o.v_ == 0) return *this;
  v_ = field_->add(v_, field_->neg(o.v_));
  return *this;
}

inline GaloisElement& GaloisElement::operator*=(const GaloisElement& o) {
  adopt(o);
  if (v_ == 0 || o.v_ == 0) {
    v_ = 0;
    return *this;
  }
  v_ = field_->mul(v_, o.v_);
  return *this;
}

inline GaloisElement GaloisElement::operator-() const {
  if (v_ == 0) return *this;
  return {field_, field_->neg(v_)};
}

inline GaloisElement GaloisElement::times_q() const {
  if (v_ == 0) return *this;
  return {field_, field_->mul(v_, field_->q().packed())};
}

inline GaloisElement GaloisElement::inverse() const {
  if (v_ == 0) throw std::domain_error("finite field: division by zero");
  return {field_, field_->inv(v_)};
}

inline std::string GaloisElement::str() const {
  if (!field_) return "0";
  return field_->render(v_);
}

}  // namespace hecke
