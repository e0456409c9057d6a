#pragma once

// The coefficient-field concept and field-generic helpers (powers, quantum integers and
// factorials).

#include <concepts>
#include <memory>
#include <string>

#include "cyclotomic.hpp"
#include "finite_field.hpp"

namespace hecke {

template <class S>
concept FieldScalar = std::regular<S> && requires(S a, const S& b, long v) {
  typename S::field_type;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a.inverse() } -> std::same_as<S>;
  { a.times_q() } -> std::same_as<S>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { a.field_ptr() } -> std::same_as<const typename S::field_type*>;
  { b.field_ptr()->q() } -> std::same_as<S>;
  { b.field_ptr()->one() } -> std::same_as<S>;
  { b.field_ptr()->from_int(v) } -> std::same_as<S>;
};

template <FieldScalar S>
using FieldOf = typename S::field_type;

template <FieldScalar S>
using FieldPtr = std::shared_ptr<const FieldOf<S>>;

/// x^e for any integer e (negative powers invert).
template <FieldScalar S>
S power(const S& x, long e) {
  if (e < 0) return power(x.inverse(), -e);
  S result = x.field_ptr()->one();
  S base = x;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

/// [m]_u = 1 + u + ... + u^{m-1}; [0]_u = 0.
template <FieldScalar S>
S quantum_integer(int m, const S& u) {
  S acc = u.field_ptr()->zero();
  S term = u.field_ptr()->one();
  for (int j = 0; j < m; ++j) {
    acc += term;
    term *= u;
  }
  return acc;
}

/// [r]_u! = [1]_u [2]_u ... [r]_u; [0]_u! = 1.
template <FieldScalar S>
S quantum_factorial(int r, const S& u) {
  S acc = u.field_ptr()->one();
  for (int m = 1; m <= r; ++m) acc *= quantum_integer(m, u);
  return acc;
}

/// Characteristic of the field of x (0 for cyclotomic fields).
template <FieldScalar S>
int characteristic(const S& x) {
  return x.field_ptr()->characteristic();
}

}  // namespace hecke
