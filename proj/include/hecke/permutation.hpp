#pragma once

// Symmetric-group combinatorics: permutations, Young subgroups, distinguished coset and
// double-coset representatives. Convention: permutations act on the right. compose(a, b) means "a,
// then b", i.e. compose(a, b)(j) = b(a(j)). One-line notation lists w(1) ... w(n). Under this
// convention - compose(s_i, w) swaps positions i, i+1 of the one-line notation, - compose(w, s_i)
// swaps the values i, i+1, so l(w s_i) < l(w) iff the value i+1 stands left of the value i, and
// l(s_i w) < l(w) iff w(i) > w(i+1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

/// Largest degree the combinatorics layer is exercised on.
inline constexpr int kMaxDegree = 8;

class Permutation {
 public:
  Permutation() = default;

  /// One-line notation, 1-based images.  Throws if not a bijection of [1,n].
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = degree();
    if (n < 1) throw std::invalid_argument("permutation: empty one-line notation");
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("permutation: one-line notation is not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
  }

  /// The basic transposition s_i = (i i+1), 1 <= i < n.
  static Permutation simple(int n, int i) {
    if (i < 1 || i >= n) throw std::out_of_range("simple transposition index out of range");
    auto w = identity(n);
    std::swap(w.images_[i - 1], w.images_[i]);
    return w;
  }

  /// Transposition (a b) of arbitrary points.
  static Permutation transposition(int n, int a, int b) {
    auto w = identity(n);
    std::swap(w.images_[a - 1], w.images_[b - 1]);
    return w;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[j - 1]; }
  const std::vector<int>& one_line() const { return images_; }

  bool is_identity() const {
    for (int j = 0; j < degree(); ++j)
      if (images_[j] != j + 1) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (int j = 0; j < degree(); ++j) inv[images_[j] - 1] = j + 1;
    return Permutation(std::move(inv), unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < images_.size(); ++j) os << (j ? " " : "") << images_[j];
    os << ')';
    return os.str();
  }

 private:
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);

  std::vector<int> images_;
};

/// "a, then b": compose(a, b)(j) = b(a(j)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(a.degree());
  for (int j = 1; j <= a.degree(); ++j) img[j - 1] = b(a(j));
  return Permutation(std::move(img), Permutation::unchecked{});
}

/// Inversion count.
inline int length(const Permutation& w) {
  int inv = 0;
  for (int i = 1; i <= w.degree(); ++i)
    for (int j = i + 1; j <= w.degree(); ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

/// l(s_i w) < l(w), i.e. w(i) > w(i+1).
inline bool left_descent(const Permutation& w, int i) {
  if (i < 1 || i >= w.degree()) throw std::out_of_range("descent index out of range");
  return w(i) > w(i + 1);
}

/// l(w s_i) < l(w): the value i+1 appears before the value i.
inline bool right_descent(const Permutation& w, int i) {
  if (i < 1 || i >= w.degree()) throw std::out_of_range("descent index out of range");
  const auto& img = w.one_line();
  auto pos_i = std::find(img.begin(), img.end(), i);
  auto pos_next = std::find(img.begin(), img.end(), i + 1);
  return pos_i > pos_next;
}

/// Lexicographically smallest reduced word, built by stripping the smallest
/// left descent.  The product s_{w[0]} s_{w[1]} ... equals w.
inline std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  std::vector<int> img = w.one_line();
  const int n = w.degree();
  for (;;) {
    int i = 1;
    while (i < n && img[i - 1] < img[i]) ++i;
    if (i == n) break;
    word.push_back(i);
    std::swap(img[i - 1], img[i]);
  }
  return word;
}

/// Product of basic transpositions, left to right.
inline Permutation from_word(int n, const std::vector<int>& word) {
  auto w = Permutation::identity(n);
  for (int i : word) w = compose(w, Permutation::simple(n, i));
  return w;
}

/// All permutations of degree n in lexicographic order of one-line notation.
inline std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("all_permutations: degree out of range");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Lexicographic rank of the one-line notation (Lehmer code).
inline std::size_t lex_rank(const Permutation& w) {
  const int n = w.degree();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank = rank * static_cast<std::size_t>(n - i + 1) + smaller;
  }
  return rank;
}

inline std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

// ---------------------------------------------------------------------------
// Intervals and compositions

/// [lo, hi], 1-based and inclusive.  Empty when lo > hi.
struct Interval {
  int lo = 1;
  int hi = 0;

  int size() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool empty() const { return hi < lo; }
  bool contains(int j) const { return lo <= j && j <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;

  std::string str() const {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
};

inline Interval intersect(const Interval& a, const Interval& b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

/// Composition of an interval [offset+1, offset+sum]; zero parts are dropped.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts, int offset = 0) : offset_(offset) {
    for (int p : parts) {
      if (p < 0) throw std::invalid_argument("composition: negative part");
      if (p > 0) parts_.push_back(p);
    }
    if (offset < 0) throw std::invalid_argument("composition: negative offset");
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int offset() const { return offset_; }
  Interval range() const { return {offset_ + 1, offset_ + size()}; }

  /// Consecutive support intervals of the Young subgroup.
  std::vector<Interval> support() const {
    std::vector<Interval> out;
    int start = offset_ + 1;
    for (int p : parts_) {
      out.push_back({start, start + p - 1});
      start += p;
    }
    return out;
  }

  /// Index of the block containing j, or -1.
  int block_of(int j) const {
    int start = offset_ + 1;
    for (std::size_t b = 0; b < parts_.size(); ++b) {
      if (j >= start && j < start + parts_[b]) return static_cast<int>(b);
      start += parts_[b];
    }
    return -1;
  }

  /// Order of the Young subgroup.
  std::size_t young_order() const {
    std::size_t o = 1;
    for (int p : parts_) o *= factorial(p);
    return o;
  }

  friend bool operator==(const Composition&, const Composition&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

 private:
  std::vector<int> parts_;
  int offset_ = 0;
};

/// True iff w lies in the Young subgroup W_lambda (w stabilises every block).
inline bool in_young_subgroup(const Permutation& w, const Composition& lambda) {
  for (int j = 1; j <= w.degree(); ++j) {
    int b = lambda.block_of(j);
    if (b < 0) {
      if (w(j) != j) return false;
    } else if (lambda.block_of(w(j)) != b) {
      return false;
    }
  }
  return true;
}

/// Row-standard criterion: t^lambda d is row standard, i.e. d increases
/// along each block.  Equivalently d is minimal in W_lambda d.
inline bool is_distinguished(const Permutation& d, const Composition& lambda) {
  for (const auto& iv : lambda.support())
    for (int j = iv.lo; j < iv.hi; ++j)
      if (d(j) > d(j + 1)) return false;
  return true;
}

/// D_lambda, sorted lexicographically.  Requires lambda to cover [1, n].
inline std::vector<Permutation> distinguished_reps(const Composition& lambda) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(lambda.offset() + lambda.size()))
    if (is_distinguished(w, lambda)) out.push_back(std::move(w));
  return out;
}

/// D_lambda relative to W_R for a composition rho of an interval R inside
/// [1, n]: elements of W_R increasing on every block of rho.
inline std::vector<Permutation> distinguished_reps_in(int n, const Composition& rho) {
  const Interval R = rho.range();
  if (R.hi > n) throw std::invalid_argument("distinguished_reps_in: composition exceeds degree");
  std::vector<Permutation> out;
  for (auto& local : all_permutations(R.size())) {
    auto img = Permutation::identity(n).one_line();
    for (int j = 0; j < R.size(); ++j) img[R.lo - 1 + j] = R.lo - 1 + local(j + 1);
    Permutation w(std::move(img));
    if (is_distinguished(w, rho)) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// D_{lambda,mu} = D_lambda intersected with D_mu^{-1}, sorted lexicographically.
inline std::vector<Permutation> double_coset_reps(const Composition& lambda, const Composition& mu) {
  if (lambda.offset() + lambda.size() != mu.offset() + mu.size())
    throw std::invalid_argument("double_coset_reps: compositions of different degree");
  std::vector<Permutation> out;
  for (auto& w : all_permutations(lambda.offset() + lambda.size()))
    if (is_distinguished(w, lambda) && is_distinguished(w.inverse(), mu)) out.push_back(std::move(w));
  return out;
}

// ---------------------------------------------------------------------------
// Two-part compositions: margin matrices and the explicit representatives.

/// A = [[t, u-t], [r-t, x]] with row sums (u, v) and column sums (r, s).
struct MarginMatrix {
  int a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  MarginMatrix() = default;
  MarginMatrix(int t11, int t12, int t21, int t22) : a11(t11), a12(t12), a21(t21), a22(t22) {
    if (a11 < 0 || a12 < 0 || a21 < 0 || a22 < 0)
      throw std::invalid_argument("margin matrix: negative entry");
  }

  int t() const { return a11; }
  int u() const { return a11 + a12; }
  int v() const { return a21 + a22; }
  int r() const { return a11 + a21; }
  int s() const { return a12 + a22; }
  MarginMatrix transpose() const { return {a11, a21, a12, a22}; }
  friend bool operator==(const MarginMatrix&, const MarginMatrix&) = default;
};

inline void require_two_parts(const Composition& c, const char* what) {
  if (c.parts().size() != 2 || c.offset() != 0)
    throw std::invalid_argument(std::string(what) + ": expected a two-part composition of [1,n]");
}

/// All margin matrices for lambda = (r, s) (column sums) and mu = (u, v) (row sums).
inline std::vector<MarginMatrix> margin_matrices(const Composition& lambda, const Composition& mu) {
  require_two_parts(lambda, "margin_matrices");
  require_two_parts(mu, "margin_matrices");
  const int r = lambda.parts()[0], s = lambda.parts()[1];
  const int u = mu.parts()[0], v = mu.parts()[1];
  if (r + s != u + v) throw std::invalid_argument("margin_matrices: degree mismatch");
  std::vector<MarginMatrix> out;
  for (int t = std::max(0, u - s); t <= std::min(r, u); ++t) out.emplace_back(t, u - t, r - t, t + s - u);
  return out;
}

/// The double-coset representative attached to a margin matrix:
///   j       -> j                 for 1 <= j <= t
///   t+i     -> u+i               for 1 <= i <= r-t
///   r+i     -> t+i               for 1 <= i <= u-t
///   j       -> j                 for j > u+(r-t)
inline Permutation matrix_to_perm(const MarginMatrix& A, const Composition& lambda, const Composition& mu) {
  require_two_parts(lambda, "matrix_to_perm");
  require_two_parts(mu, "matrix_to_perm");
  const int r = lambda.parts()[0], s = lambda.parts()[1];
  const int u = mu.parts()[0], v = mu.parts()[1];
  if (A.r() != r || A.s() != s || A.u() != u || A.v() != v)
    throw std::invalid_argument("matrix_to_perm: matrix inconsistent with margins");
  const int n = r + s, t = A.t();
  std::vector<int> img(n);
  for (int j = 1; j <= n; ++j) {
    if (j <= t)
      img[j - 1] = j;
    else if (j <= r)
      img[j - 1] = u + (j - t);
    else if (j <= u + (r - t))
      img[j - 1] = t + (j - r);
    else
      img[j - 1] = j;
  }
  return Permutation(std::move(img));
}

/// A factor W_I of a Young subgroup.  Singletons are kept but flagged.
struct YoungFactor {
  Interval support;
  bool trivial = false;
  friend bool operator==(const YoungFactor&, const YoungFactor&) = default;
};

struct NuDecomposition {
  int t = 0;
  std::vector<YoungFactor> nu;  ///< W_nu, in the order [1,t], [u+1,u+r-t], [t+1,u], [u+r-t+1,n]
  std::vector<YoungFactor> U;   ///< U <= W_lambda with d^{-1} U d = W_nu
};

/// W_nu = d^{-1} W_lambda d intersected with W_mu, and the matching U <= W_lambda, for
/// two-part lambda = (r, s), mu = (u, v) and d = matrix_to_perm(A) for some A.
inline NuDecomposition nu_decomposition(const Composition& lambda, const Composition& mu, const Permutation& d) {
  for (const auto& A : margin_matrices(lambda, mu)) {
    if (matrix_to_perm(A, lambda, mu) != d) continue;
    const int n = d.degree(), r = lambda.parts()[0], u = mu.parts()[0], t = A.t();
    auto factor_list = [](std::initializer_list<Interval> ivs) {
      std::vector<YoungFactor> out;
      for (const auto& iv : ivs)
        if (!iv.empty()) out.push_back({iv, iv.size() == 1});
      return out;
    };
    NuDecomposition res;
    res.t = t;
    res.nu = factor_list({{1, t}, {u + 1, u + (r - t)}, {t + 1, u}, {u + (r - t) + 1, n}});
    res.U = factor_list({{1, t}, {t + 1, r}, {r + 1, u + (r - t)}, {u + (r - t) + 1, n}});
    return res;
  }
  throw std::invalid_argument("nu_decomposition: d is not a distinguished double-coset representative");
}

}  // namespace hecke
