#pragma once

#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>
#include <vector>

#include "hecke/hecke.hpp"

namespace hecke::testing {

struct Cyclo {
  using S = Cyclotomic;
  static FieldPtr<S> field(int l) { return CyclotomicField::create(l); }
};

/// Small finite fields with a primitive l-th root of unity, preferring characteristic 2.
struct Finite {
  using S = GaloisElement;
  static FieldPtr<S> field(int l) {
    static const std::map<int, std::pair<int, int>> table{{2, {3, 1}}, {3, {2, 2}}, {4, {5, 1}}, {5, {2, 4}},
                                                          {6, {7, 1}}, {7, {2, 3}}, {8, {17, 1}}};
    const auto [p, k] = table.at(l);
    return GaloisField::create(p, k, l);
  }
};

using Backends = ::testing::Types<Cyclo, Finite>;

/// Word length of w in the Cayley graph of the simple transpositions (BFS).
inline std::map<std::vector<int>, int> cayley_distances(int n) {
  std::map<std::vector<int>, int> dist;
  const auto id = Permutation::identity(n);
  dist[id.one_line()] = 0;
  std::queue<Permutation> queue;
  queue.push(id);
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop();
    for (int i = 1; i < n; ++i) {
      const auto v = compose(w, Permutation::simple(n, i));
      if (dist.emplace(v.one_line(), dist[w.one_line()] + 1).second) queue.push(v);
    }
  }
  return dist;
}

/// Right regular representation of H_q(n) built from the quadratic rule on
/// basis indices, and products evaluated through the longest-first reduced
/// word (reverse of the greedy word).
template <class S>
class RegularOracle {
 public:
  explicit RegularOracle(const HeckePtr<S>& H) : H_(H) {
    const std::size_t N = H->dimension();
    for (int i = 1; i < H->degree(); ++i) {
      auto R = Matrix<S>::zero(N, N, H->field());
      const auto si = Permutation::simple(H->degree(), i);
      for (BasisIndex w = 0; w < N; ++w) {
        const auto& pw = H->permutation(w);
        const auto v = H->index_of(compose(pw, si));
        if (length(compose(pw, si)) > length(pw)) {
          R(w, v) = H->field().one();
        } else {
          R(w, v) = H->q();
          R(w, w) = H->q() - H->field().one();
        }
      }
      gens_.push_back(std::move(R));
    }
  }

  Matrix<S> basis_matrix(BasisIndex v) const {
    // any reduced word works; use the one built from largest right descents
    auto w = H_->permutation(v);
    std::vector<int> word;
    while (!w.is_identity()) {
      for (int i = H_->degree() - 1; i >= 1; --i) {
        const auto ws = compose(w, Permutation::simple(H_->degree(), i));
        if (length(ws) < length(w)) {
          word.push_back(i);
          w = ws;
          break;
        }
      }
    }
    auto M = Matrix<S>::identity(H_->dimension(), H_->field());
    for (auto it = word.rbegin(); it != word.rend(); ++it) M = M * gens_[*it - 1];
    return M;
  }

  Vec<S> multiply(const HeckeElement<S>& a, const HeckeElement<S>& b) const {
    Vec<S> out(H_->dimension(), H_->field().zero());
    const auto da = to_dense(a);
    for (const auto& [v, c] : b.terms()) {
      const auto prod = vec_mat(da, basis_matrix(v), H_->field().zero());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += c * prod[k];
    }
    return out;
  }

 private:
  HeckePtr<S> H_;
  std::vector<Matrix<S>> gens_;
};

template <class S>
HeckeElement<S> random_element(const HeckePtr<S>& H, std::mt19937& rng, int terms = 4, int range = 3) {
  std::uniform_int_distribution<BasisIndex> pick(0, static_cast<BasisIndex>(H->dimension() - 1));
  std::uniform_int_distribution<int> coef(-range, range);
  std::uniform_int_distribution<int> qpow(0, 2);
  auto h = zero_element(H);
  for (int k = 0; k < terms; ++k) {
    const auto c = H->field().from_int(coef(rng)) * power(H->q(), qpow(rng));
    h += c * t_basis(H, pick(rng));
  }
  return h;
}

}  // namespace hecke::testing
