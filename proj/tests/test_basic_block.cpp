#include "support.hpp"

namespace hecke {
namespace {

template <class B>
class Block : public ::testing::Test {
 protected:
  using S = typename B::S;
  static const BlockConstruction<S>& block(int l) {
    static std::map<int, BlockConstruction<S>> cache;
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, BlockConstruction<S>::build(B::field(l))).first;
    return it->second;
  }
};
TYPED_TEST_SUITE(Block, testing::Backends);

std::vector<std::vector<std::size_t>> expected_dims(int l) {
  std::vector<std::vector<std::size_t>> m(l - 1, std::vector<std::size_t>(l - 1, 0));
  for (int r = 0; r < l - 1; ++r) {
    m[r][r] = 2;
    if (r + 1 < l - 1) m[r][r + 1] = m[r + 1][r] = 1;
  }
  return m;
}

TYPED_TEST(Block, OrthogonalIdempotents) {
  for (int l : {3, 4, 5, 6}) {
    const auto& B = TestFixture::block(l);
    for (int r = 1; r < l; ++r) {
      EXPECT_EQ(B.epsilon(r) * B.epsilon(r), B.epsilon(r));
      EXPECT_EQ(B.normalization(r), B.closed_form_normalization(r));
      for (int u = 1; u < l; ++u)
        if (u != r) { EXPECT_TRUE((B.epsilon(r) * B.epsilon(u)).is_zero()) << l << " " << r << " " << u; }
    }
  }
}

TYPED_TEST(Block, IdempotentsAtThree) {
  const auto& B = TestFixture::block(3);
  const auto& H = B.algebra();
  const auto q = H->q(), one_s = H->one_scalar();
  EXPECT_EQ(B.epsilon(1), B.normalization(1) * x_interval(H, {1, 2}));
  EXPECT_EQ(B.epsilon(2), B.normalization(2) * y_interval(H, {1, 2}));
  const auto T1 = t_generator(H, 1);
  const auto e1 = (one_s + q).inverse() * (one(H) + T1);
  const auto e2 = (one_s + q.inverse()).inverse() * (one(H) - q.inverse() * T1);
  EXPECT_EQ(B.epsilon(1), e1);
  EXPECT_EQ(B.epsilon(2), e2);
  EXPECT_EQ(e1 + e2, one(H));
  EXPECT_EQ(B.alpha(1), B.epsilon(1) * t_generator(H, 2) * B.epsilon(2));
  EXPECT_EQ(B.beta(1), B.epsilon(2) * t_generator(H, 2) * B.epsilon(1));
}

TYPED_TEST(Block, DimensionMatrix) {
  for (int l : {3, 4, 5}) {
    const auto& B = TestFixture::block(l);
    const auto dims = B.dims_matrix();
    EXPECT_EQ(dims, expected_dims(l));
    std::size_t total = 0;
    for (const auto& row : dims)
      for (auto x : row) total += x;
    EXPECT_EQ(total, static_cast<std::size_t>(4 * (l - 1) - 2));
  }
  const auto& B4 = TestFixture::block(4);
  EXPECT_EQ(B4.dims_matrix(), (std::vector<std::vector<std::size_t>>{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}));
  for (int r = 1; r < 4; ++r)
    for (int u = 1; u < 4; ++u) EXPECT_EQ(B4.hom_space_dim_all(r, u), B4.hom_space_dim(r, u));
}

TYPED_TEST(Block, LocalRingAtVertexOne) {
  for (int l : {3, 4, 5}) {
    const auto& B = TestFixture::block(l);
    const auto& H = B.algebra();
    const auto x = x_interval(H, {1, l});
    EXPECT_TRUE((x * x).is_zero());
    EXPECT_EQ(B.epsilon(1) * x * B.epsilon(1), x);
    EXPECT_EQ(span_dimension(H, {B.epsilon(1), x}), 2u);
    EXPECT_TRUE((x * B.alpha(1)).is_zero());
  }
}

TYPED_TEST(Block, ArrowsAndRelations) {
  for (int l : {3, 4, 5, 6}) {
    const auto& B = TestFixture::block(l);
    const auto& H = B.algebra();
    for (int r = 1; r <= l - 2; ++r) {
      EXPECT_FALSE(B.alpha(r).is_zero());
      EXPECT_FALSE(B.beta(r).is_zero());
      EXPECT_FALSE(B.rescale_factor(r).is_zero());
      EXPECT_EQ(B.beta(r), B.rescale_factor(r) * B.beta_unscaled(r));
      EXPECT_EQ(B.beta_representative(r), B.alpha_representative(r).inverse());
      EXPECT_FALSE(symmetrizing_form(B.alpha(r) * B.beta(r), one(H)).is_zero());
      EXPECT_TRUE((B.alpha(r) * B.beta(r) * B.alpha(r)).is_zero());
      if (r + 1 <= l - 2) {
        EXPECT_TRUE((B.alpha(r) * B.alpha(r + 1)).is_zero());
        EXPECT_TRUE((B.beta(r + 1) * B.beta(r)).is_zero());
        EXPECT_EQ(B.beta(r) * B.alpha(r), B.alpha(r + 1) * B.beta(r + 1)) << "l=" << l << " r=" << r;
      }
    }
    EXPECT_EQ(B.rescale_factor(1), H->one_scalar());
    for (const auto& rel : B.relations()) EXPECT_TRUE(B.evaluate(rel).is_zero()) << rel;
    for (const auto& path : B.zero_paths()) EXPECT_TRUE(B.evaluate(path).is_zero()) << path;
    EXPECT_EQ(B.relations().size(), static_cast<std::size_t>(l - 3 + 2));
  }
  EXPECT_THROW(TestFixture::block(4).named("gamma_1"), std::invalid_argument);
}

TYPED_TEST(Block, ArrowRepresentativesAtFive) {
  const auto& B = TestFixture::block(5);
  EXPECT_EQ(B.alpha_representative(2), Permutation({3, 4, 1, 2, 5}));
  EXPECT_EQ(B.alpha_representative(1), Permutation({1, 5, 2, 3, 4}).inverse());
}

TYPED_TEST(Block, UnrescaledCommutationFailsOnlyByAScalar) {
  const auto& B = TestFixture::block(5);
  for (int r = 1; r <= 2; ++r) {
    const auto ratio = scalar_ratio(B.beta(r) * B.alpha(r), B.alpha(r + 1) * B.beta_unscaled(r + 1));
    ASSERT_TRUE(ratio.has_value());
    EXPECT_EQ(*ratio, B.rescale_factor(r + 1));
  }
}

TYPED_TEST(Block, RadicalAndSocle) {
  for (int l : {3, 4, 5}) {
    const auto& B = TestFixture::block(l);
    std::size_t total = 0;
    for (int r = 1; r < l; ++r) {
      const auto rs = B.radical_socle_bases(r);
      EXPECT_EQ(rs.projective_dimension, (r == 1 || r == l - 1) ? 3u : 4u);
      total += rs.projective_dimension;
      if (r == 1) { EXPECT_EQ(rs.socle, B.alpha(1) * B.beta(1)); }
      for (int j = 1; j <= l - 2; ++j) {
        EXPECT_TRUE((rs.socle * B.alpha(j)).is_zero());
        EXPECT_TRUE((rs.socle * B.beta(j)).is_zero());
      }
    }
    EXPECT_EQ(total, static_cast<std::size_t>(4 * (l - 1) - 2));
    EXPECT_THROW(B.radical_socle_bases(l), std::out_of_range);
  }
}

TYPED_TEST(Block, VerifyPresentationPasses) {
  for (int l : {3, 4, 5}) {
    const auto rep = TestFixture::block(l).verify_presentation();
    for (const auto& c : rep.checks()) EXPECT_TRUE(c.ok()) << "l=" << l << " " << c.name << " " << c.witness;
  }
  const auto B2 = BlockConstruction<typename TestFixture::S>::build(TypeParam::field(2));
  EXPECT_TRUE(B2.verify_presentation().all_ok());
  EXPECT_TRUE((B2.loop() * B2.loop()).is_zero());
  EXPECT_EQ(B2.presentation().dimension, 2u);
}

// eps_lambda T_d eps_mu vanishes exactly when eps_nu(d) eps_mu does, for
// every pair of two-part compositions and every double-coset representative.
TYPED_TEST(Block, NuCriterionForVanishing) {
  for (int l : {3, 4, 5}) {
    const auto H = HeckeAlgebra<typename TestFixture::S>::create(l, TypeParam::field(l));
    for (int r = 1; r < l; ++r)
      for (int u = 1; u < l; ++u) {
        const Composition lambda({r, l - r}), mu({u, l - u});
        for (bool x_leading : {false, true}) {
          const auto eps_l = two_part_element(H, lambda, x_leading);
          const auto eps_m = two_part_element(H, mu, x_leading);
          for (const auto& d : double_coset_reps(lambda, mu)) {
            const auto f = epsilon_nu(H, lambda, mu, d, x_leading);
            const auto Td = t_basis(H, d);
            EXPECT_EQ(eps_l, f.zeta * f.u_part);
            EXPECT_EQ(eps_l * Td, f.zeta * Td * f.epsilon_nu) << lambda.str() << mu.str() << d.str();
            EXPECT_EQ((eps_l * Td * eps_m).is_zero(), (f.epsilon_nu * eps_m).is_zero())
                << lambda.str() << mu.str() << d.str() << x_leading;
          }
        }
      }
  }
}

TYPED_TEST(Block, PresentationRecord) {
  const auto& B = TestFixture::block(4);
  const auto p = B.presentation();
  EXPECT_EQ(p.vertices, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(p.arrows.size(), 4u);
  EXPECT_EQ(p.dimension, 10u);
  ASSERT_EQ(p.rescale.size(), 1u);
  EXPECT_EQ(p.rescale[0].first, 2);
  EXPECT_EQ(p.arrows[0].name, "alpha_1");
  EXPECT_EQ(p.arrows[0].source, 1);
  EXPECT_EQ(p.arrows[0].target, 2);
  EXPECT_EQ(p.zero_paths, (std::vector<std::string>{"alpha_1*alpha_2", "beta_2*beta_1"}));
}

}  // namespace
}  // namespace hecke
