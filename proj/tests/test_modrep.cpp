#include "support.hpp"

namespace hecke {
namespace {

template <class B>
class ModRep : public ::testing::Test {
 protected:
  using S = typename B::S;
  static const BlockConstruction<S>& block(int l) {
    static std::map<int, BlockConstruction<S>> cache;
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, BlockConstruction<S>::build(B::field(l))).first;
    return it->second;
  }
  static const BasicAlgebra<S>& basic(int l) {
    static std::map<int, BasicAlgebra<S>> cache;
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, basic_algebra(block(l))).first;
    return it->second;
  }
};
TYPED_TEST_SUITE(ModRep, testing::Backends);

template <class S>
ModuleRep<S> one_dimensional(const AlgebraPtr<S>& H, const S& value) {
  std::vector<Matrix<S>> act;
  for (std::size_t g = 0; g < H->num_generators(); ++g) {
    auto m = Matrix<S>::zero(1, 1, H->field());
    m(0, 0) = value;
    act.push_back(std::move(m));
  }
  return ModuleRep<S>(H, 1, std::move(act));
}

TYPED_TEST(ModRep, SigmaNilpotency) {
  for (int l : {3, 4, 5}) {
    const auto& B = TestFixture::block(l);
    const auto sd = build_sigma(B);
    EXPECT_TRUE((sd.sigma_squared * sd.sigma).is_zero());
    EXPECT_FALSE(sd.sigma_squared.is_zero());
    EXPECT_EQ(sd.sigma * sd.sigma, sd.sigma_squared);
    for (int r = 1; r < l; ++r) EXPECT_FALSE((B.epsilon(r) * sd.sigma_squared * B.epsilon(r)).is_zero()) << l << r;
    const auto rep = verify_sigma(B, sd);
    for (const auto& c : rep.checks()) EXPECT_TRUE(c.ok()) << "l=" << l << " " << c.name;
  }
}

TYPED_TEST(ModRep, SigmaScalarValidation) {
  const auto& B = TestFixture::block(4);
  const auto& f = B.field();
  using S = typename TestFixture::S;
  EXPECT_THROW(build_sigma<S>(B, std::vector<S>{f.one()}), std::invalid_argument);
  EXPECT_THROW(build_sigma<S>(B, std::vector<S>{f.zero(), f.one()}), std::invalid_argument);
  EXPECT_THROW(build_sigma<S>(B, std::vector<S>{f.one(), -f.one()}), std::invalid_argument);
  const auto sd = build_sigma<S>(B, std::vector<S>{f.one(), f.from_int(2)});
  EXPECT_TRUE(verify_sigma(B, sd).all_ok());
}

TEST(ModRepChar2, DefaultScalarsAvoidCancellation) {
  const auto F = GaloisField::create(2, 4, 5);
  const auto c = default_sigma_scalars<GaloisElement>(*F, 5);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[1], F->q());
  for (std::size_t r = 0; r + 1 < c.size(); ++r) EXPECT_FALSE((c[r] + c[r + 1]).is_zero());
  const auto B = BlockConstruction<GaloisElement>::build(F);
  EXPECT_THROW(build_sigma<GaloisElement>(B, std::vector<GaloisElement>(3, F->one())), std::invalid_argument);
}

TEST(JordanType, KnownNilpotentMatrices) {
  const auto F = CyclotomicField::create(3);
  auto J = Matrix<Cyclotomic>::zero(6, 6, *F);
  J(0, 1) = J(1, 2) = J(3, 4) = F->one();
  EXPECT_EQ(jordan_type(J, 3, *F), (std::vector<int>{3, 2, 1}));
  auto E = Matrix<Cyclotomic>::zero(6, 6, *F);
  E(0, 5) = F->q();
  E(3, 1) = F->from_int(2);
  const auto I = Matrix<Cyclotomic>::identity(6, *F);
  auto P = I, Pinv = I;
  P += E;
  Pinv -= E;
  ASSERT_EQ(P * Pinv, (Matrix<Cyclotomic>::identity(6, *F)));
  EXPECT_EQ(jordan_type(Pinv * J * P, 3, *F), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(jordan_type(Matrix<Cyclotomic>::zero(2, 2, *F), 3, *F), (std::vector<int>{1, 1}));
  auto N4 = Matrix<Cyclotomic>::zero(4, 4, *F);
  N4(0, 1) = N4(1, 2) = N4(2, 3) = F->one();
  EXPECT_THROW(jordan_type(N4, 3, *F), std::invalid_argument);
  EXPECT_EQ(jordan_type(N4, 4, *F), (std::vector<int>{4}));
}

TYPED_TEST(ModRep, BasicAlgebraMatchesHeckeProducts) {
  for (int l : {3, 4, 5}) {
    const auto& A = TestFixture::basic(l);
    EXPECT_EQ(A.algebra->dim(), static_cast<std::size_t>(4 * (l - 1) - 2));
    EXPECT_TRUE(regular_module(A.algebra).relation_audit().empty());
    for (std::size_t a = 0; a < A.basis_elements.size(); ++a)
      for (std::size_t b = 0; b < A.basis_elements.size(); ++b) {
        const auto prod = A.coordinates(A.basis_elements[a] * A.basis_elements[b]);
        ASSERT_TRUE(prod.has_value());
        EXPECT_EQ(*prod, A.algebra->multiply(A.algebra->basis_vector(a), A.algebra->basis_vector(b)))
            << A.basis_labels[a] << " " << A.basis_labels[b];
      }
    const auto T1 = t_generator(TestFixture::block(l).algebra(), 1);
    EXPECT_EQ(A.coordinates(T1).has_value(), l == 3);
  }
}

TYPED_TEST(ModRep, JordanTypeOfSigma) {
  for (int l : {3, 4, 5}) {
    const auto& A = TestFixture::basic(l);
    const auto sd = build_sigma(TestFixture::block(l));
    const auto sigma = A.coordinates(sd.sigma);
    ASSERT_TRUE(sigma.has_value());
    const auto jt = sigma_jordan(A, *sigma, l);
    int total = 0;
    for (int x : jt.on_algebra) total += x;
    EXPECT_EQ(total, 4 * (l - 1) - 2);
    if (l == 3) {
      EXPECT_EQ(jt.on_algebra, (std::vector<int>{3, 3}));
    } else {
      EXPECT_FALSE(all_equal_to(jt.on_algebra, 3));
    }
    if (l == 4) {
      EXPECT_EQ(jt.summand_dim[1], 4u);
      EXPECT_EQ(jt.on_summand[1], (std::vector<int>{3, 1}));
    }
    for (int r = 1; r < l; ++r) EXPECT_TRUE(jt.summand_invariant[r - 1]);
  }
}

TYPED_TEST(ModRep, TensorPowers) {
  const auto& A = TestFixture::basic(3);
  const auto& f = A.algebra->field();
  const auto A2 = tensor_power(A.algebra, 2);
  EXPECT_EQ(A2->dim(), 36u);
  EXPECT_EQ(A2->num_generators(), 2 * A.algebra->num_generators());
  EXPECT_EQ(A2->generators()[0], A.algebra->generators()[0] + "@1");
  EXPECT_TRUE(regular_module(A2).relation_audit().empty());
  const auto A3 = tensor_power(A.algebra, 3);
  EXPECT_EQ(A3->dim(), 216u);
  EXPECT_EQ(A3->generators().back(), A.algebra->generators().back() + "@3");
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const auto x = A.algebra->basis_vector(a), y = A.algebra->basis_vector(b);
      const auto lhs = A2->multiply(tensor_coordinates<typename TestFixture::S>({x, y}, f),
                                    tensor_coordinates<typename TestFixture::S>({y, x}, f));
      EXPECT_EQ(lhs, tensor_coordinates<typename TestFixture::S>({A.algebra->multiply(x, y), A.algebra->multiply(y, x)}, f));
    }
  EXPECT_THROW(tensor_power(A.algebra, 0), std::invalid_argument);
  EXPECT_THROW(tensor_power(A.algebra, 6, 10000), std::invalid_argument);
}

TYPED_TEST(ModRep, AnnihilatorAgreesWithOracle) {
  for (int l : {3, 4}) {
    const auto& A = TestFixture::basic(l);
    const auto& f = A.algebra->field();
    const auto sigma2 = A.coordinates(build_sigma(TestFixture::block(l)).sigma_squared);
    ASSERT_TRUE(sigma2.has_value());
    for (int m = 1; m <= (l == 3 ? 2 : 1); ++m) {
      const auto B = tensor_power(A.algebra, m);
      std::vector<std::vector<int>> tuples{{}};
      for (int i = 0; i < m; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
          for (int r = 1; r < l; ++r) {
            auto u = t;
            u.push_back(r);
            next.push_back(u);
          }
        tuples = next;
      }
      for (const auto& t : tuples) {
        std::vector<Vec<typename TestFixture::S>> parts;
        for (int r : t) parts.push_back(A.algebra->basis_vector(r - 1));
        const auto P = idempotent_ideal(B, tensor_coordinates(parts, f));
        EXPECT_TRUE(P.relation_audit().empty());
        EXPECT_TRUE(annihilator_test(P, A.algebra, *sigma2, m).nonzero);
        EXPECT_TRUE(splitting_projectivity_oracle(P));
        const auto Sm = vertex_simple(B, t);
        EXPECT_TRUE(Sm.relation_audit().empty());
        EXPECT_FALSE(annihilator_test(Sm, A.algebra, *sigma2, m).nonzero);
        EXPECT_FALSE(splitting_projectivity_oracle(Sm));
      }
      if (m == 1)
        for (int r = 1; r < l; ++r) {
          const auto P = idempotent_ideal(B, A.algebra->basis_vector(r - 1));
          EXPECT_EQ(P.dim(), (r == 1 || r == l - 1) ? 3u : 4u);
          EXPECT_EQ(annihilator_test(P, A.algebra, *sigma2, 1).rank, 1u);
        }
    }
    EXPECT_THROW(annihilator_test(regular_module(A.algebra), A.algebra, *sigma2, 2), std::invalid_argument);
  }
}

TYPED_TEST(ModRep, SplittingOracleOnNonProjectives) {
  const auto& A = TestFixture::basic(3);
  const auto R = regular_module(A.algebra);
  EXPECT_TRUE(splitting_projectivity_oracle(R));
  const auto P1 = idempotent_ideal(A.algebra, A.algebra->basis_vector(0));
  std::vector<Vec<typename TestFixture::S>> socle;
  const auto sd = build_sigma(TestFixture::block(3));
  const auto s2 = *A.coordinates(sd.sigma_squared);
  const auto image = P1.element_matrix(s2);
  for (std::size_t i = 0; i < image.rows(); ++i) {
    Vec<typename TestFixture::S> row(P1.dim(), A.algebra->field().zero());
    for (std::size_t j = 0; j < P1.dim(); ++j) row[j] = image(i, j);
    if (!is_zero_vec(row)) socle.push_back(row);
  }
  ASSERT_FALSE(socle.empty());
  std::vector<Vec<typename TestFixture::S>> all = standard_basis<typename TestFixture::S>(P1.dim(), A.algebra->field());
  const auto Q = subquotient(P1, socle, all);
  EXPECT_EQ(Q.dim(), 2u);
  EXPECT_FALSE(splitting_projectivity_oracle(Q));
  const auto sigma2 = A.coordinates(sd.sigma_squared);
  EXPECT_FALSE(annihilator_test(Q, A.algebra, *sigma2, 1).nonzero);
}

TYPED_TEST(ModRep, HeckePresentationStructure) {
  using S = typename TestFixture::S;
  const auto H = HeckeAlgebra<S>::create(4, TypeParam::field(3));
  const auto P = hecke_algebra_by_generators(H, true);
  const testing::RegularOracle<S> oracle(H);
  EXPECT_EQ(P->dim(), 24u);
  EXPECT_EQ(P->label(), "H_q(4)");
  EXPECT_TRUE(regular_module(P).relation_audit().empty());
  for (int i = 1; i < 4; ++i) EXPECT_EQ(P->structure().right[i - 1], oracle.basis_matrix(H->index_of(Permutation::simple(4, i))));
  for (BasisIndex w = 0; w < 24; ++w) EXPECT_EQ(P->right_basis_matrix(w), oracle.basis_matrix(w));
  EXPECT_EQ(hecke_relations<S>(4, H->field()).size(), 3u + 2u + 1u);
}

// The symmetric-form oracle for H_q(n) agrees with the generic splitting oracle.
TYPED_TEST(ModRep, HeckeOracleMatchesGenericOracle) {
  using S = typename TestFixture::S;
  for (int n : {3, 4}) {
    const auto H = HeckeAlgebra<S>::create(n, TypeParam::field(3));
    const auto P = hecke_algebra_by_generators(H, true);
    const auto& f = H->field();
    std::vector<std::pair<std::string, ModuleRep<S>>> modules;
    modules.emplace_back("regular", regular_module(P));
    modules.emplace_back("trivial", one_dimensional(P, f.q()));
    modules.emplace_back("sign", one_dimensional(P, -f.one()));
    for (const auto& parts : std::vector<std::vector<int>>{{2, 1}, {1, 2}, {3}, {2, 2}, {3, 1}, {2, 1, 1}}) {
      int sum = 0;
      for (int p : parts) sum += p;
      if (sum != n) continue;
      modules.emplace_back("x" + Composition(parts).str(), permutation_module(H, Composition(parts), P).module);
    }
    for (const auto& [name, M] : modules) {
      EXPECT_TRUE(M.relation_audit().empty()) << name;
      EXPECT_EQ(hecke_splitting_oracle(M, H), splitting_projectivity_oracle(M)) << "n=" << n << " " << name;
    }
    EXPECT_TRUE(hecke_splitting_oracle(modules[0].second, H));
    EXPECT_FALSE(hecke_splitting_oracle(modules[1].second, H));
    EXPECT_FALSE(hecke_splitting_oracle(modules[2].second, H));
  }
  const auto H3 = HeckeAlgebra<S>::create(3, TypeParam::field(3));
  const auto P3 = hecke_algebra_by_generators(H3, false);
  EXPECT_TRUE(hecke_splitting_oracle(permutation_module(H3, Composition({2, 1}), P3).module, H3));
  EXPECT_FALSE(hecke_splitting_oracle(permutation_module(H3, Composition({3}), P3).module, H3));
}

TYPED_TEST(ModRep, PermutationModules) {
  using S = typename TestFixture::S;
  const auto H = HeckeAlgebra<S>::create(5, TypeParam::field(3));
  const auto P = hecke_algebra_by_generators(H, false);
  for (const auto& parts : std::vector<std::vector<int>>{{5}, {3, 2}, {2, 2, 1}, {1, 1, 1, 1, 1}}) {
    const Composition rho(parts);
    const auto pm = permutation_module(H, rho, P);
    EXPECT_EQ(pm.module.dim() * rho.young_order(), factorial(5));
    EXPECT_TRUE(pm.module.relation_audit().empty()) << rho.str();
    const auto homs = trivial_hom_spaces(pm.module);
    EXPECT_EQ(homs.embeddings.size(), 1u) << rho.str();
    EXPECT_EQ(homs.quotients.size(), 1u) << rho.str();
  }
  EXPECT_THROW(permutation_module(H, Composition({3, 3}), P), std::invalid_argument);
  const auto P4 = hecke_algebra_by_generators(HeckeAlgebra<S>::create(4, TypeParam::field(3)), false);
  EXPECT_THROW(permutation_module(H, Composition({2, 3}), P4), std::invalid_argument);
}

TYPED_TEST(ModRep, SubmodulesAndRestriction) {
  using S = typename TestFixture::S;
  const auto H = HeckeAlgebra<S>::create(4, TypeParam::field(3));
  const auto P = hecke_algebra_by_generators(H, false);
  const auto& f = H->field();
  const auto M = permutation_module(H, Composition({2, 2}), P).module;
  const auto homs = trivial_hom_spaces(M);
  ASSERT_EQ(homs.embeddings.size(), 1u);
  EXPECT_TRUE(is_invariant(M, homs.embeddings));
  const auto K = submodule(M, homs.embeddings);
  EXPECT_EQ(K.dim(), 1u);
  EXPECT_EQ(K.action(0)(0, 0), f.q());
  const auto ker = form_kernel(homs.quotients[0], f);
  EXPECT_EQ(ker.size(), M.dim() - 1);
  EXPECT_TRUE(is_invariant(M, ker));
  EXPECT_EQ(submodule_closure(M, {standard_basis<S>(M.dim(), f)[0]}).dim(), M.dim());
  EXPECT_THROW(subquotient(M, {}, {standard_basis<S>(M.dim(), f)[0]}), std::invalid_argument);

  const auto H2 = hecke_algebra_by_generators(HeckeAlgebra<S>::create(2, TypeParam::field(3)), true);
  const auto target = tensor_power(H2, 2);
  const auto R = restrict_module(M, Composition({2, 2}), target);
  EXPECT_TRUE(R.relation_audit().empty());
  EXPECT_EQ(R.action("T1@2"), M.action("T3"));
  EXPECT_THROW(restrict_module(M, Composition({3, 1}), target), std::invalid_argument);
}

TEST(PermModDemo, FastFacts) {
  const auto demo = run_permmod_demo(false);
  EXPECT_EQ(demo.dim_m, 20u);
  EXPECT_EQ(demo.embeddings, 1u);
  EXPECT_EQ(demo.quotients, 1u);
  EXPECT_TRUE(demo.composite_zero);
  EXPECT_EQ(demo.dim_v, 18u);
  EXPECT_EQ(demo.annihilator_rank, 2u);
  EXPECT_TRUE(demo.projective_over_parabolic_annihilator);
  EXPECT_TRUE(demo.projective_over_parabolic_oracle);
  EXPECT_EQ(demo.trivial_summands_restricted, 2u);
  EXPECT_FALSE(demo.projective_over_h.has_value());
  for (const auto& c : demo.report.checks()) EXPECT_TRUE(c.ok()) << c.name << " " << c.witness;
}

TYPED_TEST(ModRep, VerifyModrepSuite) {
  for (int l : {3, 4, 5}) {
    const auto rep = verify_modrep(TestFixture::block(l));
    for (const auto& c : rep.checks()) EXPECT_TRUE(c.ok()) << "l=" << l << " " << c.name << " " << c.witness;
  }
}

}  // namespace
}  // namespace hecke
