#include "support.hpp"

namespace hecke {
namespace {

TEST(Json, PermutationAndFieldSpec) {
  EXPECT_EQ(to_json(Permutation({3, 1, 2})).dump(), "[3,1,2]");
  const auto gf = GaloisField::create(2, 2, 3);
  EXPECT_EQ(to_json(gf->spec()).dump(),
            R"({"kind":"gf","l":3,"p":2,"k":2,"modulus":")" + gf->spec().modulus + R"(","q":")" + gf->q().str() + "\"}");
  EXPECT_EQ(to_json(CyclotomicField::create(4)->spec()).dump(),
            R"({"kind":"cyclo","l":4,"p":0,"k":2,"modulus":"z^2 + 1","q":"z"})");
}

template <class B>
class JsonRoundTrip : public ::testing::Test {};
TYPED_TEST_SUITE(JsonRoundTrip, testing::Backends);

TYPED_TEST(JsonRoundTrip, HeckeElement) {
  std::mt19937 rng(23);
  const auto H = HeckeAlgebra<typename TypeParam::S>::create(4, TypeParam::field(5));
  for (int trial = 0; trial < 10; ++trial) {
    const auto h = testing::random_element(H, rng, 6);
    const auto j = to_json(h);
    EXPECT_EQ(j.at("n"), 4);
    EXPECT_EQ(hecke_element_from_json(H, ordered_json::parse(j.dump())), h);
    for (std::size_t k = 1; k < j.at("terms").size(); ++k)
      EXPECT_LT(H->index_of(Permutation(j["terms"][k - 1]["perm"].template get<std::vector<int>>())),
                H->index_of(Permutation(j["terms"][k]["perm"].template get<std::vector<int>>())));
  }
  const auto j1 = to_json(t_generator(H, 2));
  EXPECT_EQ(j1.dump(), R"({"n":4,"terms":[{"perm":[1,3,2,4],"coef":"1"}]})");
  const auto H3 = HeckeAlgebra<typename TypeParam::S>::create(3, TypeParam::field(5));
  EXPECT_THROW(hecke_element_from_json(H3, j1), std::invalid_argument);
}

TYPED_TEST(JsonRoundTrip, Module) {
  using S = typename TypeParam::S;
  const auto H = HeckeAlgebra<S>::create(4, TypeParam::field(3));
  const auto P = hecke_algebra_by_generators(H, false);
  const auto M = permutation_module(H, Composition({2, 2}), P).module;
  const auto j = to_json(M);
  EXPECT_EQ(j.at("algebra"), "H_q(4)");
  EXPECT_EQ(j.at("dim"), 6);
  const auto back = module_from_json(P, ordered_json::parse(j.dump()));
  ASSERT_EQ(back.dim(), M.dim());
  for (int g = 0; g < 3; ++g) EXPECT_EQ(back.action(g), M.action(g));

  auto missing = j;
  missing["generators"].erase(1);
  EXPECT_THROW(module_from_json(P, missing), std::invalid_argument);
  auto wrong = j;
  wrong["algebra"] = "H_q(5)";
  EXPECT_THROW(module_from_json(P, wrong), std::invalid_argument);
  auto bad_rows = j;
  bad_rows["generators"][0]["matrix"].erase(0);
  EXPECT_THROW(module_from_json(P, bad_rows), std::invalid_argument);
}

TYPED_TEST(JsonRoundTrip, QuiverPresentation) {
  const auto B = BlockConstruction<typename TypeParam::S>::build(TypeParam::field(4));
  const auto p = B.presentation();
  const auto j = to_json(p);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"l", "field", "vertices", "arrows", "relations", "zero_paths", "rescale",
                                            "dimension"}));
  EXPECT_EQ(j.at("dimension"), 10);
  EXPECT_EQ(j.at("vertices"), ordered_json::parse("[1,2,3]"));
  EXPECT_EQ(j.at("arrows").size(), 4u);
  EXPECT_EQ(j["arrows"][2]["name"], "beta_1");
  EXPECT_EQ(j["arrows"][2]["src"], 2);
  EXPECT_EQ(j["arrows"][2]["dst"], 1);
  EXPECT_TRUE(j.at("rescale").contains("a_2"));
  EXPECT_EQ(B.field().parse(j["rescale"]["a_2"].template get<std::string>()), B.rescale_factor(2));
  for (std::size_t k = 0; k < p.arrows.size(); ++k)
    EXPECT_EQ(hecke_element_from_json(B.algebra(), j["arrows"][k]["element"]), p.arrows[k].element);
  EXPECT_EQ(j.dump(), to_json(BlockConstruction<typename TypeParam::S>::build(TypeParam::field(4)).presentation()).dump());

  const auto dot = to_dot(p);
  EXPECT_NE(dot.find("digraph quiver"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2 [label=\"alpha_1\"]"), std::string::npos);
  EXPECT_NE(dot.find("3 -> 2 [label=\"beta_2\"]"), std::string::npos);
}

}  // namespace
}  // namespace hecke
