#include <gtest/gtest.h>

#include <random>

#include "semvec/compositional_fixture.hpp"
#include "semvec/concept_algebra.hpp"

using namespace semvec;

namespace {

VectorSpace random_space(std::size_t v, std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<std::string> vocab;
  Matrix m(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < v; ++i) vocab.push_back("w" + std::to_string(i));
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return VectorSpace(vocab, m);
}

Vector unit(const VectorSpace& s, const std::string& t) {
  const Vector v = s.row(*s.index_of(t)).transpose();
  return v / v.norm();
}

class FixtureTest : public ::testing::Test {
 protected:
  VectorSpace space = compositional_fixture();
  Index index{space};
};

}  // namespace

TEST(Analogy, IdentityWithoutExclusion) {
  std::mt19937_64 rng(17);
  const auto space = random_space(100, 16, rng);
  const Index idx(space);
  for (int t = 0; t < 20; ++t) {
    const std::string a = "w" + std::to_string(t);
    const std::string b = "w" + std::to_string(99 - t);
    const auto top = analogy(idx, a, b, a, 1, ExclusionPolicy::none);
    EXPECT_EQ(top[0].token, b);
    EXPECT_GE(top[0].score, 1.0 - 1e-9);
  }
}

TEST(Analogy, ExcludesInputsByDefault) {
  const VectorSpace s({"a", "b", "c", "d"},
                      (Matrix(4, 3) << 1, 0, 0, 1, 1, 0, 0, 0, 1, 0, 1, 1).finished());
  const Index idx(s);
  const auto top = analogy(idx, "a", "b", "c", 4);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].token, "d");
  EXPECT_THROW(analogy(idx, "a", "b", "zz", 1), UnknownTokenError);
}

TEST_F(FixtureTest, ProbesAnswerAtRankOne) {
  for (const auto& p : compositional_fixture_probes()) {
    EXPECT_EQ(analogy(index, p.a, p.b, p.c, 1)[0].token, p.d) << p.a << ":" << p.b << "::" << p.c;
  }
}

TEST_F(FixtureTest, AssociateRecoversParis) {
  const auto top = associate(index, uniform_weights({"france", "city", "fashion"}), 3);
  EXPECT_EQ(top[0].token, "paris");
  EXPECT_NEAR(top[0].score, 1.0, 1e-3);
}

TEST_F(FixtureTest, AssociateZeroSumIsAnError) {
  EXPECT_THROW(associate(index, {{"cold", 1.0}, {"cold", -1.0}}, 1), DataError);
  EXPECT_THROW(associate(index, {}, 1), DataError);
}

TEST(BuildConcept, ExactSums) {
  const VectorSpace s({"x", "y", "z"}, (Matrix(3, 2) << 3, 0, 0, 2, 1, 1).finished());
  const auto c = build_concept(s, {{"x", 1.0}, {"y", 1.0}}, {});
  EXPECT_NEAR(c.components(0), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.components(1), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_EQ(c.provenance.kind, Provenance::Kind::weighted_sum);
  EXPECT_EQ(c.provenance.label, "+x +y");

  const auto d = build_concept(s, {{"x", 1.0}}, {{"y", 0.5}});
  const Vector expected = (Vector(2) << 1, -0.5).finished().normalized();
  EXPECT_LT((d.components - expected).norm(), 1e-12);
  EXPECT_EQ(d.provenance.label, "+x -y");
  EXPECT_THROW(build_concept(s, {{"x", 1.0}}, {{"x", 1.0}}), DataError);
  EXPECT_THROW(build_concept(s, {}, {{"x", 1.0}}), DataError);
}

TEST(BuildConcept, AntonymSubtractionSeparates) {
  // safe and dangerous share a "risk" axis; subtracting dangerous moves away from it
  const VectorSpace s({"safe", "dangerous", "secure", "hazard"},
                      (Matrix(4, 3) << 1, 1, 0, -1, 1, 0, 1, 0, 0.2, -1, 0.9, 0).finished());
  const Index idx(s);
  const auto plain = build_concept(s, {{"safe", 1.0}}, {});
  const auto contrast = build_concept(s, {{"safe", 1.0}}, {{"dangerous", 1.0}});
  const Vector hazard = unit(s, "hazard");
  EXPECT_LT(cosine(contrast.components, hazard), cosine(plain.components, hazard));
  EXPECT_EQ(idx.nearest(contrast, 1, {"safe"})[0].token, "secure");
}

TEST(Relation, ExactOnNoiseFreeFixture) {
  const auto s = compositional_fixture(7, 0.0);
  const auto r = learn_relation(s, {{"snow", "icy_roads"}}, "causes_road_condition");
  // unit rows of two-primitive compounds are (e_i + e_j)/sqrt2
  Vector expected = Vector::Zero(static_cast<Eigen::Index>(s.dim()));
  expected(*s.index_of("road")) = 1.0 / std::sqrt(2.0);
  expected(*s.index_of("precipitation")) = -1.0 / std::sqrt(2.0);
  EXPECT_LT((r.displacement - expected).norm(), 1e-12);

  const Index idx(s);
  const auto top = apply_relation(idx, r, "rain", 1);
  EXPECT_EQ(top[0].token, "wet_roads");
  EXPECT_NEAR(top[0].score, 1.0, 1e-12);
}

TEST(Relation, MeanOfPairDisplacements) {
  std::mt19937_64 rng(4);
  const auto s = random_space(10, 5, rng);
  const auto r = learn_relation(s, {{"w0", "w1"}, {"w2", "w3"}, {"w4", "w5"}});
  const Vector expected =
      ((unit(s, "w1") - unit(s, "w0")) + (unit(s, "w3") - unit(s, "w2")) + (unit(s, "w5") - unit(s, "w4"))) / 3.0;
  EXPECT_LT((r.displacement - expected).norm(), 1e-12);
  EXPECT_THROW(learn_relation(s, {}), DataError);
  EXPECT_THROW(learn_relation(s, {{"w0", "nope"}}), UnknownTokenError);
}

TEST(Relation, CompositionAlgebra) {
  std::mt19937_64 rng(5);
  const auto s = random_space(12, 4, rng);
  const auto r1 = learn_relation(s, {{"w0", "w1"}}, "r1");
  const auto r2 = learn_relation(s, {{"w2", "w3"}}, "r2");
  const auto r3 = learn_relation(s, {{"w4", "w5"}}, "r3");
  const auto zero = compose_relations(r1, negate(r1));
  EXPECT_LT(zero.displacement.norm(), 1e-15);
  const auto left = compose_relations(compose_relations(r1, r2), r3);
  const auto right = compose_relations(r1, compose_relations(r2, r3));
  EXPECT_LT((left.displacement - right.displacement).norm(), 1e-12);
  EXPECT_EQ(left.support.size(), 3u);
  EXPECT_EQ(compose_relations(r1, r2).name, "r1.r2");
  EXPECT_EQ(negate(r1).support[0], (TokenPair{"w1", "w0"}));
}

TEST_F(FixtureTest, ChainedRelationsReachKnife) {
  const auto has_location = learn_relation(space, {{"toe", "flowerbed"}}, "has_location");
  const auto uses = learn_relation(space, {{"workbench", "hammer"}}, "uses");
  const auto chain = compose_relations(has_location, uses);
  EXPECT_EQ(apply_relation(index, chain, "finger", 1)[0].token, "knife");
  EXPECT_EQ(apply_relation(index, has_location, "finger", 1)[0].token, "cutting_board");
}

TEST_F(FixtureTest, ApplyMatchesManualQuery) {
  const auto r = learn_relation(space, {{"snow", "icy_roads"}}, "causes");
  const Vector q = index.unit_vector("rain") + r.displacement;
  EXPECT_EQ(apply_relation(index, r, "rain", 5), index.nearest(q, 5, {"rain", "snow", "icy_roads"}));
}

TEST(Relation, FileRoundTrip) {
  std::mt19937_64 rng(6);
  const auto s = random_space(6, 7, rng);
  const auto r = learn_relation(s, {{"w0", "w1"}, {"w2", "w3"}}, "capital_of");
  const std::string text = write_relation(r);
  EXPECT_EQ(text.rfind("#relation capital_of 2 w0 w1 w2 w3\n1 7\ncapital_of ", 0), 0u);
  const auto back = parse_relation(text);
  EXPECT_EQ(back.name, "capital_of");
  EXPECT_EQ(back.support, r.support);
  EXPECT_EQ(back.displacement, r.displacement);
  EXPECT_THROW(parse_relation("#relation x 2 a b\n1 1\nx 0.5\n"), DataError);
  EXPECT_THROW(parse_relation("nothing here\n"), DataError);
  EXPECT_THROW(learn_relation(s, {{"w0", "w1"}}, "has space"), DataError);
}
