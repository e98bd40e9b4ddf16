#include <gtest/gtest.h>

#include <Eigen/Dense>

#include "semvec/compositional_fixture.hpp"
#include "semvec/retrofitter.hpp"

using namespace semvec;

namespace {

using TokenPair = std::pair<std::string, std::string>;

LexiconGraph graph_of(const std::vector<TokenPair>& edges) {
  LexiconGraph g;
  for (const auto& [a, b] : edges) {
    for (const auto& t : {a, b})
      if (std::find(g.nodes.begin(), g.nodes.end(), t) == g.nodes.end()) g.nodes.push_back(t);
    g.add_edge(a, b);
  }
  return g;
}

VectorSpace two_unit_rows() {
  Matrix m(3, 3);
  m << 1, 0, 0, 0.6, 0.8, 0, 0, 0, 1;
  return VectorSpace({"p", "q", "lonely"}, m, NormState::unit);
}

}  // namespace

TEST(Lexicon, ParsesFixtureEdges) {
  const auto g = parse_lexicon(read_file(SEMVEC_FIXTURES "/lexicon.tsv"));
  const std::map<std::pair<std::string, std::string>, double> expected = {
      {{"big", "huge"}, 1.0},       {{"big", "large"}, 1.0},     {{"chilly", "cold"}, 1.0},
      {{"cold", "frigid"}, 1.0},    {{"guarded", "protected"}, 1.0}, {{"hot", "warm"}, 1.0},
      {{"protected", "safe"}, 1.0}, {{"safe", "secure"}, 1.0},   {{"toasty", "warm"}, 1.0}};
  EXPECT_EQ(g.edges, expected);
  EXPECT_EQ(g.antonyms.at("safe"), (std::vector<std::string>{"unsafe", "dangerous"}));
  EXPECT_EQ(g.antonyms.at("big"), (std::vector<std::string>{"small"}));
  EXPECT_EQ(g.nodes.front(), "safe");
  EXPECT_EQ(g.alpha_of("safe"), 1.0);
}

TEST(Lexicon, RejectsMalformedLines) {
  try {
    parse_lexicon("ok\tfine\n# c\nbroken line\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_lexicon("a\tb\tc\td\n"), DataError);
}

TEST(Retrofit, EmptyGraphIsBitIdentical) {
  const auto s = normalize(compositional_fixture());
  const auto r = retrofit(s, LexiconGraph{});
  EXPECT_TRUE(r.space.matrix() == s.matrix());
  EXPECT_EQ(r.space.vocab(), s.vocab());
}

TEST(Retrofit, RequiresUnitSpace) {
  EXPECT_THROW(retrofit(compositional_fixture(), LexiconGraph{}), DataError);
  RetrofitOptions bad;
  bad.iterations = 0;
  EXPECT_THROW(retrofit(two_unit_rows(), LexiconGraph{}, bad), DataError);
}

TEST(Retrofit, OneSweepMatchesHandValues) {
  const auto s = two_unit_rows();
  RetrofitOptions o;
  o.iterations = 1;
  o.renormalize = false;
  const auto r = retrofit(s, graph_of({{"p", "q"}}), o);
  const Eigen::RowVectorXd p = s.row(0);
  const Eigen::RowVectorXd q = s.row(1);
  EXPECT_LT((r.space.row(0) - (p + q) / 2).norm(), 1e-15);
  EXPECT_LT((r.space.row(1) - (3 * q + p) / 4).norm(), 1e-15);
  EXPECT_TRUE(r.space.row(2) == s.row(2));
}

TEST(Retrofit, ConvergesToLinearSolve) {
  const auto s = two_unit_rows();
  RetrofitOptions o;
  o.iterations = 200;
  o.tol = 1e-12;
  o.renormalize = false;
  const auto r = retrofit(s, graph_of({{"p", "q"}}), o);
  // (alpha + 1) q_i - q_j = q0_i for each node, alpha = 1
  Eigen::Matrix2d a;
  a << 2, -1, -1, 2;
  Matrix rhs(2, 3);
  rhs << s.row(0), s.row(1);
  const Matrix solved = a.lu().solve(rhs);
  EXPECT_LT((r.space.matrix().topRows(2) - solved).norm(), 1e-9);
  EXPECT_LT((solved.row(0) - (2 * s.row(0) + s.row(1)) / 3).norm(), 1e-12);
  const Eigen::RowVectorXd residual = r.space.row(0) - (s.row(0) + r.space.row(1)) / 2;
  EXPECT_LT(residual.norm(), 1e-9);
}

TEST(Retrofit, MovementIsNonIncreasing) {
  const auto s = normalize(compositional_fixture());
  RetrofitOptions o;
  o.iterations = 30;
  o.tol = 0.0;
  const auto r = retrofit(s, graph_of({{"ice", "snow"}, {"snow", "rain"}, {"rain", "wet"}, {"cold", "ice"}}), o);
  ASSERT_EQ(r.movement.size(), 30u);
  for (std::size_t i = 1; i < r.movement.size(); ++i) EXPECT_LE(r.movement[i], r.movement[i - 1] + 1e-15);
}

TEST(Retrofit, RenormalizesOnlyTouchedRowsAndCountsDropped) {
  const auto s = two_unit_rows();
  const auto r = retrofit(s, graph_of({{"p", "q"}, {"q", "absent"}}));
  EXPECT_EQ(r.dropped_nodes, 1u);
  EXPECT_NEAR(r.space.row(0).norm(), 1.0, 1e-12);
  EXPECT_NEAR(r.space.row(1).norm(), 1.0, 1e-12);
  EXPECT_TRUE(r.space.row(2) == s.row(2));
  EXPECT_EQ(r.space.norm_state(), NormState::unit);
}

TEST(Preservation, IdenticalSpacesReportNoChange) {
  const auto s = normalize(compositional_fixture());
  const auto rep = preservation_report(s, s, compositional_fixture_probes(), 1);
  EXPECT_EQ(rep.degraded, 0u);
  EXPECT_EQ(rep.improved, 0u);
  EXPECT_EQ(rep.unchanged, rep.probes.size());
  EXPECT_DOUBLE_EQ(rep.mrr_before, 1.0);
  EXPECT_EQ(rep.hits_after, 5u);
}

TEST(Preservation, SwappingSpacesSwapsCounts) {
  const auto s = normalize(compositional_fixture());
  RetrofitOptions o;
  o.iterations = 50;
  o.tol = 1e-8;
  const auto merged = retrofit(s, graph_of({{"shark", "tourist"}, {"snorkeler", "predator"}, {"predator", "tourist"}}), o).space;
  const auto fwd = preservation_report(s, merged, compositional_fixture_probes(), 1);
  const auto back = preservation_report(merged, s, compositional_fixture_probes(), 1);
  EXPECT_EQ(fwd.degraded, back.improved);
  EXPECT_EQ(fwd.improved, back.degraded);
  EXPECT_DOUBLE_EQ(fwd.mrr_before, back.mrr_after);
  EXPECT_GT(fwd.probes[0].rank_after, fwd.probes[0].rank_before);
}

TEST(Preservation, FormatAndProbeParsing) {
  const auto probes = parse_probes("# header\nbear hiker shark snorkeler\n\nsnow\ticy_roads rain wet_roads\n");
  ASSERT_EQ(probes.size(), 2u);
  EXPECT_EQ(probes[1].b, "icy_roads");
  EXPECT_THROW(parse_probes("a b c\n"), DataError);

  const auto s = normalize(compositional_fixture());
  const std::string text = format_report(preservation_report(s, s, probes, 1));
  EXPECT_NE(text.find("mrr_before=1.000000\n"), std::string::npos);
  EXPECT_NE(text.find("\na\tb\tc\td\trank_before\trank_after\nbear\thiker\tshark\tsnorkeler\t1\t1\n"),
            std::string::npos);
  EXPECT_THROW(preservation_report(s, s, {{"bear", "hiker", "shark", "bear"}}, 1), DataError);
}
