#include <gtest/gtest.h>

#include <random>

#include "semvec/paraphrase.hpp"

using namespace semvec;

namespace {

const PronunciationLexicon& dict() {
  static const PronunciationLexicon lex = parse_pronunciations(read_file(SEMVEC_FIXTURES "/pronunciations.dict"));
  return lex;
}

// e1, e2 and their normalized midpoint as the target; distractors elsewhere
VectorSpace robot_space() {
  Matrix m = Matrix::Zero(7, 4);
  m.row(0) << 1, 1, 0, 0;        // android (target)
  m.row(1) << 1, 0, 0, 0;        // anthro
  m.row(2) << 0, 1, 0, 0;        // automaton
  m.row(3) << 0.2, 0, 1, 0;      // agile
  m.row(4) << 0, 0.1, 0, 1;      // apparatus
  m.row(5) << 1, 0.9, 0, 0;      // brassy
  m.row(6) << 0, 0, 1, 1;        // apple
  return VectorSpace({"android", "anthro", "automaton", "agile", "apparatus", "brassy", "apple"}, m);
}

}  // namespace

TEST(Pronunciations, ParsesFixture) {
  const auto& lex = dict();
  EXPECT_EQ(lex.entries.size(), 19u);
  ASSERT_NE(lex.find("PERFUME"), nullptr);
  EXPECT_EQ(lex.find("perfume")->size(), 2u);
  EXPECT_EQ(lex.find("yeast")->front(), (Pronunciation{"Y", "IY1", "S", "T"}));
  EXPECT_EQ(lex.find("zebra"), nullptr);
}

TEST(Pronunciations, RejectsBadLines) {
  try {
    parse_pronunciations(";;; c\nCAT  K AE1 T\nDOG\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_pronunciations("CAT  K QQ1 T\n"), DataError);
}

TEST(Rhymes, HandLabeledPairs) {
  const std::vector<std::tuple<std::string, std::string, bool>> labeled = {
      {"yeast", "priest", true},      {"bed", "bad", false},         {"head", "bed", true},
      {"knitter", "sitter", true},    {"fiction", "depiction", true}, {"bloom", "perfume", true},
      {"frilly", "lily", true},       {"elastic", "gymnastic", true}, {"cat", "hat", true},
      {"cat", "bad", false},          {"dog", "cat", false},         {"priest", "bed", false}};
  for (const auto& [a, b, want] : labeled) {
    EXPECT_EQ(rhymes(dict(), a, b), want) << a << "/" << b;
    EXPECT_EQ(rhymes(dict(), b, a), want) << b << "/" << a;
  }
}

TEST(Rhymes, SelfAndUnknown) {
  EXPECT_FALSE(rhymes(dict(), "cat", "CAT"));
  EXPECT_THROW(rhymes(dict(), "cat", "zebra"), UnknownTokenError);
}

TEST(Rhymes, NoPrimaryStressFallsBack) {
  const auto lex = parse_pronunciations("THE  DH AH0\nUH  AH0\nA  AH0\n");
  EXPECT_TRUE(rhymes(lex, "the", "uh"));
  EXPECT_TRUE(rhymes(lex, "a", "uh"));
}

TEST(Alliterative, MidpointPairRanksFirst) {
  const Index idx(robot_space());
  const auto out = generate_alliterative(idx, "android", {"anthro", "agile", "brassy"},
                                         {"automaton", "apparatus", "apple"}, 'a', 3);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].first, "anthro");
  EXPECT_EQ(out[0].second, "automaton");
  EXPECT_NEAR(out[0].score, 1.0, 1e-12);
  EXPECT_NEAR(out[0].vector.norm(), 1.0, 1e-12);
}

TEST(Alliterative, SingletonAndEmptyCases) {
  const Index idx(robot_space());
  const auto one = generate_alliterative(idx, "android", {"agile"}, {"apple"}, 'A', 10);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].first, "agile");
  EXPECT_THROW(generate_alliterative(idx, "android", {"brassy"}, {"apple"}, 'a', 1), DataError);
  EXPECT_THROW(generate_alliterative(idx, "android", {"anthro"}, {"zzz"}, 'a', 1), DataError);
  EXPECT_THROW(generate_alliterative(idx, "robot", {"anthro"}, {"apple"}, 'a', 1), UnknownTokenError);
}

TEST(Rhyming, PairsAreCanonicalAndRanked) {
  Matrix m = Matrix::Zero(6, 3);
  m.row(0) << 1, 1, 0;  // sleep
  m.row(1) << 1, 0, 0;  // head
  m.row(2) << 0, 1, 0;  // bed
  m.row(3) << 0, 0, 1;  // knitter
  m.row(4) << 0.1, 0, 1;  // sitter
  m.row(5) << 1, 0, 1;  // cat
  const Index idx(VectorSpace({"sleep", "head", "bed", "knitter", "sitter", "cat"}, m));
  const auto out = generate_rhyming(idx, "sleep", {"head", "bed", "knitter", "sitter", "cat", "head"}, dict(), 5);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].first, "bed");
  EXPECT_EQ(out[0].second, "head");
  EXPECT_NEAR(out[0].score, 1.0, 1e-12);
  EXPECT_EQ(out[1].first, "knitter");
  EXPECT_THROW(generate_rhyming(idx, "sleep", {"head", "cat"}, dict(), 5), DataError);
}

TEST(Ranking, TopKIsPrefixOfBruteForce) {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> g;
  std::vector<std::string> vocab{"target"};
  std::vector<std::string> adjectives;
  std::vector<std::string> nouns;
  for (int i = 0; i < 25; ++i) adjectives.push_back("adj" + std::to_string(i));
  for (int i = 0; i < 20; ++i) nouns.push_back("arm" + std::to_string(i));
  vocab.insert(vocab.end(), adjectives.begin(), adjectives.end());
  vocab.insert(vocab.end(), nouns.begin(), nouns.end());
  std::vector<std::vector<double>> rows(vocab.size(), std::vector<double>(10));
  Matrix m(static_cast<Eigen::Index>(vocab.size()), 10);
  for (std::size_t i = 0; i < vocab.size(); ++i)
    for (int j = 0; j < 10; ++j) m(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)] = g(rng);
  const Index idx(VectorSpace(vocab, m));

  // brute force in plain loops
  const auto unit = [&](std::size_t r) {
    double n = 0;
    for (double x : rows[r]) n += x * x;
    std::vector<double> u = rows[r];
    for (double& x : u) x /= std::sqrt(n);
    return u;
  };
  const auto t = unit(0);
  std::vector<std::tuple<double, std::string, std::string>> all;
  for (std::size_t a = 0; a < adjectives.size(); ++a) {
    for (std::size_t b = 0; b < nouns.size(); ++b) {
      const auto ua = unit(1 + a);
      const auto ub = unit(1 + adjectives.size() + b);
      double dot = 0, nn = 0;
      for (int j = 0; j < 10; ++j) {
        const double s = ua[static_cast<std::size_t>(j)] + ub[static_cast<std::size_t>(j)];
        dot += s * t[static_cast<std::size_t>(j)];
        nn += s * s;
      }
      all.emplace_back(dot / std::sqrt(nn), adjectives[a], nouns[b]);
    }
  }
  ASSERT_EQ(all.size(), 500u);
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return std::get<0>(x) > std::get<0>(y); });

  for (std::size_t k : {1u, 7u, 50u, 500u}) {
    const auto got = generate_alliterative(idx, "target", adjectives, nouns, 'a', k);
    ASSERT_EQ(got.size(), k);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(got[i].first, std::get<1>(all[i]));
      EXPECT_EQ(got[i].second, std::get<2>(all[i]));
      EXPECT_NEAR(got[i].score, std::get<0>(all[i]), 1e-12);
    }
  }
}
