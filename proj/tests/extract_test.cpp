#include "kea/extract.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "testutil.hpp"

using namespace kea;

namespace {

// A model that likes frequent-and-rare (high tfidf) early (low first_occ)
// phrases; two levels per feature.
NbModel keyphrase_friendly_model(double tfidf_cut = 0.02, double dist_cut = 0.25) {
  NbModel m;
  m.y_count = 10;
  m.n_count = 90;
  m.tfidf.cuts = {tfidf_cut};
  m.tfidf.p_yes = {0.2, 0.8};
  m.tfidf.p_no = {0.9, 0.1};
  m.distance.cuts = {dist_cut};
  m.distance.p_yes = {0.8, 0.2};
  m.distance.p_no = {0.2, 0.8};
  return m;
}

}  // namespace

TEST(MakeTrainingInstances, HyphenatedAuthorPhraseMatchesSpacedCandidate) {
  Document doc = clean_text(
      "cut elimination is central. cut elimination appears again. other words repeat. "
      "other words repeat.");
  DfModel df;
  df.num_docs = 10;
  auto instances = make_training_instances(doc, {"cut-elimination"}, df, StopwordList::builtin());
  int positives = 0;
  for (const auto& inst : instances) positives += inst.is_keyphrase ? 1 : 0;
  EXPECT_EQ(positives, 1);  // exactly the "cut elim" candidate
  EXPECT_GT(instances.size(), 1u);
}

TEST(MakeTrainingInstances, SingleOccurrenceCandidatesAreDropped) {
  Document doc = clean_text("unique phrase here. repeated words. repeated words");
  DfModel df;
  df.num_docs = 5;
  auto instances = make_training_instances(doc, {"repeated words"}, df, StopwordList::builtin());
  // only candidates with freq >= 2 survive: "repeated", "words", "repeated words"
  EXPECT_EQ(instances.size(), 3u);
  int positives = 0;
  for (const auto& inst : instances) positives += inst.is_keyphrase ? 1 : 0;
  EXPECT_EQ(positives, 1);
}

TEST(MakeTrainingInstances, PlantedKeyphrasesAreLabeledPositive) {
  std::string text;
  for (int i = 0; i < 3; ++i)
    text += "solar panel arrays matter. battery storage helps. filler words pad things out. ";
  Document doc = clean_text(text);
  DfModel df;
  df.num_docs = 20;
  auto instances =
      make_training_instances(doc, {"solar panel", "battery storage"}, df, StopwordList::builtin());
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  std::set<std::string> positive_keys = {phrase_stem_key("solar panel"),
                                         phrase_stem_key("battery storage")};
  int positives = 0;
  std::size_t idx = 0;
  for (const CandidatePhrase& c : cands) {
    if (c.freq < 2) continue;
    ASSERT_LT(idx, instances.size());
    EXPECT_EQ(instances[idx].is_keyphrase, positive_keys.count(c.stem_key) > 0) << c.stem_key;
    positives += instances[idx].is_keyphrase ? 1 : 0;
    ++idx;
  }
  EXPECT_EQ(idx, instances.size());
  EXPECT_EQ(positives, 2);
}

TEST(Extract, RanksByProbabilityThenRawTfidf) {
  // "gearbox" is frequent and early; "flywheel" rarer but later; both beat filler
  std::string text = "gearbox rules the machine. gearbox spins. gearbox holds. ";
  text += "flywheel turns. flywheel sings. gearbox wins. ";
  for (int i = 0; i < 20; ++i) {
    std::string n = std::to_string(i);
    text += "pad" + n + "a pad" + n + "b pad" + n + "c. ";
  }
  Document doc = clean_text(text);
  DfModel df;
  df.num_docs = 50;
  df.df["gearbox"] = 1;
  df.df["flywheel"] = 1;
  NbModel m = keyphrase_friendly_model();
  ExtractionResult result = extract(doc, df, m, 2, StopwordList::builtin());
  ASSERT_EQ(result.ranked.size(), 2u);
  EXPECT_EQ(result.ranked[0].surface, "gearbox");
  EXPECT_EQ(result.ranked[1].surface, "flywheel");
  EXPECT_GE(result.ranked[0].probability, result.ranked[1].probability);
}

TEST(Extract, ShorterListWhenFewSurvivors) {
  Document doc = clean_text("tiny text");
  DfModel df;
  df.num_docs = 3;
  NbModel m = keyphrase_friendly_model();
  ExtractionResult result = extract(doc, df, m, 50, StopwordList::builtin());
  EXPECT_LE(result.ranked.size(), 3u);  // tiny, text, tiny text
  EXPECT_FALSE(result.ranked.empty());
}

TEST(Extract, SubphraseOfHigherRankedPhraseIsSuppressed) {
  // "proof net" scores high; its single words only ever occur inside it and
  // must be pushed out by the bigram
  std::string text = "proof net diagrams. proof net emerges. proof net holds. proof net persists. ";
  for (int i = 0; i < 30; ++i) text += "assorted other sentences follow here. ";
  Document doc = clean_text(text);
  DfModel df;
  df.num_docs = 40;
  df.df["proof net"] = 1;
  df.df["proof"] = 25;
  df.df["net"] = 25;
  NbModel m = keyphrase_friendly_model();
  ExtractionResult result = extract(doc, df, m, 100, StopwordList::builtin());
  std::set<std::string> keys;
  for (const auto& e : result.ranked) keys.insert(e.stem_key);
  EXPECT_TRUE(keys.count("proof net")) << "bigram missing";
  EXPECT_EQ(keys.count("net"), 0u) << "'net' should be suppressed by 'proof net'";
  EXPECT_EQ(keys.count("proof"), 0u);
}

TEST(Extract, ResidualTieBreaksByFirstOccurrence) {
  // zeta and kappa tie on probability and tfidf; the earlier one wins
  Document doc = clean_text("zeta filler1. kappa filler2. zeta filler3. kappa filler4");
  DfModel df;
  df.num_docs = 4;
  df.df[phrase_stem_key("zeta")] = 2;
  df.df[phrase_stem_key("kappa")] = 2;
  // everything else is corpus-wide noise with zero tfidf
  for (const char* key : {"filler1", "filler2", "filler3", "filler4", "zeta filler1",
                          "kappa filler2", "zeta filler3", "kappa filler4"})
    df.df[phrase_stem_key(key)] = 4;
  NbModel m = keyphrase_friendly_model(0.02, 0.5);
  ExtractionResult a = extract(doc, df, m, 10, StopwordList::builtin());
  ExtractionResult b = extract(doc, df, m, 10, StopwordList::builtin());
  ASSERT_EQ(a.ranked.size(), b.ranked.size());
  for (std::size_t i = 0; i < a.ranked.size(); ++i)
    EXPECT_EQ(a.ranked[i].stem_key, b.ranked[i].stem_key);
  std::size_t zeta = 99, kappa = 99;
  for (std::size_t i = 0; i < a.ranked.size(); ++i) {
    if (a.ranked[i].stem_key == phrase_stem_key("zeta")) zeta = i;
    if (a.ranked[i].stem_key == phrase_stem_key("kappa")) kappa = i;
  }
  ASSERT_NE(zeta, 99u);
  ASSERT_NE(kappa, 99u);
  EXPECT_LT(zeta, kappa);
}

// ---- properties -----------------------------------------------------------

namespace {

struct RandomSetup {
  Document doc;
  DfModel df;
  NbModel model;
};

RandomSetup random_setup(std::mt19937_64& rng) {
  static const std::vector<std::string>& filler = testutil::filler_vocabulary();
  std::string text;
  int sentences = 3 + static_cast<int>(rng() % 12);
  for (int s = 0; s < sentences; ++s) {
    int words = 1 + static_cast<int>(rng() % 6);
    for (int w = 0; w < words; ++w) text += filler[rng() % filler.size()] + " ";
    text += ". ";
  }
  RandomSetup setup;
  setup.doc = clean_text(text);
  setup.df.num_docs = 20;
  for (const auto& c : generate_candidates(setup.doc, StopwordList::builtin(), 3)) {
    if (rng() % 2 == 0) setup.df.df[c.stem_key] = 1 + static_cast<long long>(rng() % 20);
  }
  setup.model = keyphrase_friendly_model(0.001 + (rng() % 100) / 2000.0, 0.1 + (rng() % 80) / 100.0);
  return setup;
}

}  // namespace

TEST(ExtractProperties, SubphraseSuppressionInvariant) {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 100; ++iter) {
    RandomSetup s = random_setup(rng);
    ExtractionResult result = extract(s.doc, s.df, s.model, 1 + rng() % 20, StopwordList::builtin());
    for (std::size_t i = 0; i < result.ranked.size(); ++i) {
      auto lower = kea::detail::split_words(result.ranked[i].stem_key);
      for (std::size_t j = 0; j < i; ++j) {
        auto higher = kea::detail::split_words(result.ranked[j].stem_key);
        EXPECT_FALSE(kea::detail::contiguous_subsequence(lower, higher))
            << result.ranked[i].stem_key << " inside " << result.ranked[j].stem_key;
      }
    }
  }
}

TEST(ExtractProperties, CutoffPrefixProperty) {
  std::mt19937_64 rng(67);
  for (int iter = 0; iter < 50; ++iter) {
    RandomSetup s = random_setup(rng);
    std::size_t small = 1 + rng() % 10;
    std::size_t large = small + rng() % 10;
    ExtractionResult a = extract(s.doc, s.df, s.model, small, StopwordList::builtin());
    ExtractionResult b = extract(s.doc, s.df, s.model, large, StopwordList::builtin());
    ASSERT_LE(a.ranked.size(), b.ranked.size());
    for (std::size_t i = 0; i < a.ranked.size(); ++i) {
      EXPECT_EQ(a.ranked[i].stem_key, b.ranked[i].stem_key);
    }
    EXPECT_LE(a.ranked.size(), small);
    EXPECT_LE(b.ranked.size(), large);
  }
}

TEST(ExtractProperties, OrderingInvariant) {
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 50; ++iter) {
    RandomSetup s = random_setup(rng);
    ExtractionResult result = extract(s.doc, s.df, s.model, 15, StopwordList::builtin());
    for (std::size_t i = 1; i < result.ranked.size(); ++i) {
      const auto& prev = result.ranked[i - 1];
      const auto& cur = result.ranked[i];
      EXPECT_TRUE(prev.probability > cur.probability ||
                  (prev.probability == cur.probability && prev.tfidf >= cur.tfidf));
    }
  }
}
