#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "testutil.hpp"

using namespace kea;

namespace {

std::vector<std::string> line_tokens(const Document& doc, std::size_t i) {
  return doc.lines.at(i).tokens;
}

std::set<std::string> stem_keys(const std::vector<CandidatePhrase>& cands) {
  std::set<std::string> keys;
  for (const auto& c : cands) keys.insert(c.stem_key);
  return keys;
}

const CandidatePhrase* find_key(const std::vector<CandidatePhrase>& cands, const std::string& key) {
  for (const auto& c : cands)
    if (c.stem_key == key) return &c;
  return nullptr;
}

}  // namespace

TEST(CleanText, RetainsInternalPeriods) {
  Document doc = clean_text("the C4.5 algorithm works.");
  ASSERT_EQ(doc.lines.size(), 1u);
  EXPECT_EQ(line_tokens(doc, 0), (std::vector<std::string>{"the", "C4.5", "algorithm", "works"}));
  EXPECT_EQ(doc.token_count, 4u);
}

TEST(CleanText, EmptyInput) {
  Document doc = clean_text("");
  EXPECT_TRUE(doc.lines.empty());
  EXPECT_EQ(doc.token_count, 0u);
}

TEST(CleanText, HyphensApostrophesAndNumbers) {
  Document doc = clean_text("state-of-the-art (1998) don't");
  ASSERT_EQ(doc.lines.size(), 2u);
  EXPECT_EQ(line_tokens(doc, 0), (std::vector<std::string>{"state", "of", "the", "art"}));
  EXPECT_EQ(line_tokens(doc, 1), (std::vector<std::string>{"dont"}));
  EXPECT_EQ(doc.token_count, 5u);
}

TEST(CleanText, PunctuationStartsNewLines) {
  Document doc = clean_text("first phrase, second phrase; third");
  ASSERT_EQ(doc.lines.size(), 3u);
  EXPECT_EQ(doc.lines[0].start_index, 0u);
  EXPECT_EQ(doc.lines[1].start_index, 2u);
  EXPECT_EQ(doc.lines[2].start_index, 4u);
  EXPECT_EQ(doc.token_count, 5u);
}

TEST(CleanText, NonAsciiBytesAreBoundaries) {
  Document doc = clean_text("na\xc3\xafve bayes");
  ASSERT_EQ(doc.lines.size(), 2u);
  EXPECT_EQ(line_tokens(doc, 0), (std::vector<std::string>{"na"}));
  EXPECT_EQ(line_tokens(doc, 1), (std::vector<std::string>{"ve", "bayes"}));
}

TEST(CleanText, WhitespaceDoesNotBreakPhrases) {
  Document doc = clean_text("neural\nnet  approach\tworks");
  ASSERT_EQ(doc.lines.size(), 1u);
  EXPECT_EQ(doc.token_count, 4u);
}

TEST(CleanText, StartIndicesAreConsistent) {
  Document doc = clean_text("alpha beta. gamma delta epsilon. zeta");
  std::size_t expect = 0;
  for (const TokenLine& line : doc.lines) {
    EXPECT_EQ(line.start_index, expect);
    expect += line.tokens.size();
  }
  EXPECT_EQ(doc.token_count, expect);
}

TEST(GenerateCandidates, PaperExampleLine) {
  Document doc = clean_text("the programming by demonstration method");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 4);
  std::set<std::string> expected = {
      "program", "demonstr", "method", "program by demonstr", "demonstr method",
      "program by demonstr method"};
  EXPECT_EQ(stem_keys(cands), expected);
}

TEST(GenerateCandidates, DefaultLengthThreeDropsTheFourWordPhrase) {
  Document doc = clean_text("the programming by demonstration method");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  EXPECT_EQ(cands.size(), 5u);
  EXPECT_EQ(stem_keys(cands).count("program by demonstr method"), 0u);
}

TEST(GenerateCandidates, SingleStopwordLineYieldsNothing) {
  Document doc = clean_text("the");
  EXPECT_TRUE(generate_candidates(doc, StopwordList::builtin(), 3).empty());
}

TEST(GenerateCandidates, ProperNamesExcludedAsSingleWords) {
  Document doc = clean_text("Smith proved it. Smith argued. critics cite Smith");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  EXPECT_EQ(find_key(cands, lovins::iterated_stem("smith")), nullptr);
  // multi-word phrases containing the name survive
  EXPECT_NE(find_key(cands, "cit " + lovins::iterated_stem("smith")), nullptr);
}

TEST(GenerateCandidates, MixedCaseWordIsNotAProperName) {
  Document doc = clean_text("the Net grows. every net grows");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  ASSERT_NE(find_key(cands, "net"), nullptr);
  EXPECT_EQ(find_key(cands, "net")->freq, 2);
}

TEST(GenerateCandidates, MergesStemVariantsAndCountsFrequency) {
  Document doc = clean_text("proof nets are nice. a proof net is a graph");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  const CandidatePhrase* c = find_key(cands, "proof net");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->freq, 2);
  EXPECT_EQ(c->first_token_index, 0u);
  EXPECT_EQ(c->length_words, 2);
}

TEST(GenerateCandidates, FirstTokenIndexIsDocumentWide) {
  Document doc = clean_text("one two. three four five");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  const CandidatePhrase* c = find_key(cands, lovins::iterated_stem("five"));
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->first_token_index, 4u);
}

TEST(IsProperName, AlwaysCapitalized) {
  Document doc = clean_text("Auckland is far. we flew to Auckland");
  EXPECT_TRUE(is_proper_name("Auckland", doc));
  EXPECT_TRUE(is_proper_name("auckland", doc));  // case-insensitive lookup
}

TEST(IsProperName, LowercaseOccurrenceDisqualifies) {
  Document doc = clean_text("The cat saw the dog");
  EXPECT_FALSE(is_proper_name("the", doc));
}

TEST(IsProperName, SentenceInitialCapitalStillCounts) {
  Document doc = clean_text("Parsing is hard");
  EXPECT_TRUE(is_proper_name("Parsing", doc));
}

TEST(CanonicalSurface, MostFrequentWins) {
  Document doc = clean_text("proof nets. proof nets. proof nets. Proof Nets");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  const CandidatePhrase* c = find_key(cands, "proof net");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(canonical_surface(*c), "proof nets");
}

TEST(CanonicalSurface, TieGoesToEarliestOccurrence) {
  Document doc = clean_text("KEA works. kea works. KEA wins. kea wins");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  const CandidatePhrase* c = find_key(cands, lovins::iterated_stem("kea"));
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(canonical_surface(*c), "KEA");
}

TEST(CanonicalSurface, SingleForm) {
  Document doc = clean_text("gearbox");
  auto cands = generate_candidates(doc, StopwordList::builtin(), 3);
  ASSERT_EQ(cands.size(), 1u);
  EXPECT_EQ(canonical_surface(cands[0]), "gearbox");
}

TEST(PhraseStemKey, NormalizesAuthorPhrases) {
  EXPECT_EQ(phrase_stem_key("cut-elimination"), "cut elim");
  EXPECT_EQ(phrase_stem_key("Proof Nets"), "proof net");
  EXPECT_EQ(phrase_stem_key(""), "");
}

TEST(Stopwords, ShippedFileMatchesBuiltinList) {
  StopwordList from_file = StopwordList::from_file(std::string(KEA_SOURCE_DIR) + "/data/stopwords.txt");
  const StopwordList& builtin = StopwordList::builtin();
  EXPECT_EQ(from_file.size(), builtin.size());
  EXPECT_EQ(builtin.size(), 425u);
  // spot structure: the file parser and the builtin parser agree word by word
  std::ifstream in(std::string(KEA_SOURCE_DIR) + "/data/stopwords.txt");
  std::string word;
  while (std::getline(in, word)) {
    if (word.empty() || word[0] == '#') continue;
    EXPECT_TRUE(builtin.contains(word)) << word;
  }
}

TEST(Stopwords, LookupIsCaseInsensitive) {
  const StopwordList& sw = StopwordList::builtin();
  EXPECT_TRUE(sw.contains("the"));
  EXPECT_TRUE(sw.contains("The"));
  EXPECT_TRUE(sw.contains("THE"));
  EXPECT_FALSE(sw.contains("keyphrase"));
}

// ---- properties -----------------------------------------------------------

TEST(CandidateProperties, NoCandidateCrossesLineBoundaries) {
  Document doc = clean_text("deep learning. networks generalize");
  auto keys = stem_keys(generate_candidates(doc, StopwordList::builtin(), 3));
  EXPECT_EQ(keys.count(lovins::iterated_stem("learning") + " " + lovins::iterated_stem("networks")), 0u);
}

namespace {

Document random_document(std::mt19937_64& rng) {
  static const std::vector<std::string> vocab = {
      "the",  "of",     "and",   "data",    "Model", "graph", "proof", "net",
      "cut",  "system", "learn", "deep",    "fast",  "Smith", "node",  "edge",
      "tree", "query",  "index", "parsing"};
  std::string text;
  int sentences = 1 + static_cast<int>(rng() % 5);
  for (int s = 0; s < sentences; ++s) {
    int words = 1 + static_cast<int>(rng() % 7);
    for (int w = 0; w < words; ++w) {
      text += vocab[rng() % vocab.size()];
      text += ' ';
    }
    text += ". ";
  }
  return clean_text(text);
}

}  // namespace

TEST(CandidateProperties, BasicInvariantsOnRandomDocuments) {
  std::mt19937_64 rng(7);
  const StopwordList& sw = StopwordList::builtin();
  for (int iter = 0; iter < 200; ++iter) {
    Document doc = random_document(rng);
    int max_length = 1 + static_cast<int>(rng() % 4);
    auto cands = generate_candidates(doc, sw, max_length);
    std::set<std::string> seen;
    for (const CandidatePhrase& c : cands) {
      EXPECT_GE(c.freq, 1);
      EXPECT_LT(c.first_token_index, doc.token_count);
      EXPECT_GE(c.length_words, 1);
      EXPECT_LE(c.length_words, max_length);
      EXPECT_TRUE(seen.insert(c.stem_key).second) << "duplicate key " << c.stem_key;
      int total = 0;
      for (const auto& s : c.surfaces) total += s.count;
      EXPECT_EQ(total, c.freq);
    }
  }
}

TEST(CandidateProperties, SubphraseClosure) {
  // every contiguous sub-span of an emitted candidate that passes the rules
  // itself appears among the candidates
  std::mt19937_64 rng(11);
  const StopwordList& sw = StopwordList::builtin();
  for (int iter = 0; iter < 100; ++iter) {
    Document doc = random_document(rng);
    auto cands = generate_candidates(doc, sw, 3);
    auto keys = stem_keys(cands);
    for (const CandidatePhrase& c : cands) {
      auto words = kea::detail::split_words(c.stem_key);
      if (words.size() < 2) continue;
      for (std::size_t from = 0; from < words.size(); ++from) {
        for (std::size_t len = 1; from + len <= words.size(); ++len) {
          if (len == words.size() && from == 0) continue;
          std::string sub;
          for (std::size_t i = from; i < from + len; ++i) {
            if (!sub.empty()) sub += ' ';
            sub += words[i];
          }
          // the sub-span fails the rules iff it starts/ends with a stopword
          // or is a proper name; those are legitimately absent. Everything
          // else must be present.
          if (keys.count(sub) > 0) continue;
          bool explained = false;
          for (const auto& surf : c.surfaces) {
            auto surf_words = kea::detail::split_words(surf.text);
            ASSERT_EQ(surf_words.size(), words.size());
            std::string first = surf_words[from];
            std::string last = surf_words[from + len - 1];
            if (sw.contains(first) || sw.contains(last)) explained = true;
            if (len == 1 && is_proper_name(first, doc)) explained = true;
          }
          EXPECT_TRUE(explained) << "missing subphrase '" << sub << "' of '" << c.stem_key << "'";
        }
      }
    }
  }
}

TEST(CandidateProperties, CaseInsensitivityUpToProperNames) {
  std::mt19937_64 rng(13);
  const StopwordList& sw = StopwordList::builtin();
  for (int iter = 0; iter < 100; ++iter) {
    Document doc = random_document(rng);
    std::string lowered, uppered;
    for (const TokenLine& line : doc.lines) {
      for (const std::string& tok : line.tokens) {
        lowered += fold_ascii(tok) + " ";
        for (char ch : tok) uppered += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        uppered += ' ';
      }
      lowered += ". ";
      uppered += ". ";
    }
    auto orig = generate_candidates(doc, sw, 3);
    auto lower = generate_candidates(clean_text(lowered), sw, 3);
    auto upper = generate_candidates(clean_text(uppered), sw, 3);

    auto multiword = [](const std::vector<CandidatePhrase>& cands) {
      std::set<std::string> keys;
      for (const auto& c : cands)
        if (c.length_words > 1) keys.insert(c.stem_key);
      return keys;
    };
    EXPECT_EQ(multiword(orig), multiword(lower));
    EXPECT_EQ(multiword(orig), multiword(upper));

    // in the all-caps copy every single word is a proper name
    for (const auto& c : upper)
      EXPECT_GT(c.length_words, 1) << c.stem_key;

    // lower-casing can only add single-word candidates (former proper names)
    auto orig_keys = stem_keys(orig);
    auto lower_keys = stem_keys(lower);
    for (const auto& k : orig_keys) EXPECT_TRUE(lower_keys.count(k)) << k;
  }
}
