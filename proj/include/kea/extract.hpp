#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "kea/bayes.hpp"
#include "kea/candidates.hpp"
#include "kea/df_model.hpp"
#include "kea/features.hpp"
#include "kea/stopwords.hpp"
#include "kea/text.hpp"

namespace kea {

struct ScoredCandidate {
  CandidatePhrase candidate;
  FeatureVector features;
  int tfidf_level = 0;
  int distance_level = 0;
  double probability = 0.0;
};

struct ExtractedPhrase {
  std::string surface;
  std::string stem_key;
  double probability = 0.0;
  double tfidf = 0.0;
};

// Ranked keyphrases: probability non-increasing, ties broken by raw tfidf,
// and no entry a contiguous subsequence of a higher-ranked entry's stem key.
struct ExtractionResult {
  std::vector<ExtractedPhrase> ranked;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string& key) {
  std::vector<std::string> words;
  std::istringstream ss(key);
  std::string w;
  while (ss >> w) words.push_back(std::move(w));
  return words;
}

inline bool contiguous_subsequence(const std::vector<std::string>& small,
                                   const std::vector<std::string>& big) {
  if (small.empty() || small.size() > big.size()) return false;
  for (std::size_t off = 0; off + small.size() <= big.size(); ++off) {
    if (std::equal(small.begin(), small.end(), big.begin() + off)) return true;
  }
  return false;
}

}  // namespace detail

// Features and Naive Bayes probability for every candidate in the document.
inline std::vector<ScoredCandidate> score_candidates(const Document& doc, const DfModel& df_model,
                                                     const NbModel& model,
                                                     const StopwordList& stopwords, int max_length,
                                                     bool doc_in_corpus) {
  std::vector<ScoredCandidate> scored;
  for (CandidatePhrase& cand : generate_candidates(doc, stopwords, max_length)) {
    ScoredCandidate sc;
    sc.features.tfidf = tfidf(cand, doc, df_model, doc_in_corpus);
    sc.features.first_occ = first_occurrence(cand, doc);
    sc.tfidf_level = apply_discretization(model.tfidf.cuts, sc.features.tfidf);
    sc.distance_level = apply_discretization(model.distance.cuts, sc.features.first_occ);
    sc.probability = score_levels(model, sc.tfidf_level, sc.distance_level);
    sc.candidate = std::move(cand);
    scored.push_back(std::move(sc));
  }
  return scored;
}

// Ranks all candidates by (probability, raw tfidf) and removes any phrase
// whose stem key is a contiguous word subsequence of a higher-ranked kept
// phrase, then returns the first r survivors. Residual ties are broken by
// earlier first occurrence, then lexicographic stem key.
inline ExtractionResult extract(const Document& doc, const DfModel& df_model, const NbModel& model,
                                std::size_t r, const StopwordList& stopwords, int max_length = 3,
                                bool doc_in_corpus = false) {
  std::vector<ScoredCandidate> scored =
      score_candidates(doc, df_model, model, stopwords, max_length, doc_in_corpus);
  std::sort(scored.begin(), scored.end(), [](const ScoredCandidate& a, const ScoredCandidate& b) {
    if (a.probability != b.probability) return a.probability > b.probability;
    if (a.features.tfidf != b.features.tfidf) return a.features.tfidf > b.features.tfidf;
    if (a.candidate.first_token_index != b.candidate.first_token_index)
      return a.candidate.first_token_index < b.candidate.first_token_index;
    return a.candidate.stem_key < b.candidate.stem_key;
  });

  ExtractionResult result;
  std::vector<std::vector<std::string>> kept_words;
  for (const ScoredCandidate& sc : scored) {
    if (result.ranked.size() >= r) break;
    std::vector<std::string> words = detail::split_words(sc.candidate.stem_key);
    bool suppressed = false;
    for (const auto& kept : kept_words) {
      if (detail::contiguous_subsequence(words, kept)) {
        suppressed = true;
        break;
      }
    }
    if (suppressed) continue;
    kept_words.push_back(std::move(words));
    result.ranked.push_back({canonical_surface(sc.candidate), sc.candidate.stem_key,
                             sc.probability, sc.features.tfidf});
  }
  return result;
}

// Labeled training instances for one document whose author keyphrases are
// known. Candidates occurring only once are discarded; a candidate is
// positive iff its stem key equals a stemmed author keyphrase.
inline std::vector<TrainingInstance> make_training_instances(
    const Document& doc, const std::vector<std::string>& author_keyphrases,
    const DfModel& df_model, const StopwordList& stopwords, int max_length = 3,
    bool doc_in_corpus = false) {
  std::unordered_set<std::string> author_stems;
  for (const std::string& phrase : author_keyphrases) {
    std::string key = phrase_stem_key(phrase);
    if (!key.empty()) author_stems.insert(std::move(key));
  }
  std::vector<TrainingInstance> instances;
  for (const CandidatePhrase& cand : generate_candidates(doc, stopwords, max_length)) {
    if (cand.freq < 2) continue;
    TrainingInstance inst;
    inst.tfidf = tfidf(cand, doc, df_model, doc_in_corpus);
    inst.first_occ = first_occurrence(cand, doc);
    inst.is_keyphrase = author_stems.count(cand.stem_key) > 0;
    instances.push_back(inst);
  }
  return instances;
}

}  // namespace kea
