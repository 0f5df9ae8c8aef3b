#pragma once

#include <cmath>
#include <stdexcept>

#include "kea/candidates.hpp"
#include "kea/df_model.hpp"
#include "kea/text.hpp"

namespace kea {

struct FeatureVector {
  double tfidf = 0.0;
  double first_occ = 0.0;
};

// (freq/size) * -log2(df/N). When the document is not part of the global
// corpus, df and N are both incremented by one to simulate its appearance.
inline double tfidf_value(long long freq, long long size, long long df, long long corpus_size,
                          bool doc_in_corpus) {
  if (size <= 0) throw std::invalid_argument("tfidf: document has no tokens");
  if (freq < 1) throw std::invalid_argument("tfidf: phrase frequency must be at least 1");
  if (doc_in_corpus) {
    if (df < 1)
      throw std::runtime_error("tfidf: document counted in the corpus but its phrase has df 0");
  } else {
    df += 1;
    corpus_size += 1;
  }
  return static_cast<double>(freq) / static_cast<double>(size) *
         -std::log2(static_cast<double>(df) / static_cast<double>(corpus_size));
}

inline double tfidf(const CandidatePhrase& candidate, const Document& doc, const DfModel& model,
                    bool doc_in_corpus) {
  return tfidf_value(candidate.freq, static_cast<long long>(doc.token_count),
                     model.count(candidate.stem_key), model.num_docs, doc_in_corpus);
}

// Fraction of the document preceding the phrase's first appearance, in [0, 1).
inline double first_occurrence(const CandidatePhrase& candidate, const Document& doc) {
  if (doc.token_count == 0) throw std::invalid_argument("first_occurrence: empty document");
  if (candidate.first_token_index >= doc.token_count)
    throw std::invalid_argument("first_occurrence: index beyond document end");
  return static_cast<double>(candidate.first_token_index) / static_cast<double>(doc.token_count);
}

}  // namespace kea
