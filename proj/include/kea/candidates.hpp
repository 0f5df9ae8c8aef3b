#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kea/lovins.hpp"
#include "kea/stopwords.hpp"
#include "kea/text.hpp"

namespace kea {

// A candidate phrase, identified by its stem key: the case-folded,
// iterated-Lovins-stemmed word sequence joined by single spaces. Occurrences
// with equal stem keys are merged.
struct CandidatePhrase {
  struct Surface {
    std::string text;         // original-capitalization word sequence
    int count = 0;
    std::size_t first_index = 0;
  };

  std::string stem_key;
  std::vector<Surface> surfaces;
  int freq = 0;
  std::size_t first_token_index = 0;
  int length_words = 0;
};

namespace detail {

inline bool starts_upper(std::string_view token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token.front())) != 0;
}

// folded word -> true while every occurrence so far starts with a capital
inline std::unordered_map<std::string, bool> capitalization_map(const Document& doc) {
  std::unordered_map<std::string, bool> caps;
  for (const TokenLine& line : doc.lines) {
    for (const std::string& tok : line.tokens) {
      bool upper = starts_upper(tok);
      auto [it, inserted] = caps.emplace(fold_ascii(tok), upper);
      if (!inserted) it->second = it->second && upper;
    }
  }
  return caps;
}

}  // namespace detail

// True iff every occurrence of `word` in the document (matched
// case-insensitively) begins with an uppercase letter. The word is expected
// to occur at least once.
inline bool is_proper_name(std::string_view word, const Document& doc) {
  std::string key = fold_ascii(word);
  bool all_upper = true;
  for (const TokenLine& line : doc.lines) {
    for (const std::string& tok : line.tokens) {
      if (fold_ascii(tok) == key) all_upper = all_upper && detail::starts_upper(tok);
    }
  }
  return all_upper;
}

// All contiguous within-line word sequences of length 1..max_length that do
// not begin or end with a stopword and are not single-word proper names.
// Interior stopwords are allowed. Occurrences are merged by stem key.
inline std::vector<CandidatePhrase> generate_candidates(const Document& doc,
                                                        const StopwordList& stopwords,
                                                        int max_length = 3) {
  auto caps = detail::capitalization_map(doc);

  std::unordered_map<std::string, std::string> stem_cache;
  auto stem_of = [&](const std::string& token) -> const std::string& {
    std::string folded = fold_ascii(token);
    auto it = stem_cache.find(folded);
    if (it == stem_cache.end()) it = stem_cache.emplace(folded, lovins::iterated_stem(folded)).first;
    return it->second;
  };

  std::unordered_map<std::string, CandidatePhrase> merged;
  for (const TokenLine& line : doc.lines) {
    const auto& toks = line.tokens;
    for (std::size_t start = 0; start < toks.size(); ++start) {
      if (stopwords.contains(toks[start])) continue;
      std::string key;
      std::string surface;
      std::size_t max_len = std::min<std::size_t>(max_length, toks.size() - start);
      for (std::size_t len = 1; len <= max_len; ++len) {
        const std::string& word = toks[start + len - 1];
        if (len > 1) {
          key += ' ';
          surface += ' ';
        }
        key += stem_of(word);
        surface += word;
        if (stopwords.contains(word)) continue;  // cannot end with a stopword
        if (len == 1 && caps.at(fold_ascii(word))) continue;  // proper name

        std::size_t index = line.start_index + start;
        CandidatePhrase& cand = merged[key];
        if (cand.freq == 0) {
          cand.stem_key = key;
          cand.first_token_index = index;
          cand.length_words = static_cast<int>(len);
        } else {
          cand.first_token_index = std::min(cand.first_token_index, index);
        }
        ++cand.freq;
        auto surf = std::find_if(cand.surfaces.begin(), cand.surfaces.end(),
                                 [&](const CandidatePhrase::Surface& s) { return s.text == surface; });
        if (surf == cand.surfaces.end()) {
          cand.surfaces.push_back({surface, 1, index});
        } else {
          ++surf->count;
          surf->first_index = std::min(surf->first_index, index);
        }
      }
    }
  }

  std::vector<CandidatePhrase> out;
  out.reserve(merged.size());
  for (auto& [key, cand] : merged) out.push_back(std::move(cand));
  std::sort(out.begin(), out.end(), [](const CandidatePhrase& a, const CandidatePhrase& b) {
    if (a.first_token_index != b.first_token_index) return a.first_token_index < b.first_token_index;
    if (a.length_words != b.length_words) return a.length_words < b.length_words;
    return a.stem_key < b.stem_key;
  });
  return out;
}

// The most frequent surface form; ties go to the form that occurred first.
inline std::string canonical_surface(const CandidatePhrase& candidate) {
  const CandidatePhrase::Surface* best = nullptr;
  for (const auto& s : candidate.surfaces) {
    if (best == nullptr || s.count > best->count ||
        (s.count == best->count && s.first_index < best->first_index)) {
      best = &s;
    }
  }
  return best != nullptr ? best->text : std::string();
}

// Stem key of free-form phrase text (e.g. an author-supplied keyphrase):
// cleaned, case-folded, stemmed, space-joined.
inline std::string phrase_stem_key(std::string_view phrase) {
  Document doc = clean_text(phrase);
  std::string key;
  for (const TokenLine& line : doc.lines) {
    for (const std::string& tok : line.tokens) {
      if (!key.empty()) key += ' ';
      key += lovins::iterated_stem(tok);
    }
  }
  return key;
}

}  // namespace kea
