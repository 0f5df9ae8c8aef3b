#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kea/candidates.hpp"
#include "kea/text.hpp"

namespace kea {

// Global-corpus document frequencies: stem key -> number of corpus documents
// whose candidate phrases include it. Phrases absent from the map have
// document frequency 0.
struct DfModel {
  long long num_docs = 0;
  std::map<std::string, long long> df;

  long long count(const std::string& stem_key) const {
    auto it = df.find(stem_key);
    return it == df.end() ? 0 : it->second;
  }
};

inline DfModel build_df_model(std::span<const Document> corpus, const StopwordList& stopwords,
                              int max_length = 3) {
  DfModel model;
  model.num_docs = static_cast<long long>(corpus.size());
  for (const Document& doc : corpus) {
    for (const CandidatePhrase& cand : generate_candidates(doc, stopwords, max_length)) {
      ++model.df[cand.stem_key];  // candidates are already merged per document
    }
  }
  return model;
}

// File format, bit-exact:
//   KEA-DF 1
//   N <num_docs>
//   <df_count>\t<stem_key>        (sorted by stem key)
inline void save_df_model(const DfModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write df model: " + path);
  out << "KEA-DF 1\n";
  out << "N " << model.num_docs << "\n";
  for (const auto& [key, count] : model.df) out << count << '\t' << key << '\n';
  if (!out) throw std::runtime_error("error writing df model: " + path);
}

inline DfModel load_df_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open df model: " + path);
  auto fail = [&](std::size_t lineno, const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
  };

  DfModel model;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw fail(1, "empty df model file");
  ++lineno;
  if (line.rfind("KEA-DF ", 0) != 0) throw fail(lineno, "not a df model file (missing KEA-DF header)");
  if (line != "KEA-DF 1") throw fail(lineno, "unsupported df model version '" + line.substr(7) + "', expected 1");

  if (!std::getline(in, line)) throw fail(2, "missing corpus size line");
  ++lineno;
  if (line.rfind("N ", 0) != 0) throw fail(lineno, "expected 'N <num_docs>'");
  try {
    std::size_t used = 0;
    model.num_docs = std::stoll(line.substr(2), &used);
    if (used != line.size() - 2 || model.num_docs < 0) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw fail(lineno, "bad corpus size '" + line.substr(2) + "'");
  }

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) throw fail(lineno, "blank line in df entries");
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw fail(lineno, "expected '<count>\\t<stem_key>'");
    long long count = 0;
    try {
      std::size_t used = 0;
      count = std::stoll(line.substr(0, tab), &used);
      if (used != tab) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw fail(lineno, "bad document count '" + line.substr(0, tab) + "'");
    }
    std::string key = line.substr(tab + 1);
    if (key.empty()) throw fail(lineno, "empty stem key");
    if (count < 1 || count > model.num_docs)
      throw fail(lineno, "document count " + std::to_string(count) + " outside 1.." +
                             std::to_string(model.num_docs));
    if (!model.df.emplace(std::move(key), count).second) throw fail(lineno, "duplicate stem key");
  }
  return model;
}

}  // namespace kea
