#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "kea/extract.hpp"

namespace kea {

struct LabeledDocument {
  Document doc;
  std::vector<std::string> author_keyphrases;
};

// Number of extracted entries whose stem key equals a stemmed author
// keyphrase; each author phrase matches at most once.
inline int match_count(const ExtractionResult& extracted,
                       const std::vector<std::string>& author_keyphrases) {
  std::unordered_set<std::string> author_stems;
  for (const std::string& phrase : author_keyphrases) {
    std::string key = phrase_stem_key(phrase);
    if (!key.empty()) author_stems.insert(std::move(key));
  }
  int matches = 0;
  for (const ExtractedPhrase& e : extracted.ranked) {
    auto it = author_stems.find(e.stem_key);
    if (it != author_stems.end()) {
      ++matches;
      author_stems.erase(it);
    }
  }
  return matches;
}

// Per-document diagnostics: the four performance ceilings, in order
// matches <= in_candidates <= in_text <= author_count.
struct DocumentDiagnostics {
  std::string source_id;
  int author_count = 0;     // author keyphrases supplied
  int in_text = 0;          // distinct author stems appearing in the cleaned text
  int in_candidates = 0;    // distinct author stems among the candidate phrases
  std::vector<int> matches; // correctly extracted, one entry per cutoff
};

struct CutoffStats {
  int cutoff = 0;
  double mean_matches = 0.0;
  double sd = 0.0;  // across documents, or across resamples when resampling
};

struct EvaluationReport {
  std::vector<CutoffStats> per_cutoff;
  std::vector<DocumentDiagnostics> docs;
  int n_docs = 0;
  double mean_author_count = 0.0;
  double mean_in_text = 0.0;
  double mean_in_candidates = 0.0;
};

namespace detail {

inline double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

inline double sample_sd(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

// Does the stemmed phrase occur as a contiguous stemmed token run in a line?
inline bool stem_sequence_in_document(const std::vector<std::string>& phrase_words,
                                      const std::vector<std::vector<std::string>>& stemmed_lines) {
  for (const auto& line : stemmed_lines) {
    if (contiguous_subsequence(phrase_words, line)) return true;
  }
  return false;
}

}  // namespace detail

// Extracts from every test document at each cutoff and aggregates mean
// matches plus the performance-ceiling diagnostics. Documents without author
// keyphrases are excluded with a warning.
inline EvaluationReport evaluate(std::span<const LabeledDocument> test_docs, const NbModel& model,
                                 const DfModel& df_model, const std::vector<int>& cutoffs,
                                 const StopwordList& stopwords, int max_length = 3,
                                 bool doc_in_corpus = false) {
  if (test_docs.empty()) throw std::invalid_argument("evaluate: empty test set");
  if (cutoffs.empty()) throw std::invalid_argument("evaluate: no cutoffs given");
  int max_cutoff = *std::max_element(cutoffs.begin(), cutoffs.end());

  EvaluationReport report;
  for (const LabeledDocument& ld : test_docs) {
    if (ld.author_keyphrases.empty()) {
      std::cerr << "kea: warning: skipping document without author keyphrases: "
                << ld.doc.source_id << "\n";
      continue;
    }
    DocumentDiagnostics diag;
    diag.source_id = ld.doc.source_id;
    diag.author_count = static_cast<int>(ld.author_keyphrases.size());

    std::set<std::string> author_stems;
    for (const std::string& phrase : ld.author_keyphrases) {
      std::string key = phrase_stem_key(phrase);
      if (!key.empty()) author_stems.insert(std::move(key));
    }

    std::vector<std::vector<std::string>> stemmed_lines;
    for (const TokenLine& line : ld.doc.lines) {
      std::vector<std::string> stems;
      stems.reserve(line.tokens.size());
      for (const std::string& tok : line.tokens) stems.push_back(lovins::iterated_stem(tok));
      stemmed_lines.push_back(std::move(stems));
    }

    std::unordered_set<std::string> candidate_keys;
    for (const CandidatePhrase& cand : generate_candidates(ld.doc, stopwords, max_length))
      candidate_keys.insert(cand.stem_key);

    for (const std::string& stem : author_stems) {
      if (detail::stem_sequence_in_document(detail::split_words(stem), stemmed_lines)) ++diag.in_text;
      if (candidate_keys.count(stem) > 0) ++diag.in_candidates;
    }

    ExtractionResult full = extract(ld.doc, df_model, model, static_cast<std::size_t>(max_cutoff),
                                    stopwords, max_length, doc_in_corpus);
    for (int r : cutoffs) {
      ExtractionResult prefix;
      std::size_t take = std::min<std::size_t>(r, full.ranked.size());
      prefix.ranked.assign(full.ranked.begin(), full.ranked.begin() + take);
      diag.matches.push_back(match_count(prefix, ld.author_keyphrases));
    }
    report.docs.push_back(std::move(diag));
  }
  if (report.docs.empty()) throw std::runtime_error("evaluate: no usable test documents");

  report.n_docs = static_cast<int>(report.docs.size());
  std::vector<double> authors, in_text, in_cands;
  for (const auto& d : report.docs) {
    authors.push_back(d.author_count);
    in_text.push_back(d.in_text);
    in_cands.push_back(d.in_candidates);
  }
  report.mean_author_count = detail::mean(authors);
  report.mean_in_text = detail::mean(in_text);
  report.mean_in_candidates = detail::mean(in_cands);
  for (std::size_t ci = 0; ci < cutoffs.size(); ++ci) {
    std::vector<double> per_doc;
    for (const auto& d : report.docs) per_doc.push_back(d.matches[ci]);
    report.per_cutoff.push_back({cutoffs[ci], detail::mean(per_doc), detail::sample_sd(per_doc)});
  }
  return report;
}

enum class SweepDimension { TrainingSize, DfSize, Truncation };

struct SweepConfig {
  SweepDimension dimension = SweepDimension::TrainingSize;
  std::vector<long long> points;
  std::vector<int> cutoffs = {5, 10, 15, 20};
  int max_length = 3;
  bool doc_in_corpus = false;
  std::uint64_t seed = 1;
  int resamples = 1;  // independent training/corpus samples per point
};

struct SweepRow {
  long long point = 0;
  bool available = false;
  EvaluationReport report;
};

namespace detail {

// Seeded Fisher-Yates prefix; deterministic across platforms.
inline std::vector<std::size_t> sample_indices(std::size_t total, std::size_t take,
                                               std::mt19937_64& rng) {
  std::vector<std::size_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < take && i + 1 < total; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(take);
  return idx;
}

}  // namespace detail

// Runs one train-and-evaluate pass per sweep point along the configured
// dimension; points with too few documents are marked unavailable. With
// resamples > 1 the mean and sd per cutoff are taken across the per-sample
// mean match counts (a normal-approximation error-bar substitute).
inline std::vector<SweepRow> sweep(const SweepConfig& config,
                                   std::span<const LabeledDocument> training_pool,
                                   std::span<const LabeledDocument> test_set,
                                   std::span<const Document> df_corpus,
                                   const StopwordList& stopwords) {
  auto train_model = [&](std::span<const LabeledDocument> docs, const DfModel& df) {
    std::vector<TrainingInstance> instances;
    for (const LabeledDocument& ld : docs) {
      auto insts = make_training_instances(ld.doc, ld.author_keyphrases, df, stopwords,
                                           config.max_length, config.doc_in_corpus);
      instances.insert(instances.end(), insts.begin(), insts.end());
    }
    return train(instances);
  };

  std::vector<SweepRow> rows;
  for (std::size_t pi = 0; pi < config.points.size(); ++pi) {
    long long point = config.points[pi];
    SweepRow row;
    row.point = point;

    bool feasible = true;
    switch (config.dimension) {
      case SweepDimension::TrainingSize:
        feasible = point >= 1 && point <= static_cast<long long>(training_pool.size());
        break;
      case SweepDimension::DfSize:
        feasible = point >= 0 && point <= static_cast<long long>(df_corpus.size());
        break;
      case SweepDimension::Truncation:
        feasible = point >= 1 && point <= 100;
        break;
    }
    if (!feasible) {
      rows.push_back(std::move(row));
      continue;
    }

    int resamples = config.dimension == SweepDimension::Truncation ? 1 : std::max(1, config.resamples);
    std::vector<EvaluationReport> reports;
    for (int rep = 0; rep < resamples; ++rep) {
      std::mt19937_64 rng(config.seed + 0x9e3779b97f4a7c15ULL * (pi * 1000 + rep));
      switch (config.dimension) {
        case SweepDimension::TrainingSize: {
          auto idx = detail::sample_indices(training_pool.size(), static_cast<std::size_t>(point), rng);
          std::vector<LabeledDocument> sample;
          for (std::size_t i : idx) sample.push_back(training_pool[i]);
          DfModel df = build_df_model(df_corpus, stopwords, config.max_length);
          NbModel model = train_model(sample, df);
          reports.push_back(evaluate(test_set, model, df, config.cutoffs, stopwords,
                                     config.max_length, config.doc_in_corpus));
          break;
        }
        case SweepDimension::DfSize: {
          auto idx = detail::sample_indices(df_corpus.size(), static_cast<std::size_t>(point), rng);
          std::vector<Document> sample;
          for (std::size_t i : idx) sample.push_back(df_corpus[i]);
          DfModel df = build_df_model(sample, stopwords, config.max_length);
          NbModel model = train_model(training_pool, df);
          reports.push_back(evaluate(test_set, model, df, config.cutoffs, stopwords,
                                     config.max_length, config.doc_in_corpus));
          break;
        }
        case SweepDimension::Truncation: {
          DfModel df = build_df_model(df_corpus, stopwords, config.max_length);
          NbModel model = train_model(training_pool, df);
          std::vector<LabeledDocument> truncated;
          for (const LabeledDocument& ld : test_set) {
            std::size_t keep = std::max<std::size_t>(
                1, ld.doc.token_count * static_cast<std::size_t>(point) / 100);
            truncated.push_back({truncate_document(ld.doc, keep), ld.author_keyphrases});
          }
          reports.push_back(evaluate(truncated, model, df, config.cutoffs, stopwords,
                                     config.max_length, config.doc_in_corpus));
          break;
        }
      }
    }

    row.available = true;
    row.report = reports.front();
    if (reports.size() > 1) {
      for (std::size_t ci = 0; ci < config.cutoffs.size(); ++ci) {
        std::vector<double> means;
        for (const auto& rep : reports) means.push_back(rep.per_cutoff[ci].mean_matches);
        row.report.per_cutoff[ci].mean_matches = detail::mean(means);
        row.report.per_cutoff[ci].sd = detail::sample_sd(means);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void write_report_header(std::ostream& out) {
  out << "sweep_value\tr\tmean_matches\tsd\tn_docs\tmean_author_count\tmean_in_text"
         "\tmean_in_candidates\n";
}

inline void write_report_rows(std::ostream& out, const std::string& sweep_value,
                              const EvaluationReport& report) {
  char buf[256];
  for (const CutoffStats& cs : report.per_cutoff) {
    std::snprintf(buf, sizeof(buf), "%s\t%d\t%.4f\t%.4f\t%d\t%.4f\t%.4f\t%.4f\n",
                  sweep_value.c_str(), cs.cutoff, cs.mean_matches, cs.sd, report.n_docs,
                  report.mean_author_count, report.mean_in_text, report.mean_in_candidates);
    out << buf;
  }
}

inline void write_sweep_tsv(std::ostream& out, const std::vector<SweepRow>& rows,
                            const std::vector<int>& cutoffs) {
  write_report_header(out);
  for (const SweepRow& row : rows) {
    if (row.available) {
      write_report_rows(out, std::to_string(row.point), row.report);
    } else {
      for (int r : cutoffs)
        out << row.point << '\t' << r << "\tNA\tNA\t0\tNA\tNA\tNA\n";
    }
  }
}

}  // namespace kea
