#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kea/discretize.hpp"
#include "kea/features.hpp"

namespace kea {

struct TrainingInstance {
  double tfidf = 0.0;
  double first_occ = 0.0;
  bool is_keyphrase = false;
};

struct FeatureWeights {
  CutPoints cuts;
  std::vector<double> p_yes;  // one entry per level, a distribution over levels
  std::vector<double> p_no;
};

// Class counts plus per-feature conditional level probabilities, learned
// from discretized training instances.
struct NbModel {
  long long y_count = 0;  // positive training instances
  long long n_count = 0;  // negative training instances
  FeatureWeights tfidf;
  FeatureWeights distance;
};

namespace detail {

inline FeatureWeights fit_feature(std::span<const double> values, const std::vector<bool>& labels,
                                  long long y_count, long long n_count) {
  FeatureWeights fw;
  fw.cuts = fit_discretization(values, labels);
  int levels = level_count(fw.cuts);
  std::vector<long long> yes_counts(levels, 0), no_counts(levels, 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    int level = apply_discretization(fw.cuts, values[i]);
    (labels[i] ? yes_counts : no_counts)[level - 1]++;
  }
  fw.p_yes.resize(levels);
  fw.p_no.resize(levels);
  for (int v = 0; v < levels; ++v) {
    fw.p_yes[v] = static_cast<double>(yes_counts[v] + 1) / static_cast<double>(y_count + levels);
    fw.p_no[v] = static_cast<double>(no_counts[v] + 1) / static_cast<double>(n_count + levels);
  }
  return fw;
}

}  // namespace detail

// Fits the discretization for both features, counts classes, and fills the
// conditional tables with Laplace-smoothed level frequencies
// (count + 1) / (class_count + num_levels).
inline NbModel train(std::span<const TrainingInstance> instances) {
  NbModel model;
  std::vector<double> tfidf_values, dist_values;
  std::vector<bool> labels;
  tfidf_values.reserve(instances.size());
  dist_values.reserve(instances.size());
  labels.reserve(instances.size());
  for (const TrainingInstance& inst : instances) {
    tfidf_values.push_back(inst.tfidf);
    dist_values.push_back(inst.first_occ);
    labels.push_back(inst.is_keyphrase);
    (inst.is_keyphrase ? model.y_count : model.n_count)++;
  }
  if (model.y_count == 0 || model.n_count == 0)
    throw std::runtime_error("train: degenerate class distribution (" +
                             std::to_string(model.y_count) + " positive, " +
                             std::to_string(model.n_count) + " negative instances)");
  model.tfidf = detail::fit_feature(tfidf_values, labels, model.y_count, model.n_count);
  model.distance = detail::fit_feature(dist_values, labels, model.y_count, model.n_count);
  return model;
}

// P[yes] = (Y+1)/(Y+N+2) * P_tfidf[t|yes] * P_distance[d|yes], P[no]
// analogously; returns p = P[yes] / (P[yes] + P[no]). Factors are combined
// in log space.
inline double score_levels(const NbModel& model, int tfidf_level, int distance_level) {
  double ly = std::log(static_cast<double>(model.y_count + 1) /
                       static_cast<double>(model.y_count + model.n_count + 2)) +
              std::log(model.tfidf.p_yes[tfidf_level - 1]) +
              std::log(model.distance.p_yes[distance_level - 1]);
  double ln = std::log(static_cast<double>(model.n_count + 1) /
                       static_cast<double>(model.y_count + model.n_count + 2)) +
              std::log(model.tfidf.p_no[tfidf_level - 1]) +
              std::log(model.distance.p_no[distance_level - 1]);
  return 1.0 / (1.0 + std::exp(ln - ly));
}

inline double score(const NbModel& model, const FeatureVector& features) {
  return score_levels(model, apply_discretization(model.tfidf.cuts, features.tfidf),
                      apply_discretization(model.distance.cuts, features.first_occ));
}

namespace detail {

inline std::string format_probability(double p) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", p);
  return buf;
}

inline std::string format_cut(double c) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c);
  if (ec != std::errc()) throw std::runtime_error("cannot format cut point");
  return std::string(buf, ptr);
}

inline void write_feature(std::ofstream& out, const char* name, const FeatureWeights& fw) {
  out << "feature " << name << " cuts";
  for (double c : fw.cuts) out << ' ' << format_cut(c);
  out << "\nyes";
  for (double p : fw.p_yes) out << ' ' << format_probability(p);
  out << "\nno";
  for (double p : fw.p_no) out << ' ' << format_probability(p);
  out << '\n';
}

}  // namespace detail

// Model file, LF-terminated:
//   KEA-NB 1
//   classes <Y> <N>
//   feature tfidf cuts <c1> <c2> ...
//   yes <p1> <p2> ...
//   no <p1> <p2> ...
//   feature distance cuts ...
//   yes ... / no ...
inline void save_model(const NbModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write model: " + path);
  out << "KEA-NB 1\n";
  out << "classes " << model.y_count << ' ' << model.n_count << '\n';
  detail::write_feature(out, "tfidf", model.tfidf);
  detail::write_feature(out, "distance", model.distance);
  if (!out) throw std::runtime_error("error writing model: " + path);
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> parts;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) parts.push_back(tok);
  return parts;
}

inline double parse_double(const std::string& s, const std::string& path, std::size_t lineno) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad number '" + s + "'");
  }
}

}  // namespace detail

inline NbModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model: " + path);
  auto fail = [&](std::size_t lineno, const std::string& what) -> std::runtime_error {
    return std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
  };

  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw fail(1, "empty model file");
  ++lineno;
  if (line.rfind("KEA-NB ", 0) != 0) throw fail(lineno, "not a model file (missing KEA-NB header)");
  if (line != "KEA-NB 1") throw fail(lineno, "unsupported model version '" + line.substr(7) + "', expected 1");

  NbModel model;
  if (!std::getline(in, line)) throw fail(2, "missing classes line");
  ++lineno;
  {
    auto parts = detail::split_ws(line);
    if (parts.size() != 3 || parts[0] != "classes") throw fail(lineno, "expected 'classes <Y> <N>'");
    try {
      model.y_count = std::stoll(parts[1]);
      model.n_count = std::stoll(parts[2]);
    } catch (const std::exception&) {
      throw fail(lineno, "bad class counts");
    }
    if (model.y_count < 0 || model.n_count < 0 || model.y_count + model.n_count < 1)
      throw fail(lineno, "class counts must be nonnegative and sum to at least 1");
  }

  auto read_feature = [&](const char* expect_name) -> FeatureWeights {
    FeatureWeights fw;
    if (!std::getline(in, line)) throw fail(lineno + 1, std::string("missing 'feature ") + expect_name + "' line");
    ++lineno;
    auto parts = detail::split_ws(line);
    if (parts.size() < 3 || parts[0] != "feature" || parts[2] != "cuts")
      throw fail(lineno, "expected 'feature <name> cuts ...'");
    if (parts[1] != expect_name)
      throw fail(lineno, "expected feature '" + std::string(expect_name) + "', found '" + parts[1] + "'");
    for (std::size_t i = 3; i < parts.size(); ++i)
      fw.cuts.push_back(detail::parse_double(parts[i], path, lineno));
    for (std::size_t i = 1; i < fw.cuts.size(); ++i)
      if (fw.cuts[i - 1] >= fw.cuts[i]) throw fail(lineno, "cut points must be strictly increasing");

    for (const char* row_name : {"yes", "no"}) {
      if (!std::getline(in, line)) throw fail(lineno + 1, std::string("missing '") + row_name + "' row");
      ++lineno;
      auto row = detail::split_ws(line);
      if (row.empty() || row[0] != row_name)
        throw fail(lineno, std::string("expected '") + row_name + "' row");
      std::vector<double>& probs = (row_name[0] == 'y') ? fw.p_yes : fw.p_no;
      for (std::size_t i = 1; i < row.size(); ++i)
        probs.push_back(detail::parse_double(row[i], path, lineno));
      if (static_cast<int>(probs.size()) != level_count(fw.cuts))
        throw fail(lineno, std::string(row_name) + " row has " + std::to_string(probs.size()) +
                               " entries for " + std::to_string(level_count(fw.cuts)) + " levels");
      double sum = 0.0;
      for (double p : probs) {
        if (!(p > 0.0 && p <= 1.0)) throw fail(lineno, "probabilities must lie in (0, 1]");
        sum += p;
      }
      // published tables are often rounded; accept a percent-level slack
      if (sum < 0.97 || sum > 1.03)
        throw fail(lineno, "probability row sums to " + detail::format_probability(sum));
    }
    return fw;
  };

  model.tfidf = read_feature("tfidf");
  model.distance = read_feature("distance");
  if (std::getline(in, line) && !line.empty()) throw fail(lineno + 1, "trailing content after model");
  return model;
}

}  // namespace kea
