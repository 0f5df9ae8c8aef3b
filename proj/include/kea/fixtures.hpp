#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "kea/bayes.hpp"

namespace kea {

// Reference inputs and expected outputs for one worked scoring example.
struct WorkedExample {
  long long freq = 0;
  long long doc_size = 0;
  long long first_index = 0;
  long long df = 0;
  long long corpus_size = 0;
  double expected_tfidf = 0.0;
  double expected_first_occ = 0.0;
  int expected_tfidf_level = 0;
  int expected_distance_level = 0;
  double expected_probability = 0.0;
};

struct Fixture {
  std::optional<NbModel> model;
  std::optional<WorkedExample> example;
};

namespace detail {

inline WorkedExample load_worked_example(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  WorkedExample ex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream ss(line);
    std::string key;
    ss >> key;
    bool ok = true;
    if (key == "freq") ss >> ex.freq;
    else if (key == "size") ss >> ex.doc_size;
    else if (key == "first") ss >> ex.first_index;
    else if (key == "df") ss >> ex.df;
    else if (key == "N") ss >> ex.corpus_size;
    else if (key == "tfidf") ss >> ex.expected_tfidf;
    else if (key == "distance") ss >> ex.expected_first_occ;
    else if (key == "tfidf_level") ss >> ex.expected_tfidf_level;
    else if (key == "distance_level") ss >> ex.expected_distance_level;
    else if (key == "probability") ss >> ex.expected_probability;
    else ok = false;
    if (!ok || ss.fail())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad fixture line '" + line + "'");
  }
  return ex;
}

}  // namespace detail

// Bundled test fixtures, stored in the public file formats. Known names:
// "table2" (a reference model file) and "example3" (a worked scoring
// example).
inline Fixture load_fixture(const std::string& fixture_dir, const std::string& name) {
  Fixture fx;
  if (name == "table2") {
    fx.model = load_model(fixture_dir + "/table2.model");
  } else if (name == "example3") {
    fx.example = detail::load_worked_example(fixture_dir + "/example3.txt");
  } else {
    throw std::runtime_error("unknown fixture '" + name + "'; available: table2, example3");
  }
  return fx;
}

}  // namespace kea
