// kea: keyphrase extraction command line.
//
// Subcommands:
//   build-df   build a document-frequency model from a corpus of text files
//   train      learn an extraction model from documents with known keyphrases
//   extract    extract ranked keyphrases from documents
//   evaluate   score extraction quality against author keyphrases
//   sweep      run a parameter sweep described by a config file

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kea/kea.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
  std::string stopword_file;
  int max_length = 3;
};

void add_common(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--stopwords", opts->stopword_file,
                  "stopword file (one word per line; default: built-in list, "
                  "or $KEA_STOPWORDS when set)");
  cmd->add_option("--max-length", opts->max_length, "maximum phrase length in words")
      ->default_val(3)
      ->check(CLI::PositiveNumber);
}

kea::StopwordList resolve_stopwords(const CommonOptions& opts) {
  if (!opts.stopword_file.empty()) return kea::StopwordList::from_file(opts.stopword_file);
  if (const char* env = std::getenv("KEA_STOPWORDS"); env != nullptr && *env != '\0')
    return kea::StopwordList::from_file(env);
  return kea::StopwordList::builtin();
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Files given directly plus regular files inside given directories
// (non-recursive; key files, prior .kea outputs and dotfiles skipped).
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs,
                                    const std::string& key_suffix = ".key") {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    fs::path p(input);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        const fs::path& f = entry.path();
        if (f.filename().string().front() == '.') continue;
        if (f.extension() == key_suffix || f.extension() == ".kea") continue;
        files.push_back(f);
      }
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<kea::Document> load_documents(const std::vector<fs::path>& files) {
  std::vector<kea::Document> docs;
  for (const fs::path& f : files) {
    try {
      docs.push_back(kea::clean_text(read_file(f), f.string()));
    } catch (const std::exception& e) {
      std::cerr << "kea: warning: skipping unreadable input: " << e.what() << "\n";
    }
  }
  return docs;
}

fs::path key_path_for(const fs::path& doc, const std::string& key_suffix) {
  fs::path p = doc;
  p.replace_extension(key_suffix);
  return p;
}

std::vector<std::string> read_keyphrases(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read key file " + path.string());
  std::vector<std::string> phrases;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    line = line.substr(b, e - b + 1);
    if (line.empty() || line.front() == '#') continue;
    phrases.push_back(line);
  }
  return phrases;
}

std::vector<kea::LabeledDocument> load_labeled(const std::string& dir,
                                               const std::string& key_suffix) {
  std::vector<kea::LabeledDocument> out;
  for (const fs::path& f : expand_inputs({dir}, key_suffix)) {
    fs::path kp = key_path_for(f, key_suffix);
    if (!fs::exists(kp)) {
      std::cerr << "kea: warning: no key file for " << f.string() << ", skipped\n";
      continue;
    }
    try {
      out.push_back({kea::clean_text(read_file(f), f.string()), read_keyphrases(kp)});
    } catch (const std::exception& e) {
      std::cerr << "kea: warning: skipping " << f.string() << ": " << e.what() << "\n";
    }
  }
  return out;
}

int cmd_build_df(const std::vector<std::string>& inputs, const std::string& out_path,
                 const CommonOptions& opts) {
  kea::StopwordList stopwords = resolve_stopwords(opts);
  std::vector<kea::Document> docs = load_documents(expand_inputs(inputs));
  if (docs.empty()) {
    std::cerr << "kea: no input documents\n";
    return 1;
  }
  kea::DfModel model = kea::build_df_model(docs, stopwords, opts.max_length);
  kea::save_df_model(model, out_path);
  std::cout << "df model: " << model.num_docs << " documents, " << model.df.size()
            << " phrases -> " << out_path << "\n";
  return 0;
}

int cmd_train(const std::string& doc_dir, const std::string& key_suffix,
              const std::string& df_path, const std::string& out_path, bool in_corpus,
              const CommonOptions& opts) {
  kea::StopwordList stopwords = resolve_stopwords(opts);
  kea::DfModel df = kea::load_df_model(df_path);
  std::vector<kea::LabeledDocument> docs = load_labeled(doc_dir, key_suffix);
  std::erase_if(docs, [](const kea::LabeledDocument& ld) {
    if (!ld.author_keyphrases.empty()) return false;
    std::cerr << "kea: warning: skipping training document with empty key file: "
              << ld.doc.source_id << "\n";
    return true;
  });
  if (docs.empty()) {
    std::cerr << "kea: no usable training documents in " << doc_dir << "\n";
    return 1;
  }
  std::vector<kea::TrainingInstance> instances;
  for (const kea::LabeledDocument& ld : docs) {
    auto insts = kea::make_training_instances(ld.doc, ld.author_keyphrases, df, stopwords,
                                              opts.max_length, in_corpus);
    instances.insert(instances.end(), insts.begin(), insts.end());
  }
  kea::NbModel model = kea::train(instances);
  kea::save_model(model, out_path);
  std::cout << "trained on " << docs.size() << " documents: Y=" << model.y_count
            << " N=" << model.n_count << " tfidf_levels=" << kea::level_count(model.tfidf.cuts)
            << " distance_levels=" << kea::level_count(model.distance.cuts) << " -> " << out_path
            << "\n";
  return 0;
}

int cmd_extract(const std::vector<std::string>& inputs, const std::string& df_path,
                const std::string& model_path, std::size_t count, bool scores, bool write_files,
                bool in_corpus, const CommonOptions& opts) {
  kea::StopwordList stopwords = resolve_stopwords(opts);
  kea::DfModel df = kea::load_df_model(df_path);
  kea::NbModel model = kea::load_model(model_path);
  std::vector<fs::path> files = expand_inputs(inputs);
  if (files.empty()) {
    std::cerr << "kea: no input documents\n";
    return 1;
  }
  for (const fs::path& f : files) {
    kea::Document doc = kea::clean_text(read_file(f), f.string());
    kea::ExtractionResult result =
        kea::extract(doc, df, model, count, stopwords, opts.max_length, in_corpus);
    std::ostringstream block;
    for (const kea::ExtractedPhrase& e : result.ranked) {
      if (scores) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.4f\t%.6f\t", e.probability, e.tfidf);
        block << buf;
      }
      block << e.surface << "\n";
    }
    if (write_files) {
      fs::path out = f;
      out += ".kea";
      std::ofstream os(out, std::ios::binary);
      if (!os) throw std::runtime_error("cannot write " + out.string());
      os << block.str();
    } else {
      std::cout << "== " << f.string() << "\n" << block.str();
    }
  }
  return 0;
}

int cmd_evaluate(const std::string& doc_dir, const std::string& key_suffix,
                 const std::string& df_path, const std::string& model_path,
                 const std::vector<int>& cutoffs, const std::string& out_path, bool in_corpus,
                 const CommonOptions& opts) {
  kea::StopwordList stopwords = resolve_stopwords(opts);
  kea::DfModel df = kea::load_df_model(df_path);
  kea::NbModel model = kea::load_model(model_path);
  std::vector<kea::LabeledDocument> docs = load_labeled(doc_dir, key_suffix);
  if (docs.empty()) {
    std::cerr << "kea: no usable test documents in " << doc_dir << "\n";
    return 1;
  }
  kea::EvaluationReport report =
      kea::evaluate(docs, model, df, cutoffs, stopwords, opts.max_length, in_corpus);
  std::ostringstream tsv;
  kea::write_report_header(tsv);
  kea::write_report_rows(tsv, "-", report);
  if (out_path.empty()) {
    std::cout << tsv.str();
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + out_path);
    os << tsv.str();
    std::cout << "report -> " << out_path << "\n";
  }
  return 0;
}

struct SweepFileConfig {
  kea::SweepConfig sweep;
  std::string train_dir;
  std::string test_dir;
  std::string corpus_dir;  // defaults to train_dir
  std::string key_suffix = ".key";
  std::string stopword_file;
  std::string out_path;
};

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoll(item));
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (long long v : parse_ll_list(s)) out.push_back(static_cast<int>(v));
  return out;
}

SweepFileConfig parse_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep config " + path);
  SweepFileConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  bool have_dimension = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
      continue;
    }
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      std::size_t e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "sweep") {
        if (value == "training_size") cfg.sweep.dimension = kea::SweepDimension::TrainingSize;
        else if (value == "df_size") cfg.sweep.dimension = kea::SweepDimension::DfSize;
        else if (value == "truncation") cfg.sweep.dimension = kea::SweepDimension::Truncation;
        else throw std::runtime_error("unknown sweep dimension '" + value + "'");
        have_dimension = true;
      } else if (key == "points") cfg.sweep.points = parse_ll_list(value);
      else if (key == "cutoffs") cfg.sweep.cutoffs = parse_int_list(value);
      else if (key == "max_length") cfg.sweep.max_length = std::stoi(value);
      else if (key == "seed") cfg.sweep.seed = std::stoull(value);
      else if (key == "resamples") cfg.sweep.resamples = std::stoi(value);
      else if (key == "in_corpus") cfg.sweep.doc_in_corpus = (value == "true" || value == "1");
      else if (key == "train_dir") cfg.train_dir = value;
      else if (key == "test_dir") cfg.test_dir = value;
      else if (key == "corpus_dir") cfg.corpus_dir = value;
      else if (key == "key_suffix") cfg.key_suffix = value;
      else if (key == "stopwords") cfg.stopword_file = value;
      else if (key == "out") cfg.out_path = value;
      else throw std::runtime_error("unknown key '" + key + "'");
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception&) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  if (!have_dimension) throw std::runtime_error(path + ": missing 'sweep = <dimension>'");
  if (cfg.sweep.points.empty()) throw std::runtime_error(path + ": missing 'points'");
  if (cfg.train_dir.empty()) throw std::runtime_error(path + ": missing 'train_dir'");
  if (cfg.test_dir.empty()) throw std::runtime_error(path + ": missing 'test_dir'");
  if (cfg.corpus_dir.empty()) cfg.corpus_dir = cfg.train_dir;
  return cfg;
}

int cmd_sweep(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              const CommonOptions& opts) {
  SweepFileConfig cfg = parse_sweep_config(config_path);
  if (seed_override) cfg.sweep.seed = *seed_override;
  if (opts.max_length != 3) cfg.sweep.max_length = opts.max_length;
  if (!opts.stopword_file.empty()) cfg.stopword_file = opts.stopword_file;

  kea::StopwordList stopwords =
      cfg.stopword_file.empty() ? resolve_stopwords(opts) : kea::StopwordList::from_file(cfg.stopword_file);
  std::vector<kea::LabeledDocument> training = load_labeled(cfg.train_dir, cfg.key_suffix);
  std::vector<kea::LabeledDocument> test = load_labeled(cfg.test_dir, cfg.key_suffix);
  std::vector<kea::Document> corpus = load_documents(expand_inputs({cfg.corpus_dir}, cfg.key_suffix));
  if (training.empty()) throw std::runtime_error("no training documents in " + cfg.train_dir);
  if (test.empty()) throw std::runtime_error("no test documents in " + cfg.test_dir);

  std::vector<kea::SweepRow> rows = kea::sweep(cfg.sweep, training, test, corpus, stopwords);
  std::ostringstream tsv;
  kea::write_sweep_tsv(tsv, rows, cfg.sweep.cutoffs);
  if (cfg.out_path.empty()) {
    std::cout << tsv.str();
  } else {
    std::ofstream os(cfg.out_path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + cfg.out_path);
    os << tsv.str();
    std::cout << "sweep report -> " << cfg.out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kea: keyphrase extraction"};
  app.require_subcommand(1);

  // build-df
  auto* build = app.add_subcommand("build-df", "build a document-frequency model");
  std::vector<std::string> build_inputs;
  std::string build_out;
  CommonOptions build_opts;
  build->add_option("inputs", build_inputs, "text files or directories")->required();
  build->add_option("-o,--out", build_out, "output df model file")->required();
  add_common(build, &build_opts);

  // train
  auto* trn = app.add_subcommand("train", "train an extraction model");
  std::string train_docs, train_df, train_out, train_suffix = ".key";
  bool train_in_corpus = false;
  CommonOptions train_opts;
  trn->add_option("--docs", train_docs, "directory of training documents")->required();
  trn->add_option("--df", train_df, "df model file")->required();
  trn->add_option("-o,--out", train_out, "output model file")->required();
  trn->add_option("--key-suffix", train_suffix, "keyphrase file suffix")->default_val(".key");
  trn->add_flag("--in-corpus", train_in_corpus, "training documents are part of the df corpus");
  add_common(trn, &train_opts);

  // extract
  auto* ext = app.add_subcommand("extract", "extract keyphrases from documents");
  std::vector<std::string> ext_inputs;
  std::string ext_df, ext_model;
  std::size_t ext_count = 5;
  bool ext_scores = false, ext_write = false, ext_in_corpus = false;
  CommonOptions ext_opts;
  ext->add_option("inputs", ext_inputs, "text files or directories")->required();
  ext->add_option("--df", ext_df, "df model file")->required();
  ext->add_option("--model", ext_model, "model file")->required();
  ext->add_option("-r,--count", ext_count, "keyphrases per document")->default_val(5);
  ext->add_flag("--scores", ext_scores, "print probability and tfidf columns");
  ext->add_flag("--write", ext_write, "write <doc>.kea files instead of stdout");
  ext->add_flag("--in-corpus", ext_in_corpus, "documents are part of the df corpus");
  add_common(ext, &ext_opts);

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "evaluate against author keyphrases");
  std::string ev_docs, ev_df, ev_model, ev_out, ev_suffix = ".key";
  std::vector<int> ev_cutoffs = {5, 10, 15, 20};
  bool ev_in_corpus = false;
  CommonOptions ev_opts;
  ev->add_option("--docs", ev_docs, "directory of test documents with key files")->required();
  ev->add_option("--df", ev_df, "df model file")->required();
  ev->add_option("--model", ev_model, "model file")->required();
  ev->add_option("--cutoffs", ev_cutoffs, "extraction cutoffs")->delimiter(',');
  ev->add_option("-o,--out", ev_out, "output TSV file (default stdout)");
  ev->add_option("--key-suffix", ev_suffix, "keyphrase file suffix")->default_val(".key");
  ev->add_flag("--in-corpus", ev_in_corpus, "documents are part of the df corpus");
  add_common(ev, &ev_opts);

  // sweep
  auto* sw = app.add_subcommand("sweep", "run a sweep from a config file");
  std::string sweep_config;
  std::optional<std::uint64_t> sweep_seed;
  CommonOptions sweep_opts;
  sw->add_option("config", sweep_config, "sweep config file (key = value lines)")->required();
  sw->add_option("--seed", sweep_seed, "override the config's random seed");
  add_common(sw, &sweep_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) return cmd_build_df(build_inputs, build_out, build_opts);
    if (*trn) return cmd_train(train_docs, train_suffix, train_df, train_out, train_in_corpus, train_opts);
    if (*ext) return cmd_extract(ext_inputs, ext_df, ext_model, ext_count, ext_scores, ext_write,
                                 ext_in_corpus, ext_opts);
    if (*ev) return cmd_evaluate(ev_docs, ev_suffix, ev_df, ev_model, ev_cutoffs, ev_out,
                                 ev_in_corpus, ev_opts);
    if (*sw) return cmd_sweep(sweep_config, sweep_seed, sweep_opts);
  } catch (const std::exception& e) {
    std::cerr << "kea: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
