// Copyright 2026 The SEASON-cpp Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "season/cli.h"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "season/data.h"
#include "season/decode.h"
#include "season/errors.h"
#include "season/evaluation.h"
#include "season/metrics.h"
#include "season/model.h"
#include "season/salience.h"
#include "season/selfcheck.h"

namespace season::cli {
namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Config file handling

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::pair<std::string, std::string>> ReadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string::npos) throw ConfigError(where + "expected key=value");
    std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty()) throw ConfigError(where + "empty key");
    if (key == "config") throw ConfigError(where + "config files cannot nest");
    if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");
    entries.emplace_back(key, value);
  }
  return entries;
}

bool GivenOnCommandLine(const std::vector<std::string>& args, const std::string& key) {
  const std::string flag = "--" + key;
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

// ---------------------------------------------------------------------------
// Shared helpers

void RequireParentDir(const std::string& path, const char* what) {
  fs::path parent = fs::path(path).parent_path();
  if (parent.empty()) parent = ".";
  if (!fs::is_directory(parent)) {
    throw ConfigError(std::string(what) + " directory '" + parent.string() +
                      "' does not exist");
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
  if (!out) throw DataError("failed writing '" + path + "'");
}

void CheckThresholds(const std::vector<double>& thresholds) {
  try {
    AllocateLevels({0.5}, thresholds);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("thresholds: ") + e.what());
  }
}

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

struct ProfileOpts {
  std::string name;
  int max_src = 0;
  int max_tgt = 0;

  void Add(CLI::App* app, const std::string& default_name) {
    name = default_name;
    app->add_option("--profile", name, "Dataset length profile")
        ->check(CLI::IsMember({"cnndm", "samsum", "edt", "custom"}));
    app->add_option("--max-src", max_src, "Source token limit (overrides profile)")
        ->check(CLI::PositiveNumber);
    app->add_option("--max-tgt", max_tgt, "Target token limit (overrides profile)")
        ->check(CLI::PositiveNumber);
  }

  DatasetProfile Resolve(const DatasetProfile& fallback) const {
    DatasetProfile p = name.empty() ? fallback : ProfileByName(name);
    if (max_src > 0) p.max_src_tokens = max_src;
    if (max_tgt > 0) p.max_tgt_tokens = max_tgt;
    ValidateProfile(p);
    return p;
  }
};

void SetThreads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

// ---------------------------------------------------------------------------
// train

struct TrainOpts {
  std::string corpus, checkpoint, log;
  ProfileOpts profile;
  int vocab_cap = 8000;
  int epochs = 5;
  double lr = 1e-3;
  int batch_size = 8;
  int d_model = 64, heads = 2, enc_layers = 2, dec_layers = 2, ffn_dim = 128;
  double lambda_sal = 0.5;
  std::vector<double> thresholds = kDefaultSalienceThresholds;
  std::uint64_t seed = 1;
  int threads = 0;
};

int CmdTrain(const TrainOpts& o, std::ostream& out) {
  SetThreads(o.threads);
  const DatasetProfile profile = o.profile.Resolve(ProfileByName("cnndm"));
  CheckThresholds(o.thresholds);
  ModelConfig config;
  config.d_model = o.d_model;
  config.n_heads = o.heads;
  config.enc_layers = o.enc_layers;
  config.dec_layers = o.dec_layers;
  config.ffn_dim = o.ffn_dim;
  config.degrees = static_cast<int>(o.thresholds.size()) + 1;
  config.lambda_sal = o.lambda_sal;
  config.max_src_len = profile.max_src_tokens;
  config.max_tgt_len = profile.max_tgt_tokens;
  config.seed = o.seed;
  config.vocab_size = o.vocab_cap;
  config.Validate();
  if (o.vocab_cap <= kReservedTokens) {
    throw ConfigError("vocabulary cap must exceed the reserved tokens");
  }
  TrainOptions topts;
  topts.epochs = o.epochs;
  topts.learning_rate = o.lr;
  topts.batch_size = o.batch_size;
  topts.shuffle_seed = o.seed;
  if (o.epochs < 1 || o.batch_size < 1 || !(o.lr > 0)) {
    throw ConfigError("epochs, batch size and learning rate must be positive");
  }
  RequireParentDir(o.checkpoint, "checkpoint");
  if (!o.log.empty()) RequireParentDir(o.log, "log");

  const std::vector<Example> corpus = LoadCorpus(o.corpus);
  if (corpus.empty()) throw DataError("'" + o.corpus + "' holds no examples");
  const Vocab vocab = BuildVocab(corpus, o.vocab_cap);
  config.vocab_size = vocab.size();
  std::vector<PreprocessedExample> data;
  data.reserve(corpus.size());
  long unk = 0, tokens = 0;
  for (const auto& ex : corpus) {
    data.push_back(Preprocess(ex, profile, vocab, o.thresholds));
    unk += data.back().unk_count;
    tokens += data.back().token_count;
  }
  out << "corpus " << corpus.size() << " examples, vocab " << vocab.size()
      << ", unk rate " << Fmt(tokens ? static_cast<double>(unk) / tokens : 0.0)
      << ", profile " << profile.name << " (" << profile.max_src_tokens << ", "
      << profile.max_tgt_tokens << ")\n";

  std::string log_text;
  auto on_epoch = [&](const EpochLog& e) {
    out << "epoch " << e.epoch << " nll " << Fmt(e.mean.nll) << " sal_ce "
        << Fmt(e.mean.sal_ce) << " total " << Fmt(e.mean.total) << "\n";
    log_text += json{{"epoch", e.epoch},
                     {"nll", e.mean.nll},
                     {"sal_ce", e.mean.sal_ce},
                     {"total", e.mean.total}}
                    .dump() +
                "\n";
  };
  const TrainResult result = Train(data, config, topts, on_epoch);
  out << "initial total " << Fmt(result.initial.total) << " final total "
      << Fmt(result.final.total) << "\n";
  SaveCheckpoint(o.checkpoint, result.params, vocab);
  if (!o.log.empty()) WriteText(o.log, log_text);
  out << "wrote " << o.checkpoint << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// summarize

struct SummarizeOpts {
  std::string checkpoint, corpus, output;
  ProfileOpts profile;
  DecodeConfig decode;
  int max_len = 0;
  int threads = 0;
};

int CmdSummarize(const SummarizeOpts& o, std::ostream& out) {
  SetThreads(o.threads);
  RequireParentDir(o.output, "output");
  if (o.max_len < 0) throw ConfigError("max-len must be >= 1");
  DecodeConfig dcfg = o.decode;
  dcfg.max_len = 1;  // resolved once the profile is known
  dcfg.Validate();

  const Checkpoint ckpt = LoadCheckpoint(o.checkpoint);
  const ModelConfig& mc = ckpt.params.config();
  DatasetProfile fallback{"checkpoint", mc.max_src_len, mc.max_tgt_len};
  const DatasetProfile profile = o.profile.Resolve(fallback);
  if (profile.max_src_tokens > mc.max_src_len) {
    throw ConfigError("source limit " + std::to_string(profile.max_src_tokens) +
                      " exceeds the checkpoint's " + std::to_string(mc.max_src_len));
  }
  if (profile.max_tgt_tokens > mc.max_tgt_len) {
    throw ConfigError("target limit " + std::to_string(profile.max_tgt_tokens) +
                      " exceeds the checkpoint's " + std::to_string(mc.max_tgt_len));
  }
  dcfg.max_len = o.max_len > 0 ? o.max_len : profile.max_tgt_tokens - 1;
  if (dcfg.max_len > profile.max_tgt_tokens - 1) {
    throw ConfigError("max-len must be < the target limit");
  }

  const std::vector<Example> docs = LoadCorpus(o.corpus, /*require_summary=*/false);
  std::vector<PreprocessedExample> inputs;
  inputs.reserve(docs.size());
  for (const auto& ex : docs) {
    Example bare{ex.id, ex.document, ""};
    inputs.push_back(Preprocess(bare, profile, ckpt.vocab, kDefaultSalienceThresholds));
  }
  std::vector<std::string> summaries(docs.size());
  const long n = static_cast<long>(docs.size());
  std::string error;
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      const std::vector<int> ids = SummarizeIds(ckpt.params, inputs[i].input_ids, dcfg);
      TokenSeq toks;
      toks.reserve(ids.size());
      for (int id : ids) toks.push_back(ckpt.vocab.Token(id));
      summaries[i] = Detokenize(toks);
    } catch (const std::exception& e) {
#pragma omp critical(season_summarize_error)
      if (!failed) {
        failed = true;
        error = "example '" + docs[i].id + "': " + e.what();
      }
    }
  }
  if (failed) throw DataError(error);
  std::string text;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    text += json{{"id", docs[i].id}, {"summary", summaries[i]}}.dump() + "\n";
  }
  WriteText(o.output, text);
  out << "summarized " << docs.size() << " documents into " << o.output << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// salience

struct SalienceOpts {
  std::string corpus, output;
  std::vector<double> thresholds = kDefaultSalienceThresholds;
};

int CmdSalience(const SalienceOpts& o, std::ostream& out) {
  CheckThresholds(o.thresholds);
  RequireParentDir(o.output, "output");
  const std::vector<Example> corpus = LoadCorpus(o.corpus);
  std::string text;
  std::vector<long> histogram(o.thresholds.size() + 1, 0);
  for (const auto& ex : corpus) {
    const SalienceAllocation a = OracleSalience(ex, o.thresholds);
    for (int l : a.levels) ++histogram[l];
    text += json{{"id", ex.id}, {"scores", a.scores}, {"levels", a.levels}}.dump() + "\n";
  }
  WriteText(o.output, text);
  out << "labelled " << corpus.size() << " documents; level counts";
  for (long c : histogram) out << " " << c;
  out << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOpts {
  std::string outputs, references, system = "system", dataset, embeddings, idf, report;
  bool use_idf = false;
  bool serial = false;
  std::vector<std::string> metrics;
  int threads = 0;
};

std::string IdList(const std::vector<std::string>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size() && i < 5; ++i) s += (i ? ", " : "") + ids[i];
  if (ids.size() > 5) s += ", ... (" + std::to_string(ids.size()) + " total)";
  return s;
}

int CmdEvaluate(const EvaluateOpts& o, bool metrics_given, std::ostream& out,
                std::ostream& err) {
  SetThreads(o.threads);
  if (!o.report.empty()) RequireParentDir(o.report, "report");
  if (!o.idf.empty() && o.embeddings.empty()) {
    throw ConfigError("--idf requires --embeddings");
  }
  if (o.use_idf && o.idf.empty()) throw ConfigError("--use-idf requires --idf");
  EvalOptions eopts;
  eopts.use_idf = o.use_idf;
  if (metrics_given) eopts.metrics = o.metrics;
  EmbeddingTable table;
  if (!o.embeddings.empty()) {
    table = LoadEmbeddings(o.embeddings);
    if (!o.idf.empty()) LoadIdf(o.idf, &table);
    eopts.embeddings = &table;
  } else if (!metrics_given) {
    std::erase_if(eopts.metrics, IsEmbeddingMetric);
    err << "warning: no --embeddings given; skipping bertscore and moverscore\n";
  }
  ValidateEvalOptions(eopts);

  const auto system = LoadSummaries(o.outputs);
  const std::vector<Example> refs = LoadCorpus(o.references);
  std::map<std::string, const std::string*> by_id;
  for (const auto& [id, s] : system) by_id[id] = &s;
  std::vector<std::string> missing, extra;
  std::set<std::string> ref_ids;
  for (const auto& ex : refs) {
    ref_ids.insert(ex.id);
    if (!by_id.count(ex.id)) missing.push_back(ex.id);
  }
  for (const auto& [id, s] : system) {
    if (!ref_ids.count(id)) extra.push_back(id);
  }
  if (!missing.empty() || !extra.empty()) {
    std::string msg = "system outputs and references disagree on ids";
    if (!missing.empty()) msg += "; missing: " + IdList(missing);
    if (!extra.empty()) msg += "; unexpected: " + IdList(extra);
    throw DataError(msg);
  }
  if (refs.empty()) throw DataError("no examples to evaluate");
  std::vector<TextPair> pairs;
  pairs.reserve(refs.size());
  for (const auto& ex : refs) pairs.push_back({*by_id.at(ex.id), ex.summary});

  const auto per_example = o.serial ? ScoreExamplesSerial(pairs, eopts)
                                    : ScoreExamplesParallel(pairs, eopts);
  const EvalReport report = Aggregate(o.system, o.dataset, eopts.metrics, per_example);
  out << RenderTable({report});
  if (!o.report.empty()) WriteText(o.report, ReportToJson(report));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// compare

struct CompareOpts {
  std::vector<std::string> reports;
  std::string corpus;
  std::vector<std::string> outputs;  // name=path
  int max_n = 3;
};

std::string HighlightNovel(const TokenSeq& summary, const TokenSeq& source) {
  const std::set<std::string> src(source.begin(), source.end());
  TokenSeq marked;
  marked.reserve(summary.size());
  for (const auto& t : summary) marked.push_back(src.count(t) ? t : "[" + t + "]");
  std::string s;
  for (std::size_t i = 0; i < marked.size(); ++i) s += (i ? " " : "") + marked[i];
  return s;
}

int CmdCompare(const CompareOpts& o, std::ostream& out) {
  if (o.max_n < 1 || o.max_n > 3) throw ConfigError("--max-n must be 1, 2 or 3");
  if (o.reports.empty() && o.outputs.empty()) {
    throw ConfigError("nothing to compare: give report files and/or --outputs");
  }
  if (!o.outputs.empty() && o.corpus.empty()) {
    throw ConfigError("--outputs requires --corpus with the source documents");
  }
  std::vector<std::pair<std::string, std::string>> systems;
  for (const auto& spec : o.outputs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw ConfigError("--outputs expects NAME=PATH, got '" + spec + "'");
    }
    systems.emplace_back(spec.substr(0, eq), spec.substr(eq + 1));
  }
  if (!o.reports.empty()) {
    std::vector<EvalReport> all;
    for (const auto& path : o.reports) {
      auto rs = LoadReports(path);
      all.insert(all.end(), rs.begin(), rs.end());
    }
    out << RenderTable(all);
  }
  if (systems.empty()) return kExitOk;

  const std::vector<Example> corpus = LoadCorpus(o.corpus, /*require_summary=*/false);
  std::vector<std::map<std::string, std::string>> outputs;
  for (const auto& [name, path] : systems) {
    std::map<std::string, std::string> m;
    for (auto& [id, s] : LoadSummaries(path)) m[id] = s;
    outputs.push_back(std::move(m));
  }
  if (!o.reports.empty()) out << "\n";
  out << "Novel n-grams (absent from the source) are shown in brackets.\n";
  for (const auto& ex : corpus) {
    const TokenSeq source = Tokenize(ex.document);
    out << "\n== " << ex.id << "\n";
    for (std::size_t s = 0; s < systems.size(); ++s) {
      auto it = outputs[s].find(ex.id);
      if (it == outputs[s].end()) {
        out << systems[s].first << ": (no output)\n";
        continue;
      }
      const TokenSeq summary = Tokenize(it->second);
      out << systems[s].first << ": " << HighlightNovel(summary, source) << "\n";
      for (int n = 2; n <= o.max_n; ++n) {
        const auto novel = NovelNGrams(summary, source, n);
        if (novel.empty()) continue;
        out << "  novel " << n << "-grams:";
        bool first = true;
        for (const auto& g : novel) {
          out << (first ? " " : " | ");
          first = false;
          for (std::size_t k = 0; k < g.size(); ++k) out << (k ? " " : "") << g[k];
        }
        out << "\n";
      }
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// synth

struct SynthOpts {
  std::string output_dir;
  int train = 500, val = 64, test = 64;
  std::uint64_t seed = 1;
};

int CmdSynth(const SynthOpts& o, std::ostream& out) {
  if (!fs::is_directory(o.output_dir)) {
    throw ConfigError("output directory '" + o.output_dir + "' does not exist");
  }
  const std::pair<const char*, int> splits[] = {
      {"train", o.train}, {"val", o.val}, {"test", o.test}};
  std::uint64_t k = 0;
  for (const auto& [name, count] : splits) {
    if (count < 0) throw ConfigError("split sizes must be >= 0");
    const auto corpus = SyntheticCorpus(count, o.seed * 3 + k++, name);
    const std::string path = (fs::path(o.output_dir) / (std::string(name) + ".jsonl")).string();
    WriteCorpus(path, corpus);
    out << "wrote " << count << " examples to " << path << "\n";
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Salience-guided abstractive summarization toolkit", "season"};
  app.require_subcommand(1);
  std::string config_path;

  TrainOpts train;
  auto* t = app.add_subcommand("train", "Train a model on a JSONL corpus");
  t->add_option("--corpus", train.corpus, "Training JSONL {id, document, summary}")
      ->required()
      ->check(CLI::ExistingFile);
  t->add_option("--checkpoint", train.checkpoint, "Output checkpoint path")->required();
  train.profile.Add(t, "cnndm");
  t->add_option("--vocab-cap", train.vocab_cap, "Vocabulary size including reserved tokens");
  t->add_option("--epochs", train.epochs, "Training epochs");
  t->add_option("--lr", train.lr, "Adam learning rate");
  t->add_option("--batch-size", train.batch_size, "Examples per update");
  t->add_option("--d-model", train.d_model, "Hidden size");
  t->add_option("--heads", train.heads, "Attention heads");
  t->add_option("--enc-layers", train.enc_layers, "Encoder layers");
  t->add_option("--dec-layers", train.dec_layers, "Decoder layers");
  t->add_option("--ffn-dim", train.ffn_dim, "Feed-forward width");
  t->add_option("--lambda-sal", train.lambda_sal, "Weight of the salience loss");
  t->add_option("--thresholds", train.thresholds, "Ascending salience thresholds")
      ->delimiter(',');
  t->add_option("--seed", train.seed, "Initialization and shuffling seed");
  t->add_option("--log", train.log, "Write per-epoch losses as JSONL");
  t->add_option("--threads", train.threads, "OpenMP threads (0: runtime default)");

  SummarizeOpts summ;
  auto* s = app.add_subcommand("summarize", "Generate summaries with a checkpoint");
  s->add_option("--checkpoint", summ.checkpoint, "Checkpoint from train")
      ->required()
      ->check(CLI::ExistingFile);
  s->add_option("--corpus", summ.corpus, "JSONL {id, document}")
      ->required()
      ->check(CLI::ExistingFile);
  s->add_option("--output", summ.output, "Output JSONL {id, summary}")->required();
  summ.profile.Add(s, "");
  s->add_option("--beam", summ.decode.beam_width, "Beam width (1: greedy)");
  s->add_option("--alpha", summ.decode.alpha, "Length-penalty exponent");
  s->add_option("--block-n", summ.decode.block_n, "Block repeated n-grams (0: off)");
  s->add_option("--max-len", summ.max_len, "Generated tokens incl. EOS (default: target limit - 1)");
  s->add_option("--temperature", summ.decode.temperature, "Salience sharpening temperature");
  s->add_option("--threads", summ.threads, "OpenMP threads (0: runtime default)");

  SalienceOpts sal;
  auto* sc = app.add_subcommand("salience", "Write oracle sentence salience labels");
  sc->add_option("--corpus", sal.corpus, "JSONL {id, document, summary}")
      ->required()
      ->check(CLI::ExistingFile);
  sc->add_option("--output", sal.output, "Output JSONL {id, scores, levels}")->required();
  sc->add_option("--thresholds", sal.thresholds, "Ascending salience thresholds")
      ->delimiter(',');

  EvaluateOpts ev;
  auto* e = app.add_subcommand("evaluate", "Score system summaries against references");
  e->add_option("--outputs", ev.outputs, "System JSONL {id, summary}")
      ->required()
      ->check(CLI::ExistingFile);
  e->add_option("--references", ev.references, "Reference JSONL {id, document, summary}")
      ->required()
      ->check(CLI::ExistingFile);
  e->add_option("--system", ev.system, "System name in the report");
  e->add_option("--dataset", ev.dataset, "Dataset name in the report");
  e->add_option("--embeddings", ev.embeddings, "Text embedding table")
      ->check(CLI::ExistingFile);
  e->add_option("--idf", ev.idf, "Token idf weights")->check(CLI::ExistingFile);
  e->add_flag("--use-idf", ev.use_idf, "Idf-weight BERTScore");
  auto* metrics_opt =
      e->add_option("--metrics", ev.metrics, "Comma-separated metric keys")->delimiter(',');
  e->add_option("--report", ev.report, "Write the report as JSON");
  e->add_flag("--serial", ev.serial, "Use the single-threaded reference path");
  e->add_option("--threads", ev.threads, "OpenMP threads (0: runtime default)");

  CompareOpts cmp;
  auto* c = app.add_subcommand("compare", "Side-by-side reports and hallucination listing");
  c->add_option("reports", cmp.reports, "Report JSON files")->check(CLI::ExistingFile);
  c->add_option("--corpus", cmp.corpus, "Source JSONL {id, document}")
      ->check(CLI::ExistingFile);
  c->add_option("--outputs", cmp.outputs, "NAME=PATH system outputs (repeatable)");
  c->add_option("--max-n", cmp.max_n, "Longest novel n-gram to list");

  std::string table_path;
  auto* r = app.add_subcommand("report", "Render a results table from JSON");
  r->add_option("--table", table_path, "JSON array of reports")
      ->required()
      ->check(CLI::ExistingFile);

  std::uint64_t check_seed = 1;
  auto* sk = app.add_subcommand("self-check", "Compare kernels against brute-force oracles");
  sk->add_option("--seed", check_seed, "Random seed");

  SynthOpts syn;
  auto* sy = app.add_subcommand("synth", "Write a synthetic train/val/test corpus");
  sy->add_option("--output-dir", syn.output_dir, "Destination directory")->required();
  sy->add_option("--train", syn.train, "Training examples");
  sy->add_option("--val", syn.val, "Validation examples");
  sy->add_option("--test", syn.test, "Test examples");
  sy->add_option("--seed", syn.seed, "Random seed");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--config", config_path, "key=value file with option defaults");
  }

  try {
    // Splice config-file entries in as --key=value unless given explicitly.
    std::vector<std::string> args = raw_args;
    std::string cfg_file;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      if (raw_args[i] == "--config" && i + 1 < raw_args.size()) cfg_file = raw_args[i + 1];
      if (raw_args[i].rfind("--config=", 0) == 0) cfg_file = raw_args[i].substr(9);
    }
    if (!cfg_file.empty()) {
      CLI::App* sub = nullptr;
      for (const auto& a : raw_args) {
        if (a.rfind("-", 0) == 0) continue;
        sub = app.get_subcommand_no_throw(a);
        break;
      }
      if (sub == nullptr) throw ConfigError("--config needs a subcommand");
      for (const auto& [key, value] : ReadConfigFile(cfg_file)) {
        if (sub->get_option_no_throw("--" + key) == nullptr) {
          throw ConfigError(cfg_file + ": unknown key '" + key + "' for '" +
                            sub->get_name() + "'");
        }
        if (!GivenOnCommandLine(raw_args, key)) args.push_back("--" + key + "=" + value);
      }
    }
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (const CLI::CallForHelp& h) {
      return app.exit(h, out, err);
    } catch (const CLI::CallForAllHelp& h) {
      return app.exit(h, out, err);
    } catch (const CLI::ParseError& pe) {
      err << "error: " << pe.what() << "\n";
      return kExitConfig;
    }

    if (t->parsed()) return CmdTrain(train, out);
    if (s->parsed()) return CmdSummarize(summ, out);
    if (sc->parsed()) return CmdSalience(sal, out);
    if (e->parsed()) return CmdEvaluate(ev, metrics_opt->count() > 0, out, err);
    if (c->parsed()) return CmdCompare(cmp, out);
    if (r->parsed()) {
      out << RenderTable(LoadReports(table_path));
      return kExitOk;
    }
    if (sk->parsed()) {
      const bool ok = RunSelfCheck(check_seed, out);
      out << (ok ? "self-check passed\n" : "self-check FAILED\n");
      return ok ? kExitOk : kExitFailure;
    }
    if (sy->parsed()) return CmdSynth(syn, out);
    err << "error: no subcommand\n";
    return kExitConfig;
  } catch (const ConfigError& ex) {
    err << "config error: " << ex.what() << "\n";
    return kExitConfig;
  } catch (const DataError& ex) {
    err << "data error: " << ex.what() << "\n";
    return kExitData;
  } catch (const NumericError& ex) {
    err << "numeric error: " << ex.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& ex) {
    err << "data error: " << ex.what() << "\n";
    return kExitData;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace season::cli
