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

#include "season/model.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "season/errors.h"

namespace season {

using ag::Tape;
using ag::Var;

void ModelConfig::Validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("model config: " + what); };
  if (d_model < 1 || n_heads < 1 || ffn_dim < 1) fail("dimensions must be >= 1");
  if (d_model % n_heads != 0) fail("d_model must be divisible by n_heads");
  if (enc_layers < 0 || dec_layers < 0) fail("layer counts must be >= 0");
  if (vocab_size < kReservedTokens) fail("vocab_size must be >= 5");
  if (degrees < 1) fail("salience degree count must be >= 1");
  if (!(lambda_sal >= 0.0)) fail("lambda_sal must be >= 0");
  if (max_src_len < 1 || max_tgt_len < 1) fail("length limits must be >= 1");
}

Parameters::Parameters(const ModelConfig& config) : config_(config) {
  config_.Validate();
  Layout();
  std::mt19937_64 rng(config_.seed);
  const double d = config_.d_model;
  for (auto& t : tensors_) {
    double stddev = 0.0;
    double fill = 0.0;
    const std::string& n = t.name;
    auto ends_with = [&n](const std::string& s) {
      return n.size() >= s.size() && n.compare(n.size() - s.size(), s.size(), s) == 0;
    };
    if (n == "embed.token") {
      stddev = 0.5 / std::sqrt(d);
    } else if (n == "salience.table") {
      stddev = 0.1;
    } else if (ends_with(".gain")) {
      fill = 1.0;
    } else if (ends_with(".bias") || ends_with(".b1") || ends_with(".b2") ||
               n == "salience.classifier.b") {
      fill = 0.0;
    } else if (ends_with(".w2")) {
      stddev = 1.0 / std::sqrt(static_cast<double>(config_.ffn_dim));
    } else {
      stddev = 1.0 / std::sqrt(d);
    }
    if (stddev > 0.0) {
      std::normal_distribution<double> dist(0.0, stddev);
      for (double& v : t.value.data) v = dist(rng);
    } else {
      std::fill(t.value.data.begin(), t.value.data.end(), fill);
    }
  }
}

Parameters::Parameters(const ModelConfig& config, std::vector<NamedTensor> tensors)
    : config_(config) {
  config_.Validate();
  Layout();
  if (tensors.size() != tensors_.size()) {
    throw DataError("expected " + std::to_string(tensors_.size()) +
                    " tensors, got " + std::to_string(tensors.size()));
  }
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    const NamedTensor& want = tensors_[i];
    const NamedTensor& got = tensors[i];
    if (got.name != want.name || !got.value.SameShape(want.value) ||
        got.value.size() != want.value.size()) {
      throw DataError("tensor " + std::to_string(i) + " ('" + got.name + "' " +
                      std::to_string(got.value.rows) + "x" +
                      std::to_string(got.value.cols) + ") does not match '" +
                      want.name + "' " + std::to_string(want.value.rows) + "x" +
                      std::to_string(want.value.cols));
    }
  }
  tensors_ = std::move(tensors);
}

int Parameters::Declare(const std::string& name, int rows, int cols) {
  tensors_.push_back({name, Matrix(rows, cols)});
  return static_cast<int>(tensors_.size()) - 1;
}

void Parameters::Layout() {
  tensors_.clear();
  encoder.clear();
  decoder.clear();
  const int d = config_.d_model;
  const int f = config_.ffn_dim;
  const int k = config_.degrees;
  token_embedding = Declare("embed.token", config_.vocab_size, d);
  salience_table = Declare("salience.table", k, d);
  classifier_w = Declare("salience.classifier.w", d, k);
  classifier_b = Declare("salience.classifier.b", 1, k);
  auto attention = [&](const std::string& p) {
    return AttentionSlots{Declare(p + ".wq", d, d), Declare(p + ".wk", d, d),
                          Declare(p + ".wv", d, d), Declare(p + ".wo", d, d)};
  };
  for (int l = 0; l < config_.enc_layers; ++l) {
    const std::string p = "enc." + std::to_string(l);
    EncoderLayerSlots s{};
    s.self_attn = attention(p + ".self");
    s.ln1_gain = Declare(p + ".ln1.gain", 1, d);
    s.ln1_bias = Declare(p + ".ln1.bias", 1, d);
    s.ffn_w1 = Declare(p + ".ffn.w1", d, f);
    s.ffn_b1 = Declare(p + ".ffn.b1", 1, f);
    s.ffn_w2 = Declare(p + ".ffn.w2", f, d);
    s.ffn_b2 = Declare(p + ".ffn.b2", 1, d);
    s.ln2_gain = Declare(p + ".ln2.gain", 1, d);
    s.ln2_bias = Declare(p + ".ln2.bias", 1, d);
    encoder.push_back(s);
  }
  for (int l = 0; l < config_.dec_layers; ++l) {
    const std::string p = "dec." + std::to_string(l);
    DecoderLayerSlots s{};
    s.self_attn = attention(p + ".self");
    s.ln1_gain = Declare(p + ".ln1.gain", 1, d);
    s.ln1_bias = Declare(p + ".ln1.bias", 1, d);
    s.cross_attn = attention(p + ".cross");
    s.ln2_gain = Declare(p + ".ln2.gain", 1, d);
    s.ln2_bias = Declare(p + ".ln2.bias", 1, d);
    s.ffn_w1 = Declare(p + ".ffn.w1", d, f);
    s.ffn_b1 = Declare(p + ".ffn.b1", 1, f);
    s.ffn_w2 = Declare(p + ".ffn.w2", f, d);
    s.ffn_b2 = Declare(p + ".ffn.b2", 1, d);
    s.ln3_gain = Declare(p + ".ln3.gain", 1, d);
    s.ln3_bias = Declare(p + ".ln3.bias", 1, d);
    decoder.push_back(s);
  }
}

int Parameters::SlotOf(const std::string& name) const {
  for (std::size_t i = 0; i < tensors_.size(); ++i) {
    if (tensors_[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::size_t Parameters::ParameterCount() const {
  std::size_t n = 0;
  for (const auto& t : tensors_) n += t.value.size();
  return n;
}

bool Parameters::AllFinite() const {
  for (const auto& t : tensors_) {
    for (double v : t.value.data) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

bool operator==(const Parameters& a, const Parameters& b) {
  if (!(a.config_ == b.config_) || a.tensors_.size() != b.tensors_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.tensors_.size(); ++i) {
    if (a.tensors_[i].name != b.tensors_[i].name ||
        !(a.tensors_[i].value == b.tensors_[i].value)) {
      return false;
    }
  }
  return true;
}

Matrix SinusoidalPositions(int length, int d_model) {
  Matrix pe(length, d_model);
  for (int pos = 0; pos < length; ++pos) {
    for (int i = 0; i < d_model; ++i) {
      const int pair = i / 2;
      const double freq =
          std::pow(10000.0, -2.0 * pair / static_cast<double>(d_model));
      pe(pos, i) = (i % 2 == 0) ? std::sin(pos * freq) : std::cos(pos * freq);
    }
  }
  return pe;
}

void SentenceLayout(std::span<const int> input_ids, std::vector<int>* markers,
                    std::vector<int>* sentence_of_token) {
  markers->clear();
  sentence_of_token->clear();
  int sentence = -1;
  for (std::size_t i = 0; i < input_ids.size(); ++i) {
    if (input_ids[i] == kMarkerId) {
      markers->push_back(static_cast<int>(i));
      ++sentence;
    }
    sentence_of_token->push_back(std::max(sentence, 0));
  }
  if (markers->empty()) {
    throw std::invalid_argument("input has no sentence-marker token");
  }
}

namespace {

// Builds the forward computation on a tape; parameter leaves are created on
// first use and shared across examples.
class Builder {
 public:
  Builder(const Parameters& params, bool record)
      : params_(params), tape_(record), leaves_(params.tensors().size()) {}

  Tape& tape() { return tape_; }

  Var P(int slot) {
    if (leaves_[slot].id < 0) leaves_[slot] = tape_.Parameter(&params_.at(slot), slot);
    return leaves_[slot];
  }

  Var Embed(std::span<const int> ids) {
    Var tok = ag::GatherRows(tape_, P(params_.token_embedding), ids);
    Var pos = tape_.Constant(
        SinusoidalPositions(static_cast<int>(ids.size()), params_.config().d_model));
    return ag::Add(tape_, tok, pos);
  }

  // key_offsets (src x d) is added to the projected keys when present.
  Var Attention(Var queries_in, Var kv_in, const AttentionSlots& s, bool causal,
                Var key_offsets, std::vector<Matrix>* weights) {
    const int d = params_.config().d_model;
    const int heads = params_.config().n_heads;
    const int dh = d / heads;
    Var q = ag::MatMul(tape_, queries_in, P(s.wq));
    Var k = ag::MatMul(tape_, kv_in, P(s.wk));
    if (key_offsets.id >= 0) k = ag::Add(tape_, k, key_offsets);
    Var v = ag::MatMul(tape_, kv_in, P(s.wv));
    std::vector<Var> contexts;
    contexts.reserve(heads);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dh));
    for (int h = 0; h < heads; ++h) {
      Var qh = heads == 1 ? q : ag::SliceCols(tape_, q, h * dh, (h + 1) * dh);
      Var kh = heads == 1 ? k : ag::SliceCols(tape_, k, h * dh, (h + 1) * dh);
      Var vh = heads == 1 ? v : ag::SliceCols(tape_, v, h * dh, (h + 1) * dh);
      Var scores = ag::Scale(tape_, ag::MatMulTransB(tape_, qh, kh), scale);
      Var probs = ag::SoftmaxRows(tape_, scores, causal);
      if (weights) weights->push_back(tape_.Value(probs));
      contexts.push_back(ag::MatMul(tape_, probs, vh));
    }
    Var ctx = heads == 1 ? contexts[0] : ag::ConcatCols(tape_, contexts);
    return ag::MatMul(tape_, ctx, P(s.wo));
  }

  Var Ffn(Var x, int w1, int b1, int w2, int b2) {
    Var h = ag::Gelu(tape_, ag::AddRowBias(tape_, ag::MatMul(tape_, x, P(w1)), P(b1)));
    return ag::AddRowBias(tape_, ag::MatMul(tape_, h, P(w2)), P(b2));
  }

  Var Norm(Var x, int gain, int bias) { return ag::LayerNorm(tape_, x, P(gain), P(bias)); }

  Var Encode(std::span<const int> ids) {
    Var x = Embed(ids);
    for (const auto& l : params_.encoder) {
      Var a = Attention(x, x, l.self_attn, false, Var{}, nullptr);
      x = Norm(ag::Add(tape_, x, a), l.ln1_gain, l.ln1_bias);
      Var f = Ffn(x, l.ffn_w1, l.ffn_b1, l.ffn_w2, l.ffn_b2);
      x = Norm(ag::Add(tape_, x, f), l.ln2_gain, l.ln2_bias);
    }
    return x;
  }

  Var SalienceLogits(Var hidden, std::span<const int> markers) {
    Var hm = ag::GatherRows(tape_, hidden, markers);
    return ag::AddRowBias(tape_, ag::MatMul(tape_, hm, P(params_.classifier_w)),
                          P(params_.classifier_b));
  }

  // Per-token salience embeddings (src x d), or an empty Var for kNone.
  Var KeyOffsets(const SalienceGuide& guide, std::span<const int> sentence_of_token,
                 int sentences) {
    const int k = params_.config().degrees;
    switch (guide.kind) {
      case SalienceGuide::Kind::kNone:
        return Var{};
      case SalienceGuide::Kind::kHard: {
        if (static_cast<int>(guide.levels.size()) != sentences) {
          throw std::invalid_argument("salience levels count != sentence count");
        }
        std::vector<int> rows;
        rows.reserve(sentence_of_token.size());
        for (int s : sentence_of_token) {
          const int level = guide.levels[s];
          if (level < 0 || level >= k) {
            throw std::invalid_argument("salience level out of range");
          }
          rows.push_back(level);
        }
        return ag::GatherRows(tape_, P(params_.salience_table), rows);
      }
      case SalienceGuide::Kind::kSoft: {
        if (static_cast<int>(guide.distribution.size()) != sentences) {
          throw std::invalid_argument("salience rows count != sentence count");
        }
        Matrix weights(static_cast<int>(sentence_of_token.size()), k);
        for (std::size_t t = 0; t < sentence_of_token.size(); ++t) {
          const auto& row = guide.distribution[sentence_of_token[t]];
          if (static_cast<int>(row.size()) != k) {
            throw std::invalid_argument("salience row width != degree count");
          }
          std::copy(row.begin(), row.end(), weights.row(static_cast<int>(t)));
        }
        return ag::MatMul(tape_, tape_.Constant(std::move(weights)),
                          P(params_.salience_table));
      }
    }
    return Var{};
  }

  Var Decode(Var memory, std::span<const int> decoder_input, Var key_offsets) {
    Var y = Embed(decoder_input);
    for (const auto& l : params_.decoder) {
      Var a = Attention(y, y, l.self_attn, true, Var{}, nullptr);
      y = Norm(ag::Add(tape_, y, a), l.ln1_gain, l.ln1_bias);
      Var c = Attention(y, memory, l.cross_attn, false, key_offsets, nullptr);
      y = Norm(ag::Add(tape_, y, c), l.ln2_gain, l.ln2_bias);
      Var f = Ffn(y, l.ffn_w1, l.ffn_b1, l.ffn_w2, l.ffn_b2);
      y = Norm(ag::Add(tape_, y, f), l.ln3_gain, l.ln3_bias);
    }
    return ag::MatMulTransB(tape_, y, P(params_.token_embedding));
  }

 private:
  const Parameters& params_;
  Tape tape_;
  std::vector<Var> leaves_;
};

void CheckInput(const Parameters& params, std::span<const int> ids) {
  const ModelConfig& c = params.config();
  if (ids.empty()) throw std::invalid_argument("empty input");
  if (static_cast<int>(ids.size()) > c.max_src_len) {
    throw std::invalid_argument("input length " + std::to_string(ids.size()) +
                                " exceeds max_src_len " +
                                std::to_string(c.max_src_len));
  }
  for (int id : ids) {
    if (id < 0 || id >= c.vocab_size) {
      throw std::invalid_argument("token id " + std::to_string(id) +
                                  " outside vocabulary");
    }
  }
}

void CheckDecoderInput(const Parameters& params, std::span<const int> ids) {
  const ModelConfig& c = params.config();
  if (ids.empty()) throw std::invalid_argument("empty decoder input");
  for (int id : ids) {
    if (id < 0 || id >= c.vocab_size) {
      throw std::invalid_argument("decoder id outside vocabulary");
    }
  }
}

struct LossSums {
  double nll_sum = 0.0;
  double sal_sum = 0.0;
  long tokens = 0;
  long sentences = 0;
};

LossBreakdown Combine(const LossSums& s, double lambda) {
  LossBreakdown out;
  out.nll = s.tokens > 0 ? s.nll_sum / s.tokens : 0.0;
  out.sal_ce = s.sentences > 0 ? s.sal_sum / s.sentences : 0.0;
  out.total = out.nll + lambda * out.sal_ce;
  return out;
}

// Builds the multi-task objective for a batch; returns the raw sums and,
// when recording, the objective node.
LossSums BuildBatch(Builder& b, const Parameters& params,
                    std::span<const PreprocessedExample> batch, double nll_w,
                    double sal_w, Var* objective) {
  Tape& t = b.tape();
  LossSums sums;
  std::vector<Var> nll_terms;
  std::vector<Var> sal_terms;
  for (const auto& ex : batch) {
    CheckInput(params, ex.input_ids);
    if (ex.target_ids.size() < 2) {
      throw std::invalid_argument("example '" + ex.id + "' has no target tokens");
    }
    std::vector<int> markers;
    std::vector<int> sentence_of_token;
    SentenceLayout(ex.input_ids, &markers, &sentence_of_token);
    if (ex.levels.size() != markers.size()) {
      throw std::invalid_argument("example '" + ex.id + "': " +
                                  std::to_string(ex.levels.size()) +
                                  " oracle levels for " +
                                  std::to_string(markers.size()) + " sentences");
    }
    Var hidden = b.Encode(ex.input_ids);
    Var sal_logits = b.SalienceLogits(hidden, markers);
    sal_terms.push_back(ag::CrossEntropySum(t, sal_logits, ex.levels));
    Var offsets = b.KeyOffsets(SalienceGuide::Hard(ex.levels), sentence_of_token,
                               static_cast<int>(markers.size()));
    std::span<const int> target(ex.target_ids);
    std::span<const int> dec_in = target.first(target.size() - 1);
    std::span<const int> dec_out = target.subspan(1);
    CheckDecoderInput(params, target);
    Var logits = b.Decode(hidden, dec_in, offsets);
    nll_terms.push_back(ag::CrossEntropySum(t, logits, dec_out));
    sums.tokens += static_cast<long>(dec_out.size());
    sums.sentences += static_cast<long>(markers.size());
  }
  Var nll_total = nll_terms[0];
  for (std::size_t i = 1; i < nll_terms.size(); ++i) nll_total = ag::Add(t, nll_total, nll_terms[i]);
  Var sal_total = sal_terms[0];
  for (std::size_t i = 1; i < sal_terms.size(); ++i) sal_total = ag::Add(t, sal_total, sal_terms[i]);
  sums.nll_sum = t.Value(nll_total).data[0];
  sums.sal_sum = t.Value(sal_total).data[0];
  if (objective) {
    Var nll_mean = ag::Scale(t, nll_total, nll_w / static_cast<double>(sums.tokens));
    Var sal_mean = ag::Scale(t, sal_total, sal_w / static_cast<double>(sums.sentences));
    *objective = ag::Add(t, nll_mean, sal_mean);
  }
  return sums;
}

}  // namespace

EncodedDocument EncodeDocument(const Parameters& params,
                               std::span<const int> input_ids) {
  CheckInput(params, input_ids);
  EncodedDocument enc;
  SentenceLayout(input_ids, &enc.marker_positions, &enc.sentence_of_token);
  Builder b(params, false);
  enc.hidden = b.tape().Value(b.Encode(input_ids));
  return enc;
}

SalienceDistribution PredictSalience(const Parameters& params,
                                     const EncodedDocument& enc) {
  Builder b(params, false);
  Var hidden = b.tape().Constant(enc.hidden);
  Var logits = b.SalienceLogits(hidden, enc.marker_positions);
  Var probs = ag::SoftmaxRows(b.tape(), logits, false);
  const Matrix& p = b.tape().Value(probs);
  SalienceDistribution out(p.rows);
  for (int r = 0; r < p.rows; ++r) out[r].assign(p.row(r), p.row(r) + p.cols);
  return out;
}

Matrix SacaAttention(const Parameters& params, int layer,
                     const Matrix& decoder_states, const EncodedDocument& enc,
                     const SalienceGuide& guide, std::vector<Matrix>* weights) {
  if (layer < 0 || layer >= static_cast<int>(params.decoder.size())) {
    throw std::invalid_argument("SacaAttention: no such decoder layer");
  }
  const int d = params.config().d_model;
  if (decoder_states.cols != d || enc.hidden.cols != d ||
      enc.hidden.rows != static_cast<int>(enc.sentence_of_token.size())) {
    throw std::invalid_argument("SacaAttention: dimension mismatch");
  }
  Builder b(params, false);
  Var q = b.tape().Constant(decoder_states);
  Var memory = b.tape().Constant(enc.hidden);
  Var offsets = b.KeyOffsets(guide, enc.sentence_of_token, enc.sentence_count());
  if (weights) weights->clear();
  Var out = b.Attention(q, memory, params.decoder[layer].cross_attn, false,
                        offsets, weights);
  return b.tape().Value(out);
}

Matrix DecoderLogits(const Parameters& params, const EncodedDocument& enc,
                     std::span<const int> decoder_input,
                     const SalienceGuide& guide) {
  CheckDecoderInput(params, decoder_input);
  Builder b(params, false);
  Var memory = b.tape().Constant(enc.hidden);
  Var offsets = b.KeyOffsets(guide, enc.sentence_of_token, enc.sentence_count());
  return b.tape().Value(b.Decode(memory, decoder_input, offsets));
}

LossBreakdown ForwardLoss(const Parameters& params,
                          std::span<const PreprocessedExample> batch) {
  if (batch.empty()) throw std::invalid_argument("ForwardLoss: empty batch");
  Builder b(params, false);
  return Combine(BuildBatch(b, params, batch, 1.0, 0.0, nullptr),
                 params.config().lambda_sal);
}

LossBreakdown ComputeGradients(const Parameters& params,
                               std::span<const PreprocessedExample> batch,
                               Gradients* grads, const GradientOptions& options) {
  if (batch.empty()) throw std::invalid_argument("ComputeGradients: empty batch");
  const double sal_w =
      options.sal_weight < 0 ? params.config().lambda_sal : options.sal_weight;
  Builder b(params, true);
  Var objective;
  const LossSums sums =
      BuildBatch(b, params, batch, options.nll_weight, sal_w, &objective);
  b.tape().Backward(objective);
  grads->clear();
  for (const auto& t : params.tensors()) grads->emplace_back(t.value.rows, t.value.cols);
  b.tape().ForEachParameterGrad([&](int slot, const Matrix& g) {
    Matrix& dst = (*grads)[slot];
    for (std::size_t i = 0; i < dst.size(); ++i) dst.data[i] += g.data[i];
  });
  for (std::size_t s = 0; s < options.frozen.size() && s < grads->size(); ++s) {
    if (options.frozen[s]) {
      std::fill((*grads)[s].data.begin(), (*grads)[s].data.end(), 0.0);
    }
  }
  return Combine(sums, params.config().lambda_sal);
}

LossBreakdown CorpusLoss(const Parameters& params,
                         const std::vector<PreprocessedExample>& corpus,
                         int batch_size) {
  LossSums total;
  const std::size_t step = static_cast<std::size_t>(std::max(1, batch_size));
  for (std::size_t i = 0; i < corpus.size(); i += step) {
    const std::size_t n = std::min(step, corpus.size() - i);
    Builder b(params, false);
    const LossSums s = BuildBatch(
        b, params, std::span<const PreprocessedExample>(corpus).subspan(i, n),
        1.0, 0.0, nullptr);
    total.nll_sum += s.nll_sum;
    total.sal_sum += s.sal_sum;
    total.tokens += s.tokens;
    total.sentences += s.sentences;
  }
  return Combine(total, params.config().lambda_sal);
}

double SalienceAccuracy(const Parameters& params,
                        const std::vector<PreprocessedExample>& corpus) {
  long correct = 0;
  long total = 0;
  for (const auto& ex : corpus) {
    const EncodedDocument enc = EncodeDocument(params, ex.input_ids);
    const SalienceDistribution dist = PredictSalience(params, enc);
    for (std::size_t s = 0; s < dist.size() && s < ex.levels.size(); ++s) {
      const auto best = std::max_element(dist[s].begin(), dist[s].end()) - dist[s].begin();
      correct += best == ex.levels[s];
      ++total;
    }
  }
  return total > 0 ? static_cast<double>(correct) / total : 0.0;
}

namespace {

bool Finite(const LossBreakdown& l) {
  return std::isfinite(l.nll) && std::isfinite(l.sal_ce) && std::isfinite(l.total);
}

}  // namespace

TrainResult Train(const std::vector<PreprocessedExample>& corpus,
                  const ModelConfig& config, const TrainOptions& options,
                  const std::function<void(const EpochLog&)>& on_epoch) {
  return Train(corpus, Parameters(config), options, on_epoch);
}

TrainResult Train(const std::vector<PreprocessedExample>& corpus,
                  Parameters params, const TrainOptions& options,
                  const std::function<void(const EpochLog&)>& on_epoch) {
  if (corpus.empty()) throw ConfigError("training corpus is empty");
  if (options.epochs < 0 || options.batch_size < 1 || options.learning_rate < 0) {
    throw ConfigError("invalid training options");
  }
  TrainResult result;
  result.initial = CorpusLoss(params, corpus, options.batch_size);
  if (!Finite(result.initial)) throw NumericError("non-finite initial loss");

  const std::size_t slots = params.tensors().size();
  std::vector<Matrix> m, v;
  for (const auto& t : params.tensors()) {
    m.emplace_back(t.value.rows, t.value.cols);
    v.emplace_back(t.value.rows, t.value.cols);
  }
  std::mt19937_64 rng(options.shuffle_seed);
  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  long step = 0;
  Gradients grads;
  std::vector<PreprocessedExample> batch;
  for (int epoch = 1; epoch <= options.epochs; ++epoch) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
    LossBreakdown running;
    int batches = 0;
    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(options.batch_size)) {
      const std::size_t end =
          std::min(order.size(), start + static_cast<std::size_t>(options.batch_size));
      batch.clear();
      for (std::size_t i = start; i < end; ++i) batch.push_back(corpus[order[i]]);
      const LossBreakdown loss = ComputeGradients(params, batch, &grads);
      if (!Finite(loss)) {
        throw NumericError("non-finite loss at epoch " + std::to_string(epoch) +
                           ", batch " + std::to_string(batches + 1) +
                           " (nll=" + std::to_string(loss.nll) +
                           ", sal_ce=" + std::to_string(loss.sal_ce) + ")");
      }
      ++step;
      const double bc1 = 1.0 - std::pow(options.beta1, static_cast<double>(step));
      const double bc2 = 1.0 - std::pow(options.beta2, static_cast<double>(step));
      for (std::size_t s = 0; s < slots; ++s) {
        Matrix& p = params.at(static_cast<int>(s));
        const Matrix& g = grads[s];
        for (std::size_t i = 0; i < p.size(); ++i) {
          m[s].data[i] = options.beta1 * m[s].data[i] + (1.0 - options.beta1) * g.data[i];
          v[s].data[i] = options.beta2 * v[s].data[i] +
                         (1.0 - options.beta2) * g.data[i] * g.data[i];
          const double mhat = m[s].data[i] / bc1;
          const double vhat = v[s].data[i] / bc2;
          p.data[i] -= options.learning_rate * mhat / (std::sqrt(vhat) + options.adam_eps);
        }
      }
      running.nll += loss.nll;
      running.sal_ce += loss.sal_ce;
      running.total += loss.total;
      ++batches;
    }
    EpochLog log;
    log.epoch = epoch;
    if (batches > 0) {
      log.mean = {running.nll / batches, running.sal_ce / batches,
                  running.total / batches};
    }
    result.epochs.push_back(log);
    if (on_epoch) on_epoch(log);
  }
  if (!params.AllFinite()) throw NumericError("parameters became non-finite");
  result.final = CorpusLoss(params, corpus, options.batch_size);
  if (!Finite(result.final)) throw NumericError("non-finite final loss");
  result.params = std::move(params);
  return result;
}

}  // namespace season
