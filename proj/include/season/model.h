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

#ifndef SEASON_MODEL_H_
#define SEASON_MODEL_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "season/autograd.h"
#include "season/data.h"
#include "season/matrix.h"
#include "season/salience.h"

namespace season {

struct ModelConfig {
  int d_model = 64;
  int n_heads = 2;
  int enc_layers = 2;
  int dec_layers = 2;
  int ffn_dim = 128;
  int vocab_size = 8000;
  int degrees = kDefaultSalienceDegrees;  // K
  double lambda_sal = 0.5;
  int max_src_len = 512;
  int max_tgt_len = 100;
  std::uint64_t seed = 1;

  // Throws ConfigError on inconsistent dimensions.
  void Validate() const;
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct NamedTensor {
  std::string name;
  Matrix value;
};

// Tensor slots of one attention block.
struct AttentionSlots {
  int wq, wk, wv, wo;
};

struct EncoderLayerSlots {
  AttentionSlots self_attn;
  int ln1_gain, ln1_bias;
  int ffn_w1, ffn_b1, ffn_w2, ffn_b2;
  int ln2_gain, ln2_bias;
};

struct DecoderLayerSlots {
  AttentionSlots self_attn;
  int ln1_gain, ln1_bias;
  AttentionSlots cross_attn;
  int ln2_gain, ln2_bias;
  int ffn_w1, ffn_b1, ffn_w2, ffn_b2;
  int ln3_gain, ln3_bias;
};

// All weights of the encoder-decoder. The output projection is tied to
// token_embedding; positions use fixed sinusoids and hold no weights.
class Parameters {
 public:
  Parameters() = default;
  // Deterministic initialization from config.seed.
  explicit Parameters(const ModelConfig& config);
  // Shapes are checked against config; throws DataError on mismatch.
  Parameters(const ModelConfig& config, std::vector<NamedTensor> tensors);

  const ModelConfig& config() const { return config_; }
  std::vector<NamedTensor>& tensors() { return tensors_; }
  const std::vector<NamedTensor>& tensors() const { return tensors_; }
  Matrix& at(int slot) { return tensors_[slot].value; }
  const Matrix& at(int slot) const { return tensors_[slot].value; }
  int SlotOf(const std::string& name) const;  // -1 when absent
  std::size_t ParameterCount() const;
  bool AllFinite() const;

  int token_embedding = -1;   // vocab x d
  int salience_table = -1;    // K x d
  int classifier_w = -1;      // d x K
  int classifier_b = -1;      // 1 x K
  std::vector<EncoderLayerSlots> encoder;
  std::vector<DecoderLayerSlots> decoder;

  friend bool operator==(const Parameters& a, const Parameters& b);

 private:
  void Layout();
  int Declare(const std::string& name, int rows, int cols);

  ModelConfig config_;
  std::vector<NamedTensor> tensors_;
};

using Gradients = std::vector<Matrix>;  // aligned with Parameters::tensors()

Matrix SinusoidalPositions(int length, int d_model);

struct EncodedDocument {
  Matrix hidden;                      // src_len x d_model
  std::vector<int> marker_positions;  // strictly ascending
  std::vector<int> sentence_of_token; // non-decreasing
  int sentence_count() const { return static_cast<int>(marker_positions.size()); }
};

// How salience reaches the cross-attention keys.
struct SalienceGuide {
  enum class Kind { kNone, kHard, kSoft };
  Kind kind = Kind::kNone;
  std::vector<int> levels;             // kHard: one per sentence
  SalienceDistribution distribution;   // kSoft: one K-row per sentence

  static SalienceGuide None() { return {}; }
  static SalienceGuide Hard(std::vector<int> levels) {
    return {Kind::kHard, std::move(levels), {}};
  }
  static SalienceGuide Soft(SalienceDistribution dist) {
    return {Kind::kSoft, {}, std::move(dist)};
  }
};

// Marker positions and the sentence index of every token. Tokens before the
// first marker belong to sentence 0. Throws std::invalid_argument when no
// marker is present.
void SentenceLayout(std::span<const int> input_ids, std::vector<int>* markers,
                    std::vector<int>* sentence_of_token);

// Transformer encoder stack (post-norm residual blocks). Throws
// std::invalid_argument on over-length input, missing markers or
// out-of-range ids.
EncodedDocument EncodeDocument(const Parameters& params,
                               std::span<const int> input_ids);

// softmax(h W + b) at each marker position; one row per sentence.
SalienceDistribution PredictSalience(const Parameters& params,
                                     const EncodedDocument& enc);

// Salience-Aware Cross-Attention of decoder layer `layer`: the per-sentence
// salience embedding is added to the key of every source token of that
// sentence; queries and values are unchanged. If `weights` is non-null it
// receives one (queries x src_len) matrix per head.
Matrix SacaAttention(const Parameters& params, int layer,
                     const Matrix& decoder_states, const EncodedDocument& enc,
                     const SalienceGuide& guide,
                     std::vector<Matrix>* weights = nullptr);

// Teacher-forced decoder logits (one row per position of decoder_input).
Matrix DecoderLogits(const Parameters& params, const EncodedDocument& enc,
                     std::span<const int> decoder_input,
                     const SalienceGuide& guide);

struct LossBreakdown {
  double nll = 0.0;     // mean token cross-entropy of the decoder
  double sal_ce = 0.0;  // mean cross-entropy of the salience classifier
  double total = 0.0;   // nll + lambda_sal * sal_ce
};

struct GradientOptions {
  double nll_weight = 1.0;
  double sal_weight = -1.0;     // < 0: use config.lambda_sal
  std::vector<bool> frozen;     // per slot; frozen slots get zero gradient
};

// Oracle levels drive the cross-attention keys (teacher salience). Throws
// std::invalid_argument when an example's level count does not match its
// marker count.
LossBreakdown ForwardLoss(const Parameters& params,
                          std::span<const PreprocessedExample> batch);

// Exact reverse-mode gradients of nll_weight * nll + sal_weight * sal_ce.
LossBreakdown ComputeGradients(const Parameters& params,
                               std::span<const PreprocessedExample> batch,
                               Gradients* grads,
                               const GradientOptions& options = {});

struct TrainOptions {
  int epochs = 5;
  double learning_rate = 1e-3;
  int batch_size = 8;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double adam_eps = 1e-8;
  std::uint64_t shuffle_seed = 1;
};

struct EpochLog {
  int epoch = 0;
  LossBreakdown mean;  // running mean over the epoch's batches
};

struct TrainResult {
  Parameters params;
  LossBreakdown initial;  // full-corpus loss before the first update
  LossBreakdown final;    // full-corpus loss after the last epoch
  std::vector<EpochLog> epochs;
};

// Adam on the multi-task loss with deterministic shuffling. Throws
// ConfigError on an empty corpus and NumericError on a non-finite loss.
TrainResult Train(const std::vector<PreprocessedExample>& corpus,
                  const ModelConfig& config, const TrainOptions& options,
                  const std::function<void(const EpochLog&)>& on_epoch = {});

// Same, continuing from existing parameters.
TrainResult Train(const std::vector<PreprocessedExample>& corpus,
                  Parameters params, const TrainOptions& options,
                  const std::function<void(const EpochLog&)>& on_epoch = {});

// Token- and sentence-mean losses over the whole corpus, evaluated in
// batches of `batch_size`.
LossBreakdown CorpusLoss(const Parameters& params,
                         const std::vector<PreprocessedExample>& corpus,
                         int batch_size);

// Fraction of sentences whose argmax prediction equals the oracle level.
double SalienceAccuracy(const Parameters& params,
                        const std::vector<PreprocessedExample>& corpus);

// Versioned binary container (config, vocabulary, tensors with shapes).
void SaveCheckpoint(const std::string& path, const Parameters& params,
                    const Vocab& vocab);
struct Checkpoint {
  Parameters params;
  Vocab vocab;
};
// Throws DataError on a malformed or inconsistent file.
Checkpoint LoadCheckpoint(const std::string& path);

}  // namespace season

#endif  // SEASON_MODEL_H_
