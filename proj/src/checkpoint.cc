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

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "season/errors.h"
#include "season/model.h"

namespace season {
namespace {

constexpr char kMagic[8] = {'S', 'E', 'A', 'S', 'O', 'N', 'C', 'K'};
constexpr std::uint32_t kVersion = 1;

class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}
  template <typename T>
  void Pod(T v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
  void Str(const std::string& s) {
    Pod<std::uint32_t>(static_cast<std::uint32_t>(s.size()));
    out_.write(s.data(), static_cast<std::streamsize>(s.size()));
  }

 private:
  std::ostream& out_;
};

class Reader {
 public:
  Reader(std::istream& in, std::string path) : in_(in), path_(std::move(path)) {}
  template <typename T>
  T Pod() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) Fail("truncated file");
    return v;
  }
  std::string Str() {
    const auto n = Pod<std::uint32_t>();
    if (n > (1u << 20)) Fail("string length out of range");
    std::string s(n, '\0');
    in_.read(s.data(), n);
    if (!in_) Fail("truncated file");
    return s;
  }
  [[noreturn]] void Fail(const std::string& what) {
    throw DataError("checkpoint '" + path_ + "': " + what);
  }

 private:
  std::istream& in_;
  std::string path_;
};

}  // namespace

void SaveCheckpoint(const std::string& path, const Parameters& params,
                    const Vocab& vocab) {
  const ModelConfig& c = params.config();
  if (vocab.size() != c.vocab_size) {
    throw DataError("vocabulary size " + std::to_string(vocab.size()) +
                    " != model vocab_size " + std::to_string(c.vocab_size));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write checkpoint '" + path + "'");
  Writer w(out);
  out.write(kMagic, sizeof(kMagic));
  w.Pod(kVersion);
  for (int v : {c.d_model, c.n_heads, c.enc_layers, c.dec_layers, c.ffn_dim,
                c.vocab_size, c.degrees, c.max_src_len, c.max_tgt_len}) {
    w.Pod<std::int32_t>(v);
  }
  w.Pod<double>(c.lambda_sal);
  w.Pod<std::uint64_t>(c.seed);
  w.Pod<std::uint32_t>(static_cast<std::uint32_t>(vocab.size()));
  for (const auto& tok : vocab.tokens()) w.Str(tok);
  w.Pod<std::uint32_t>(static_cast<std::uint32_t>(params.tensors().size()));
  for (const auto& t : params.tensors()) {
    w.Str(t.name);
    w.Pod<std::int32_t>(t.value.rows);
    w.Pod<std::int32_t>(t.value.cols);
    out.write(reinterpret_cast<const char*>(t.value.data.data()),
              static_cast<std::streamsize>(t.value.size() * sizeof(double)));
  }
  if (!out) throw DataError("failed writing checkpoint '" + path + "'");
}

Checkpoint LoadCheckpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open checkpoint '" + path + "'");
  Reader r(in, path);
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) r.Fail("bad magic");
  const auto version = r.Pod<std::uint32_t>();
  if (version != kVersion) r.Fail("unsupported version " + std::to_string(version));
  ModelConfig c;
  c.d_model = r.Pod<std::int32_t>();
  c.n_heads = r.Pod<std::int32_t>();
  c.enc_layers = r.Pod<std::int32_t>();
  c.dec_layers = r.Pod<std::int32_t>();
  c.ffn_dim = r.Pod<std::int32_t>();
  c.vocab_size = r.Pod<std::int32_t>();
  c.degrees = r.Pod<std::int32_t>();
  c.max_src_len = r.Pod<std::int32_t>();
  c.max_tgt_len = r.Pod<std::int32_t>();
  c.lambda_sal = r.Pod<double>();
  c.seed = r.Pod<std::uint64_t>();
  try {
    c.Validate();
  } catch (const ConfigError& e) {
    r.Fail(e.what());
  }
  const auto vocab_count = r.Pod<std::uint32_t>();
  if (static_cast<int>(vocab_count) != c.vocab_size) r.Fail("vocabulary size mismatch");
  std::vector<std::string> tokens;
  tokens.reserve(vocab_count);
  for (std::uint32_t i = 0; i < vocab_count; ++i) tokens.push_back(r.Str());
  const auto tensor_count = r.Pod<std::uint32_t>();
  if (tensor_count > 100000) r.Fail("tensor count out of range");
  std::vector<NamedTensor> tensors;
  tensors.reserve(tensor_count);
  for (std::uint32_t i = 0; i < tensor_count; ++i) {
    NamedTensor t;
    t.name = r.Str();
    const int rows = r.Pod<std::int32_t>();
    const int cols = r.Pod<std::int32_t>();
    if (rows < 0 || cols < 0 || static_cast<long>(rows) * cols > (1L << 28)) {
      r.Fail("tensor '" + t.name + "' has invalid shape");
    }
    t.value = Matrix(rows, cols);
    in.read(reinterpret_cast<char*>(t.value.data.data()),
            static_cast<std::streamsize>(t.value.size() * sizeof(double)));
    if (!in) r.Fail("truncated tensor '" + t.name + "'");
    tensors.push_back(std::move(t));
  }
  if (in.peek() != std::char_traits<char>::eof()) r.Fail("trailing bytes");
  return Checkpoint{Parameters(c, std::move(tensors)), Vocab(std::move(tokens))};
}

}  // namespace season
