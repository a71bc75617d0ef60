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

#ifndef SEASON_TESTS_TEST_UTIL_H_
#define SEASON_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "season/decode.h"
#include "season/textcore.h"

namespace season::testing {

inline std::string SourcePath(const std::string& rel) {
  return std::string(SEASON_SOURCE_DIR) + "/" + rel;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path TempDir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("season_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// Tokens "a", "b", ... of random length in [min_len, max_len].
inline TokenSeq RandomTokens(std::mt19937_64& rng, int min_len, int max_len,
                             int alphabet) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<int> sym(0, alphabet - 1);
  TokenSeq out(len(rng));
  for (auto& t : out) t = std::string(1, static_cast<char>('a' + sym(rng)));
  return out;
}

// Step model given by an explicit table prefix -> distribution; prefixes
// not in the table fall back to `fallback`.
class TableStepModel : public StepModel {
 public:
  TableStepModel(int vocab, int eos, std::vector<double> fallback)
      : vocab_(vocab), eos_(eos), fallback_(std::move(fallback)) {}

  void Set(const std::vector<int>& prefix, const std::vector<double>& probs) {
    table_[prefix] = probs;
  }
  int vocab_size() const override { return vocab_; }
  int eos_id() const override { return eos_; }
  std::vector<double> NextLogProbs(std::span<const int> prefix) const override {
    auto it = table_.find(std::vector<int>(prefix.begin(), prefix.end()));
    const auto& p = it == table_.end() ? fallback_ : it->second;
    std::vector<double> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::log(p[i]);
    return out;
  }

 private:
  int vocab_;
  int eos_;
  std::vector<double> fallback_;
  std::map<std::vector<int>, std::vector<double>> table_;
};

}  // namespace season::testing

#endif  // SEASON_TESTS_TEST_UTIL_H_
