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

#include "season/textcore.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace season {
namespace {

bool IsSpace(unsigned char c) { return std::isspace(c) != 0; }
bool IsPunct(unsigned char c) { return c < 0x80 && std::ispunct(c) != 0; }
bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }
bool IsCloser(char c) {
  return c == '"' || c == '\'' || c == ')' || c == ']' || c == '}';
}

constexpr std::array<std::string_view, 9> kAbbreviations = {
    "dr.", "mr.", "mrs.", "ms.", "inc.", "co.", "u.s.", "e.g.", "i.e."};

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && IsSpace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && IsSpace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// The whitespace-delimited word that ends at `end` (exclusive).
std::string_view WordEndingAt(std::string_view text, std::size_t end) {
  std::size_t b = end;
  while (b > 0 && !IsSpace(static_cast<unsigned char>(text[b - 1]))) --b;
  return text.substr(b, end - b);
}

bool IsAbbreviation(std::string_view word) {
  const std::string lowered = Lower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lowered) !=
         kAbbreviations.end();
}

}  // namespace

TokenSeq Tokenize(std::string_view text) {
  TokenSeq tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (IsSpace(c)) {
      flush();
    } else if (IsPunct(c)) {
      flush();
      tokens.emplace_back(1, ch);
    } else {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!IsTerminator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t term = i;
    std::size_t j = i;
    while (j < text.size() && IsTerminator(text[j])) ++j;
    while (j < text.size() && IsCloser(text[j])) ++j;
    std::size_t k = j;
    while (k < text.size() && IsSpace(static_cast<unsigned char>(text[k]))) ++k;
    bool boundary = false;
    if (k == text.size()) {
      boundary = true;
    } else if (k > j && std::isupper(static_cast<unsigned char>(text[k]))) {
      boundary = true;
    }
    if (boundary && text[term] == '.' && j - term == 1 &&
        IsAbbreviation(WordEndingAt(text, term + 1))) {
      boundary = false;
    }
    if (boundary) {
      std::string_view piece = Trim(text.substr(start, j - start));
      if (!piece.empty()) sentences.emplace_back(piece);
      start = j;
    }
    i = j;
  }
  std::string_view rest = Trim(text.substr(start));
  if (!rest.empty()) sentences.emplace_back(rest);
  return sentences;
}

std::vector<std::string> SplitDocument(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    for (auto& s : SplitSentences(text.substr(pos, nl - pos))) {
      out.push_back(std::move(s));
    }
    pos = nl + 1;
  }
  return out;
}

TokenSeq TokenizeSentences(const std::vector<std::string>& sentences,
                           std::vector<SentenceSpan>* spans) {
  TokenSeq all;
  if (spans) spans->clear();
  for (const auto& s : sentences) {
    TokenSeq toks = Tokenize(s);
    if (toks.empty()) continue;
    const std::size_t begin = all.size();
    all.insert(all.end(), std::make_move_iterator(toks.begin()),
               std::make_move_iterator(toks.end()));
    if (spans) spans->push_back({begin, all.size()});
  }
  return all;
}

NGramCounts NGrams(const TokenSeq& seq, int n) {
  if (n < 1) throw std::invalid_argument("NGrams: n must be >= 1");
  NGramCounts counts;
  const auto len = static_cast<std::ptrdiff_t>(seq.size());
  for (std::ptrdiff_t i = 0; i + n <= len; ++i) {
    ++counts[NGram(seq.begin() + i, seq.begin() + i + n)];
  }
  return counts;
}

std::size_t LcsLength(const TokenSeq& a, const TokenSeq& b) {
  const TokenSeq& rows = a.size() >= b.size() ? a : b;
  const TokenSeq& cols = a.size() >= b.size() ? b : a;
  std::vector<std::size_t> prev(cols.size() + 1, 0), cur(cols.size() + 1, 0);
  for (const auto& r : rows) {
    for (std::size_t j = 1; j <= cols.size(); ++j) {
      cur[j] = r == cols[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[cols.size()];
}

std::vector<std::size_t> LcsPositions(const TokenSeq& a, const TokenSeq& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::size_t> table((n + 1) * (m + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return table[i * (m + 1) + j];
  };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      at(i, j) = a[i - 1] == b[j - 1] ? at(i - 1, j - 1) + 1
                                      : std::max(at(i - 1, j), at(i, j - 1));
    }
  }
  std::vector<std::size_t> positions;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    if (a[i - 1] == b[j - 1]) {
      positions.push_back(i - 1);
      --i;
      --j;
    } else if (at(i - 1, j) >= at(i, j - 1)) {
      --i;
    } else {
      --j;
    }
  }
  std::reverse(positions.begin(), positions.end());
  return positions;
}

std::vector<std::size_t> UnionLcsPositions(
    const TokenSeq& ref_sentence, const std::vector<TokenSeq>& cand_sentences) {
  std::vector<bool> hit(ref_sentence.size(), false);
  for (const auto& cand : cand_sentences) {
    for (std::size_t p : LcsPositions(ref_sentence, cand)) hit[p] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < hit.size(); ++p) {
    if (hit[p]) out.push_back(p);
  }
  return out;
}

std::size_t UnionLcs(const TokenSeq& ref_sentence,
                     const std::vector<TokenSeq>& cand_sentences) {
  return UnionLcsPositions(ref_sentence, cand_sentences).size();
}

std::string Detokenize(const TokenSeq& tokens) {
  std::string out;
  bool after_open = false;
  for (const auto& t : tokens) {
    const bool punct = t.size() == 1 && IsPunct(static_cast<unsigned char>(t[0]));
    const bool opens = punct && (t[0] == '(' || t[0] == '[');
    const bool attach = after_open || (punct && !opens && t[0] != '"');
    if (!out.empty() && !attach) out.push_back(' ');
    out += t;
    after_open = opens;
  }
  return out;
}

}  // namespace season
