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

#ifndef SEASON_TEXTCORE_H_
#define SEASON_TEXTCORE_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace season {

// Lowercased tokens. No token is empty or contains whitespace.
using TokenSeq = std::vector<std::string>;
using NGram = std::vector<std::string>;
using NGramCounts = std::map<NGram, int>;

// Half-open token range [start, end) of one sentence inside a TokenSeq.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - start; }
  friend bool operator==(const SentenceSpan&, const SentenceSpan&) = default;
};

// Lowercases, collapses whitespace and isolates every ASCII punctuation
// character as its own token. Bytes >= 0x80 are treated as word characters.
TokenSeq Tokenize(std::string_view text);

// Rule-based splitter: a boundary follows a run of '.', '!' or '?' (plus any
// closing quotes/brackets) when the next non-space character is uppercase or
// the text ends. Known abbreviations ("dr.", "u.s.", ...) never end a
// sentence. Returned sentences are trimmed; text without a terminator comes
// back as a single sentence.
std::vector<std::string> SplitSentences(std::string_view text);

// Newline-separated turns first, then SplitSentences within each turn.
std::vector<std::string> SplitDocument(std::string_view text);

// Tokenizes each sentence and concatenates; spans index the result.
TokenSeq TokenizeSentences(const std::vector<std::string>& sentences,
                           std::vector<SentenceSpan>* spans);

// Multiset of n-grams; exactly max(0, len - n + 1) entries with multiplicity.
// n must be >= 1.
NGramCounts NGrams(const TokenSeq& seq, int n);

// Dynamic-programming LCS length, O(|a|*|b|) time, O(min) memory.
std::size_t LcsLength(const TokenSeq& a, const TokenSeq& b);

// Positions in `a` matched by one LCS alignment against `b`.
std::vector<std::size_t> LcsPositions(const TokenSeq& a, const TokenSeq& b);

// Union of reference positions matched by the LCS with each candidate.
std::vector<std::size_t> UnionLcsPositions(
    const TokenSeq& ref_sentence, const std::vector<TokenSeq>& cand_sentences);

std::size_t UnionLcs(const TokenSeq& ref_sentence,
                     const std::vector<TokenSeq>& cand_sentences);

// Space-joins tokens, attaching punctuation tokens to the previous word.
std::string Detokenize(const TokenSeq& tokens);

}  // namespace season

#endif  // SEASON_TEXTCORE_H_
