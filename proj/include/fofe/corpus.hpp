#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fofe/vocabulary.hpp"

namespace fofe {

struct CorpusStats {
    std::uint64_t tokens = 0;      // includes the </s> appended per sentence
    std::uint64_t unk_tokens = 0;
    double oov_rate = 0.0;         // unk_tokens / tokens
};

/// Sentence-segmented integer token sequences over a fixed vocabulary.
/// Every sentence is nonempty and ends with the end-of-sentence id.
struct TokenizedCorpus {
    std::uint32_t k = 0;
    std::vector<std::vector<std::uint32_t>> sentences;
    CorpusStats stats;
};

/// One sentence per line, whitespace-split, OOV mapped to <unk>, </s>
/// appended. Blank lines are skipped.
TokenizedCorpus tokenize(const std::vector<std::string>& lines, const Vocabulary& vocab);

/// Sentence mini-batches packed to a word budget: sentence order is shuffled
/// by the seeded generator, then sentences fill each batch greedily; a
/// sentence crossing the capacity boundary is cut to fit and its remainder
/// dropped for this epoch. Every batch holds <= capacity_words tokens.
std::vector<std::vector<std::vector<std::uint32_t>>> make_minibatches(
    const TokenizedCorpus& corpus, std::uint64_t capacity_words, std::uint64_t seed);

}  // namespace fofe
