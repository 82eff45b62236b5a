#include "fofe/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace fofe {

TokenizedCorpus tokenize(const std::vector<std::string>& lines, const Vocabulary& vocab) {
    TokenizedCorpus corpus;
    corpus.k = vocab.size();
    for (const auto& line : lines) {
        std::vector<std::uint32_t> sentence;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) {
                const std::uint32_t id = vocab.id_of(line.substr(i, j - i));
                if (id == Vocabulary::kUnkId) ++corpus.stats.unk_tokens;
                sentence.push_back(id);
            }
            i = j;
        }
        if (sentence.empty()) continue;  // blank line
        sentence.push_back(Vocabulary::kEosId);
        corpus.stats.tokens += sentence.size();
        corpus.sentences.push_back(std::move(sentence));
    }
    corpus.stats.oov_rate =
        corpus.stats.tokens == 0
            ? 0.0
            : static_cast<double>(corpus.stats.unk_tokens) / static_cast<double>(corpus.stats.tokens);
    return corpus;
}

std::vector<std::vector<std::vector<std::uint32_t>>> make_minibatches(
    const TokenizedCorpus& corpus, std::uint64_t capacity_words, std::uint64_t seed) {
    if (capacity_words == 0) throw std::invalid_argument("batch capacity must be >= 1");

    std::vector<std::size_t> order(corpus.sentences.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::vector<std::vector<std::uint32_t>>> batches;
    std::vector<std::vector<std::uint32_t>> current;
    std::uint64_t words = 0;
    for (std::size_t idx : order) {
        const auto& sentence = corpus.sentences[idx];
        if (words == capacity_words) {
            batches.push_back(std::move(current));
            current.clear();
            words = 0;
        }
        const std::uint64_t room = capacity_words - words;
        if (sentence.size() <= room) {
            current.push_back(sentence);
            words += sentence.size();
        } else {
            // Crossing the boundary: cut to fit, drop the remainder this epoch.
            current.emplace_back(sentence.begin(),
                                 sentence.begin() + static_cast<std::ptrdiff_t>(room));
            batches.push_back(std::move(current));
            current.clear();
            words = 0;
        }
    }
    if (!current.empty()) batches.push_back(std::move(current));
    return batches;
}

}  // namespace fofe
