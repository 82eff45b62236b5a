#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fofe/forgetting_factor.hpp"

namespace fofe::lm {

enum class InputMode : std::uint8_t {
    FofeOrder1 = 0,  // z_{t-1} projected through the embedding
    FofeOrder2 = 1,  // (z_{t-1}, z_{t-2}) pair
    Ngram = 2,       // last n-1 embedded words, zero-padded at sentence start
};

inline const char* to_string(InputMode m) {
    switch (m) {
        case InputMode::FofeOrder1: return "fofe1";
        case InputMode::FofeOrder2: return "fofe2";
        case InputMode::Ngram: return "ngram";
    }
    return "unknown";
}

struct ModelConfig {
    InputMode mode = InputMode::FofeOrder1;
    std::uint32_t ngram_order = 2;  // n; the context is the previous n-1 words
    std::uint32_t vocab_size = 0;   // K
    std::uint32_t embed_dim = 0;    // D
    std::vector<std::uint32_t> hidden_dims;
    std::optional<ForgettingFactor> alpha;  // required for the fofe modes

    std::uint32_t input_width() const {
        switch (mode) {
            case InputMode::FofeOrder1: return embed_dim;
            case InputMode::FofeOrder2: return 2 * embed_dim;
            case InputMode::Ngram: return (ngram_order - 1) * embed_dim;
        }
        return 0;
    }

    void validate() const {
        if (vocab_size == 0) throw std::invalid_argument("vocab_size must be >= 1");
        if (embed_dim == 0) throw std::invalid_argument("embed_dim must be >= 1");
        if (hidden_dims.empty()) throw std::invalid_argument("hidden_dims must be nonempty");
        for (auto h : hidden_dims) {
            if (h == 0) throw std::invalid_argument("hidden layer width must be >= 1");
        }
        if (mode == InputMode::Ngram) {
            if (ngram_order < 2) throw std::invalid_argument("ngram order must be >= 2");
        } else if (!alpha) {
            throw std::invalid_argument("fofe input modes require a forgetting factor");
        }
    }
};

struct TrainConfig {
    double initial_lr = 0.4;
    std::uint64_t batch_capacity_words = 200;
    std::uint64_t seed = 42;
    double min_valid_ppl_gain = 1.0;  // absolute perplexity points
    std::uint32_t final_halving_epochs = 6;

    void validate() const {
        if (!(initial_lr > 0.0)) throw std::invalid_argument("initial_lr must be > 0");
        if (batch_capacity_words == 0)
            throw std::invalid_argument("batch_capacity_words must be >= 1");
    }
};

struct PerplexityReport {
    std::string dataset;
    std::uint64_t tokens = 0;
    double total_nll = 0.0;   // natural log
    double perplexity = 0.0;  // exp(total_nll / tokens)
};

}  // namespace fofe::lm
