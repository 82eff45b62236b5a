#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fofe {

/// Synthetic benchmark text with controllable sequential structure, used by
/// the tests and the demo pipeline. Words belong to rotating Markov classes
/// (the previous word pins the class of the next one) and each sentence
/// carries a latent topic that biases word choice within a class, so a model
/// that can summarize more history predicts measurably better than one that
/// only sees the previous word.
struct ToyTextSpec {
    std::uint64_t seed = 42;
    std::uint32_t sentences = 7000;
    std::uint32_t vocab_words = 1800;  // distinct surface words w0..w{V-1}
    std::uint32_t classes = 10;
    std::uint32_t topics = 5;
    double topic_boost = 12.0;         // weight multiplier for on-topic words
    double parity_boost = 12.0;         // multiplier when a word's depth parity
                                       // matches the previous word's
    double step_bias = 0.9;            // chance the class track advances by 1
    double zipf_power = 0.8;           // frequency skew within a class tier
    std::uint32_t min_len = 6;
    std::uint32_t max_len = 22;
};

std::vector<std::string> generate_toy_text(const ToyTextSpec& spec);

}  // namespace fofe
