#include "fofe/textgen.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace fofe {

std::vector<std::string> generate_toy_text(const ToyTextSpec& spec) {
    if (spec.vocab_words < spec.classes * spec.topics) {
        throw std::invalid_argument("need at least classes * topics words");
    }
    if (spec.min_len == 0 || spec.min_len > spec.max_len) {
        throw std::invalid_argument("bad sentence length range");
    }

    // word w: class = w % C, topic tier = (w / C) % P
    const std::uint32_t c = spec.classes;
    const std::uint32_t p = spec.topics;
    std::vector<std::vector<std::uint32_t>> class_words(c);
    for (std::uint32_t w = 0; w < spec.vocab_words; ++w) {
        class_words[w % c].push_back(w);
    }

    // Per (class, topic, previous-parity) sampling tables: on-topic words
    // weighted up, the previous word's depth parity boosting half the tier,
    // and word frequency decaying with the depth index. The parity channel
    // is deliberately fine-grained: predicting through it requires the exact
    // previous word, not just its class.
    std::vector<std::discrete_distribution<std::uint32_t>> tables(c * p * 2);
    for (std::uint32_t cls = 0; cls < c; ++cls) {
        for (std::uint32_t topic = 0; topic < p; ++topic) {
            for (std::uint32_t parity = 0; parity < 2; ++parity) {
                std::vector<double> weights;
                weights.reserve(class_words[cls].size());
                for (std::uint32_t w : class_words[cls]) {
                    const std::uint32_t tier = (w / c) % p;
                    const std::uint32_t depth = w / (c * p);
                    const double rank = std::pow(1.0 + double(depth), -spec.zipf_power);
                    double weight = (tier == topic ? spec.topic_boost : 1.0) * rank;
                    if (depth % 2 == parity) weight *= spec.parity_boost;
                    weights.push_back(weight);
                }
                tables[(cls * p + topic) * 2 + parity] = std::discrete_distribution<std::uint32_t>(
                    weights.begin(), weights.end());
            }
        }
    }

    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<std::uint32_t> pick_topic(0, p - 1);
    std::uniform_int_distribution<std::uint32_t> pick_class(0, c - 1);
    std::uniform_int_distribution<std::uint32_t> pick_len(spec.min_len, spec.max_len);
    std::bernoulli_distribution small_step(spec.step_bias);

    std::vector<std::string> lines;
    lines.reserve(spec.sentences);
    std::string line;
    for (std::uint32_t s = 0; s < spec.sentences; ++s) {
        const std::uint32_t topic = pick_topic(rng);
        std::uint32_t cls = pick_class(rng);
        std::uint32_t parity = 0;
        const std::uint32_t len = pick_len(rng);
        line.clear();
        for (std::uint32_t t = 0; t < len; ++t) {
            // the class track is a near-deterministic rotation: the previous
            // word pins the distribution of the next one
            cls = (cls + (small_step(rng) ? 1 : 2)) % c;
            const std::uint32_t w =
                class_words[cls][tables[(cls * p + topic) * 2 + parity](rng)];
            parity = (w / (c * p)) % 2;
            if (!line.empty()) line += ' ';
            line += 'w';
            line += std::to_string(w);
        }
        lines.push_back(line);
    }
    return lines;
}

}  // namespace fofe
