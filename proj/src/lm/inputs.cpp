#include "fofe/lm/inputs.hpp"

namespace fofe::lm {

InputBatch build_inputs(std::span<const std::vector<std::uint32_t>> sentences,
                        const ModelConfig& config) {
    config.validate();
    InputBatch batch;
    batch.seg_dim = config.embed_dim;
    switch (config.mode) {
        case InputMode::FofeOrder1: batch.segments = 1; break;
        case InputMode::FofeOrder2: batch.segments = 2; break;
        case InputMode::Ngram: batch.segments = config.ngram_order - 1; break;
    }

    batch.offsets.push_back(0);

    const double a = config.alpha ? config.alpha->value() : 0.0;
    std::vector<InputBatch::Entry> cur;   // z_{t-1} combination
    std::vector<InputBatch::Entry> prev;  // z_{t-2} combination
    for (const auto& sent : sentences) {
        cur.clear();
        prev.clear();
        for (std::size_t t = 0; t < sent.size(); ++t) {
            batch.targets.push_back(sent[t]);
            switch (config.mode) {
                case InputMode::FofeOrder1:
                    batch.arena.insert(batch.arena.end(), cur.begin(), cur.end());
                    batch.offsets.push_back(batch.arena.size());
                    break;
                case InputMode::FofeOrder2:
                    batch.arena.insert(batch.arena.end(), cur.begin(), cur.end());
                    batch.offsets.push_back(batch.arena.size());
                    batch.arena.insert(batch.arena.end(), prev.begin(), prev.end());
                    batch.offsets.push_back(batch.arena.size());
                    break;
                case InputMode::Ngram:
                    // segments hold w_{t-n+1} .. w_{t-1}; missing history
                    // stays an empty (zero) segment
                    for (std::uint32_t s = 0; s < batch.segments; ++s) {
                        const std::int64_t pos = static_cast<std::int64_t>(t) -
                                                 static_cast<std::int64_t>(batch.segments) +
                                                 static_cast<std::int64_t>(s);
                        if (pos >= 0) {
                            batch.arena.push_back(
                                {sent[static_cast<std::size_t>(pos)], 1.0});
                        }
                        batch.offsets.push_back(batch.arena.size());
                    }
                    break;
            }
            if (config.mode != InputMode::Ngram) {
                prev = cur;
                for (auto& e : cur) e.coeff *= a;
                cur.push_back({sent[t], 1.0});
            }
        }
    }
    return batch;
}

}  // namespace fofe::lm
