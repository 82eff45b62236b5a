#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fofe/corpus.hpp"
#include "fofe/lm/config.hpp"
#include "fofe/lm/params.hpp"

namespace fofe::lm {

/// Learning-rate schedule: the rate holds while every epoch improves the
/// validation perplexity by at least min_gain points; the first epoch that
/// falls short flips the schedule into a fixed tail of halving epochs run at
/// lr/2, lr/4, ... The rate never increases.
class LrSchedule {
public:
    LrSchedule(double initial_lr, double min_gain, std::uint32_t halving_epochs)
        : lr_(initial_lr), min_gain_(min_gain), halving_left_(halving_epochs) {}

    /// Rate for the next epoch, halving first when in the tail.
    /// Call only while !finished().
    double next_rate() {
        if (halving_) {
            lr_ *= 0.5;
            --halving_left_;
        }
        return lr_;
    }

    void record_gain(double gain) {
        if (!halving_ && gain < min_gain_) halving_ = true;
    }

    bool finished() const { return halving_ && halving_left_ == 0; }

private:
    double lr_;
    double min_gain_;
    std::uint32_t halving_left_;
    bool halving_ = false;
};

struct EpochLog {
    std::uint32_t epoch = 0;
    double lr = 0.0;
    double train_nll = 0.0;  // mean per-token natural-log NLL
    double valid_ppl = 0.0;
};

struct TrainResult {
    ModelParams<float> params;
    std::vector<EpochLog> log;
};

/// Perplexity of a split: exp(total NLL / tokens), every token including the
/// end-of-sentence counted once. Rejects an empty split.
PerplexityReport perplexity(const ModelParams<float>& params, const ModelConfig& config,
                            const TokenizedCorpus& split, const std::string& name);

/// SGD over sentence-packed mini-batches with per-epoch reshuffling and the
/// plateau-then-halve schedule. Single-threaded and deterministic: identical
/// configs, seeds and corpora reproduce the parameters bit for bit.
/// Aborts when the validation perplexity exceeds 10x the vocabulary size.
TrainResult train(const ModelConfig& model_config, const TrainConfig& train_config,
                  const TokenizedCorpus& train_split, const TokenizedCorpus& valid_split);

/// TSV: header then `epoch lr train_nll valid_ppl` rows.
void write_train_log_tsv(std::ostream& out, const std::vector<EpochLog>& log);

}  // namespace fofe::lm
