#include "fofe/lm/train.hpp"

#include <cmath>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "fofe/lm/network.hpp"

namespace fofe::lm {

namespace {

constexpr std::uint64_t kEvalBatchWords = 1024;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t epoch) {
    std::uint64_t z = seed + epoch * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

PerplexityReport perplexity(const ModelParams<float>& params, const ModelConfig& config,
                            const TokenizedCorpus& split, const std::string& name) {
    if (split.sentences.empty()) {
        throw std::invalid_argument("perplexity of an empty split is undefined");
    }
    PerplexityReport report;
    report.dataset = name;

    // Whole sentences grouped to a word budget; no shuffling, no truncation,
    // so every token is scored exactly once.
    std::size_t begin = 0;
    while (begin < split.sentences.size()) {
        std::size_t end = begin;
        std::uint64_t words = 0;
        while (end < split.sentences.size() &&
               (end == begin || words + split.sentences[end].size() <= kEvalBatchWords)) {
            words += split.sentences[end].size();
            ++end;
        }
        const InputBatch batch = build_inputs(
            std::span(split.sentences.data() + begin, end - begin), config);
        const auto trace = forward_trace(params, batch);
        report.total_nll +=
            mean_nll(trace.logits, batch.targets) * static_cast<double>(batch.size());
        report.tokens += batch.size();
        begin = end;
    }
    report.perplexity = std::exp(report.total_nll / static_cast<double>(report.tokens));
    return report;
}

TrainResult train(const ModelConfig& model_config, const TrainConfig& train_config,
                  const TokenizedCorpus& train_split, const TokenizedCorpus& valid_split) {
    model_config.validate();
    train_config.validate();
    if (train_split.sentences.empty() || valid_split.sentences.empty()) {
        throw std::invalid_argument("train and valid splits must be nonempty");
    }
    for (const auto& s : train_split.sentences) {
        if (s.size() > train_config.batch_capacity_words) {
            throw std::invalid_argument(
                "batch capacity " + std::to_string(train_config.batch_capacity_words) +
                " is smaller than the longest sentence (" + std::to_string(s.size()) + ")");
        }
    }

    TrainResult result;
    result.params = init_params<float>(model_config, train_config.seed);

    const double divergence_ppl = 10.0 * static_cast<double>(model_config.vocab_size);
    double prev_ppl =
        perplexity(result.params, model_config, valid_split, "valid").perplexity;

    LrSchedule schedule(train_config.initial_lr, train_config.min_valid_ppl_gain,
                        train_config.final_halving_epochs);
    for (std::uint32_t epoch = 1; !schedule.finished(); ++epoch) {
        const double lr = schedule.next_rate();
        const auto batches = make_minibatches(train_split, train_config.batch_capacity_words,
                                              mix_seed(train_config.seed, epoch));
        double nll_sum = 0.0;
        std::uint64_t examples = 0;
        for (const auto& batch_sentences : batches) {
            const InputBatch batch = build_inputs(
                std::span(batch_sentences.data(), batch_sentences.size()), model_config);
            auto [loss, grads] = loss_and_grads(result.params, batch);
            sgd_step(result.params, grads, static_cast<float>(lr));
            if (!result.params.all_finite()) {
                throw NetworkError("non-finite parameter after update in epoch " +
                                   std::to_string(epoch));
            }
            nll_sum += loss * static_cast<double>(batch.size());
            examples += batch.size();
        }

        const double valid_ppl =
            perplexity(result.params, model_config, valid_split, "valid").perplexity;
        result.log.push_back(EpochLog{epoch, lr, nll_sum / static_cast<double>(examples),
                                      valid_ppl});
        if (valid_ppl > divergence_ppl) {
            throw std::runtime_error(
                "training diverged: valid perplexity " + std::to_string(valid_ppl) +
                " exceeds 10 * K = " + std::to_string(divergence_ppl) + " at epoch " +
                std::to_string(epoch) + " (lr " + std::to_string(lr) + ")");
        }
        schedule.record_gain(prev_ppl - valid_ppl);
        prev_ppl = valid_ppl;
    }
    return result;
}

void write_train_log_tsv(std::ostream& out, const std::vector<EpochLog>& log) {
    out << "epoch\tlr\ttrain_nll\tvalid_ppl\n";
    for (const auto& row : log) {
        out << row.epoch << '\t' << row.lr << '\t' << row.train_nll << '\t' << row.valid_ppl
            << '\n';
    }
}

}  // namespace fofe::lm
