#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fofe/lm/config.hpp"
#include "fofe/lm/params.hpp"

namespace fofe::lm {

/// One training example per sentence position: the target is the token at
/// that position and the input is a linear combination of embedding rows
/// describing the history. The combination is kept symbolic as
/// (token, coefficient) pairs per input segment so gradients can flow back
/// into the embedding; the decay coefficients themselves are constants.
///
/// Segments concatenate to the model input row:
///   fofe1  - 1 segment: z_{t-1} coefficients (alpha powers)
///   fofe2  - 2 segments: z_{t-1} then z_{t-2}, zero at sentence start
///   ngram  - n-1 segments: w_{t-n+1} .. w_{t-1}, each one token or empty
struct InputBatch {
    struct Entry {
        std::uint32_t token;
        double coeff;
    };

    std::uint32_t seg_dim = 0;    // embedding dimension D
    std::uint32_t segments = 0;   // segments per example
    std::vector<std::uint32_t> targets;
    std::vector<Entry> arena;
    std::vector<std::uint64_t> offsets;  // size = targets.size()*segments + 1

    std::size_t size() const { return targets.size(); }
    std::uint32_t width() const { return seg_dim * segments; }

    std::span<const Entry> segment(std::size_t example, std::uint32_t seg) const {
        const std::uint64_t slot = example * segments + seg;
        return {arena.data() + offsets[slot],
                static_cast<std::size_t>(offsets[slot + 1] - offsets[slot])};
    }

    /// Dense input rows for a given embedding.
    template <typename S>
    Mat<S> materialize(const Mat<S>& embedding) const {
        Mat<S> x = Mat<S>::Zero(static_cast<std::int64_t>(size()), width());
        for (std::size_t ex = 0; ex < size(); ++ex) {
            for (std::uint32_t s = 0; s < segments; ++s) {
                auto block = x.row(static_cast<std::int64_t>(ex))
                                 .segment(s * seg_dim, seg_dim);
                for (const Entry& e : segment(ex, s)) {
                    block += static_cast<S>(e.coeff) * embedding.row(e.token);
                }
            }
        }
        return x;
    }

    /// dEmbedding accumulation for the input rows' gradient.
    template <typename S>
    void scatter_input_grad(const Mat<S>& dx, Mat<S>& d_embedding) const {
        for (std::size_t ex = 0; ex < size(); ++ex) {
            for (std::uint32_t s = 0; s < segments; ++s) {
                auto block = dx.row(static_cast<std::int64_t>(ex))
                                 .segment(s * seg_dim, seg_dim);
                for (const Entry& e : segment(ex, s)) {
                    d_embedding.row(e.token) += static_cast<S>(e.coeff) * block;
                }
            }
        }
    }
};

/// Builds the training pairs for a batch of sentences. Every position t >= 1
/// of every sentence becomes one example with target w_t; the encoding state
/// resets at each sentence boundary, so the first word is predicted from the
/// zero history.
InputBatch build_inputs(std::span<const std::vector<std::uint32_t>> sentences,
                        const ModelConfig& config);

}  // namespace fofe::lm
