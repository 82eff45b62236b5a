#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Core>

#include "fofe/lm/config.hpp"

namespace fofe::lm {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename S>
using RowVec = Eigen::Matrix<S, 1, Eigen::Dynamic>;

template <typename S>
struct Layer {
    Mat<S> w;     // in x out
    RowVec<S> b;  // out
};

template <typename S>
struct ModelParams {
    Mat<S> embedding;              // K x D
    std::vector<Layer<S>> hidden;  // widths chain from input_width
    Layer<S> output;               // last hidden -> K

    bool all_finite() const {
        if (!embedding.allFinite()) return false;
        for (const auto& l : hidden) {
            if (!l.w.allFinite() || !l.b.allFinite()) return false;
        }
        return output.w.allFinite() && output.b.allFinite();
    }

    template <typename S2>
    ModelParams<S2> cast() const {
        ModelParams<S2> out;
        out.embedding = embedding.template cast<S2>();
        out.hidden.reserve(hidden.size());
        for (const auto& l : hidden) {
            out.hidden.push_back({l.w.template cast<S2>(), l.b.template cast<S2>()});
        }
        out.output = {output.w.template cast<S2>(), output.b.template cast<S2>()};
        return out;
    }
};

/// Normalized (fan-in + fan-out) uniform initialization: every weight matrix
/// drawn uniform in +-sqrt(6 / (fan_in + fan_out)), biases exactly zero.
/// Deterministic given the seed; tensors are filled in declaration order.
template <typename S>
ModelParams<S> init_params(const ModelConfig& config, std::uint64_t seed) {
    config.validate();
    std::mt19937_64 rng(seed);
    auto fill = [&rng](Mat<S>& m, std::int64_t fan_in, std::int64_t fan_out) {
        const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        std::uniform_real_distribution<double> dist(-bound, bound);
        for (std::int64_t r = 0; r < m.rows(); ++r) {
            for (std::int64_t c = 0; c < m.cols(); ++c) {
                m(r, c) = static_cast<S>(dist(rng));
            }
        }
    };

    ModelParams<S> p;
    const auto k = static_cast<std::int64_t>(config.vocab_size);
    const auto d = static_cast<std::int64_t>(config.embed_dim);
    p.embedding.resize(k, d);
    fill(p.embedding, k, d);

    std::int64_t in = config.input_width();
    for (auto hd : config.hidden_dims) {
        Layer<S> layer;
        layer.w.resize(in, hd);
        fill(layer.w, in, hd);
        layer.b = RowVec<S>::Zero(hd);
        p.hidden.push_back(std::move(layer));
        in = hd;
    }
    p.output.w.resize(in, k);
    fill(p.output.w, in, k);
    p.output.b = RowVec<S>::Zero(k);
    return p;
}

}  // namespace fofe::lm
