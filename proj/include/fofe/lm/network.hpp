#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fofe/lm/inputs.hpp"
#include "fofe/lm/params.hpp"

namespace fofe::lm {

class NetworkError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename S>
struct ForwardTrace {
    Mat<S> input;                     // materialized rows
    std::vector<Mat<S>> activations;  // post-ReLU per hidden layer
    Mat<S> logits;
    Mat<S> probs;                     // row softmax of logits
};

namespace detail {

template <typename S>
void check_finite(const Mat<S>& m, const std::string& where) {
    if (!m.allFinite()) {
        throw NetworkError("non-finite activation in " + where);
    }
}

/// Row-wise softmax, max-subtracted; the denominator is accumulated in
/// double so row sums stay within ~1 ulp of 1 even in float.
template <typename S>
Mat<S> softmax_rows(const Mat<S>& logits) {
    Mat<S> probs(logits.rows(), logits.cols());
    for (std::int64_t r = 0; r < logits.rows(); ++r) {
        const S m = logits.row(r).maxCoeff();
        double denom = 0.0;
        for (std::int64_t c = 0; c < logits.cols(); ++c) {
            const S e = std::exp(logits(r, c) - m);
            probs(r, c) = e;
            denom += static_cast<double>(e);
        }
        probs.row(r) /= static_cast<S>(denom);
    }
    return probs;
}

}  // namespace detail

/// ReLU hidden layers followed by a full-vocabulary softmax output.
template <typename S>
ForwardTrace<S> forward_trace(const ModelParams<S>& params, const InputBatch& batch) {
    ForwardTrace<S> trace;
    trace.input = batch.materialize(params.embedding);
    detail::check_finite(trace.input, "input projection");

    const Mat<S>* prev = &trace.input;
    trace.activations.reserve(params.hidden.size());
    for (std::size_t i = 0; i < params.hidden.size(); ++i) {
        Mat<S> h = (*prev * params.hidden[i].w).rowwise() + params.hidden[i].b;
        h = h.cwiseMax(S(0));
        detail::check_finite(h, "hidden layer " + std::to_string(i));
        trace.activations.push_back(std::move(h));
        prev = &trace.activations.back();
    }
    trace.logits = (*prev * params.output.w).rowwise() + params.output.b;
    detail::check_finite(trace.logits, "output layer");
    trace.probs = detail::softmax_rows(trace.logits);
    return trace;
}

template <typename S>
Mat<S> forward(const ModelParams<S>& params, const InputBatch& batch) {
    return forward_trace(params, batch).probs;
}

/// Mean per-example negative log-likelihood, computed from the logits with
/// double log-sum-exp regardless of S.
template <typename S>
double mean_nll(const Mat<S>& logits, const std::vector<std::uint32_t>& targets) {
    double total = 0.0;
    for (std::int64_t r = 0; r < logits.rows(); ++r) {
        const double m = static_cast<double>(logits.row(r).maxCoeff());
        double lse = 0.0;
        for (std::int64_t c = 0; c < logits.cols(); ++c) {
            lse += std::exp(static_cast<double>(logits(r, c)) - m);
        }
        total += m + std::log(lse) -
                 static_cast<double>(logits(r, static_cast<std::int64_t>(targets[r])));
    }
    return total / static_cast<double>(logits.rows());
}

template <typename S>
struct Gradients {
    Mat<S> embedding;
    std::vector<Layer<S>> hidden;
    Layer<S> output;
};

/// Standard backpropagation; gradients flow through the fixed linear input
/// combination into the embedding.
template <typename S>
std::pair<double, Gradients<S>> loss_and_grads(const ModelParams<S>& params,
                                               const InputBatch& batch) {
    const ForwardTrace<S> trace = forward_trace(params, batch);
    const auto n = static_cast<std::int64_t>(batch.size());
    const double loss = mean_nll(trace.logits, batch.targets);

    Gradients<S> g;
    g.embedding = Mat<S>::Zero(params.embedding.rows(), params.embedding.cols());
    g.hidden.resize(params.hidden.size());

    Mat<S> d_logits = trace.probs;
    for (std::int64_t r = 0; r < n; ++r) {
        d_logits(r, static_cast<std::int64_t>(batch.targets[r])) -= S(1);
    }
    d_logits /= static_cast<S>(n);

    const Mat<S>& last = params.hidden.empty() ? trace.input : trace.activations.back();
    g.output.w = last.transpose() * d_logits;
    g.output.b = d_logits.colwise().sum();

    Mat<S> d_act = d_logits * params.output.w.transpose();
    for (std::size_t i = params.hidden.size(); i-- > 0;) {
        // ReLU gate from the post-activation sign
        Mat<S> d_pre =
            d_act.cwiseProduct((trace.activations[i].array() > S(0)).template cast<S>().matrix());
        const Mat<S>& below = (i == 0) ? trace.input : trace.activations[i - 1];
        g.hidden[i].w = below.transpose() * d_pre;
        g.hidden[i].b = d_pre.colwise().sum();
        d_act = d_pre * params.hidden[i].w.transpose();
    }
    batch.scatter_input_grad(d_act, g.embedding);
    return {loss, std::move(g)};
}

template <typename S>
void sgd_step(ModelParams<S>& params, const Gradients<S>& grads, S lr) {
    params.embedding -= lr * grads.embedding;
    for (std::size_t i = 0; i < params.hidden.size(); ++i) {
        params.hidden[i].w -= lr * grads.hidden[i].w;
        params.hidden[i].b -= lr * grads.hidden[i].b;
    }
    params.output.w -= lr * grads.output.w;
    params.output.b -= lr * grads.output.b;
}

}  // namespace fofe::lm
