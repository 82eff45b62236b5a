#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fofe/forgetting_factor.hpp"

namespace fofe {

/// Nonzero entries of a code, sorted by dimension. Values are > 0.
using SparseEntries = std::vector<std::pair<std::uint32_t, double>>;

/// Max-norm distance between two sparse vectors; returns early once the
/// distance is known to be >= bail (pass +inf for the exact value).
double sparse_max_abs_diff(const SparseEntries& a, const SparseEntries& b,
                           double bail);

/// Fixed-size encoding of a token sequence: entry i is the sum of
/// alpha^(T-t) over the positions t where token i occurs.
class FofeCode {
public:
    FofeCode(std::uint32_t k, ForgettingFactor alpha, SparseEntries entries);

    static FofeCode zero(std::uint32_t k, ForgettingFactor alpha) {
        return FofeCode(k, alpha, {});
    }
    static FofeCode from_dense(const Eigen::VectorXd& dense, ForgettingFactor alpha);

    std::uint32_t k() const noexcept { return k_; }
    ForgettingFactor alpha() const noexcept { return alpha_; }
    const SparseEntries& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }

    /// Value at a dimension; 0 when the token never occurred.
    double entry(std::uint32_t dim) const;

    Eigen::VectorXd dense() const;

    double max_abs_diff(const FofeCode& other) const;

private:
    std::uint32_t k_;
    ForgettingFactor alpha_;
    SparseEntries entries_;
};

/// The codes of every prefix w_1..w_t of one sequence, t = 1..T.
/// Row t-1 satisfies row(t) = alpha * row(t-1) + onehot(w_t).
class PrefixCodes {
public:
    PrefixCodes(std::uint32_t k, ForgettingFactor alpha,
                std::vector<SparseEntries> rows)
        : k_(k), alpha_(alpha), rows_(std::move(rows)) {}

    std::uint32_t k() const noexcept { return k_; }
    ForgettingFactor alpha() const noexcept { return alpha_; }
    std::size_t size() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }

    const SparseEntries& row(std::size_t t) const { return rows_.at(t); }
    FofeCode row_code(std::size_t t) const {
        return FofeCode(k_, alpha_, rows_.at(t));
    }

    /// Code of the whole sequence; the zero code for an empty sequence.
    FofeCode final_code() const {
        if (rows_.empty()) return FofeCode::zero(k_, alpha_);
        return FofeCode(k_, alpha_, rows_.back());
    }

    /// Dense T x K view.
    Eigen::MatrixXd dense() const;

private:
    std::uint32_t k_;
    ForgettingFactor alpha_;
    std::vector<SparseEntries> rows_;
};

}  // namespace fofe
