#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "fofe/fofe_code.hpp"
#include "fofe/forgetting_factor.hpp"
#include "fofe/token_sequence.hpp"

namespace fofe {

/// T-th order lower triangular matrix with entry(i,j) = alpha^(i-j) for
/// i >= j. Multiplying it against stacked one-hot rows yields the prefix
/// codes of a sentence in one product.
struct ForgettingMatrix {
    std::int64_t order;
    ForgettingFactor alpha;
    Eigen::MatrixXd entries;  // order x order

    double entry(std::int64_t i, std::int64_t j) const { return entries(i, j); }
};

/// Codes of all prefixes via the recursion z_t = alpha * z_{t-1} + e_t.
/// An empty sequence yields zero rows (the empty prefix encodes to 0).
PrefixCodes encode_prefixes(const TokenSequence& seq, ForgettingFactor alpha);

/// Rejects T = 0.
ForgettingMatrix build_forgetting_matrix(std::int64_t t, ForgettingFactor alpha);

/// Same prefix codes computed as the explicit matrix product M * V,
/// accumulating full rows of powers instead of recursing. Rejects empty
/// sequences (there is no matrix order).
PrefixCodes encode_via_matrix(const TokenSequence& seq, ForgettingFactor alpha);

/// Per-sentence block-diagonal form of the matrix product: each sentence is
/// encoded independently, state never crosses sentence boundaries.
/// An empty batch yields an empty list; an empty sentence is rejected.
std::vector<PrefixCodes> encode_batch(const std::vector<TokenSequence>& sentences,
                                      ForgettingFactor alpha);

/// Row t of the result equals (prefix code t) * embedding, computed by
/// recursively decaying looked-up embedding rows so the K-dimensional codes
/// are never materialized. embedding must have K rows.
Eigen::MatrixXd encode_embedded(const TokenSequence& seq, ForgettingFactor alpha,
                                const Eigen::MatrixXd& embedding);

}  // namespace fofe
