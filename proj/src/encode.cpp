#include "fofe/encode.hpp"

#include <algorithm>
#include <stdexcept>

namespace fofe {

namespace {

SparseEntries sorted_by_dim(SparseEntries entries) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return entries;
}

}  // namespace

PrefixCodes encode_prefixes(const TokenSequence& seq, ForgettingFactor alpha) {
    const double a = alpha.value();
    std::vector<SparseEntries> rows;
    rows.reserve(seq.size());

    // Running sparse state in first-occurrence order; snapshots are re-sorted
    // by dimension per row.
    SparseEntries state;
    for (std::uint32_t id : seq.ids()) {
        bool found = false;
        for (auto& [dim, value] : state) {
            value *= a;
            if (dim == id) {
                value += 1.0;
                found = true;
            }
        }
        if (!found) state.emplace_back(id, 1.0);
        rows.push_back(sorted_by_dim(state));
    }
    return PrefixCodes(seq.k(), alpha, std::move(rows));
}

ForgettingMatrix build_forgetting_matrix(std::int64_t t, ForgettingFactor alpha) {
    if (t < 1) throw std::invalid_argument("forgetting matrix order must be >= 1");
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(t, t);
    // Column recursion keeps entry(i,j) = alpha * entry(i-1,j) exact.
    for (std::int64_t j = 0; j < t; ++j) {
        m(j, j) = 1.0;
        for (std::int64_t i = j + 1; i < t; ++i) {
            m(i, j) = alpha.value() * m(i - 1, j);
        }
    }
    return ForgettingMatrix{t, alpha, std::move(m)};
}

PrefixCodes encode_via_matrix(const TokenSequence& seq, ForgettingFactor alpha) {
    if (seq.empty()) {
        throw std::invalid_argument("matrix encoding requires a nonempty sequence");
    }
    const auto t = static_cast<std::int64_t>(seq.size());
    const ForgettingMatrix m = build_forgetting_matrix(t, alpha);
    const auto& ids = seq.ids();

    std::vector<SparseEntries> rows;
    rows.reserve(seq.size());
    SparseEntries row;
    for (std::int64_t i = 0; i < t; ++i) {
        row.clear();
        // Row i of M * V: the one-hot rows of V route column j's power to
        // dimension ids[j].
        for (std::int64_t j = 0; j <= i; ++j) {
            const std::uint32_t dim = ids[static_cast<std::size_t>(j)];
            auto it = std::find_if(row.begin(), row.end(),
                                   [dim](const auto& e) { return e.first == dim; });
            if (it == row.end()) {
                row.emplace_back(dim, m.entry(i, j));
            } else {
                it->second += m.entry(i, j);
            }
        }
        rows.push_back(sorted_by_dim(row));
    }
    return PrefixCodes(seq.k(), alpha, std::move(rows));
}

std::vector<PrefixCodes> encode_batch(const std::vector<TokenSequence>& sentences,
                                      ForgettingFactor alpha) {
    std::vector<PrefixCodes> out;
    out.reserve(sentences.size());
    if (sentences.empty()) return out;
    const std::uint32_t k = sentences.front().k();
    for (const auto& s : sentences) {
        if (s.k() != k) {
            throw std::invalid_argument("all sentences in a batch must share K");
        }
        if (s.empty()) {
            throw std::invalid_argument("empty sentence inside a batch");
        }
        out.push_back(encode_via_matrix(s, alpha));
    }
    return out;
}

Eigen::MatrixXd encode_embedded(const TokenSequence& seq, ForgettingFactor alpha,
                                const Eigen::MatrixXd& embedding) {
    if (embedding.rows() != static_cast<Eigen::Index>(seq.k())) {
        throw std::invalid_argument("embedding row count must equal K");
    }
    const auto t = static_cast<Eigen::Index>(seq.size());
    Eigen::MatrixXd out(t, embedding.cols());
    Eigen::RowVectorXd state = Eigen::RowVectorXd::Zero(embedding.cols());
    for (Eigen::Index i = 0; i < t; ++i) {
        state *= alpha.value();
        state += embedding.row(seq.ids()[static_cast<std::size_t>(i)]);
        out.row(i) = state;
    }
    return out;
}

}  // namespace fofe
