#include "fofe/fofe_code.hpp"

#include <cmath>
#include <limits>

namespace fofe {

double sparse_max_abs_diff(const SparseEntries& a, const SparseEntries& b,
                           double bail) {
    double worst = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        double d;
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            d = std::abs(a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            d = std::abs(b[j].second);
            ++j;
        } else {
            d = std::abs(a[i].second - b[j].second);
            ++i;
            ++j;
        }
        if (d > worst) {
            worst = d;
            if (worst >= bail) return worst;
        }
    }
    return worst;
}

FofeCode::FofeCode(std::uint32_t k, ForgettingFactor alpha, SparseEntries entries)
    : k_(k), alpha_(alpha), entries_(std::move(entries)) {
    if (k_ == 0) throw std::invalid_argument("vocabulary size K must be >= 1");
    // Slack absorbs accumulated rounding in long encodes.
    const double bound = alpha_.geometric_bound() + 1e-9;
    std::uint32_t prev_dim = 0;
    bool first = true;
    for (const auto& [dim, value] : entries_) {
        if (dim >= k_) throw std::invalid_argument("code dimension out of range");
        if (!first && dim <= prev_dim) {
            throw std::invalid_argument("code entries must be sorted by dimension");
        }
        if (!(value >= 0.0)) {
            throw std::invalid_argument("code entries must be non-negative");
        }
        if (value > bound) {
            throw std::invalid_argument(
                "code entry " + std::to_string(value) +
                " exceeds the geometric bound 1/(1-alpha) = " +
                std::to_string(alpha_.geometric_bound()));
        }
        prev_dim = dim;
        first = false;
    }
}

FofeCode FofeCode::from_dense(const Eigen::VectorXd& dense, ForgettingFactor alpha) {
    SparseEntries entries;
    for (Eigen::Index i = 0; i < dense.size(); ++i) {
        if (dense(i) != 0.0) {
            entries.emplace_back(static_cast<std::uint32_t>(i), dense(i));
        }
    }
    return FofeCode(static_cast<std::uint32_t>(dense.size()), alpha, std::move(entries));
}

double FofeCode::entry(std::uint32_t dim) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), dim,
                               [](const auto& e, std::uint32_t d) { return e.first < d; });
    if (it != entries_.end() && it->first == dim) return it->second;
    return 0.0;
}

Eigen::VectorXd FofeCode::dense() const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(k_);
    for (const auto& [dim, value] : entries_) out(dim) = value;
    return out;
}

double FofeCode::max_abs_diff(const FofeCode& other) const {
    return sparse_max_abs_diff(entries_, other.entries_,
                               std::numeric_limits<double>::infinity());
}

Eigen::MatrixXd PrefixCodes::dense() const {
    Eigen::MatrixXd out =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows_.size()), k_);
    for (std::size_t t = 0; t < rows_.size(); ++t) {
        for (const auto& [dim, value] : rows_[t]) {
            out(static_cast<Eigen::Index>(t), dim) = value;
        }
    }
    return out;
}

}  // namespace fofe
