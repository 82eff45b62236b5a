#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fofe {

/// Ordered token ids over a vocabulary of size K. May be empty.
class TokenSequence {
public:
    TokenSequence(std::vector<std::uint32_t> ids, std::uint32_t k)
        : ids_(std::move(ids)), k_(k) {
        if (k_ == 0) throw std::invalid_argument("vocabulary size K must be >= 1");
        for (std::uint32_t id : ids_) {
            if (id >= k_) {
                throw std::invalid_argument("token id " + std::to_string(id) +
                                            " out of range for K=" + std::to_string(k_));
            }
        }
    }

    static TokenSequence empty(std::uint32_t k) { return TokenSequence({}, k); }

    const std::vector<std::uint32_t>& ids() const noexcept { return ids_; }
    std::uint32_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    friend bool operator==(const TokenSequence& a, const TokenSequence& b) {
        return a.k_ == b.k_ && a.ids_ == b.ids_;
    }

private:
    std::vector<std::uint32_t> ids_;
    std::uint32_t k_;
};

}  // namespace fofe
