#pragma once

#include <stdexcept>
#include <string>

namespace fofe {

enum class AlphaRegime {
    Unique,        // alpha <= 0.5: decoding is exact for any K and T
    AlmostUnique,  // alpha in (0.5, 1): unique except a countable set of alphas
};

/// Constant forgetting factor weighting older context by powers of alpha.
/// Must lie strictly in (0, 1).
class ForgettingFactor {
public:
    explicit ForgettingFactor(double value) : value_(value) {
        if (!(value > 0.0 && value < 1.0)) {
            throw std::invalid_argument(
                "forgetting factor must lie strictly in (0, 1), got " +
                std::to_string(value));
        }
    }

    double value() const noexcept { return value_; }

    AlphaRegime regime() const noexcept {
        return value_ <= 0.5 ? AlphaRegime::Unique : AlphaRegime::AlmostUnique;
    }

    /// Strict upper bound on any code entry: sum of the geometric series.
    double geometric_bound() const noexcept { return 1.0 / (1.0 - value_); }

private:
    double value_;
};

}  // namespace fofe
