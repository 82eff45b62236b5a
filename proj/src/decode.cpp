#include "fofe/decode.hpp"

#include <algorithm>
#include <string>

#include "fofe/encode.hpp"

namespace fofe {

namespace {

DecodeFault fault_for(ForgettingFactor alpha) {
    return alpha.regime() == AlphaRegime::AlmostUnique ? DecodeFault::Ambiguous
                                                       : DecodeFault::Malformed;
}

}  // namespace

TokenSequence decode(const FofeCode& code, std::int64_t max_len, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("decode tolerance must be > 0");
    if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");

    const ForgettingFactor alpha = code.alpha();
    const double a = alpha.value();

    SparseEntries residual = code.entries();
    std::vector<std::uint32_t> reversed;

    // The last token contributes exactly 1; each step back multiplies the
    // expected contribution by alpha. Tracking the power by repeated
    // multiplication mirrors the encoder's arithmetic, so dyadic factors
    // peel to an exactly zero residual.
    double power = 1.0;
    for (std::int64_t step = 0;; ++step) {
        double best = 0.0;
        std::size_t best_idx = 0;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (residual[i].second > best) {
                best = residual[i].second;
                best_idx = i;
            }
        }
        if (best <= tol) break;  // drained
        if (step >= max_len) {
            throw DecodeError(DecodeFault::TooLong,
                              "decoded length exceeds max_len = " + std::to_string(max_len));
        }
        if (best < power - tol) {
            throw DecodeError(fault_for(alpha),
                              "no entry holds the expected power alpha^" +
                                  std::to_string(step) + " = " + std::to_string(power));
        }
        reversed.push_back(residual[best_idx].first);
        residual[best_idx].second -= power;
        if (residual[best_idx].second < -tol) {
            throw DecodeError(fault_for(alpha), "entry drops below zero while peeling");
        }
        power *= a;
    }

    std::reverse(reversed.begin(), reversed.end());
    TokenSequence seq(std::move(reversed), code.k());

    // A successful peel must reproduce the code.
    const FofeCode recoded = encode_prefixes(seq, alpha).final_code();
    if (recoded.max_abs_diff(code) > tol) {
        throw DecodeError(fault_for(alpha),
                          "re-encoded sequence mismatches the code beyond tolerance");
    }
    return seq;
}

}  // namespace fofe
