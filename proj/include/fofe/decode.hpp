#pragma once

#include <cstdint>

#include "fofe/errors.hpp"
#include "fofe/fofe_code.hpp"
#include "fofe/token_sequence.hpp"

namespace fofe {

/// Recovers a token sequence whose code matches `code` within `tol` in
/// max-norm, by greedily peeling powers of alpha from the largest power
/// (the most recent position) backwards.
///
/// Exact for alpha <= 0.5; best-effort for alpha > 0.5, where a
/// DecodeError(Ambiguous) is thrown when the greedy peel cannot account for
/// the residual. Note that near a critical alpha the returned sequence may
/// legitimately differ from the one originally encoded while still matching
/// the code; the match is verified by re-encoding before returning.
///
/// Throws DecodeError with fault:
///   TooLong   - inferred length exceeds max_len
///   Malformed - alpha <= 0.5 and the residual cannot be resolved
///   Ambiguous - alpha > 0.5 and the residual cannot be resolved
TokenSequence decode(const FofeCode& code, std::int64_t max_len,
                     double tol = 1e-9);

}  // namespace fofe
