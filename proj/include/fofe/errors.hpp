#pragma once

#include <stdexcept>
#include <string>

namespace fofe {

/// Raised when an enumeration would exceed its desk-scale guard
/// (e.g. K^T sequences or 2^T coefficient vectors).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DecodeFault {
    Ambiguous,  // alpha > 0.5 and the residual could not be resolved
    Malformed,  // residual after a full decode exceeds the tolerance
    TooLong,    // inferred sequence length exceeds max_len
};

class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeFault fault, const std::string& msg)
        : std::runtime_error(msg), fault_(fault) {}

    DecodeFault fault() const noexcept { return fault_; }

private:
    DecodeFault fault_;
};

inline const char* to_string(DecodeFault f) {
    switch (f) {
        case DecodeFault::Ambiguous: return "ambiguous";
        case DecodeFault::Malformed: return "malformed";
        case DecodeFault::TooLong: return "too-long";
    }
    return "unknown";
}

}  // namespace fofe
