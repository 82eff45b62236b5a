#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "fofe/lm/config.hpp"
#include "fofe/lm/params.hpp"

namespace fofe::lm {

enum class ModelIoFault {
    BadMagic,
    BadVersion,
    ShapeMismatch,
    Truncated,
};

class ModelIoError : public std::runtime_error {
public:
    ModelIoError(ModelIoFault fault, const std::string& msg)
        : std::runtime_error(msg), fault_(fault) {}

    ModelIoFault fault() const noexcept { return fault_; }

private:
    ModelIoFault fault_;
};

/// Model file layout (little endian):
///   magic "FOFE" | u8 version=1 | u8 mode | u32 ngram_order |
///   u64 K | u64 D | u64 n_hidden | u64 hidden_dims[] | f64 alpha (0 for ngram) |
///   tensors in declaration order (embedding, hidden W/b pairs, output W/b),
///   each as u64 rows | u64 cols | f32 row-major data.
void save_model(const ModelParams<float>& params, const ModelConfig& config,
                const std::string& path);

/// Round-trips bit-exactly. Throws ModelIoError with a distinct fault for a
/// bad magic, an unknown version, inconsistent shapes, or truncation (the
/// message names the tensor that came up short).
std::pair<ModelParams<float>, ModelConfig> load_model(const std::string& path);

}  // namespace fofe::lm
