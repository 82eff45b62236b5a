#include "fofe/lm/serialize.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

static_assert(std::endian::native == std::endian::little,
              "model files are little endian");

namespace fofe::lm {

namespace {

constexpr char kMagic[4] = {'F', 'O', 'F', 'E'};
constexpr std::uint8_t kVersion = 1;

void write_raw(std::ofstream& out, const void* data, std::size_t bytes) {
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(bytes));
}

template <typename T>
void write_pod(std::ofstream& out, T value) {
    write_raw(out, &value, sizeof(T));
}

void write_tensor(std::ofstream& out, const Mat<float>& m) {
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(m.rows()));
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(m.cols()));
    write_raw(out, m.data(), sizeof(float) * static_cast<std::size_t>(m.size()));
}

void write_tensor(std::ofstream& out, const RowVec<float>& v) {
    write_pod<std::uint64_t>(out, 1);
    write_pod<std::uint64_t>(out, static_cast<std::uint64_t>(v.cols()));
    write_raw(out, v.data(), sizeof(float) * static_cast<std::size_t>(v.size()));
}

class Reader {
public:
    explicit Reader(const std::string& path) : in_(path, std::ios::binary) {
        if (!in_) throw ModelIoError(ModelIoFault::Truncated, "cannot open " + path);
    }

    void read_raw(void* data, std::size_t bytes, const std::string& what) {
        in_.read(static_cast<char*>(data), static_cast<std::streamsize>(bytes));
        if (static_cast<std::size_t>(in_.gcount()) != bytes) {
            throw ModelIoError(ModelIoFault::Truncated, "file truncated while reading " + what);
        }
    }

    template <typename T>
    T read_pod(const std::string& what) {
        T value{};
        read_raw(&value, sizeof(T), what);
        return value;
    }

    Mat<float> read_tensor(const std::string& name) {
        const auto rows = read_pod<std::uint64_t>(name + " rows");
        const auto cols = read_pod<std::uint64_t>(name + " cols");
        if (rows == 0 || cols == 0 || rows > (1u << 24) || cols > (1u << 24)) {
            throw ModelIoError(ModelIoFault::ShapeMismatch,
                               name + " has implausible shape " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
        }
        Mat<float> m(static_cast<std::int64_t>(rows), static_cast<std::int64_t>(cols));
        read_raw(m.data(), sizeof(float) * static_cast<std::size_t>(m.size()), name);
        return m;
    }

private:
    std::ifstream in_;
};

void check_shape(bool ok, const std::string& what) {
    if (!ok) throw ModelIoError(ModelIoFault::ShapeMismatch, "shape mismatch in " + what);
}

}  // namespace

void save_model(const ModelParams<float>& params, const ModelConfig& config,
                const std::string& path) {
    config.validate();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write model file " + path);

    write_raw(out, kMagic, sizeof(kMagic));
    write_pod<std::uint8_t>(out, kVersion);
    write_pod<std::uint8_t>(out, static_cast<std::uint8_t>(config.mode));
    write_pod<std::uint32_t>(out, config.ngram_order);
    write_pod<std::uint64_t>(out, config.vocab_size);
    write_pod<std::uint64_t>(out, config.embed_dim);
    write_pod<std::uint64_t>(out, config.hidden_dims.size());
    for (auto h : config.hidden_dims) write_pod<std::uint64_t>(out, h);
    write_pod<double>(out, config.alpha ? config.alpha->value() : 0.0);

    write_tensor(out, params.embedding);
    for (const auto& layer : params.hidden) {
        write_tensor(out, layer.w);
        write_tensor(out, layer.b);
    }
    write_tensor(out, params.output.w);
    write_tensor(out, params.output.b);
    if (!out) throw std::runtime_error("write failure on model file " + path);
}

std::pair<ModelParams<float>, ModelConfig> load_model(const std::string& path) {
    Reader in(path);

    char magic[4];
    in.read_raw(magic, sizeof(magic), "magic");
    if (std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw ModelIoError(ModelIoFault::BadMagic, "bad-magic: not a model file");
    }
    const auto version = in.read_pod<std::uint8_t>("version");
    if (version != kVersion) {
        throw ModelIoError(ModelIoFault::BadVersion,
                           "unsupported model version " + std::to_string(version));
    }

    ModelConfig config;
    const auto mode = in.read_pod<std::uint8_t>("mode");
    if (mode > 2) throw ModelIoError(ModelIoFault::ShapeMismatch, "unknown input mode tag");
    config.mode = static_cast<InputMode>(mode);
    config.ngram_order = in.read_pod<std::uint32_t>("ngram order");
    const auto k = in.read_pod<std::uint64_t>("vocab size");
    const auto d = in.read_pod<std::uint64_t>("embed dim");
    const auto n_hidden = in.read_pod<std::uint64_t>("hidden count");
    if (k == 0 || k > (1u << 24) || d == 0 || d > (1u << 24) || n_hidden == 0 || n_hidden > 64) {
        throw ModelIoError(ModelIoFault::ShapeMismatch, "implausible model dimensions");
    }
    config.vocab_size = static_cast<std::uint32_t>(k);
    config.embed_dim = static_cast<std::uint32_t>(d);
    for (std::uint64_t i = 0; i < n_hidden; ++i) {
        const auto h = in.read_pod<std::uint64_t>("hidden dim");
        if (h == 0 || h > (1u << 24)) {
            throw ModelIoError(ModelIoFault::ShapeMismatch, "implausible hidden width");
        }
        config.hidden_dims.push_back(static_cast<std::uint32_t>(h));
    }
    const double alpha = in.read_pod<double>("alpha");
    if (config.mode != InputMode::Ngram) {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw ModelIoError(ModelIoFault::ShapeMismatch,
                               "forgetting factor outside (0, 1) in a fofe model");
        }
        config.alpha = ForgettingFactor(alpha);
    }
    if (config.mode == InputMode::Ngram && config.ngram_order < 2) {
        throw ModelIoError(ModelIoFault::ShapeMismatch, "ngram order must be >= 2");
    }

    ModelParams<float> params;
    params.embedding = in.read_tensor("embedding");
    check_shape(params.embedding.rows() == static_cast<std::int64_t>(k) &&
                    params.embedding.cols() == static_cast<std::int64_t>(d),
                "embedding");
    std::int64_t width = config.input_width();
    for (std::uint64_t i = 0; i < n_hidden; ++i) {
        const std::string name = "hidden[" + std::to_string(i) + "]";
        Layer<float> layer;
        layer.w = in.read_tensor(name + ".weight");
        check_shape(layer.w.rows() == width &&
                        layer.w.cols() == static_cast<std::int64_t>(config.hidden_dims[i]),
                    name + ".weight");
        const Mat<float> b = in.read_tensor(name + ".bias");
        check_shape(b.rows() == 1 && b.cols() == layer.w.cols(), name + ".bias");
        layer.b = b.row(0);
        width = layer.w.cols();
        params.hidden.push_back(std::move(layer));
    }
    params.output.w = in.read_tensor("output.weight");
    check_shape(params.output.w.rows() == width &&
                    params.output.w.cols() == static_cast<std::int64_t>(k),
                "output.weight");
    const Mat<float> b = in.read_tensor("output.bias");
    check_shape(b.rows() == 1 && b.cols() == static_cast<std::int64_t>(k), "output.bias");
    params.output.b = b.row(0);
    return {std::move(params), std::move(config)};
}

}  // namespace fofe::lm
