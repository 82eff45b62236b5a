// Command-line front end: encoding, decoding, uniqueness reports, and the
// neural language-model pipeline. All reports are TSV with a header row.
// Exit codes: 0 success, 1 runtime/guard failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fofe/collisions.hpp"
#include "fofe/corpus.hpp"
#include "fofe/critical_alphas.hpp"
#include "fofe/decode.hpp"
#include "fofe/encode.hpp"
#include "fofe/lm/serialize.hpp"
#include "fofe/lm/train.hpp"
#include "fofe/textgen.hpp"
#include "fofe/vocabulary.hpp"

namespace {

using namespace fofe;

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

TokenTable load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vocabulary file " + path);
    return TokenTable::load_tsv(in);
}

std::string read_input_or_stdin(const std::string& arg) {
    if (!arg.empty()) return arg;
    std::string line;
    std::getline(std::cin, line);
    return line;
}

/// `start:stop:step` (inclusive of both endpoints within 1e-12), a comma
/// list, or a single value.
std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    auto parse_one = [](const std::string& s) {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw CLI::ValidationError("bad number '" + s + "'");
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::istringstream ss(text);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
            throw CLI::ValidationError("range must be start:stop:step");
        }
        const double start = parse_one(a), stop = parse_one(b), step = parse_one(c);
        if (!(step > 0.0)) throw CLI::ValidationError("range step must be > 0");
        for (double v = start; v <= stop + 1e-12; v += step) values.push_back(v);
        return values;
    }
    std::istringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (!field.empty()) values.push_back(parse_one(field));
    }
    if (values.empty()) throw CLI::ValidationError("empty value list");
    return values;
}

std::ostream& open_report(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

std::vector<std::uint32_t> parse_dims(const std::string& text) {
    std::vector<std::uint32_t> dims;
    std::istringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
        if (!field.empty()) dims.push_back(static_cast<std::uint32_t>(std::stoul(field)));
    }
    return dims;
}

lm::InputMode parse_mode(const std::string& name) {
    if (name == "fofe1") return lm::InputMode::FofeOrder1;
    if (name == "fofe2") return lm::InputMode::FofeOrder2;
    if (name == "ngram") return lm::InputMode::Ngram;
    throw CLI::ValidationError("mode must be fofe1, fofe2 or ngram");
}

// ---- encode / decode ----

int cmd_encode(double alpha_value, const std::string& vocab_path, const std::string& text) {
    const ForgettingFactor alpha(alpha_value);
    const TokenTable table = load_table(vocab_path);

    std::istringstream ss(read_input_or_stdin(text));
    std::vector<std::uint32_t> ids;
    std::string token;
    while (ss >> token) ids.push_back(table.id_of(token));

    const TokenSequence seq(std::move(ids), table.size());
    const Eigen::VectorXd code = encode_prefixes(seq, alpha).final_code().dense();
    std::cout.precision(17);
    for (Eigen::Index i = 0; i < code.size(); ++i) {
        if (i) std::cout << '\t';
        std::cout << code(i);
    }
    std::cout << '\n';
    return 0;
}

int cmd_decode(double alpha_value, const std::string& vocab_path, const std::string& text,
               std::int64_t max_len, double tol) {
    const ForgettingFactor alpha(alpha_value);
    const TokenTable table = load_table(vocab_path);

    std::istringstream ss(read_input_or_stdin(text));
    std::vector<double> values;
    double v = 0.0;
    while (ss >> v) values.push_back(v);
    if (values.size() != table.size()) {
        throw std::runtime_error("code has " + std::to_string(values.size()) +
                                 " entries but the vocabulary has " +
                                 std::to_string(table.size()));
    }
    Eigen::VectorXd dense(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) dense(static_cast<Eigen::Index>(i)) = values[i];

    std::optional<FofeCode> code;
    try {
        code = FofeCode::from_dense(dense, alpha);
    } catch (const std::invalid_argument& e) {
        throw DecodeError(DecodeFault::Malformed, e.what());
    }
    const TokenSequence seq = decode(*code, max_len, tol);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << table.tokens.at(seq.ids()[i]);
    }
    std::cout << '\n';
    return 0;
}

// ---- uniqueness lab ----

int cmd_collide(std::uint32_t k, std::uint32_t t, const std::string& alphas,
                const std::string& eps, const std::string& mode, const std::string& out_path) {
    const EnumerationMode enum_mode =
        mode == "up-to" ? EnumerationMode::UpToLength : EnumerationMode::ExactLength;
    std::ofstream file;
    std::ostream& out = open_report(file, out_path);
    out.precision(17);
    write_collision_header(out);
    for (double a : parse_value_list(alphas)) {
        for (double e : parse_value_list(eps)) {
            write_collision_row(out, enumerate_collisions(k, t, ForgettingFactor(a), e, enum_mode));
        }
    }
    return 0;
}

int cmd_critical_alphas(std::uint32_t t, const std::string& out_path, double check_alpha,
                        double margin) {
    const CriticalAlphaSet set = find_critical_alphas(t);
    std::ofstream file;
    std::ostream& out = open_report(file, out_path);
    out.precision(17);
    write_critical_alphas_tsv(out, set);
    if (check_alpha > 0.0) {
        const SafetyVerdict verdict = is_alpha_safe(ForgettingFactor(check_alpha), t, margin);
        std::cerr << "alpha " << check_alpha << " is " << (verdict.safe ? "safe" : "unsafe")
                  << " at margin " << margin;
        if (verdict.nearest_root) {
            std::cerr << " (nearest critical alpha " << *verdict.nearest_root << ", distance "
                      << verdict.distance << ")";
        }
        std::cerr << "\n";
    }
    return 0;
}

int cmd_scan(const std::string& corpus_path, const std::string& alphas, const std::string& eps,
             std::size_t vocab_cap, const std::string& out_path) {
    const std::vector<std::string> lines = read_lines(corpus_path);
    const Vocabulary vocab = Vocabulary::build(lines, vocab_cap);
    const TokenizedCorpus corpus = tokenize(lines, vocab);

    std::ofstream file;
    std::ostream& out = open_report(file, out_path);
    out.precision(17);
    write_collision_header(out);
    for (double a : parse_value_list(alphas)) {
        for (double e : parse_value_list(eps)) {
            write_collision_row(out, scan_corpus_collisions(corpus, ForgettingFactor(a), e));
        }
    }
    return 0;
}

// ---- language model pipeline ----

struct LmArgs {
    std::string train_path, valid_path, test_path;
    std::string mode = "fofe1";
    std::uint32_t ngram_order = 2;
    double alpha = 0.7;
    std::uint32_t embed = 32;
    std::string hidden = "64,64";
    std::size_t vocab_cap = 2000;
    double lr = 0.4;
    std::uint64_t batch_words = 200;
    double min_gain = 1.0;
    std::uint32_t halving_epochs = 6;
    std::uint64_t seed = 42;

    lm::ModelConfig model_config(std::uint32_t vocab_size) const {
        lm::ModelConfig mc;
        mc.mode = parse_mode(mode);
        mc.ngram_order = ngram_order;
        mc.vocab_size = vocab_size;
        mc.embed_dim = embed;
        mc.hidden_dims = parse_dims(hidden);
        if (mc.mode != lm::InputMode::Ngram) mc.alpha = ForgettingFactor(alpha);
        mc.validate();
        return mc;
    }

    lm::TrainConfig train_config() const {
        lm::TrainConfig tc;
        tc.initial_lr = lr;
        tc.batch_capacity_words = batch_words;
        tc.seed = seed;
        tc.min_valid_ppl_gain = min_gain;
        tc.final_halving_epochs = halving_epochs;
        tc.validate();
        return tc;
    }

    void add_model_flags(CLI::App* cmd, bool with_alpha = true) {
        cmd->add_option("--mode", mode, "input mode: fofe1, fofe2 or ngram");
        cmd->add_option("--ngram-n", ngram_order, "n-gram order (context is n-1 words)");
        if (with_alpha) cmd->add_option("--alpha", alpha, "forgetting factor");
        cmd->add_option("--embed", embed, "embedding dimension");
        cmd->add_option("--hidden", hidden, "hidden widths, comma separated");
        cmd->add_option("--vocab-cap", vocab_cap, "vocabulary size cap (incl. reserved)");
        cmd->add_option("--lr", lr, "initial learning rate");
        cmd->add_option("--batch-words", batch_words, "mini-batch word capacity");
        cmd->add_option("--min-gain", min_gain, "valid-ppl gain that keeps the rate fixed");
        cmd->add_option("--halving-epochs", halving_epochs, "epochs in the halving tail");
        cmd->add_option("--seed", seed, "seed for init and shuffling");
    }
};

void print_ppl(const lm::PerplexityReport& report) {
    std::printf("%s ppl = %.2f (%llu tokens)\n", report.dataset.c_str(), report.perplexity,
                static_cast<unsigned long long>(report.tokens));
}

int cmd_train(const LmArgs& args, const std::string& out_path, std::string log_path,
              std::string vocab_path) {
    if (log_path.empty()) log_path = out_path + ".log.tsv";
    if (vocab_path.empty()) vocab_path = out_path + ".vocab.tsv";

    const std::vector<std::string> train_lines = read_lines(args.train_path);
    const Vocabulary vocab = Vocabulary::build(train_lines, args.vocab_cap);
    const TokenizedCorpus train_corpus = tokenize(train_lines, vocab);
    const TokenizedCorpus valid_corpus = tokenize(read_lines(args.valid_path), vocab);

    const lm::ModelConfig mc = args.model_config(vocab.size());
    const lm::TrainResult result = lm::train(mc, args.train_config(), train_corpus, valid_corpus);

    lm::save_model(result.params, mc, out_path);
    {
        std::ofstream out(vocab_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + vocab_path);
        vocab.table().save_tsv(out);
    }
    {
        std::ofstream out(log_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + log_path);
        out.precision(17);
        lm::write_train_log_tsv(out, result.log);
    }

    print_ppl(lm::perplexity(result.params, mc, valid_corpus, "valid"));
    if (!args.test_path.empty()) {
        const TokenizedCorpus test_corpus = tokenize(read_lines(args.test_path), vocab);
        print_ppl(lm::perplexity(result.params, mc, test_corpus, "test"));
    }
    return 0;
}

int cmd_eval(const std::string& model_path, const std::string& vocab_path,
             const std::string& corpus_path, const std::string& name) {
    auto [params, config] = lm::load_model(model_path);
    const Vocabulary vocab = Vocabulary::from_table(load_table(vocab_path));
    if (vocab.size() != config.vocab_size) {
        throw std::runtime_error("vocab-mismatch: model expects K = " +
                                 std::to_string(config.vocab_size) + " but the vocabulary has " +
                                 std::to_string(vocab.size()) + " entries");
    }
    const TokenizedCorpus corpus = tokenize(read_lines(corpus_path), vocab);
    print_ppl(lm::perplexity(params, config, corpus, name));
    return 0;
}

int cmd_sweep_alpha(const LmArgs& args, const std::string& alphas, const std::string& out_path) {
    const std::vector<std::string> train_lines = read_lines(args.train_path);
    const Vocabulary vocab = Vocabulary::build(train_lines, args.vocab_cap);
    const TokenizedCorpus train_corpus = tokenize(train_lines, vocab);
    const TokenizedCorpus valid_corpus = tokenize(read_lines(args.valid_path), vocab);
    const TokenizedCorpus test_corpus = tokenize(read_lines(args.test_path), vocab);

    std::ofstream file;
    std::ostream& out = open_report(file, out_path);
    out.precision(17);
    out << "alpha\tvalid_ppl\ttest_ppl\n";
    for (double a : parse_value_list(alphas)) {
        LmArgs run = args;
        run.alpha = a;
        const lm::ModelConfig mc = run.model_config(vocab.size());
        const lm::TrainResult result =
            lm::train(mc, run.train_config(), train_corpus, valid_corpus);
        const double valid_ppl =
            lm::perplexity(result.params, mc, valid_corpus, "valid").perplexity;
        const double test_ppl =
            lm::perplexity(result.params, mc, test_corpus, "test").perplexity;
        out << a << '\t' << valid_ppl << '\t' << test_ppl << '\n' << std::flush;
    }
    return 0;
}

int cmd_gen_corpus(const ToyTextSpec& spec, const std::string& out_path) {
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    for (const auto& line : generate_toy_text(spec)) out << line << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fofe: fixed-size ordinally-forgetting encoding toolkit"};
    app.require_subcommand(1);
    app.footer("Environment: FOFE_THREADS caps the worker count (0 = auto).");

    // encode / decode
    double alpha = 0.5;
    std::string vocab_path, text;
    auto* encode = app.add_subcommand("encode", "print the FOFE code of a token line");
    encode->add_option("--alpha", alpha, "forgetting factor")->required();
    encode->add_option("--vocab", vocab_path, "vocabulary TSV")->required();
    encode->add_option("tokens", text, "token line (stdin when omitted)");

    std::int64_t max_len = 10000;
    double tol = 1e-9;
    auto* decode = app.add_subcommand("decode", "recover the token sequence of a code");
    decode->add_option("--alpha", alpha, "forgetting factor")->required();
    decode->add_option("--vocab", vocab_path, "vocabulary TSV")->required();
    decode->add_option("--max-len", max_len, "longest accepted sequence");
    decode->add_option("--tol", tol, "match tolerance");
    decode->add_option("code", text, "code values (stdin when omitted)");

    // collide / critical-alphas / scan
    std::uint32_t k = 2, t = 20;
    std::string alphas = "0.55:0.95:0.05", eps = "1e-2,1e-3,1e-4";
    std::string enum_mode = "exact", out_path;
    auto* collide = app.add_subcommand("collide", "count collisions over enumerated sequences");
    collide->add_option("--k", k, "vocabulary size")->required();
    collide->add_option("--t", t, "sequence length")->required();
    collide->add_option("--alphas", alphas, "alpha list or start:stop:step range");
    collide->add_option("--eps", eps, "epsilon list or range");
    collide->add_option("--mode", enum_mode, "exact or up-to length enumeration")
        ->check(CLI::IsMember({"exact", "up-to"}));
    collide->add_option("--out", out_path, "output TSV (stdout when omitted)");

    std::uint32_t order = 2;
    double check_alpha = 0.0, margin = 0.01;
    auto* critical = app.add_subcommand("critical-alphas",
                                        "roots in (0.5, 1) where uniqueness can fail");
    critical->add_option("--t", order, "max polynomial order")->required();
    critical->add_option("--out", out_path, "output TSV (stdout when omitted)");
    critical->add_option("--check", check_alpha, "also report whether this alpha is safe");
    critical->add_option("--margin", margin, "safety margin for --check");

    std::string corpus_path;
    std::size_t vocab_cap = 1 << 20;
    auto* scan = app.add_subcommand("scan", "collision scan over all corpus prefixes");
    scan->add_option("--corpus", corpus_path, "text file, one sentence per line")->required();
    scan->add_option("--alpha,--alphas", alphas, "alpha list or range")->required();
    scan->add_option("--eps", eps, "epsilon list or range");
    scan->add_option("--vocab-cap", vocab_cap, "vocabulary size cap");
    scan->add_option("--out", out_path, "output TSV (stdout when omitted)");

    // train / eval / sweep-alpha
    LmArgs lm_args;
    std::string model_path, log_path, save_vocab, ds_name = "eval";
    auto* train = app.add_subcommand("train", "train a language model and save it");
    train->add_option("--train", lm_args.train_path, "training text")->required();
    train->add_option("--valid", lm_args.valid_path, "validation text")->required();
    train->add_option("--test", lm_args.test_path, "optional test text");
    train->add_option("--out", model_path, "model file to write")->required();
    train->add_option("--log", log_path, "training log TSV (default <out>.log.tsv)");
    train->add_option("--save-vocab", save_vocab, "vocabulary TSV (default <out>.vocab.tsv)");
    lm_args.add_model_flags(train);

    auto* eval = app.add_subcommand("eval", "perplexity of a saved model on a corpus");
    eval->add_option("--model", model_path, "model file")->required();
    eval->add_option("--vocab", vocab_path, "vocabulary TSV saved at training time")->required();
    eval->add_option("--corpus", corpus_path, "text to score")->required();
    eval->add_option("--name", ds_name, "dataset label");

    auto* sweep = app.add_subcommand("sweep-alpha",
                                     "train one model per alpha and tabulate perplexities");
    sweep->add_option("--alphas", alphas, "alpha list or range")->required();
    sweep->add_option("--train", lm_args.train_path, "training text")->required();
    sweep->add_option("--valid", lm_args.valid_path, "validation text")->required();
    sweep->add_option("--test", lm_args.test_path, "test text")->required();
    sweep->add_option("--out", out_path, "output TSV (stdout when omitted)");
    lm_args.add_model_flags(sweep, /*with_alpha=*/false);

    ToyTextSpec toy;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen-corpus", "write a synthetic benchmark corpus");
    gen->add_option("--out", gen_out, "output text file")->required();
    gen->add_option("--seed", toy.seed, "generator seed");
    gen->add_option("--sentences", toy.sentences, "sentence count");
    gen->add_option("--vocab-words", toy.vocab_words, "distinct surface words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(encode)) return cmd_encode(alpha, vocab_path, text);
        if (app.got_subcommand(decode)) return cmd_decode(alpha, vocab_path, text, max_len, tol);
        if (app.got_subcommand(collide)) return cmd_collide(k, t, alphas, eps, enum_mode, out_path);
        if (app.got_subcommand(critical))
            return cmd_critical_alphas(order, out_path, check_alpha, margin);
        if (app.got_subcommand(scan))
            return cmd_scan(corpus_path, alphas, eps, vocab_cap, out_path);
        if (app.got_subcommand(train)) return cmd_train(lm_args, model_path, log_path, save_vocab);
        if (app.got_subcommand(eval)) return cmd_eval(model_path, vocab_path, corpus_path, ds_name);
        if (app.got_subcommand(sweep)) return cmd_sweep_alpha(lm_args, alphas, out_path);
        if (app.got_subcommand(gen)) return cmd_gen_corpus(toy, gen_out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fofe::DecodeError& e) {
        std::cerr << fofe::to_string(e.fault()) << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
