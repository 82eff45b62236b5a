#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "fofe/textgen.hpp"
#include "support/subprocess.hpp"

namespace fs = std::filesystem;
using testsupport::run;

namespace {

struct Workdir {
    fs::path dir;
    Workdir() : dir(fs::temp_directory_path() / "fofe_cli_test") {
        fs::create_directories(dir);
    }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

const Workdir& work() {
    static Workdir w;
    return w;
}

std::string cli() { return testsupport::cli_path(); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::trunc);
    out << content;
}

std::vector<std::vector<std::string>> parse_tsv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, '\t')) fields.push_back(cell);
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::string abc_vocab() {
    const std::string path = work().file("abc.tsv");
    write_file(path, "0\tA\t1\n1\tB\t1\n2\tC\t1\n");
    return path;
}

}  // namespace

TEST_CASE("encode prints the worked example") {
    const auto r = run(cli() + " encode --alpha 0.5 --vocab " + abc_vocab() + " 'A B C'",
                       work().file("enc"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0.25\t0.5\t1\n");
}

TEST_CASE("decode inverts encode") {
    const auto r = run(cli() + " encode --alpha 0.5 --vocab " + abc_vocab() +
                           " 'A B C' | " + cli() + " decode --alpha 0.5 --vocab " + abc_vocab(),
                       work().file("dec"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "A B C\n");
}

TEST_CASE("usage errors exit with 2") {
    const auto bad_alpha = run(cli() + " encode --alpha 1.5 --vocab " + abc_vocab() + " 'A'",
                               work().file("badalpha"));
    CHECK(bad_alpha.exit_code == 2);
    CHECK(bad_alpha.err.find("(0, 1)") != std::string::npos);

    const auto unknown = run(cli() + " encode --alpha 0.5 --no-such-flag x", work().file("uflag"));
    CHECK(unknown.exit_code == 2);

    const auto no_sub = run(cli(), work().file("nosub"));
    CHECK(no_sub.exit_code == 2);
}

TEST_CASE("every subcommand documents its flags") {
    for (const std::string sub :
         {"encode", "decode", "collide", "critical-alphas", "scan", "train", "eval",
          "sweep-alpha"}) {
        const auto r = run(cli() + " " + sub + " --help", work().file("help_" + sub));
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("--help") != std::string::npos);
    }
}

TEST_CASE("decode reports malformed codes on exit 1") {
    const auto r = run("echo '0.5 0 0' | " + cli() + " decode --alpha 0.5 --vocab " + abc_vocab(),
                       work().file("mal"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("malformed") != std::string::npos);
}

TEST_CASE("collide emits the full alpha x epsilon grid") {
    const auto r = run(cli() + " collide --k 2 --t 8 --alphas 0.55:0.95:0.05 --eps 1e-2,1e-3",
                       work().file("grid"));
    CHECK(r.exit_code == 0);
    const auto rows = parse_tsv(r.out);
    REQUIRE(rows.size() == 1 + 9 * 2);
    CHECK(rows[0] == std::vector<std::string>{"alpha", "epsilon", "K", "T", "cases",
                                              "collisions"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].size() == 6);
        CHECK(rows[i][4] == "256");
    }
}

TEST_CASE("collide guard failures exit with 1") {
    const auto r = run(cli() + " collide --k 2 --t 23 --alphas 0.7 --eps 1e-2",
                       work().file("guard"));
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("8388608") != std::string::npos);
}

TEST_CASE("critical-alphas finds the golden ratio") {
    const auto r = run(cli() + " critical-alphas --t 2", work().file("gold"));
    CHECK(r.exit_code == 0);
    const auto rows = parse_tsv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(std::stod(rows[1][0]) - 0.6180339887) <= 1e-9);
    CHECK(rows[1][1] == "11");
    CHECK(std::stod(rows[1][2]) <= 1e-12);
}

TEST_CASE("scan reports zero collisions on a plain corpus") {
    const std::string corpus = work().file("scan_corpus.txt");
    {
        std::ofstream out(corpus, std::ios::trunc);
        for (const auto& line : fofe::generate_toy_text(
                 {.seed = 4, .sentences = 200, .vocab_words = 300})) {
            out << line << '\n';
        }
    }
    const auto r = run(cli() + " scan --corpus " + corpus + " --alpha 0.7 --eps 0.01",
                       work().file("scan"));
    CHECK(r.exit_code == 0);
    const auto rows = parse_tsv(r.out);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][5] == "0");
}

TEST_CASE("train then eval round trips through the saved artifacts") {
    const std::string train_txt = work().file("train.txt");
    const std::string valid_txt = work().file("valid.txt");
    {
        std::ofstream t(train_txt, std::ios::trunc), v(valid_txt, std::ios::trunc);
        for (const auto& line : fofe::generate_toy_text(
                 {.seed = 6, .sentences = 300, .vocab_words = 200})) {
            t << line << '\n';
        }
        for (const auto& line : fofe::generate_toy_text(
                 {.seed = 7, .sentences = 40, .vocab_words = 200})) {
            v << line << '\n';
        }
    }
    const std::string model = work().file("model.bin");
    const auto t = run(cli() + " train --train " + train_txt + " --valid " + valid_txt +
                           " --mode fofe1 --alpha 0.7 --embed 8 --hidden 16 --vocab-cap 250" +
                           " --halving-epochs 2 --out " + model,
                       work().file("train"));
    REQUIRE(t.exit_code == 0);
    CHECK(t.out.find("valid ppl = ") != std::string::npos);
    CHECK(fs::exists(model));
    CHECK(fs::exists(model + ".vocab.tsv"));
    CHECK(fs::exists(model + ".log.tsv"));

    const auto log_rows = parse_tsv(testsupport::slurp(model + ".log.tsv"));
    REQUIRE(log_rows.size() >= 2);
    CHECK(log_rows[0] == std::vector<std::string>{"epoch", "lr", "train_nll", "valid_ppl"});

    const auto e = run(cli() + " eval --model " + model + " --vocab " + model + ".vocab.tsv" +
                           " --corpus " + valid_txt + " --name valid",
                       work().file("eval"));
    CHECK(e.exit_code == 0);
    // two decimals
    CHECK(e.out.find("valid ppl = ") != std::string::npos);
    const auto dot = e.out.find('.', e.out.find("= "));
    REQUIRE(dot != std::string::npos);
    CHECK(std::isdigit(static_cast<unsigned char>(e.out[dot + 1])));
    CHECK(std::isdigit(static_cast<unsigned char>(e.out[dot + 2])));
    CHECK(e.out[dot + 3] == ' ');

    // a vocabulary of the wrong size is refused
    const std::string wrong = work().file("wrong.tsv");
    write_file(wrong, "0\t<unk>\t0\n1\t</s>\t0\n2\tx\t1\n");
    const auto mismatch = run(cli() + " eval --model " + model + " --vocab " + wrong +
                                  " --corpus " + valid_txt,
                              work().file("mismatch"));
    CHECK(mismatch.exit_code == 1);
    CHECK(mismatch.err.find("vocab-mismatch") != std::string::npos);
}

TEST_CASE("reports are byte-identical across reruns") {
    const std::string a = work().file("rep_a.tsv");
    const std::string b = work().file("rep_b.tsv");
    const std::string cmd = " collide --k 3 --t 7 --alphas 0.6:0.9:0.1 --eps 1e-2 --out ";
    CHECK(run(cli() + cmd + a, work().file("rep1")).exit_code == 0);
    CHECK(run(cli() + cmd + b, work().file("rep2")).exit_code == 0);
    const std::string bytes_a = testsupport::slurp(a);
    CHECK(!bytes_a.empty());
    CHECK(bytes_a == testsupport::slurp(b));

    // and independent of the worker count
    const std::string c = work().file("rep_c.tsv");
    CHECK(run("FOFE_THREADS=1 " + cli() + cmd + c, work().file("rep3")).exit_code == 0);
    CHECK(bytes_a == testsupport::slurp(c));
}
