#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "fofe/corpus.hpp"
#include "fofe/textgen.hpp"

using namespace fofe;

TEST_CASE("vocabulary ranks by frequency then first occurrence") {
    const Vocabulary vocab = Vocabulary::build({"a b b"}, 4);
    CHECK(vocab.size() == 4);
    CHECK(vocab.token_of(0) == "<unk>");
    CHECK(vocab.token_of(1) == "</s>");
    CHECK(vocab.token_of(2) == "b");  // frequency 2 beats first occurrence
    CHECK(vocab.token_of(3) == "a");
    CHECK(vocab.id_of("b") == 2);
    CHECK(vocab.id_of("zzz") == Vocabulary::kUnkId);
}

TEST_CASE("vocabulary cap floor keeps only the reserved tokens") {
    const Vocabulary vocab = Vocabulary::build({"x y z x"}, 2);
    CHECK(vocab.size() == 2);
    CHECK(vocab.id_of("x") == Vocabulary::kUnkId);
    CHECK_THROWS_AS(Vocabulary::build({"x"}, 1), std::invalid_argument);
}

TEST_CASE("vocabulary building is deterministic and rejects empty input") {
    const std::vector<std::string> lines = {"c a b", "b c", "c"};
    const Vocabulary v1 = Vocabulary::build(lines, 5);
    const Vocabulary v2 = Vocabulary::build(lines, 5);
    for (std::uint32_t id = 0; id < v1.size(); ++id) {
        CHECK(v1.token_of(id) == v2.token_of(id));
    }
    CHECK(v1.token_of(2) == "c");  // 3 occurrences
    CHECK(v1.token_of(3) == "b");  // 2 occurrences
    CHECK(v1.token_of(4) == "a");  // 1 occurrence
    CHECK_THROWS_AS(Vocabulary::build({}, 5), std::invalid_argument);
    CHECK_THROWS_AS(Vocabulary::build({"", "   "}, 5), std::invalid_argument);
}

TEST_CASE("ties rank by first occurrence") {
    const Vocabulary vocab = Vocabulary::build({"n m", "m n"}, 6);
    CHECK(vocab.token_of(2) == "n");
    CHECK(vocab.token_of(3) == "m");
}

TEST_CASE("tokenize maps words, appends the end token and skips blanks") {
    const Vocabulary vocab = Vocabulary::build({"a b b"}, 4);
    const TokenizedCorpus corpus = tokenize({"a b", "", "   ", "q q"}, vocab);
    REQUIRE(corpus.sentences.size() == 2);
    CHECK(corpus.sentences[0] == std::vector<std::uint32_t>{3, 2, 1});
    CHECK(corpus.sentences[1] == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(corpus.k == 4);
    CHECK(corpus.stats.tokens == 6);
    CHECK(corpus.stats.unk_tokens == 2);
    CHECK(corpus.stats.oov_rate == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("oov rate is recomputable from the token ids") {
    const auto lines = generate_toy_text({.seed = 5, .sentences = 200, .vocab_words = 400});
    const Vocabulary vocab = Vocabulary::build(lines, 150);
    const TokenizedCorpus corpus = tokenize(lines, vocab);
    std::uint64_t unk = 0, total = 0;
    for (const auto& s : corpus.sentences) {
        for (std::uint32_t id : s) {
            ++total;
            if (id == Vocabulary::kUnkId) ++unk;
        }
    }
    CHECK(total == corpus.stats.tokens);
    CHECK(unk == corpus.stats.unk_tokens);
    CHECK(corpus.stats.oov_rate ==
          doctest::Approx(double(unk) / double(total)).epsilon(1e-12));
    CHECK(corpus.stats.oov_rate > 0.0);  // the cap actually bit
}

TEST_CASE("vocabulary TSV round trip") {
    const Vocabulary vocab = Vocabulary::build({"a b b c c c"}, 5);
    std::stringstream buffer;
    vocab.table().save_tsv(buffer);
    const TokenTable loaded = TokenTable::load_tsv(buffer);
    REQUIRE(loaded.size() == vocab.size());
    for (std::uint32_t id = 0; id < vocab.size(); ++id) {
        CHECK(loaded.tokens[id] == vocab.token_of(id));
    }
    CHECK(loaded.frequencies[2] == 3);  // c

    // hand-written table without reserved tokens loads as a plain table
    std::stringstream hand("0\tA\t1\n1\tB\t1\n2\tC\t1\n");
    const TokenTable table = TokenTable::load_tsv(hand);
    CHECK(table.size() == 3);
    CHECK(table.id_of("C") == 2);
    CHECK_THROWS(Vocabulary::from_table(table));

    std::stringstream gap("0\tA\t1\n2\tB\t1\n");
    CHECK_THROWS_AS(TokenTable::load_tsv(gap), std::invalid_argument);
}

TEST_CASE("minibatches pack greedily and truncate at the boundary") {
    TokenizedCorpus corpus;
    corpus.k = 9;
    corpus.sentences = {{2, 3, 1}, {4, 5, 1}, {6, 7, 1}};
    corpus.stats.tokens = 9;

    // seeds shuffle sentence order; find the packing shape across any order
    const auto batches = make_minibatches(corpus, 6, 42);
    REQUIRE(batches.size() == 2);
    CHECK(batches[0].size() == 2);
    CHECK(batches[1].size() == 1);
    std::uint64_t words = 0;
    for (const auto& b : batches) {
        for (const auto& s : b) words += s.size();
    }
    CHECK(words == 9);  // no truncation: token conservation is equality

    // a single long sentence is cut to the capacity
    TokenizedCorpus one;
    one.k = 9;
    one.sentences = {{2, 3, 4, 5, 6, 7, 8, 2, 3, 1}};
    const auto cut = make_minibatches(one, 4, 1);
    REQUIRE(cut.size() == 1);
    REQUIRE(cut[0].size() == 1);
    CHECK(cut[0][0] == std::vector<std::uint32_t>{2, 3, 4, 5});
}

TEST_CASE("minibatches respect the capacity and conserve tokens") {
    const auto lines = generate_toy_text({.seed = 8, .sentences = 300, .vocab_words = 300});
    const Vocabulary vocab = Vocabulary::build(lines, 310);
    const TokenizedCorpus corpus = tokenize(lines, vocab);

    const auto batches = make_minibatches(corpus, 50, 7);
    std::uint64_t words = 0;
    for (const auto& b : batches) {
        std::uint64_t batch_words = 0;
        for (const auto& s : b) batch_words += s.size();
        CHECK(batch_words <= 50);
        words += batch_words;
    }
    CHECK(words <= corpus.stats.tokens);

    // same seed, same batches; different seed, different order
    const auto again = make_minibatches(corpus, 50, 7);
    CHECK(batches == again);
    const auto other = make_minibatches(corpus, 50, 8);
    CHECK(batches != other);
}

TEST_CASE("epoch shuffling is a permutation of the sentences") {
    const auto lines = generate_toy_text({.seed = 3, .sentences = 120, .vocab_words = 200});
    const Vocabulary vocab = Vocabulary::build(lines, 250);
    const TokenizedCorpus corpus = tokenize(lines, vocab);

    // capacity large enough that nothing truncates: the multiset of
    // sentences must be preserved
    const auto batches = make_minibatches(corpus, 1u << 20, 123);
    std::map<std::vector<std::uint32_t>, int> seen, expected;
    for (const auto& s : corpus.sentences) ++expected[s];
    for (const auto& b : batches) {
        for (const auto& s : b) ++seen[s];
    }
    CHECK(seen == expected);
}
