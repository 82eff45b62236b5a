#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fofe/corpus.hpp"
#include "fofe/errors.hpp"
#include "fofe/forgetting_factor.hpp"

namespace fofe {

/// A collision is an unordered pair of distinct sequences whose codes differ
/// by less than epsilon in every coordinate (strict max-norm threshold).
struct CollisionExample {
    std::vector<std::uint32_t> first;
    std::vector<std::uint32_t> second;
};

struct CollisionReport {
    double alpha = 0.0;
    double epsilon = 0.0;
    std::uint64_t k = 0;
    std::uint64_t t = 0;             // sequence length (or max prefix length for scans)
    std::uint64_t cases_tested = 0;  // distinct sequences encoded
    std::uint64_t collisions = 0;    // colliding unordered pairs
    std::vector<CollisionExample> example_pairs;  // at most 10, deterministic
};

enum class EnumerationMode {
    ExactLength,  // all K^T sequences of length exactly T
    UpToLength,   // all sequences of length 1..T
};

/// Encodes every enumerated sequence and counts colliding pairs. Exact with
/// respect to the epsilon/max-norm definition: codes are bucketed on an
/// epsilon grid and compared only within a cell and its adjacent cells in
/// the occupied dimensions. Guard: at most 2^22 sequences.
CollisionReport enumerate_collisions(std::uint32_t k, std::uint32_t t,
                                     ForgettingFactor alpha, double epsilon,
                                     EnumerationMode mode = EnumerationMode::ExactLength);

/// Encodes every within-sentence prefix of the corpus and counts colliding
/// pairs of distinct prefixes; prefixes with identical token strings are
/// collapsed and never counted against each other.
CollisionReport scan_corpus_collisions(const TokenizedCorpus& corpus,
                                       ForgettingFactor alpha, double epsilon);

/// TSV report format: header then `alpha epsilon K T cases collisions` rows.
void write_collision_header(std::ostream& out);
void write_collision_row(std::ostream& out, const CollisionReport& report);

}  // namespace fofe
