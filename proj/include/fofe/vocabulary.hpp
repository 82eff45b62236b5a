#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace fofe {

/// Plain id <-> token table as stored in a vocabulary TSV
/// (`id<TAB>token<TAB>frequency`, ids contiguous from 0). Unlike Vocabulary
/// it makes no reserved-token promises, so hand-written tables work for the
/// encode/decode commands.
struct TokenTable {
    std::vector<std::string> tokens;
    std::vector<std::uint64_t> frequencies;          // parallel to tokens
    std::unordered_map<std::string, std::uint32_t> ids;

    std::uint32_t size() const { return static_cast<std::uint32_t>(tokens.size()); }

    /// Returns the id, or id of "<unk>" when present, else throws.
    std::uint32_t id_of(const std::string& token) const;

    static TokenTable load_tsv(std::istream& in);
    void save_tsv(std::ostream& out) const;
};

/// Frequency-capped vocabulary with fixed reserved ids 0 = <unk> and
/// 1 = </s>. Tokens are ranked by frequency, ties broken by first
/// occurrence; the top (cap - 2) survive.
class Vocabulary {
public:
    static constexpr std::uint32_t kUnkId = 0;
    static constexpr std::uint32_t kEosId = 1;
    static constexpr const char* kUnkToken = "<unk>";
    static constexpr const char* kEosToken = "</s>";

    /// Builds from whitespace-tokenized lines. cap >= 2 (cap = 2 keeps only
    /// the reserved tokens); input with no tokens at all is rejected.
    static Vocabulary build(const std::vector<std::string>& lines, std::size_t cap);

    /// Wraps a loaded table; the reserved tokens must sit at their fixed ids.
    static Vocabulary from_table(TokenTable table);

    std::uint32_t size() const { return table_.size(); }
    std::uint32_t id_of(const std::string& token) const;  // <unk> for OOV
    const std::string& token_of(std::uint32_t id) const { return table_.tokens.at(id); }
    const TokenTable& table() const { return table_; }

private:
    Vocabulary() = default;
    TokenTable table_;
};

}  // namespace fofe
