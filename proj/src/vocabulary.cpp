#include "fofe/vocabulary.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fofe {

namespace {

void split_whitespace(const std::string& line, std::vector<std::string>& out) {
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
}

}  // namespace

std::uint32_t TokenTable::id_of(const std::string& token) const {
    auto it = ids.find(token);
    if (it != ids.end()) return it->second;
    auto unk = ids.find(Vocabulary::kUnkToken);
    if (unk != ids.end()) return unk->second;
    throw std::runtime_error("unknown token '" + token + "' and no <unk> in the table");
}

TokenTable TokenTable::load_tsv(std::istream& in) {
    TokenTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string id_field, token;
        std::uint64_t freq = 0;
        row >> id_field >> token;
        row >> freq;  // optional third column
        if (first && id_field == "id") continue;  // header row
        first = false;
        std::size_t pos = 0;
        unsigned long id = 0;
        try {
            id = std::stoul(id_field, &pos);
        } catch (...) {
            throw std::invalid_argument("vocabulary TSV: bad id field '" + id_field + "'");
        }
        if (pos != id_field.size() || token.empty()) {
            throw std::invalid_argument("vocabulary TSV: malformed row '" + line + "'");
        }
        if (id != table.tokens.size()) {
            throw std::invalid_argument("vocabulary TSV: ids must be contiguous from 0");
        }
        table.ids.emplace(token, static_cast<std::uint32_t>(id));
        table.tokens.push_back(token);
        table.frequencies.push_back(freq);
    }
    if (table.tokens.empty()) {
        throw std::invalid_argument("vocabulary TSV: no rows");
    }
    return table;
}

void TokenTable::save_tsv(std::ostream& out) const {
    out << "id\ttoken\tfrequency\n";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        out << i << '\t' << tokens[i] << '\t' << frequencies[i] << '\n';
    }
}

Vocabulary Vocabulary::build(const std::vector<std::string>& lines, std::size_t cap) {
    if (cap < 2) throw std::invalid_argument("vocabulary cap must be >= 2 (reserved tokens)");

    struct Info {
        std::uint64_t count = 0;
        std::uint64_t first_seen = 0;
    };
    std::unordered_map<std::string, Info> counts;
    std::vector<std::string> fields;
    std::uint64_t total = 0;
    std::uint64_t n_sentences = 0;
    for (const auto& line : lines) {
        fields.clear();
        split_whitespace(line, fields);
        if (fields.empty()) continue;
        ++n_sentences;
        for (auto& tok : fields) {
            auto [it, inserted] = counts.try_emplace(tok);
            if (inserted) it->second.first_seen = total;
            ++it->second.count;
            ++total;
        }
    }
    if (total == 0) throw std::invalid_argument("cannot build a vocabulary from empty input");

    std::vector<const std::pair<const std::string, Info>*> ranked;
    ranked.reserve(counts.size());
    for (const auto& kv : counts) ranked.push_back(&kv);
    std::sort(ranked.begin(), ranked.end(), [](const auto* a, const auto* b) {
        if (a->second.count != b->second.count) return a->second.count > b->second.count;
        return a->second.first_seen < b->second.first_seen;
    });

    Vocabulary vocab;
    auto& table = vocab.table_;
    table.tokens = {kUnkToken, kEosToken};
    table.frequencies = {0, n_sentences};
    const std::size_t keep = std::min(ranked.size(), cap - 2);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (i < keep) {
            table.frequencies.push_back(ranked[i]->second.count);
            table.tokens.push_back(ranked[i]->first);
        } else {
            table.frequencies[kUnkId] += ranked[i]->second.count;
        }
    }
    for (std::uint32_t id = 0; id < table.tokens.size(); ++id) {
        table.ids.emplace(table.tokens[id], id);
    }
    return vocab;
}

Vocabulary Vocabulary::from_table(TokenTable table) {
    if (table.tokens.size() < 2 || table.tokens[kUnkId] != kUnkToken ||
        table.tokens[kEosId] != kEosToken) {
        throw std::invalid_argument("vocabulary table lacks the reserved <unk>/</s> ids");
    }
    Vocabulary vocab;
    vocab.table_ = std::move(table);
    return vocab;
}

std::uint32_t Vocabulary::id_of(const std::string& token) const {
    auto it = table_.ids.find(token);
    return it != table_.ids.end() ? it->second : kUnkId;
}

}  // namespace fofe
