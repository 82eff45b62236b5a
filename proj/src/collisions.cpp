#include "fofe/collisions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fofe/parallel.hpp"

namespace fofe {

namespace {

constexpr std::uint64_t kEnumerationGuard = std::uint64_t(1) << 22;

// A code touches at most min(K, T) dimensions, and min(K, T) >= 8 would put
// K^T >= 8^8 past the 2^22 guard, so 7 slots always suffice.
constexpr std::uint32_t kMaxSlots = 7;

// Flat arena of sparse codes, entries sorted by dimension.
struct CodeStore {
    std::vector<std::uint32_t> dims;
    std::vector<double> vals;
    std::vector<std::uint64_t> offsets{0};

    std::size_t count() const { return offsets.size() - 1; }
};

// Strict max-norm proximity with early exit.
inline bool within_eps(const CodeStore& cs, std::size_t i, std::size_t j, double eps) {
    std::uint64_t bi = cs.offsets[i], ei = cs.offsets[i + 1];
    std::uint64_t bj = cs.offsets[j], ej = cs.offsets[j + 1];
    while (bi < ei && bj < ej) {
        const std::uint32_t di = cs.dims[bi], dj = cs.dims[bj];
        double d;
        if (di < dj) {
            d = cs.vals[bi];
            ++bi;
        } else if (dj < di) {
            d = cs.vals[bj];
            ++bj;
        } else {
            d = std::abs(cs.vals[bi] - cs.vals[bj]);
            ++bi;
            ++bj;
        }
        if (d >= eps) return false;
    }
    for (; bi < ei; ++bi) {
        if (cs.vals[bi] >= eps) return false;
    }
    for (; bj < ej; ++bj) {
        if (cs.vals[bj] >= eps) return false;
    }
    return true;
}

// Keeps the lexicographically smallest index pairs; merging per-block
// instances reproduces the global minimum set no matter how work was split.
class TopPairs {
public:
    explicit TopPairs(std::size_t cap = 10) : cap_(cap) {}

    void add(std::uint64_t i, std::uint64_t j) {
        if (i > j) std::swap(i, j);
        const std::pair<std::uint64_t, std::uint64_t> p{i, j};
        if (pairs_.size() == cap_ && p >= pairs_.back()) return;
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
        if (it != pairs_.end() && *it == p) return;
        pairs_.insert(it, p);
        if (pairs_.size() > cap_) pairs_.pop_back();
    }

    void merge(const TopPairs& other) {
        for (const auto& p : other.pairs_) add(p.first, p.second);
    }

    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs() const {
        return pairs_;
    }

private:
    std::size_t cap_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs_;
};

struct CellKey {
    std::array<std::uint64_t, kMaxSlots> slots{};
    std::uint32_t len = 0;

    void push(std::uint32_t dim, std::uint32_t bucket) {
        slots[len++] = (static_cast<std::uint64_t>(dim) << 32) | bucket;
    }

    bool operator==(const CellKey& o) const {
        return len == o.len && std::equal(slots.begin(), slots.begin() + len, o.slots.begin());
    }

    bool operator<(const CellKey& o) const {
        const std::uint32_t n = std::min(len, o.len);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (slots[i] != o.slots[i]) return slots[i] < o.slots[i];
        }
        return len < o.len;
    }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t i = 0; i < k.len; ++i) {
            h ^= k.slots[i];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Counts sequences for the requested mode, throwing past the guard.
std::uint64_t guarded_sequence_count(std::uint32_t k, std::uint32_t t, EnumerationMode mode) {
    unsigned __int128 total = 0;
    unsigned __int128 p = 1;
    for (std::uint32_t i = 1; i <= t; ++i) {
        p *= k;
        if (mode == EnumerationMode::UpToLength) total += p;
        if (p > (static_cast<unsigned __int128>(1) << 62) ||
            total > (static_cast<unsigned __int128>(1) << 62)) {
            throw GuardError("enumeration too-large: K^T exceeds 2^62 sequences (guard is 2^22)");
        }
    }
    if (mode == EnumerationMode::ExactLength) total = (t == 0) ? 1 : p;
    if (total > kEnumerationGuard) {
        throw GuardError("enumeration too-large: " +
                         std::to_string(static_cast<std::uint64_t>(total)) +
                         " sequences exceed the 2^22 guard");
    }
    return static_cast<std::uint64_t>(total);
}

// Token digits of the sequence at a global index; the first token is the
// most significant digit. For UpToLength, lengths 1..T are laid out
// consecutively.
std::vector<std::uint32_t> sequence_at(std::uint64_t index, std::uint32_t k, std::uint32_t t,
                                       EnumerationMode mode) {
    std::uint32_t len = t;
    if (mode == EnumerationMode::UpToLength) {
        len = 1;
        std::uint64_t block = k;
        while (index >= block) {
            index -= block;
            block *= k;
            ++len;
        }
    }
    std::vector<std::uint32_t> ids(len);
    for (std::uint32_t pos = len; pos-- > 0;) {
        ids[pos] = static_cast<std::uint32_t>(index % k);
        index /= k;
    }
    return ids;
}

// Sparse final-row encode of one sequence, appended to a store.
void encode_final(const std::vector<std::uint32_t>& ids, double alpha, CodeStore& store,
                  std::vector<std::uint32_t>& sdims, std::vector<double>& svals) {
    sdims.clear();
    svals.clear();
    for (std::uint32_t w : ids) {
        bool found = false;
        for (std::size_t i = 0; i < sdims.size(); ++i) {
            svals[i] *= alpha;
            if (sdims[i] == w) {
                svals[i] += 1.0;
                found = true;
            }
        }
        if (!found) {
            sdims.push_back(w);
            svals.push_back(1.0);
        }
    }
    std::vector<std::size_t> order(sdims.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return sdims[a] < sdims[b]; });
    for (std::size_t i : order) {
        store.dims.push_back(sdims[i]);
        store.vals.push_back(svals[i]);
    }
    store.offsets.push_back(store.dims.size());
}

CellKey home_key(const CodeStore& cs, std::size_t i, double eps) {
    CellKey key;
    for (std::uint64_t e = cs.offsets[i]; e < cs.offsets[i + 1]; ++e) {
        const auto bucket = static_cast<std::uint64_t>(std::floor(cs.vals[e] / eps));
        if (bucket >= 1) key.push(cs.dims[e], static_cast<std::uint32_t>(bucket));
    }
    return key;
}

}  // namespace

CollisionReport enumerate_collisions(std::uint32_t k, std::uint32_t t, ForgettingFactor alpha,
                                     double epsilon, EnumerationMode mode) {
    if (k == 0) throw std::invalid_argument("K must be >= 1");
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    if (alpha.geometric_bound() / epsilon >= 2147483648.0) {
        throw std::invalid_argument("epsilon too small relative to 1/(1-alpha)");
    }
    const std::uint64_t total = guarded_sequence_count(k, t, mode);
    const double a = alpha.value();

    // Phase 1: encode every sequence's final code.
    std::vector<CodeStore> block_stores(worker_count());
    parallel_blocks(total, [&](unsigned block, std::size_t begin, std::size_t end) {
        CodeStore& local = block_stores[block];
        std::vector<std::uint32_t> sdims;
        std::vector<double> svals;
        for (std::size_t i = begin; i < end; ++i) {
            encode_final(sequence_at(i, k, t, mode), a, local, sdims, svals);
        }
    });
    CodeStore store;
    for (const auto& local : block_stores) {
        const std::uint64_t base = store.dims.size();
        store.dims.insert(store.dims.end(), local.dims.begin(), local.dims.end());
        store.vals.insert(store.vals.end(), local.vals.begin(), local.vals.end());
        for (std::size_t i = 1; i < local.offsets.size(); ++i) {
            store.offsets.push_back(base + local.offsets[i]);
        }
    }
    block_stores.clear();
    block_stores.shrink_to_fit();

    // Phase 2: bucket codes into epsilon-grid cells keyed by the occupied
    // dimensions with bucket >= 1; entries below epsilon stay off the key.
    // Codes are then regrouped so each cell is one contiguous arena range,
    // which keeps the pair loops on sequential memory.
    std::uint32_t n_cells = 0;
    std::unordered_map<CellKey, std::uint32_t, CellKeyHash> cell_of;
    cell_of.reserve(store.count());
    std::vector<std::uint32_t> code_cell(store.count());
    for (std::size_t i = 0; i < store.count(); ++i) {
        auto [it, inserted] = cell_of.try_emplace(home_key(store, i, epsilon), n_cells);
        if (inserted) ++n_cells;
        code_cell[i] = it->second;
    }
    std::vector<std::uint32_t> perm(store.count());     // grouped position -> original index
    std::vector<std::uint64_t> cell_range(n_cells + 1, 0);  // contiguous ranges per cell
    CodeStore grouped;
    {
        for (std::uint32_t c : code_cell) ++cell_range[c + 1];
        for (std::uint32_t c = 0; c < n_cells; ++c) cell_range[c + 1] += cell_range[c];
        std::vector<std::uint64_t> cursor = cell_range;
        for (std::size_t i = 0; i < store.count(); ++i) {
            perm[cursor[code_cell[i]]++] = static_cast<std::uint32_t>(i);
        }
        grouped.dims.reserve(store.dims.size());
        grouped.vals.reserve(store.vals.size());
        grouped.offsets.reserve(store.offsets.size());
        for (std::uint32_t orig : perm) {
            for (std::uint64_t e = store.offsets[orig]; e < store.offsets[orig + 1]; ++e) {
                grouped.dims.push_back(store.dims[e]);
                grouped.vals.push_back(store.vals[e]);
            }
            grouped.offsets.push_back(grouped.dims.size());
        }
    }

    // Phase 3: adjacent cell pairs. For each code, walk every key variant a
    // partner within epsilon could occupy: each strong bucket +-1 (dropping
    // at 0) and each sub-epsilon entry optionally promoted to bucket 1. Only
    // variants greater than the home key are probed so each unordered cell
    // pair surfaces exactly once.
    std::vector<std::vector<std::uint64_t>> block_pairs(worker_count());
    parallel_blocks(store.count(), [&](unsigned block, std::size_t begin, std::size_t end) {
        auto& local = block_pairs[block];
        for (std::size_t i = begin; i < end; ++i) {
            const std::uint64_t nnz = store.offsets[i + 1] - store.offsets[i];
            if (nnz == 0) continue;  // zero code's only neighbors are weak promotions of itself
            std::array<std::array<std::uint32_t, 3>, kMaxSlots> choice{};
            std::array<std::uint32_t, kMaxSlots> n_choices{};
            std::array<std::uint32_t, kMaxSlots> dim{};
            for (std::uint64_t e = store.offsets[i]; e < store.offsets[i + 1]; ++e) {
                const auto slot = static_cast<std::size_t>(e - store.offsets[i]);
                dim[slot] = store.dims[e];
                const auto b = static_cast<std::uint32_t>(std::floor(store.vals[e] / epsilon));
                if (b >= 1) {
                    choice[slot] = {b - 1, b, b + 1};  // bucket 0 drops off the key
                    n_choices[slot] = 3;
                } else {
                    choice[slot] = {0, 1, 0};  // stay weak, or promote to bucket 1
                    n_choices[slot] = 2;
                }
            }
            const CellKey home = home_key(store, i, epsilon);
            std::array<std::uint32_t, kMaxSlots> pick{};
            while (true) {
                CellKey key;
                for (std::size_t s = 0; s < nnz; ++s) {
                    const std::uint32_t b = choice[s][pick[s]];
                    if (b >= 1) key.push(dim[s], b);
                }
                if (home < key) {
                    auto it = cell_of.find(key);
                    if (it != cell_of.end()) {
                        local.push_back((static_cast<std::uint64_t>(code_cell[i]) << 32) |
                                        it->second);
                    }
                }
                std::size_t s = 0;
                for (; s < nnz; ++s) {
                    if (++pick[s] < n_choices[s]) break;
                    pick[s] = 0;
                }
                if (s == nnz) break;
            }
        }
    });
    std::vector<std::uint64_t> cell_pairs;
    for (auto& local : block_pairs) {
        cell_pairs.insert(cell_pairs.end(), local.begin(), local.end());
        local.clear();
    }
    std::sort(cell_pairs.begin(), cell_pairs.end());
    cell_pairs.erase(std::unique(cell_pairs.begin(), cell_pairs.end()), cell_pairs.end());

    // Phase 4: count colliding pairs, first within each cell then across
    // adjacent cells; every candidate is verified against the exact strict
    // max-norm predicate. The outer code of each pair loop is hoisted into
    // registers and the inner side scans a contiguous arena range.
    struct Hoisted {
        std::array<std::uint32_t, kMaxSlots> dims;
        std::array<double, kMaxSlots> vals;
        std::uint32_t len;
    };
    auto hoist = [&grouped](std::size_t i, Hoisted& h) {
        h.len = 0;
        for (std::uint64_t e = grouped.offsets[i]; e < grouped.offsets[i + 1]; ++e) {
            h.dims[h.len] = grouped.dims[e];
            h.vals[h.len] = grouped.vals[e];
            ++h.len;
        }
    };
    auto within_h = [&grouped, epsilon](const Hoisted& a, std::size_t j) {
        const std::uint64_t bj = grouped.offsets[j];
        const auto lj = static_cast<std::uint32_t>(grouped.offsets[j + 1] - bj);
        if (a.len == lj) {  // common case: identical support
            bool same = true;
            for (std::uint32_t s = 0; s < lj; ++s) {
                if (a.dims[s] != grouped.dims[bj + s]) {
                    same = false;
                    break;
                }
            }
            if (same) {
                for (std::uint32_t s = 0; s < lj; ++s) {
                    if (std::abs(a.vals[s] - grouped.vals[bj + s]) >= epsilon) return false;
                }
                return true;
            }
        }
        std::uint32_t x = 0, y = 0;
        while (x < a.len && y < lj) {
            double d;
            if (a.dims[x] < grouped.dims[bj + y]) {
                d = a.vals[x++];
            } else if (grouped.dims[bj + y] < a.dims[x]) {
                d = grouped.vals[bj + y++];
            } else {
                d = std::abs(a.vals[x++] - grouped.vals[bj + y++]);
            }
            if (d >= epsilon) return false;
        }
        for (; x < a.len; ++x) {
            if (a.vals[x] >= epsilon) return false;
        }
        for (; y < lj; ++y) {
            if (grouped.vals[bj + y] >= epsilon) return false;
        }
        return true;
    };

    const std::size_t n_items = n_cells + cell_pairs.size();
    std::vector<std::uint64_t> block_counts(worker_count(), 0);
    std::vector<TopPairs> block_tops(worker_count());
    parallel_blocks(n_items, [&](unsigned block, std::size_t begin, std::size_t end) {
        std::uint64_t count = 0;
        TopPairs top;
        Hoisted hx;
        for (std::size_t item = begin; item < end; ++item) {
            if (item < n_cells) {
                const std::uint64_t lo = cell_range[item], hi = cell_range[item + 1];
                for (std::uint64_t x = lo; x < hi; ++x) {
                    hoist(x, hx);
                    for (std::uint64_t y = x + 1; y < hi; ++y) {
                        if (within_h(hx, y)) {
                            ++count;
                            top.add(perm[x], perm[y]);
                        }
                    }
                }
            } else {
                const std::uint64_t pair = cell_pairs[item - n_cells];
                const std::uint32_t ca = static_cast<std::uint32_t>(pair >> 32);
                const std::uint32_t cb = static_cast<std::uint32_t>(pair & 0xffffffffu);
                for (std::uint64_t x = cell_range[ca]; x < cell_range[ca + 1]; ++x) {
                    hoist(x, hx);
                    for (std::uint64_t y = cell_range[cb]; y < cell_range[cb + 1]; ++y) {
                        if (within_h(hx, y)) {
                            ++count;
                            top.add(perm[x], perm[y]);
                        }
                    }
                }
            }
        }
        block_counts[block] = count;
        block_tops[block] = std::move(top);
    });

    std::uint64_t collisions = 0;
    TopPairs top;
    for (unsigned b = 0; b < block_counts.size(); ++b) {
        collisions += block_counts[b];
        top.merge(block_tops[b]);
    }

    CollisionReport report;
    report.alpha = a;
    report.epsilon = epsilon;
    report.k = k;
    report.t = t;
    report.cases_tested = total;
    report.collisions = collisions;
    for (const auto& [i, j] : top.pairs()) {
        report.example_pairs.push_back(
            CollisionExample{sequence_at(i, k, t, mode), sequence_at(j, k, t, mode)});
    }
    return report;
}

namespace {

// Fixed per-dimension projection weights in [-1, 1].
double projection_weight(std::uint32_t dim, std::uint64_t salt) {
    std::uint64_t z = (static_cast<std::uint64_t>(dim) + 1) * 0x9e3779b97f4a7c15ull + salt;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

}  // namespace

CollisionReport scan_corpus_collisions(const TokenizedCorpus& corpus, ForgettingFactor alpha,
                                       double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
    const double a = alpha.value();

    // Distinct prefixes only: identical token strings are one case.
    struct PrefixRef {
        std::uint32_t sentence;
        std::uint32_t len;
    };
    std::vector<PrefixRef> reps;
    std::uint64_t max_prefix_len = 0;
    {
        std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash;
        auto prefix_equal = [&](const PrefixRef& r, const std::vector<std::uint32_t>& sent,
                                std::uint32_t len) {
            if (r.len != len) return false;
            const auto& other = corpus.sentences[r.sentence];
            return std::equal(other.begin(), other.begin() + len, sent.begin());
        };
        for (std::uint32_t s = 0; s < corpus.sentences.size(); ++s) {
            const auto& sent = corpus.sentences[s];
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint32_t t = 1; t <= sent.size(); ++t) {
                h ^= sent[t - 1];
                h *= 1099511628211ull;
                auto& bucket = by_hash[h];
                bool seen = false;
                for (std::uint32_t idx : bucket) {
                    if (prefix_equal(reps[idx], sent, t)) {
                        seen = true;
                        break;
                    }
                }
                if (!seen) {
                    bucket.push_back(static_cast<std::uint32_t>(reps.size()));
                    reps.push_back(PrefixRef{s, t});
                    max_prefix_len = std::max<std::uint64_t>(max_prefix_len, t);
                }
            }
        }
    }

    // Encode every representative prefix, tracking two projections with
    // per-dimension weights in [-1, 1]; a colliding pair differs by less
    // than (|supp a| + |supp b|) * epsilon in either projection, which makes
    // them exact prefilters. The grid used by enumerate_collisions would
    // need 3^support neighbor probes here, hopeless for sentence-sized
    // supports, hence the sweep.
    CodeStore store;
    std::vector<double> proj1(reps.size()), proj2(reps.size());
    std::vector<std::uint32_t> supp(reps.size());
    {
        // Group representatives by sentence so each sentence is walked once.
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> wanted(
            corpus.sentences.size());  // (len, rep index)
        for (std::uint32_t r = 0; r < reps.size(); ++r) {
            wanted[reps[r].sentence].emplace_back(reps[r].len, r);
        }
        std::vector<std::vector<std::uint32_t>> rep_dims(reps.size());
        std::vector<std::vector<double>> rep_vals(reps.size());

        std::vector<std::uint32_t> sdims;
        std::vector<double> svals;
        for (std::uint32_t s = 0; s < corpus.sentences.size(); ++s) {
            if (wanted[s].empty()) continue;
            std::sort(wanted[s].begin(), wanted[s].end());
            sdims.clear();
            svals.clear();
            std::size_t next = 0;
            const auto& sent = corpus.sentences[s];
            for (std::uint32_t t = 1; t <= sent.size() && next < wanted[s].size(); ++t) {
                const std::uint32_t w = sent[t - 1];
                bool found = false;
                for (std::size_t i = 0; i < sdims.size(); ++i) {
                    svals[i] *= a;
                    if (sdims[i] == w) {
                        svals[i] += 1.0;
                        found = true;
                    }
                }
                if (!found) {
                    sdims.push_back(w);
                    svals.push_back(1.0);
                }
                while (next < wanted[s].size() && wanted[s][next].first == t) {
                    const std::uint32_t r = wanted[s][next].second;
                    std::vector<std::size_t> order(sdims.size());
                    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
                    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                        return sdims[x] < sdims[y];
                    });
                    double p1 = 0.0, p2 = 0.0;
                    for (std::size_t i : order) {
                        rep_dims[r].push_back(sdims[i]);
                        rep_vals[r].push_back(svals[i]);
                        p1 += projection_weight(sdims[i], 0x5eedf0fe) * svals[i];
                        p2 += projection_weight(sdims[i], 0xc0debabe) * svals[i];
                    }
                    proj1[r] = p1;
                    proj2[r] = p2;
                    supp[r] = static_cast<std::uint32_t>(sdims.size());
                    ++next;
                }
            }
        }
        for (std::uint32_t r = 0; r < reps.size(); ++r) {
            store.dims.insert(store.dims.end(), rep_dims[r].begin(), rep_dims[r].end());
            store.vals.insert(store.vals.end(), rep_vals[r].begin(), rep_vals[r].end());
            store.offsets.push_back(store.dims.size());
        }
    }

    // Sweep in projection order with an exact candidate window.
    std::vector<std::uint32_t> order(reps.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
        return proj1[x] != proj1[y] ? proj1[x] < proj1[y] : x < y;
    });
    std::uint32_t max_supp = 0;
    for (std::uint32_t s : supp) max_supp = std::max(max_supp, s);
    const double window = 2.0 * static_cast<double>(max_supp) * epsilon + 1e-9;

    std::vector<std::uint64_t> block_counts(worker_count(), 0);
    std::vector<TopPairs> block_tops(worker_count());
    parallel_blocks(order.size(), [&](unsigned block, std::size_t begin, std::size_t end) {
        std::uint64_t count = 0;
        TopPairs top;
        for (std::size_t oi = begin; oi < end; ++oi) {
            const std::uint32_t i = order[oi];
            for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
                const std::uint32_t j = order[oj];
                if (proj1[j] - proj1[i] >= window) break;
                const double pair_bound =
                    static_cast<double>(supp[i] + supp[j]) * epsilon + 1e-9;
                if (std::abs(proj1[j] - proj1[i]) >= pair_bound) continue;
                if (std::abs(proj2[j] - proj2[i]) >= pair_bound) continue;
                if (within_eps(store, i, j, epsilon)) {
                    ++count;
                    top.add(i, j);
                }
            }
        }
        block_counts[block] = count;
        block_tops[block] = std::move(top);
    });

    std::uint64_t collisions = 0;
    TopPairs top;
    for (unsigned b = 0; b < block_counts.size(); ++b) {
        collisions += block_counts[b];
        top.merge(block_tops[b]);
    }

    CollisionReport report;
    report.alpha = a;
    report.epsilon = epsilon;
    report.k = corpus.k;
    report.t = max_prefix_len;
    report.cases_tested = reps.size();
    report.collisions = collisions;
    for (const auto& [i, j] : top.pairs()) {
        const auto& ri = reps[i];
        const auto& rj = reps[j];
        const auto& si = corpus.sentences[ri.sentence];
        const auto& sj = corpus.sentences[rj.sentence];
        report.example_pairs.push_back(CollisionExample{
            {si.begin(), si.begin() + ri.len}, {sj.begin(), sj.begin() + rj.len}});
    }
    return report;
}

void write_collision_header(std::ostream& out) {
    out << "alpha\tepsilon\tK\tT\tcases\tcollisions\n";
}

void write_collision_row(std::ostream& out, const CollisionReport& r) {
    out << r.alpha << '\t' << r.epsilon << '\t' << r.k << '\t' << r.t << '\t' << r.cases_tested
        << '\t' << r.collisions << '\n';
}

}  // namespace fofe
