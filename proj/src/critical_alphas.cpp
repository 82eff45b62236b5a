#include "fofe/critical_alphas.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "fofe/parallel.hpp"

namespace fofe {

namespace {

constexpr std::uint32_t kMaxOrder = 20;

// sum over set bits t (1-based) of alpha^t, by Horner.
double poly_value(std::uint32_t mask, std::uint32_t t, double alpha) {
    double v = 0.0;
    for (std::uint32_t i = t; i >= 1; --i) {
        v = v * alpha + (((mask >> (i - 1)) & 1u) ? 1.0 : 0.0);
    }
    return v * alpha;
}

// With 0/1 coefficients the polynomial is strictly increasing on (0, 1), so
// it crosses 1 at most once there. sum xi_t 0.5^t <= 1 - 2^-T < 1 always,
// and the value at 1 is the popcount, so a root lies inside (0.5, 1) exactly
// when at least two coefficients are set. Bisection to machine width.
double bisect_root(std::uint32_t mask, std::uint32_t t) {
    double lo = 0.5, hi = 1.0;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (poly_value(mask, t, mid) < 1.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::abs(poly_value(mask, t, lo) - 1.0) <= std::abs(poly_value(mask, t, hi) - 1.0)
               ? lo
               : hi;
}

}  // namespace

double CriticalRoot::max_residual() const {
    double worst = 0.0;
    for (const auto& g : generators) worst = std::max(worst, g.residual);
    return worst;
}

CriticalAlphaSet find_critical_alphas(std::uint32_t t) {
    if (t == 0) throw std::invalid_argument("polynomial order T must be >= 1");
    if (t > kMaxOrder) {
        throw GuardError("critical-alpha enumeration too-large: 2^" + std::to_string(t) +
                         " coefficient vectors exceed the 2^" + std::to_string(kMaxOrder) +
                         " guard");
    }

    const std::uint64_t n_masks = std::uint64_t(1) << t;
    std::vector<std::vector<CriticalRoot::Generator>> block_gens(worker_count());
    parallel_blocks(n_masks, [&](unsigned block, std::size_t begin, std::size_t end) {
        auto& local = block_gens[block];
        for (std::size_t m = begin; m < end; ++m) {
            const auto mask = static_cast<std::uint32_t>(m);
            if (std::popcount(mask) < 2) continue;  // root sits at alpha = 1, outside
            const double root = bisect_root(mask, t);
            const double residual = std::abs(poly_value(mask, t, root) - 1.0);
            local.push_back(CriticalRoot::Generator{mask, root, residual});
        }
    });

    std::vector<CriticalRoot::Generator> gens;
    for (auto& local : block_gens) {
        gens.insert(gens.end(), local.begin(), local.end());
        local.clear();
    }
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) {
        return a.root != b.root ? a.root < b.root : a.xi_mask < b.xi_mask;
    });

    // Merge generators whose roots sit closer than 1e-9; distinct xi can
    // share a root exactly, each keeps its own refined root and residual.
    CriticalAlphaSet set;
    set.t = t;
    for (const auto& g : gens) {
        if (!set.roots.empty() && g.root - set.roots.back().generators.back().root < 1e-9) {
            set.roots.back().generators.push_back(g);
        } else {
            CriticalRoot root;
            root.alpha = g.root;
            root.generators.push_back(g);
            set.roots.push_back(std::move(root));
        }
    }
    return set;
}

SafetyVerdict is_alpha_safe(ForgettingFactor alpha, std::uint32_t t, double margin) {
    const CriticalAlphaSet set = find_critical_alphas(t);
    SafetyVerdict verdict;
    if (set.roots.empty()) {
        verdict.safe = true;
        verdict.distance = std::numeric_limits<double>::infinity();
        return verdict;
    }
    double best = std::numeric_limits<double>::infinity();
    double nearest = set.roots.front().alpha;
    for (const auto& r : set.roots) {
        const double d = std::abs(alpha.value() - r.alpha);
        if (d < best) {
            best = d;
            nearest = r.alpha;
        }
    }
    verdict.safe = best > margin;
    verdict.nearest_root = nearest;
    verdict.distance = best;
    return verdict;
}

void write_critical_alphas_tsv(std::ostream& out, const CriticalAlphaSet& set) {
    out << "alpha\txi_bits\tresidual\n";
    for (const auto& r : set.roots) {
        out << r.alpha << '\t';
        for (std::size_t i = 0; i < r.generators.size(); ++i) {
            if (i) out << ',';
            for (std::uint32_t bit = 1; bit <= set.t; ++bit) {
                out << (((r.generators[i].xi_mask >> (bit - 1)) & 1u) ? '1' : '0');
            }
        }
        out << '\t' << r.max_residual() << '\n';
    }
}

}  // namespace fofe
