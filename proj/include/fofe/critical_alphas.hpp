#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fofe/errors.hpp"
#include "fofe/forgetting_factor.hpp"

namespace fofe {

/// A forgetting factor in (0.5, 1) where uniqueness of the encoding can
/// fail: a root of sum_{t=1..T} xi_t * alpha^t = 1 for some xi in {0,1}^T.
/// Distinct xi can share a root algebraically (e.g. x + x^2 = 1 and
/// x + x^3 + x^4 = 1 share the golden-ratio root), so roots closer than
/// 1e-9 are merged into one entry listing every generator; each generator
/// keeps its own refined root and residual.
struct CriticalRoot {
    double alpha = 0.0;  // representative (smallest root in the merged group)

    struct Generator {
        std::uint32_t xi_mask = 0;  // bit t-1 <=> xi_t = 1
        double root = 0.0;
        double residual = 0.0;      // |sum xi_t root^t - 1|
    };
    std::vector<Generator> generators;

    double max_residual() const;
};

struct CriticalAlphaSet {
    std::uint32_t t = 0;
    std::vector<CriticalRoot> roots;  // sorted by alpha, strictly inside (0.5, 1)
};

/// Enumerates all xi in {0,1}^T and finds every root in the open interval
/// (0.5, 1.0), refined by bisection to machine precision. Guard: T <= 20.
CriticalAlphaSet find_critical_alphas(std::uint32_t t);

struct SafetyVerdict {
    bool safe = false;
    std::optional<double> nearest_root;  // empty when no roots exist for T
    double distance = 0.0;               // +inf when no roots exist
};

/// True iff alpha is farther than margin from every critical root of order T.
SafetyVerdict is_alpha_safe(ForgettingFactor alpha, std::uint32_t t, double margin);

/// TSV format: header then `alpha xi_bits residual` rows, one per merged
/// root; xi_bits lists each generator as xi_1..xi_T, comma separated.
void write_critical_alphas_tsv(std::ostream& out, const CriticalAlphaSet& set);

}  // namespace fofe
