#pragma once

#include <map>
#include <optional>
#include <utility>

#include "nkz/presentation.hpp"

namespace nkz {

/// Outcome of the single-relation Koszulity criterion. When the algebra
/// fails, failing_m is the least m in [2, N-1] at which the overlap
/// condition breaks and witness is an element of
/// (R (x) V^{xm}) meet (V^{xm} (x) R) lying outside V^{x(m-1)} (x) R (x) V.
struct KoszulVerdict {
    bool is_koszul = true;
    std::optional<int> failing_m;
    std::optional<Tensor> witness;
};

/// Requires dim R = 1. Tests, for m = 2..N-1, whether
/// (R (x) V^{xm}) meet (V^{xm} (x) R) is contained in V^{x(m-1)} (x) R (x) V.
/// Vacuously true when N = 2.
KoszulVerdict criterion_check(const Presentation& p, const Limits& limits = {});

/// Same verdict through the equality form: the overlap intersection must
/// equal W_{N+m}. Must agree with criterion_check on every input.
KoszulVerdict criterion_check_equalform(const Presentation& p, const Limits& limits = {});

/// Dimensions of the homology of the generalized Koszul complex
/// K_i = A (x) W_{nu(i)}, sliced by internal degree.
struct HomologyReport {
    /// (homological index i, internal degree d) -> dim H_i(K(A))_d
    std::map<std::pair<int, int>, long long> entries;

    long long dim(int i, int d) const {
        auto it = entries.find({i, d});
        return it == entries.end() ? 0 : it->second;
    }
    /// First (i, d) with i >= min_i and nonzero homology, scanning by degree.
    std::optional<std::pair<int, int>> first_nonzero(int min_i) const {
        std::optional<std::pair<int, int>> best;
        for (const auto& [key, v] : entries)
            if (key.first >= min_i && v != 0 && (!best || key.second < best->second))
                best = key;
        return best;
    }
    bool vanishes_above_zero() const {
        for (const auto& [key, v] : entries)
            if (key.first >= 1 && v != 0) return false;
        return true;
    }
};

/// Independent exactness oracle: computes dim H_i(K(A)) in internal degrees
/// <= max_degree for i <= max_i by exact rank computations on the degree-d
/// slices. Works for any relation space (not just dim R = 1).
HomologyReport homology_oracle(const Presentation& p, int max_i, int max_degree,
                               const Limits& limits = {});

struct GlobalDimension {
    enum class Kind { two, infinite, at_least };
    Kind kind = Kind::two;
    int bound = 2; // for Kind::at_least, the largest i with W_{nu(i)} != 0 probed

    bool is_two() const { return kind == Kind::two; }
    bool is_infinite() const { return kind == Kind::infinite; }
};

/// Global dimension along the Koszul complex, for Koszul presentations with
/// dim R = 1: 2 when W_{N+1} = 0; infinite when the relation is a pure power
/// x_i^N in the given coordinates (or, for N = 2, symmetric of rank 1 in any
/// coordinates); otherwise a lower bound from probing the W-spaces.
GlobalDimension global_dimension(const Presentation& p, int probe_limit = 6,
                                 const Limits& limits = {});

} // namespace nkz
