#pragma once

#include <optional>
#include <set>
#include <vector>

#include "nkz/presentation.hpp"

namespace nkz {

/// A set of degree-N monomial relations over n generators.
struct MonomialSet {
    int n = 0;
    int N = 2;
    std::set<Word> words;
};

MonomialSet make_monomial_set(int n, int N, const std::vector<Word>& words);

Presentation monomial_presentation(const MonomialSet& c);
Presentation monomial_presentation(int n, const Word& f);

struct MonomialVerdict {
    bool is_koszul = true;
    std::optional<Word> counterexample; // overlap word of degree N+m violating the factor condition
};

/// Overlap criterion for monomial sets: for every pair of relations gluing
/// into a word of degree N+m (2 <= m <= N-1), the degree-N factor starting at
/// offset m-1 must also be a relation. Enumerates overlapping pairs from C
/// only, never the full word space.
MonomialVerdict is_koszul_set(const MonomialSet& c);

/// Single-monomial criterion as a period scan: f fails exactly when it is a
/// fractional power of a period-m prefix (2 <= m <= N-1) whose letters are
/// not all equal.
bool is_koszul_single(const Word& f);

/// Closed-form W-space of a single monomial relation for m >= N+1: the line
/// spanned by x_i^m when f = x_i^N, zero otherwise.
Subspace monomial_w_space(int n, const Word& f, int m, const Limits& limits = {});

/// Number of length-d words over n letters avoiding f as a factor, via the
/// failure-function automaton of the pattern.
long long avoid_count(const Word& f, int n, int d, const Limits& limits = {});

struct MonomialProfile {
    bool koszul = true;
    bool gldim_infinite = false; // otherwise 2
    /// Hilbert series denominator as power-series coefficients (constant term
    /// first); for the pure-power case this is the alternating series
    /// truncated at the requested length by the caller of hilbert utilities.
    bool pure_power = false;
    int gk_dimension = -1; // -1 encodes infinity
    bool as_gorenstein = false;
};

MonomialProfile monomial_profile(int n, const Word& f);

/// Number of N-Koszul monomial sets of size p over n generators, by
/// exhaustive subset streaming with violation pruning.
long long koszul_census(int n, int N, int p, const Limits& limits = {});

} // namespace nkz
