#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "nkz/presentation.hpp"

namespace nkz {

enum class SeriesProvenance { koszul_formula, recursion, quotient_dims, avoid_count };

/// Exact integer coefficients a_0..a_D of a Hilbert series expansion.
struct SeriesExpansion {
    std::vector<mpz_class> coeffs;
    SeriesProvenance provenance = SeriesProvenance::koszul_formula;
    /// Set when some coefficient is negative: the parameters do not belong to
    /// a graded algebra (a useful non-Koszulity signal for the recursion).
    std::optional<int> first_negative;
};

/// Rational generating function with integer polynomial numerator and
/// denominator; the denominator has a nonzero constant term.
struct RationalSeries {
    std::vector<mpz_class> numerator;
    std::vector<mpz_class> denominator;
};

/// num/den expanded as a power series to degree D.
SeriesExpansion expand_rational(const RationalSeries& rs, int D,
                                SeriesProvenance provenance = SeriesProvenance::koszul_formula);

/// Hilbert series of a verified Koszul presentation via the Euler-Poincare
/// identity: the inverse of sum_i (-1)^i dim(W_{nu(i)}) t^{nu(i)}.
/// Rejects presentations whose Koszulity cannot be verified (single-relation
/// criterion or monomial overlap criterion).
SeriesExpansion koszul_series(const Presentation& p, int D, const Limits& limits = {});

/// a_i = n a_{i-1} - a_{i-N} with a_0 = 1 and a_i = 0 for i < 0; equals the
/// series inverse of 1 - n t + t^N. Invalid parameter pairs are permitted and
/// flagged through first_negative instead of erroring.
SeriesExpansion recursion_expand(int n, int N, int D);

/// Inverse of 1 - n t + t^N - t^{N+1} + t^{2N} - t^{2N+1} + ... , the series
/// of the pure-power relation x_i^N.
SeriesExpansion infinite_gldim_series(int n, int N, int D);

/// Coefficients by exact quotient linear algebra, for cross-checks.
SeriesExpansion quotient_series(const Presentation& p, int D, const Limits& limits = {});

/// 1 / (1 - n t + t^N) as a rational series.
RationalSeries regular_denominator(int n, int N);

/// The pure-power family in closed rational form:
/// (1 - t^N) / (1 - n t + (n-1) t^{N+1}).
RationalSeries power_denominator(int n, int N);

enum class GkMode { closed_form, numeric };

/// Gelfand-Kirillov dimension read off a recognized denominator family:
/// 0, 2, or -1 (infinite). closed_form applies the case analysis
/// (0 when n = 1; 2 exactly when n = N = 2 in the regular family; infinite
/// otherwise); numeric locates the denominator roots to 1e-9 and reports 2
/// iff all moduli lie within `modulus_tol` of 1, after the same n = 1
/// short-circuit. Unrecognized denominators are rejected.
int gk_dimension(const RationalSeries& rs, GkMode mode, double modulus_tol = 1e-6);

} // namespace nkz
