#pragma once

#include <optional>
#include <vector>

#include "nkz/presentation.hpp"

namespace nkz {

/// Matrix of coefficients of a quadratic relation: M[i][j] is the coefficient
/// of x_i x_j. Relative to the identity basis of the given presentation.
struct CoeffMatrix {
    int n = 0;
    std::vector<std::vector<Rational>> m;

    const Rational& at(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
};

CoeffMatrix coeff_matrix(const Tensor& f);

int matrix_rank(const CoeffMatrix& m);
bool matrix_symmetric(const CoeffMatrix& m);
bool matrix_antisymmetric(const CoeffMatrix& m);

/// Congruence action P^t M P of an invertible change of generators; the
/// classification flags are invariant under it.
CoeffMatrix congruence(const CoeffMatrix& m, const std::vector<std::vector<Rational>>& p);

/// Applies an invertible substitution x_i = sum_j subst[i][j] y_j to a
/// homogeneous tensor, returning its coefficients in the y-basis.
Tensor substitute_generators(const Tensor& f, const std::vector<std::vector<Rational>>& subst);

/// True iff every adjacent transposition of tensor factors negates f
/// (adjacent transpositions generate the full symmetric group).
bool is_antisymmetric(const Tensor& f);

/// Signed sum over all permutations of the product of the chosen generators.
/// Indices must be distinct (a repeated index would give the zero tensor).
Tensor antisymmetriser(int n, const std::vector<int>& indices);

/// Closed-form classification of a single antisymmetric relation of degree N
/// with 2 <= N <= n over the rationals.
struct AntisymProfile {
    int n = 0;
    int N = 0;
    bool is_antisymmetric = true;
    bool koszul = true;
    int global_dimension = 2;
    bool as_gorenstein = false;
    bool calabi_yau = false;
    /// Verified instances of (R (x) V^{xm}) meet (V^{xm} (x) R) = 0,
    /// for m = 1..N-1.
    std::vector<int> verified_zero_overlaps;
};

AntisymProfile classify_antisymmetric(const Presentation& p, const Limits& limits = {});

/// Closed-form classification of an arbitrary single quadratic relation.
struct QuadraticProfile {
    int rank = 0;
    bool symmetric = false;
    bool antisymmetric = false;
    bool nondegenerate = false;
    bool p1 = false; // some basis gives M a single nonzero column (rank 1)
    bool p2 = false; // symmetric of rank 1
    bool koszul = true;
    bool gldim_infinite = false; // otherwise 2
    bool as_gorenstein = false;
    bool calabi_yau = false;
};

QuadraticProfile classify_quadratic(const Presentation& p);

/// Exact quotient-coordinate probe of the zerodivisor-freeness of a nonzero
/// degree-1 element, for quadratic relations of rank > 1: checks a*v != 0 and
/// v*a != 0 in A_{d+1} for every quotient basis element a of A_d, d <= d_max.
bool zerodivisor_probe(const Presentation& p, const Tensor& v, int d_max,
                       const Limits& limits = {});

} // namespace nkz
