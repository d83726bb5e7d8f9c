#pragma once

#include <cstdint>
#include <vector>

#include "nkz/subspace.hpp"

namespace nkz {

/// Presentation of the graded algebra A(V, R): n generators of degree 1 and
/// a list of homogeneous degree-N relation tensors spanning R inside V^{xN}.
/// Generators are 0-indexed; a presentation with n = 0 is the trivial algebra
/// and is accepted only with an empty relation list.
struct Presentation {
    int n = 0;
    int N = 2;
    std::vector<Tensor> relations;
};

void validate_presentation(const Presentation& p);

/// Single-relation fast paths key off this: the canonical span of the
/// relation list.
Subspace relation_space(const Presentation& p);

/// The jump map: nu(2i) = N*i, nu(2i+1) = N*i + 1. Strictly increasing for
/// N >= 2, with successive gaps 1 or N-1.
std::uint64_t nu(int N, int i);

/// W_m = intersection of all V^{xi} (x) R (x) V^{xj} with i + N + j = m.
/// W_m = V^{xm} for m < N and W_N = R; higher W's by nested intersections.
Subspace w_space(const Presentation& p, int m, const Limits& limits = {});

/// Degree-d slices of the two-sided ideal generated by R, as forward
/// echelon bases built by the recursion I_d = I_{d-1} (x) V + V^{x(d-N)} (x) R.
/// Also provides quotient coordinates for A_d = V^{xd} / I_d: the non-pivot
/// words form a basis of the quotient and reduction is the projection.
class IdealSlices {
public:
    IdealSlices(const Presentation& p, int max_degree, const Limits& limits = {});

    int n() const { return p_.n; }
    int max_degree() const { return max_degree_; }
    const Presentation& presentation() const { return p_; }

    const Echelon& slice(int d) const;
    long long ideal_dim(int d) const;
    long long alg_dim(int d) const; // n^d - ideal_dim(d)

    /// Projection of a degree-d tensor onto quotient coordinates (its normal
    /// form against the degree-d slice, supported on non-pivot words).
    Tensor project(const Tensor& t) const;

    /// Non-pivot words of degree d, ascending: coset representatives forming
    /// a linear basis of A_d.
    std::vector<std::uint64_t> basis_words(int d) const;

private:
    Presentation p_;
    int max_degree_;
    std::vector<Echelon> slices_; // index d - N for d in [N, max_degree]
};

/// dim A_d computed by exact quotient linear algebra (not rewriting), so it
/// is correct even for non-confluent presentations.
long long graded_dim(const Presentation& p, int d, const Limits& limits = {});

/// Free product: generators concatenated, relations of q shifted by p.n.
Presentation free_product(const Presentation& p, const Presentation& q);

} // namespace nkz
