#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nkz/presentation.hpp"

namespace nkz {

/// Filtered deformation data for a one-dimensional relation space: the
/// images phi_j(f) of the single relation f, one homogeneous tensor of
/// degree j for j = 0..N-1 (the degree-0 component is a scalar). The
/// deformed relation is f - sum_j phi_j(f).
struct PhiMap {
    int n = 0;
    int N = 2;
    std::vector<Tensor> components; // index j, degree-j tensor (possibly zero)

    const Tensor& component(int j) const { return components[static_cast<std::size_t>(j)]; }
    Rational constant() const {
        const Tensor& c = components[0];
        return c.is_zero() ? Rational(0) : c.terms.front().second;
    }
};

PhiMap make_phi(int n, int N, std::vector<Tensor> components);
PhiMap zero_phi(int n, int N);

struct PbwVerdict {
    bool is_pbw = true;
    /// "J1", "J2(j)" or "J3" for the first violated condition.
    std::optional<std::string> failed_condition;
    /// Basis element of W_{N+1} witnessing the failure.
    std::optional<Tensor> witness;
};

/// Deformation conditions on W_{N+1} for an N-Koszul algebra with dim R = 1:
/// writes each basis element w as sum_k c_k f (x) x_k = sum_k d_k x_k (x) f
/// and checks exactly that
///   (J1)   (phi^1_{N-1} - phi^2_{N-1})(w) lies in R,
///   (J2 j) phi_j of that element + (phi^1_{j-1} - phi^2_{j-1})(w) = 0,
///   (J3)   phi_0 of that element = 0.
/// Vacuously true when W_{N+1} = 0.
PbwVerdict pbw_check(const Presentation& p, const PhiMap& phi, const Limits& limits = {});

/// Closed form for the pure-power relation f = x_0^N: the deformation is PBW
/// iff every phi_j(f) is a scalar multiple of x_0^j. Must agree with
/// pbw_check on every input.
bool pbw_power_closed_form(int n, int N, const PhiMap& phi);

/// The standard symplectic presentation sum_i (x_i x_{i+n/2} - x_{i+n/2} x_i)
/// on an even number of generators.
Presentation symplectic_presentation(int n);

struct SymplecticDeformation {
    bool koszul_filtered = true;
    bool calabi_yau = false;
    bool pbw_verified = false;
    /// Certificate text for the Hochschild vanishing carried by the
    /// classification, recorded rather than computed.
    std::string hochschild_note;
};

/// Deformations of the symplectic relation by v + lambda: Calabi-Yau exactly
/// when the linear part v vanishes.
SymplecticDeformation classify_symplectic_deformation(int n, const Tensor& v,
                                                      const Rational& lambda,
                                                      const Limits& limits = {});

/// Constants-only deformations preserve the Calabi-Yau property; requires
/// phi_j = 0 for all j >= 1, a passing pbw_check, and a caller-certified
/// d-Calabi-Yau base algebra.
bool constants_only_cy(const Presentation& p, int base_cy_dimension, const PhiMap& phi,
                       const Limits& limits = {});

} // namespace nkz
