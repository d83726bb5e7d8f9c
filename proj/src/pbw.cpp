#include "nkz/pbw.hpp"

#include "nkz/koszul.hpp"

namespace nkz {

PhiMap make_phi(int n, int N, std::vector<Tensor> components) {
    if (N < 2) throw InvalidInput("phi map requires N >= 2");
    if (static_cast<int>(components.size()) > N)
        throw InvalidInput("phi map has components of degree >= N");
    components.resize(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) {
        Tensor& c = components[static_cast<std::size_t>(j)];
        if (c.terms.empty()) {
            c.n = n;
            c.degree = j;
        }
        if (c.n != n || c.degree != j)
            throw InvalidInput("phi component " + std::to_string(j) + " has wrong degree or space");
    }
    PhiMap phi;
    phi.n = n;
    phi.N = N;
    phi.components = std::move(components);
    return phi;
}

PhiMap zero_phi(int n, int N) { return make_phi(n, N, {}); }

namespace {

/// Coefficients of w relative to the independent family {f (x) x_k}_k
/// (right = true) or {x_k (x) f}_k (right = false). Assumes w lies in the
/// corresponding space, which holds for every element of W_{N+1}.
std::vector<Rational> border_coefficients(const Tensor& w, const Tensor& f, bool right) {
    const int n = w.n;
    std::vector<Rational> coeffs(static_cast<std::size_t>(n));
    const std::uint64_t probe = f.lead_word();
    const Rational& probe_coeff = f.lead_coeff();
    for (int k = 0; k < n; ++k) {
        const std::uint64_t word =
            right ? probe * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k)
                  : static_cast<std::uint64_t>(k) * pow_checked(n, f.degree) + probe;
        if (const Rational* c = w.coeff(word))
            coeffs[static_cast<std::size_t>(k)] = *c / probe_coeff;
    }
    return coeffs;
}

/// sum_k coeffs[k] * (t (x) x_k) or sum_k coeffs[k] * (x_k (x) t).
Tensor border_combination(const std::vector<Rational>& coeffs, const Tensor& t, bool right) {
    const int n = t.n;
    Tensor acc;
    acc.n = n;
    acc.degree = t.degree + 1;
    for (int k = 0; k < n; ++k) {
        if (coeffs[static_cast<std::size_t>(k)].is_zero()) continue;
        Tensor unit;
        unit.n = n;
        unit.degree = 1;
        unit.terms.emplace_back(static_cast<std::uint64_t>(k), coeffs[static_cast<std::size_t>(k)]);
        axpy(acc, Rational(1), right ? tensor_product(t, unit) : tensor_product(unit, t));
    }
    return acc;
}

} // namespace

PbwVerdict pbw_check(const Presentation& p, const PhiMap& phi, const Limits& limits) {
    validate_presentation(p);
    if (phi.n != p.n || phi.N != p.N) throw InvalidInput("phi map over a different presentation");
    const Subspace r = relation_space(p);
    if (r.dim() != 1) throw InvalidInput("PBW check requires dim R = 1");
    if (!criterion_check(p, limits).is_koszul)
        throw InvalidInput("PBW check requires an N-Koszul presentation");
    const Tensor& f = r.rows.front();

    const Subspace w_top = w_space(p, p.N + 1, limits);
    PbwVerdict verdict;
    for (const auto& w : w_top.rows) {
        const std::vector<Rational> c = border_coefficients(w, f, true);
        const std::vector<Rational> d = border_coefficients(w, f, false);

        // (J1): t = (phi^1_{N-1} - phi^2_{N-1})(w) must lie in R = k f.
        const Tensor& top = phi.component(p.N - 1);
        Tensor t = border_combination(c, top, true);
        axpy(t, Rational(-1), border_combination(d, top, false));
        Rational alpha(0);
        if (!t.is_zero()) {
            if (const Rational* tc = t.coeff(f.lead_word())) alpha = *tc / f.lead_coeff();
            Tensor rem = t;
            axpy(rem, -alpha, f);
            if (!rem.is_zero()) {
                verdict.is_pbw = false;
                verdict.failed_condition = "J1";
                verdict.witness = w;
                return verdict;
            }
        }

        // (J2 j), j = 1..N-1: alpha * phi_j(f) + (phi^1_{j-1} - phi^2_{j-1})(w) = 0.
        for (int j = 1; j < p.N; ++j) {
            Tensor lhs = scale(phi.component(j), alpha);
            if (j == 1) {
                // phi^1_0(w) - phi^2_0(w) with the scalar component
                const Rational lam = phi.constant();
                for (int k = 0; k < p.n; ++k) {
                    const Rational coeff =
                        lam * (c[static_cast<std::size_t>(k)] - d[static_cast<std::size_t>(k)]);
                    if (coeff.is_zero()) continue;
                    Tensor unit;
                    unit.n = p.n;
                    unit.degree = 1;
                    unit.terms.emplace_back(static_cast<std::uint64_t>(k), coeff);
                    axpy(lhs, Rational(1), unit);
                }
            } else {
                const Tensor& prev = phi.component(j - 1);
                axpy(lhs, Rational(1), border_combination(c, prev, true));
                axpy(lhs, Rational(-1), border_combination(d, prev, false));
            }
            if (!lhs.is_zero()) {
                verdict.is_pbw = false;
                verdict.failed_condition = "J2(" + std::to_string(j) + ")";
                verdict.witness = w;
                return verdict;
            }
        }

        // (J3): phi_0 applied to alpha * f.
        if (!(alpha * phi.constant()).is_zero()) {
            verdict.is_pbw = false;
            verdict.failed_condition = "J3";
            verdict.witness = w;
            return verdict;
        }
    }
    return verdict;
}

bool pbw_power_closed_form(int n, int N, const PhiMap& phi) {
    if (phi.n != n || phi.N != N) throw InvalidInput("phi map over different parameters");
    // Relation x_0^N: PBW iff phi_j(f) = lambda_j x_0^j for every j.
    for (int j = 1; j < N; ++j) {
        const Tensor& c = phi.component(j);
        if (c.is_zero()) continue;
        if (c.terms.size() != 1 || c.terms.front().first != 0) return false;
    }
    return true;
}

Presentation symplectic_presentation(int n) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("symplectic relation requires even n >= 2");
    std::vector<std::pair<Word, Rational>> terms;
    for (int i = 0; i < n / 2; ++i) {
        terms.push_back({{i, i + n / 2}, Rational(1)});
        terms.push_back({{i + n / 2, i}, Rational(-1)});
    }
    Presentation p;
    p.n = n;
    p.N = 2;
    p.relations.push_back(tensor_from_words<Rational>(n, 2, terms));
    return p;
}

SymplecticDeformation classify_symplectic_deformation(int n, const Tensor& v,
                                                      const Rational& lambda,
                                                      const Limits& limits) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("symplectic deformation requires even n >= 2");
    if (!v.is_zero() && (v.n != n || v.degree != 1))
        throw InvalidInput("linear part must be a degree-1 tensor over the same generators");

    const Presentation p = symplectic_presentation(n);
    Tensor v_fixed = v;
    v_fixed.n = n;
    v_fixed.degree = 1;
    Tensor constant;
    constant.n = n;
    constant.degree = 0;
    if (!lambda.is_zero()) constant.terms.emplace_back(0, lambda);

    SymplecticDeformation out;
    out.koszul_filtered = true;
    out.calabi_yau = v_fixed.is_zero();
    out.pbw_verified = pbw_check(p, make_phi(n, 2, {constant, v_fixed}), limits).is_pbw;
    out.hochschild_note =
        "bimodule cohomology HH^i(U, U (x) U) vanishes for i != 2 (carried by the "
        "classification of symplectic deformations, not recomputed here)";
    return out;
}

bool constants_only_cy(const Presentation& p, int base_cy_dimension, const PhiMap& phi,
                       const Limits& limits) {
    if (base_cy_dimension < 2) throw InvalidInput("Calabi-Yau dimension must be >= 2");
    for (int j = 1; j < phi.N; ++j)
        if (!phi.component(j).is_zero())
            throw InvalidInput("constants-only deformation has nonzero phi_" + std::to_string(j));
    if (!pbw_check(p, phi, limits).is_pbw)
        throw InvalidInput("constants-only deformation failed the PBW conditions");
    return true;
}

} // namespace nkz
