#include "nkz/hilbert.hpp"

#include <cmath>
#include <complex>

#include "nkz/koszul.hpp"
#include "nkz/monomial.hpp"

namespace nkz {

namespace {

void flag_negatives(SeriesExpansion& s) {
    for (std::size_t d = 0; d < s.coeffs.size(); ++d)
        if (s.coeffs[d] < 0) {
            s.first_negative = static_cast<int>(d);
            return;
        }
}

std::vector<mpz_class> invert_series(const std::vector<mpz_class>& q, int D) {
    if (q.empty() || q[0] != 1)
        throw InvalidInput("series inversion requires constant term 1");
    std::vector<mpz_class> a(static_cast<std::size_t>(D) + 1);
    a[0] = 1;
    for (int d = 1; d <= D; ++d) {
        mpz_class acc = 0;
        for (int m = 1; m <= d && m < static_cast<int>(q.size()); ++m)
            acc += q[static_cast<std::size_t>(m)] * a[static_cast<std::size_t>(d - m)];
        a[static_cast<std::size_t>(d)] = -acc;
    }
    return a;
}

} // namespace

SeriesExpansion expand_rational(const RationalSeries& rs, int D, SeriesProvenance provenance) {
    if (rs.denominator.empty() || rs.denominator[0] == 0)
        throw InvalidInput("rational series denominator must have nonzero constant term");
    if (rs.denominator[0] != 1)
        throw InvalidInput("rational series denominator must be normalized with constant term 1");
    SeriesExpansion out;
    out.provenance = provenance;
    std::vector<mpz_class> inv = invert_series(rs.denominator, D);
    out.coeffs.assign(static_cast<std::size_t>(D) + 1, 0);
    for (int d = 0; d <= D; ++d) {
        mpz_class acc = 0;
        for (int m = 0; m <= d && m < static_cast<int>(rs.numerator.size()); ++m)
            acc += rs.numerator[static_cast<std::size_t>(m)] * inv[static_cast<std::size_t>(d - m)];
        out.coeffs[static_cast<std::size_t>(d)] = acc;
    }
    flag_negatives(out);
    return out;
}

SeriesExpansion koszul_series(const Presentation& p, int D, const Limits& limits) {
    validate_presentation(p);
    if (D < 0) throw InvalidInput("negative series degree");
    if (D > limits.max_degree)
        throw ResourceLimit("series degree " + std::to_string(D) + " exceeds cap " +
                            std::to_string(limits.max_degree));

    // Verify Koszulity before using the Euler-Poincare formula.
    const Subspace r = relation_space(p);
    if (r.dim() == 1) {
        if (!criterion_check(p, limits).is_koszul)
            throw InvalidInput("koszul_series requires a Koszul presentation");
    } else if (!p.relations.empty()) {
        bool monomial = true;
        std::vector<Word> words;
        for (const auto& row : r.rows) {
            if (row.terms.size() != 1) {
                monomial = false;
                break;
            }
            words.push_back(decode_word(row.lead_word(), row.degree, row.n));
        }
        if (!monomial)
            throw InvalidInput(
                "koszul_series: Koszulity is only verifiable here for dim R = 1 or monomial sets");
        if (!is_koszul_set(make_monomial_set(p.n, p.N, words)).is_koszul)
            throw InvalidInput("koszul_series requires a Koszul presentation");
    }

    std::vector<mpz_class> q(static_cast<std::size_t>(D) + 1, 0);
    q[0] = 1;
    for (int i = 1;; ++i) {
        const std::uint64_t deg = nu(p.N, i);
        if (deg > static_cast<std::uint64_t>(D)) break;
        const Subspace w = w_space(p, static_cast<int>(deg), limits);
        if (w.is_zero() && deg >= static_cast<std::uint64_t>(p.N)) break;
        const mpz_class term(static_cast<long>(w.dim()));
        q[static_cast<std::size_t>(deg)] += (i % 2 == 0) ? term : -term;
    }

    SeriesExpansion out;
    out.provenance = SeriesProvenance::koszul_formula;
    out.coeffs = invert_series(q, D);
    flag_negatives(out);
    return out;
}

SeriesExpansion recursion_expand(int n, int N, int D) {
    if (N < 1 || D < 0) throw InvalidInput("recursion_expand: bad parameters");
    SeriesExpansion out;
    out.provenance = SeriesProvenance::recursion;
    out.coeffs.assign(static_cast<std::size_t>(D) + 1, 0);
    out.coeffs[0] = 1;
    for (int i = 1; i <= D; ++i) {
        mpz_class v = mpz_class(n) * out.coeffs[static_cast<std::size_t>(i - 1)];
        if (i - N >= 0) v -= out.coeffs[static_cast<std::size_t>(i - N)];
        out.coeffs[static_cast<std::size_t>(i)] = v;
    }
    flag_negatives(out);
    return out;
}

SeriesExpansion infinite_gldim_series(int n, int N, int D) {
    if (N < 2 || D < 0) throw InvalidInput("infinite_gldim_series: bad parameters");
    std::vector<mpz_class> q(static_cast<std::size_t>(D) + 1, 0);
    q[0] = 1;
    if (D >= 1) q[1] -= n;
    for (int k = N; k <= D; k += N) {
        q[static_cast<std::size_t>(k)] += 1;
        if (k + 1 <= D) q[static_cast<std::size_t>(k + 1)] -= 1;
    }
    SeriesExpansion out;
    out.provenance = SeriesProvenance::koszul_formula;
    out.coeffs = invert_series(q, D);
    flag_negatives(out);
    return out;
}

SeriesExpansion quotient_series(const Presentation& p, int D, const Limits& limits) {
    validate_presentation(p);
    if (D > limits.max_degree)
        throw ResourceLimit("series degree " + std::to_string(D) + " exceeds cap " +
                            std::to_string(limits.max_degree));
    SeriesExpansion out;
    out.provenance = SeriesProvenance::quotient_dims;
    if (p.relations.empty()) {
        for (int d = 0; d <= D; ++d)
            out.coeffs.emplace_back(static_cast<unsigned long>(pow_checked(p.n, d)));
        return out;
    }
    IdealSlices slices(p, D, limits);
    for (int d = 0; d <= D; ++d) out.coeffs.emplace_back(static_cast<long>(slices.alg_dim(d)));
    return out;
}

RationalSeries regular_denominator(int n, int N) {
    if (n < 1 || N < 2) throw InvalidInput("regular_denominator: bad parameters");
    RationalSeries rs;
    rs.numerator = {1};
    rs.denominator.assign(static_cast<std::size_t>(N) + 1, 0);
    rs.denominator[0] = 1;
    rs.denominator[1] = -n;
    rs.denominator[static_cast<std::size_t>(N)] += 1;
    return rs;
}

RationalSeries power_denominator(int n, int N) {
    if (n < 1 || N < 2) throw InvalidInput("power_denominator: bad parameters");
    RationalSeries rs;
    rs.numerator.assign(static_cast<std::size_t>(N) + 1, 0);
    rs.numerator[0] = 1;
    rs.numerator[static_cast<std::size_t>(N)] = -1;
    rs.denominator.assign(static_cast<std::size_t>(N) + 2, 0);
    rs.denominator[0] = 1;
    rs.denominator[1] = -n;
    rs.denominator[static_cast<std::size_t>(N) + 1] = n - 1;
    while (!rs.denominator.empty() && rs.denominator.back() == 0) rs.denominator.pop_back();
    return rs;
}

namespace {

struct FamilyMatch {
    int n = 0;
    int N = 0;
    bool power = false;
};

std::optional<FamilyMatch> recognize(const RationalSeries& rs) {
    auto trimmed = [](std::vector<mpz_class> v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    };
    const auto num = trimmed(rs.numerator);
    const auto den = trimmed(rs.denominator);
    if (den.size() >= 2 && den[0] == 1 && den[1] <= -1) {
        const int n = static_cast<int>(-den[1].get_si());
        // regular family: num = 1, den = 1 - n t + t^N
        if (num == std::vector<mpz_class>{1} && den.back() == 1 && den.size() >= 3) {
            const int N = static_cast<int>(den.size()) - 1;
            if (trimmed(regular_denominator(n, N).denominator) == den) return FamilyMatch{n, N, false};
        }
        // power family: num = 1 - t^N, den = 1 - n t + (n-1) t^{N+1}
        if (num.size() >= 3 && num[0] == 1 && num.back() == -1) {
            const int N = static_cast<int>(num.size()) - 1;
            RationalSeries ref = power_denominator(n, N);
            if (trimmed(ref.numerator) == num && trimmed(ref.denominator) == den)
                return FamilyMatch{n, N, true};
        }
    }
    return std::nullopt;
}

/// Durand-Kerner root finder for an integer polynomial (ascending coeffs).
std::vector<std::complex<double>> poly_roots(const std::vector<mpz_class>& coeffs) {
    std::vector<std::complex<double>> c;
    for (const auto& z : coeffs) c.emplace_back(z.get_d(), 0.0);
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const std::size_t deg = c.size() - 1;
    for (auto& z : c) z /= c[deg];
    std::vector<std::complex<double>> roots(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t i = 0; i < deg; ++i) {
        acc *= seed;
        roots[i] = acc;
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-9) break;
    }
    return roots;
}

} // namespace

int gk_dimension(const RationalSeries& rs, GkMode mode, double modulus_tol) {
    const auto match = recognize(rs);
    if (!match)
        throw InvalidInput("gk_dimension: denominator outside the recognized families");
    const auto [n, N, power] = *match;
    if (n == 1) return 0; // finite-dimensional in both families
    if (mode == GkMode::closed_form) {
        if (power) return -1;
        return (n == 2 && N == 2) ? 2 : -1;
    }
    const std::vector<mpz_class>& den =
        power ? power_denominator(n, N).denominator : rs.denominator;
    bool all_unit = true;
    for (const auto& root : poly_roots(den))
        if (std::abs(std::abs(root) - 1.0) > modulus_tol) all_unit = false;
    return all_unit ? 2 : -1;
}

} // namespace nkz
