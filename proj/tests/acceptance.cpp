// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance and threshold is pinned here, in code.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "nkz/classification.hpp"
#include "nkz/distributivity.hpp"
#include "nkz/hilbert.hpp"
#include "nkz/koszul.hpp"
#include "nkz/monomial.hpp"
#include "nkz/pbw.hpp"
#include "nkz/rewriting.hpp"
#include "test_helpers.hpp"

using namespace nkz;
using nkz::testing::random_invertible;
using nkz::testing::random_relation;
using nkz::testing::t2;

namespace {

struct Sample {
    int n;
    int N;
    Presentation p;
};

std::vector<Sample> shared_samples() {
    // The criterion-1 sample set, reused verbatim by criterion 2.
    std::mt19937_64 rng(20240101);
    std::vector<Sample> out;
    for (int n = 2; n <= 3; ++n)
        for (int N = 2; N <= 3; ++N)
            for (int trial = 0; trial < 50; ++trial) {
                Presentation p{n, N, {random_relation(rng, n, N)}};
                out.push_back({n, N, p});
            }
    return out;
}

bool criterion1(std::string& detail, const std::vector<Sample>& samples) {
    int violations = 0, runs = 0;
    for (const auto& s : samples) {
        const GerasimovReport rep = gerasimov_suite(s.p, s.N + 3);
        ++runs;
        if (!rep.all_distributive) ++violations;
    }
    std::ostringstream os;
    os << runs << " random single relations (n,N in {2,3}^2, m up to N+3), " << violations
       << " distributivity violations";
    detail = os.str();
    return violations == 0;
}

bool criterion2(std::string& detail, const std::vector<Sample>& samples) {
    int disagreements = 0, unsound = 0, checked = 0;

    auto check_one = [&](const Presentation& p, int N) {
        const KoszulVerdict a = criterion_check(p);
        const KoszulVerdict b = criterion_check_equalform(p);
        ++checked;
        if (a.is_koszul != b.is_koszul) {
            ++disagreements;
            return;
        }
        const HomologyReport h = homology_oracle(p, 6, 2 * N + 2);
        const bool has_high_homology = h.first_nonzero(2).has_value();
        if (a.is_koszul && !h.vanishes_above_zero()) ++unsound;
        if (!a.is_koszul && !has_high_homology) ++unsound;
    };

    for (const auto& s : samples) check_one(s.p, s.N);
    for (int N = 2; N <= 4; ++N) {
        const std::uint64_t total = pow_checked(2, N);
        for (std::uint64_t wi = 0; wi < total; ++wi)
            check_one(monomial_presentation(2, decode_word(wi, N, 2)), N);
    }
    std::ostringstream os;
    os << checked << " presentations: " << disagreements << " criterion-form disagreements, "
       << unsound << " homology-oracle mismatches within degree 2N+2";
    detail = os.str();
    return disagreements == 0 && unsound == 0;
}

bool criterion3(std::string& detail) {
    std::mt19937_64 rng(20240103);
    int koszul = 0;
    const int total = 200;
    for (int trial = 0; trial < total; ++trial) {
        const int n = 2 + trial % 3;
        Presentation p{n, 2, {random_relation(rng, n, 2)}};
        if (criterion_check(p).is_koszul) ++koszul;
    }
    std::ostringstream os;
    os << koszul << "/" << total << " random quadratic relations over n in {2,3,4} are Koszul";
    detail = os.str();
    return koszul == total;
}

bool criterion4(std::string& detail) {
    int mismatches = 0, words = 0, koszul_n3 = 0;
    for (int N = 2; N <= 5; ++N) {
        const std::uint64_t total = pow_checked(2, N);
        for (std::uint64_t wi = 0; wi < total; ++wi) {
            const Word f = decode_word(wi, N, 2);
            ++words;
            const bool single = is_koszul_single(f);
            if (single != is_koszul_set(make_monomial_set(2, N, {f})).is_koszul) ++mismatches;
            if (N == 3 && single) ++koszul_n3;
        }
    }
    std::ostringstream os;
    os << words << " two-letter monomials with N <= 5, " << mismatches
       << " single/set mismatches; N=3 Koszul singleton count " << koszul_n3 << " (want 6)";
    detail = os.str();
    return mismatches == 0 && koszul_n3 == 6;
}

bool criterion5(std::string& detail) {
    struct Case {
        Presentation p;
        const Word* avoid; // when monomial
        std::vector<long> prefix;
    };
    static const Word sq{0, 0}, cube{0, 0, 0};
    const std::vector<Case> cases = {
        {nkz::testing::symplectic2(), nullptr, {1, 2, 3, 4, 5, 6, 7, 8, 9}},
        {nkz::testing::ant3(), nullptr, {1, 3, 9, 26, 75, 216}},
        {monomial_presentation(2, sq), &sq, {1, 2, 3, 5, 8, 13}},
        {monomial_presentation(2, cube), &cube, {}},
    };
    bool ok = true;
    std::ostringstream os;
    for (const auto& c : cases) {
        const SeriesExpansion s = koszul_series(c.p, 8);
        const SeriesExpansion q = quotient_series(c.p, 8);
        if (s.coeffs != q.coeffs) ok = false;
        if (c.avoid)
            for (int d = 0; d <= 8; ++d)
                if (s.coeffs[static_cast<std::size_t>(d)].get_si() != avoid_count(*c.avoid, 2, d))
                    ok = false;
        for (std::size_t d = 0; d < c.prefix.size(); ++d)
            if (s.coeffs[d] != c.prefix[d]) ok = false;
    }
    // the antisymmetriser recursion identity a_i = 3 a_{i-1} - a_{i-3}
    const SeriesExpansion ant = koszul_series(nkz::testing::ant3(), 8);
    for (int d = 3; d <= 8; ++d)
        if (ant.coeffs[static_cast<std::size_t>(d)] !=
            3 * ant.coeffs[static_cast<std::size_t>(d - 1)] -
                ant.coeffs[static_cast<std::size_t>(d - 3)])
            ok = false;
    os << "series / quotient-dimension / word-count triangle to degree 8 on 4 presentations";
    detail = os.str();
    return ok;
}

bool criterion6(std::string& detail) {
    struct Expect {
        Presentation p;
        bool gldim_infinite, as_g, cy;
    };
    const std::vector<Expect> table = {
        {nkz::testing::symplectic2(), false, true, true},
        {Presentation{2, 2, {t2(2, {{{0, 0}, 1}})}}, true, false, false},
        {Presentation{2, 2, {t2(2, {{{0, 1}, 1}})}}, false, false, false},
    };
    std::mt19937_64 rng(20240106);
    bool ok = true;
    for (const auto& e : table) {
        const QuadraticProfile base = classify_quadratic(e.p);
        if (!base.koszul || base.gldim_infinite != e.gldim_infinite ||
            base.as_gorenstein != e.as_g || base.calabi_yau != e.cy)
            ok = false;
        for (int trial = 0; trial < 20; ++trial) {
            Presentation tp = e.p;
            tp.relations = {
                substitute_generators(e.p.relations.front(), random_invertible(rng, e.p.n))};
            const QuadraticProfile q = classify_quadratic(tp);
            if (q.rank != base.rank || q.symmetric != base.symmetric ||
                q.antisymmetric != base.antisymmetric || q.as_gorenstein != base.as_gorenstein ||
                q.calabi_yau != base.calabi_yau || q.gldim_infinite != base.gldim_infinite)
                ok = false;
        }
    }
    detail = "three-row classification table, flags stable under 20 congruences each";
    return ok;
}

bool criterion7(std::string& detail) {
    std::mt19937_64 rng(20240107);
    std::uniform_int_distribution<int> coef(-2, 2), mode(0, 2);
    bool ok = true;

    // pure-power closed form vs direct check
    for (int n = 1; n <= 3; ++n)
        for (int N = 2; N <= 4; ++N) {
            const Presentation p = monomial_presentation(n, Word(static_cast<std::size_t>(N), 0));
            for (int trial = 0; trial < 20; ++trial) {
                std::vector<Tensor> comps;
                for (int j = 0; j < N; ++j) {
                    Tensor t;
                    t.n = n;
                    t.degree = j;
                    const int m = mode(rng);
                    if (m == 0) {
                        const int c = coef(rng);
                        if (c != 0) t.terms.emplace_back(0, Rational(c));
                    } else if (m == 1 && j > 0) {
                        t = random_relation(rng, n, j);
                    }
                    comps.push_back(std::move(t));
                }
                const PhiMap phi = make_phi(n, N, std::move(comps));
                if (pbw_check(p, phi).is_pbw != pbw_power_closed_form(n, N, phi)) ok = false;
            }
        }

    // gldim-2 shortcut on the symplectic case
    const Presentation symp = symplectic_presentation(2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Tensor> comps;
        for (int j = 0; j < 2; ++j) {
            Tensor t;
            t.n = 2;
            t.degree = j;
            if (j == 0) {
                const int c = coef(rng);
                if (c != 0) t.terms.emplace_back(0, Rational(c));
            } else {
                t = random_relation(rng, 2, 1);
            }
            comps.push_back(std::move(t));
        }
        if (!pbw_check(symp, make_phi(2, 2, std::move(comps))).is_pbw) ok = false;
    }

    // Calabi-Yau grid: CY exactly when v = 0
    for (int n : {2, 4}) {
        for (int v_on : {0, 1}) {
            for (long lam : {0L, 1L}) {
                Tensor v;
                v.n = n;
                v.degree = 1;
                if (v_on) v.terms.emplace_back(0, Rational(1));
                const SymplecticDeformation d =
                    classify_symplectic_deformation(n, v, Rational(lam));
                if (d.calabi_yau != (v_on == 0)) ok = false;
                if (!d.koszul_filtered || !d.pbw_verified) ok = false;
            }
        }
    }
    detail =
        "power closed form x 20 phi per (n<=3, N<=4); symplectic shortcut x 20; CY grid over "
        "(n, v, lambda)";
    return ok;
}

bool criterion8(std::string& detail) {
    bool ok = true;
    for (int n = 1; n <= 6; ++n)
        for (int N = 2; N <= 6; ++N) {
            const RationalSeries reg = regular_denominator(n, N);
            if (gk_dimension(reg, GkMode::closed_form) !=
                gk_dimension(reg, GkMode::numeric, 1e-6))
                ok = false;
            const RationalSeries pow = power_denominator(n, N);
            if (gk_dimension(pow, GkMode::closed_form) !=
                gk_dimension(pow, GkMode::numeric, 1e-6))
                ok = false;
        }
    if (gk_dimension(regular_denominator(2, 2), GkMode::numeric, 1e-6) != 2) ok = false;
    if (gk_dimension(regular_denominator(3, 2), GkMode::numeric, 1e-6) != -1) ok = false;
    if (gk_dimension(regular_denominator(2, 3), GkMode::numeric, 1e-6) != -1) ok = false;
    for (int N = 2; N <= 6; ++N)
        if (gk_dimension(regular_denominator(1, N), GkMode::numeric, 1e-6) != 0) ok = false;
    detail = "closed-form vs numeric agreement on all (n <= 6, N <= 6), tolerance 1e-6";
    return ok;
}

bool criterion9(std::string& detail) {
    const Presentation prod = free_product(nkz::testing::symplectic2(), Presentation{1, 2, {}});
    bool ok = prod.n == 3;
    ok = ok && criterion_check(prod).is_koszul;
    ok = ok && gerasimov_suite(prod, 5).all_distributive;
    const SeriesExpansion s = koszul_series(prod, 6);
    const SeriesExpansion expect = expand_rational(regular_denominator(3, 2), 6);
    ok = ok && s.coeffs == expect.coeffs;
    detail = "symplectic * free(1): Koszul, distributive to m=5, series = (1 - 3t + t^2)^{-1}";
    return ok;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Sample> samples = shared_samples();

    std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"1 empirical distributivity", [&](std::string& d) { return criterion1(d, samples); }},
        {"2 criterion/oracle agreement", [&](std::string& d) { return criterion2(d, samples); }},
        {"3 quadratic universality", criterion3},
        {"4 monomial criterion exactness", criterion4},
        {"5 Hilbert triangle", criterion5},
        {"6 quadratic classification table", criterion6},
        {"7 PBW agreement", criterion7},
        {"8 GK dimension modes", criterion8},
        {"9 free product", criterion9},
    };

    int failures = 0;
    for (auto& [name, fn] : criteria) {
        std::string detail;
        bool pass = false;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << name << ": " << detail
                  << "\n";
    }
    const auto t1 = std::chrono::steady_clock::now();
    std::cout << (failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE FAILED") << " ("
              << std::chrono::duration<double>(t1 - t0).count() << "s)\n";
    return failures == 0 ? 0 : 1;
}
