#include <doctest.h>

#include <random>

#include "nkz/hilbert.hpp"
#include "nkz/monomial.hpp"
#include "nkz/pbw.hpp"
#include "nkz/rewriting.hpp"
#include "test_helpers.hpp"

using namespace nkz;
using nkz::testing::t2;

namespace {

Presentation power_presentation(int n, int N) {
    return monomial_presentation(n, Word(static_cast<std::size_t>(N), 0));
}

PhiMap random_phi(std::mt19937_64& rng, int n, int N) {
    std::uniform_int_distribution<int> mode(0, 2), coef(-2, 2);
    std::vector<Tensor> comps;
    for (int j = 0; j < N; ++j) {
        const int m = mode(rng);
        if (m == 0 || j == 0) {
            // scalar multiple of x0^j (always valid for the power family)
            Tensor t;
            t.n = n;
            t.degree = j;
            const int c = coef(rng);
            if (c != 0) t.terms.emplace_back(0, Rational(c));
            comps.push_back(std::move(t));
        } else if (m == 1) {
            comps.push_back(nkz::testing::random_relation(rng, n, j));
        } else {
            Tensor t;
            t.n = n;
            t.degree = j;
            comps.push_back(std::move(t)); // zero
        }
    }
    return make_phi(n, N, std::move(comps));
}

} // namespace

TEST_CASE("gldim-2 shortcut: any deformation of the symplectic algebra is PBW") {
    Presentation p = symplectic_presentation(2);
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 20; ++trial) {
        PhiMap phi = random_phi(rng, 2, 2);
        CHECK(pbw_check(p, phi).is_pbw);
    }
}

TEST_CASE("pure-power deformations: closed form and direct check agree") {
    std::mt19937_64 rng(103);
    for (int n = 1; n <= 3; ++n)
        for (int N = 2; N <= 4; ++N) {
            Presentation p = power_presentation(n, N);
            for (int trial = 0; trial < 20; ++trial) {
                PhiMap phi = random_phi(rng, n, N);
                CHECK(pbw_check(p, phi).is_pbw == pbw_power_closed_form(n, N, phi));
            }
        }
}

TEST_CASE("the worked pure-power examples") {
    Presentation p = power_presentation(2, 3);
    // phi_1(f) = x1: not a polynomial in x0, rejected
    PhiMap bad = make_phi(2, 3, {Tensor{2, 0, {}}, t2(2, {{{1}, 1}}), Tensor{2, 2, {}}});
    PbwVerdict v = pbw_check(p, bad);
    CHECK(!v.is_pbw);
    REQUIRE(v.failed_condition.has_value());
    CHECK(*v.failed_condition == "J2(2)");
    CHECK(!pbw_power_closed_form(2, 3, bad));

    // phi_2(f) = x0^2, phi_0(f) = 1: a polynomial in x0, accepted
    Tensor one;
    one.n = 2;
    one.degree = 0;
    one.terms.emplace_back(0, Rational(1));
    PhiMap good = make_phi(2, 3, {one, Tensor{2, 1, {}}, t2(2, {{{0, 0}, 1}})});
    CHECK(pbw_check(p, good).is_pbw);
    CHECK(pbw_power_closed_form(2, 3, good));

    // phi = 0: the undeformed algebra
    CHECK(pbw_check(p, zero_phi(2, 3)).is_pbw);
    CHECK(pbw_power_closed_form(2, 3, zero_phi(2, 3)));
}

TEST_CASE("symplectic deformation classification") {
    Tensor zero_v;
    zero_v.n = 2;
    zero_v.degree = 1;

    // Weyl algebra: v = 0, lambda = 1
    SymplecticDeformation weyl = classify_symplectic_deformation(2, zero_v, Rational(1));
    CHECK(weyl.koszul_filtered);
    CHECK(weyl.calabi_yau);
    CHECK(weyl.pbw_verified);

    SymplecticDeformation broken = classify_symplectic_deformation(2, t2(2, {{{0}, 1}}), Rational(0));
    CHECK(!broken.calabi_yau);
    CHECK(broken.pbw_verified);

    Tensor zero_v4;
    zero_v4.n = 4;
    zero_v4.degree = 1;
    SymplecticDeformation plain = classify_symplectic_deformation(4, zero_v4, Rational(0));
    CHECK(plain.calabi_yau);

    CHECK_THROWS_AS(classify_symplectic_deformation(3, zero_v, Rational(0)), InvalidInput);

    // rescaling the relation rescales (v, lambda) jointly and preserves the verdict
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 5; ++trial) {
        const Rational c(static_cast<long>(1 + rng() % 5), static_cast<long>(1 + rng() % 3));
        Tensor v = t2(2, {{{0}, 1}});
        CHECK(classify_symplectic_deformation(2, scale(v, c), Rational(2) * c).calabi_yau ==
              classify_symplectic_deformation(2, v, Rational(2)).calabi_yau);
        CHECK(classify_symplectic_deformation(2, scale(zero_v, c), c).calabi_yau ==
              classify_symplectic_deformation(2, zero_v, Rational(1)).calabi_yau);
    }
}

TEST_CASE("constants-only deformations") {
    Presentation p = symplectic_presentation(2);
    Tensor one;
    one.n = 2;
    one.degree = 0;
    one.terms.emplace_back(0, Rational(1));
    CHECK(constants_only_cy(p, 2, make_phi(2, 2, {one})));

    Presentation p4 = symplectic_presentation(4);
    Tensor five;
    five.n = 4;
    five.degree = 0;
    five.terms.emplace_back(0, Rational(5));
    CHECK(constants_only_cy(p4, 2, make_phi(4, 2, {five})));

    // nonzero phi_1 is rejected at the gate
    PhiMap linear = make_phi(2, 2, {one, t2(2, {{{0}, 1}})});
    CHECK_THROWS_AS(constants_only_cy(p, 2, linear), InvalidInput);
}

TEST_CASE("filtered rewriting sees the PBW dimension count") {
    // inhomogeneous system for f - v - lambda on the symplectic relation:
    // confluent, and the irreducible words of filtration degree <= d count
    // sum of the graded dimensions
    Presentation p = symplectic_presentation(2);
    Poly poly = {{{1, 0}, Rational(1)}, {{0, 1}, Rational(-1)}, {{0}, Rational(-1)},
                 {{}, Rational(-2)}};
    // lead is x1x0 (largest degree-2 word present)
    RewriteRule rule = make_rule_poly(2, poly);
    CHECK(rule.lead == Word{1, 0});
    CHECK(confluence_check(rule).confluent());
    for (int d = 0; d <= 6; ++d) {
        long long filtered = 0;
        long long graded = 0;
        for (int i = 0; i <= d; ++i) {
            filtered += avoid_count(rule.lead, 2, i);
            graded += graded_dim(p, i);
        }
        CHECK(filtered == graded);
    }
}

TEST_CASE("filtered dimension oracle over random confluent quadratic systems") {
    std::mt19937_64 rng(109);
    std::uniform_int_distribution<int> coef(-3, 3);
    int confluent_seen = 0;
    for (int trial = 0; trial < 40 && confluent_seen < 10; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        Presentation p{n, 2, {nkz::testing::random_relation(rng, n, 2)}};
        // deformed relation f - v - lambda as a polynomial
        Poly poly;
        for (auto& [w, c] : poly_from_tensor(p.relations.front())) poly.emplace_back(w, c);
        for (int i = 0; i < n; ++i) {
            const int c = coef(rng);
            if (c) poly.push_back({{i}, Rational(-c)});
        }
        const int lam = coef(rng);
        if (lam) poly.push_back({{}, Rational(-lam)});
        RewriteRule rule = make_rule_poly(n, poly);
        if (static_cast<int>(rule.lead.size()) != 2) continue; // degenerate sample
        if (!confluence_check(rule).confluent()) continue;
        ++confluent_seen;
        long long filtered = 0, graded = 0;
        for (int d = 0; d <= 6; ++d) {
            filtered += avoid_count(rule.lead, n, d);
            graded += graded_dim(p, d);
            CHECK(filtered == graded);
        }
    }
    CHECK(confluent_seen >= 10);
}
