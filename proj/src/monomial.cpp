#include "nkz/monomial.hpp"

#include <algorithm>
#include <functional>

namespace nkz {

MonomialSet make_monomial_set(int n, int N, const std::vector<Word>& words) {
    if (N < 2) throw InvalidInput("monomial set requires N >= 2");
    MonomialSet c;
    c.n = n;
    c.N = N;
    for (const auto& w : words) {
        if (static_cast<int>(w.size()) != N)
            throw InvalidInput("monomial of degree " + std::to_string(w.size()) +
                               " in a degree-" + std::to_string(N) + " set");
        validate_word(w, n);
        c.words.insert(w);
    }
    return c;
}

Presentation monomial_presentation(const MonomialSet& c) {
    Presentation p;
    p.n = c.n;
    p.N = c.N;
    for (const auto& w : c.words) p.relations.push_back(unit_tensor<Rational>(c.n, w));
    return p;
}

Presentation monomial_presentation(int n, const Word& f) {
    return monomial_presentation(make_monomial_set(n, static_cast<int>(f.size()), {f}));
}

namespace {

/// Overlap of u and v at shift m: u's last N-m letters match v's first N-m.
bool overlaps_at(const Word& u, const Word& v, int m) {
    const int N = static_cast<int>(u.size());
    for (int i = 0; i < N - m; ++i)
        if (u[static_cast<std::size_t>(m + i)] != v[static_cast<std::size_t>(i)]) return false;
    return true;
}

Word glue(const Word& u, const Word& v, int m) {
    Word w = u;
    w.insert(w.end(), v.end() - m, v.end());
    return w;
}

} // namespace

MonomialVerdict is_koszul_set(const MonomialSet& c) {
    const int N = c.N;
    for (int m = 2; m < N; ++m) {
        for (const Word& u : c.words) {
            for (const Word& v : c.words) {
                if (!overlaps_at(u, v, m)) continue;
                const Word w = glue(u, v, m);
                const Word middle(w.begin() + (m - 1), w.begin() + (m - 1) + N);
                if (!c.words.count(middle)) return {false, w};
            }
        }
    }
    return {true, std::nullopt};
}

bool is_koszul_single(const Word& f) {
    const int N = static_cast<int>(f.size());
    if (N < 2) throw InvalidInput("monomial relation of degree < 2");
    for (int m = 2; m < N; ++m) {
        if (!has_period(f, m)) continue;
        const Word prefix(f.begin(), f.begin() + m);
        if (!is_letter_power(prefix)) return false;
    }
    return true;
}

Subspace monomial_w_space(int n, const Word& f, int m, const Limits& limits) {
    const int N = static_cast<int>(f.size());
    if (m < N + 1) throw InvalidInput("closed-form W-space only applies for m >= N+1");
    if (m > limits.max_degree)
        throw ResourceLimit("W-space degree " + std::to_string(m) + " exceeds cap " +
                            std::to_string(limits.max_degree));
    validate_word(f, n);
    if (!is_letter_power(f)) return zero_subspace<Rational>(n, m);
    const Word power(static_cast<std::size_t>(m), f[0]);
    Subspace s;
    s.n = n;
    s.degree = m;
    s.rows.push_back(unit_tensor<Rational>(n, power));
    return s;
}

long long avoid_count(const Word& f, int n, int d, const Limits& limits) {
    const int N = static_cast<int>(f.size());
    if (N == 0) throw InvalidInput("empty factor");
    validate_word(f, n);
    if (d < 0) throw InvalidInput("negative degree");
    if (d > limits.max_degree)
        throw ResourceLimit("avoid_count degree " + std::to_string(d) + " exceeds cap " +
                            std::to_string(limits.max_degree));

    // failure function of the pattern
    std::vector<int> fail(static_cast<std::size_t>(N), 0);
    for (int i = 1; i < N; ++i) {
        int s = fail[static_cast<std::size_t>(i - 1)];
        while (s > 0 && f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(s)])
            s = fail[static_cast<std::size_t>(s - 1)];
        if (f[static_cast<std::size_t>(i)] == f[static_cast<std::size_t>(s)]) ++s;
        fail[static_cast<std::size_t>(i)] = s;
    }
    auto step = [&](int state, int letter) {
        int s = state;
        while (s > 0 && f[static_cast<std::size_t>(s)] != letter)
            s = fail[static_cast<std::size_t>(s - 1)];
        return f[static_cast<std::size_t>(s)] == letter ? s + 1 : 0;
    };

    std::vector<long long> cnt(static_cast<std::size_t>(N), 0);
    cnt[0] = 1; // empty word
    for (int t = 0; t < d; ++t) {
        std::vector<long long> next(static_cast<std::size_t>(N), 0);
        for (int s = 0; s < N; ++s) {
            if (cnt[static_cast<std::size_t>(s)] == 0) continue;
            for (int a = 0; a < n; ++a) {
                const int s2 = step(s, a);
                if (s2 == N) continue; // the factor appeared
                next[static_cast<std::size_t>(s2)] += cnt[static_cast<std::size_t>(s)];
            }
        }
        cnt = std::move(next);
    }
    long long total = 0;
    for (long long c : cnt) total += c;
    return total;
}

MonomialProfile monomial_profile(int n, const Word& f) {
    validate_word(f, n);
    if (!is_koszul_single(f))
        throw InvalidInput("monomial profile requires a Koszul single relation");
    MonomialProfile out;
    out.koszul = true;
    out.pure_power = is_letter_power(f);
    out.gldim_infinite = out.pure_power;
    out.as_gorenstein = false;
    if (out.pure_power)
        out.gk_dimension = n == 1 ? 0 : -1;
    else
        out.gk_dimension = (n == 2 && static_cast<int>(f.size()) == 2) ? 2 : -1;
    return out;
}

long long koszul_census(int n, int N, int p, const Limits& limits) {
    if (N < 2 || n < 1) throw InvalidInput("census requires n >= 1, N >= 2");
    const std::uint64_t total64 = pow_checked(n, N);
    if (total64 > 4096)
        throw ResourceLimit("census alphabet n^N = " + std::to_string(total64) + " too large");
    const int total = static_cast<int>(total64);
    if (p < 0 || p > total) throw InvalidInput("census subset size out of range");

    // binomial guard
    long double approx = 1;
    for (int i = 0; i < p; ++i) approx = approx * (total - i) / (i + 1);
    if (approx > 2e7)
        throw ResourceLimit("census C(" + std::to_string(total) + "," + std::to_string(p) +
                            ") exceeds the enumeration cap");
    (void)limits;

    std::vector<Word> all;
    all.reserve(static_cast<std::size_t>(total));
    for (int w = 0; w < total; ++w) all.push_back(decode_word(static_cast<std::uint64_t>(w), N, n));

    long long count = 0;
    std::vector<int> chosen;
    std::set<Word> chosen_set;

    // Middles required by overlapping pairs already chosen; a branch dies as
    // soon as a required middle can no longer be added.
    std::function<bool(int)> all_requirements_open = [&](int next) {
        for (int m = 2; m < N; ++m)
            for (int ui : chosen)
                for (int vi : chosen) {
                    const Word& u = all[static_cast<std::size_t>(ui)];
                    const Word& v = all[static_cast<std::size_t>(vi)];
                    if (!overlaps_at(u, v, m)) continue;
                    const Word w = glue(u, v, m);
                    const Word middle(w.begin() + (m - 1), w.begin() + (m - 1) + N);
                    if (chosen_set.count(middle)) continue;
                    if (static_cast<int>(encode_word(middle, n)) < next) return false;
                }
        return true;
    };

    std::function<void(int)> dfs = [&](int next) {
        if (static_cast<int>(chosen.size()) == p) {
            MonomialSet c;
            c.n = n;
            c.N = N;
            c.words = chosen_set;
            if (is_koszul_set(c).is_koszul) ++count;
            return;
        }
        const int remaining = p - static_cast<int>(chosen.size());
        for (int w = next; w + remaining <= total; ++w) {
            chosen.push_back(w);
            chosen_set.insert(all[static_cast<std::size_t>(w)]);
            if (all_requirements_open(w + 1)) dfs(w + 1);
            chosen_set.erase(all[static_cast<std::size_t>(w)]);
            chosen.pop_back();
        }
    };
    dfs(0);
    return count;
}

} // namespace nkz
