#include "nkz/presentation.hpp"

namespace nkz {

void validate_presentation(const Presentation& p) {
    if (p.n < 0) throw InvalidInput("negative generator count");
    if (p.N < 2) throw InvalidInput("relation degree N must be >= 2");
    if (p.n == 0 && !p.relations.empty())
        throw InvalidInput("presentation with n = 0 cannot carry relations");
    for (const auto& f : p.relations) {
        if (f.is_zero()) throw InvalidInput("zero relation tensor");
        if (f.degree != p.N)
            throw InvalidInput("relation of degree " + std::to_string(f.degree) +
                               " in an N = " + std::to_string(p.N) + " presentation");
        if (f.n != p.n) throw InvalidInput("relation tensor over wrong generator count");
    }
}

Subspace relation_space(const Presentation& p) {
    validate_presentation(p);
    return span_of<Rational>(p.n, p.N, p.relations);
}

std::uint64_t nu(int N, int i) {
    if (i < 0) throw InvalidInput("nu of negative index");
    const std::uint64_t half = static_cast<std::uint64_t>(i / 2);
    return (i % 2 == 0) ? static_cast<std::uint64_t>(N) * half
                        : static_cast<std::uint64_t>(N) * half + 1;
}

Subspace w_space(const Presentation& p, int m, const Limits& limits) {
    validate_presentation(p);
    if (m < 0) throw InvalidInput("w_space of negative degree");
    if (m > limits.max_degree)
        throw ResourceLimit("w_space degree " + std::to_string(m) + " exceeds cap " +
                            std::to_string(limits.max_degree));
    if (m < p.N) return full_subspace<Rational>(p.n, m);
    Subspace r = relation_space(p);
    if (m == p.N) return r;
    Subspace w = r;
    for (int k = p.N + 1; k <= m; ++k) {
        if (w.is_zero()) return zero_subspace<Rational>(p.n, m);
        // W_k = (W_{k-1} (x) V) meet (V^{x(k-N)} (x) R)
        w = intersect(extend(w, 0, 1), extend(r, k - p.N, 0));
    }
    return w;
}

IdealSlices::IdealSlices(const Presentation& p, int max_degree, const Limits& limits)
    : p_(p), max_degree_(max_degree) {
    validate_presentation(p);
    if (max_degree > limits.max_degree)
        throw ResourceLimit("ideal slice degree " + std::to_string(max_degree) +
                            " exceeds cap " + std::to_string(limits.max_degree));
    pow_checked(p.n, max_degree);
    const Subspace r = relation_space(p);
    for (int d = p.N; d <= max_degree; ++d) {
        Echelon ech(p.n, d);
        if (d > p.N) {
            const Echelon& prev = slices_.back();
            for (const auto& row : prev.rows())
                for (int i = p.n - 1; i >= 0; --i) {
                    Tensor t;
                    t.n = p.n;
                    t.degree = d;
                    t.terms.reserve(row.terms.size());
                    for (const auto& [w, c] : row.terms)
                        t.terms.emplace_back(w * static_cast<std::uint64_t>(p.n) +
                                                 static_cast<std::uint64_t>(i),
                                             c);
                    ech.seed(std::move(t));
                }
        }
        const std::uint64_t left_words = pow_checked(p.n, d - p.N);
        const std::uint64_t shift = pow_checked(p.n, p.N);
        for (std::uint64_t u = 0; u < left_words; ++u) {
            for (const auto& f : r.rows) {
                Tensor t;
                t.n = p.n;
                t.degree = d;
                t.terms.reserve(f.terms.size());
                for (const auto& [w, c] : f.terms) t.terms.emplace_back(u * shift + w, c);
                ech.insert(t);
            }
        }
        slices_.push_back(std::move(ech));
    }
}

const Echelon& IdealSlices::slice(int d) const {
    if (d < p_.N || d > max_degree_)
        throw InvalidInput("ideal slice degree " + std::to_string(d) + " out of range");
    return slices_[static_cast<std::size_t>(d - p_.N)];
}

long long IdealSlices::ideal_dim(int d) const {
    if (d < p_.N) return 0;
    return static_cast<long long>(slice(d).dim());
}

long long IdealSlices::alg_dim(int d) const {
    if (d < 0) return 0;
    const long long full = static_cast<long long>(pow_checked(p_.n, d));
    return full - ideal_dim(d);
}

Tensor IdealSlices::project(const Tensor& t) const {
    if (t.degree < p_.N) return t;
    return slice(t.degree).reduce(t);
}

std::vector<std::uint64_t> IdealSlices::basis_words(int d) const {
    const std::uint64_t full = pow_checked(p_.n, d);
    std::vector<std::uint64_t> words;
    if (d < p_.N) {
        words.reserve(full);
        for (std::uint64_t w = 0; w < full; ++w) words.push_back(w);
        return words;
    }
    const Echelon& ech = slice(d);
    words.reserve(full - ech.dim());
    for (std::uint64_t w = 0; w < full; ++w)
        if (!ech.has_pivot(w)) words.push_back(w);
    return words;
}

long long graded_dim(const Presentation& p, int d, const Limits& limits) {
    validate_presentation(p);
    if (d < 0) throw InvalidInput("graded_dim of negative degree");
    if (d > limits.max_degree)
        throw ResourceLimit("graded_dim degree " + std::to_string(d) + " exceeds cap " +
                            std::to_string(limits.max_degree));
    if (d < p.N || p.relations.empty()) return static_cast<long long>(pow_checked(p.n, d));
    IdealSlices slices(p, d, limits);
    return slices.alg_dim(d);
}

Presentation free_product(const Presentation& p, const Presentation& q) {
    validate_presentation(p);
    validate_presentation(q);
    if (p.N != q.N)
        throw InvalidInput("free product of presentations with different relation degrees");
    Presentation out;
    out.n = p.n + q.n;
    out.N = p.N;
    out.relations = p.relations;
    for (auto& f : out.relations) f.n = out.n;
    // Re-encode p's relations over the enlarged alphabet (indices unchanged).
    for (auto& f : out.relations) {
        std::vector<std::pair<std::uint64_t, Rational>> raw;
        raw.reserve(f.terms.size());
        for (const auto& [w, c] : f.terms) {
            Word word = decode_word(w, f.degree, p.n);
            raw.emplace_back(encode_word(word, out.n), c);
        }
        f = make_tensor<Rational>(out.n, f.degree, std::move(raw));
    }
    for (const auto& g : q.relations) {
        std::vector<std::pair<std::uint64_t, Rational>> raw;
        raw.reserve(g.terms.size());
        for (const auto& [w, c] : g.terms) {
            Word word = decode_word(w, g.degree, q.n);
            for (int& letter : word) letter += p.n;
            raw.emplace_back(encode_word(word, out.n), c);
        }
        out.relations.push_back(make_tensor<Rational>(out.n, q.N, std::move(raw)));
    }
    return out;
}

} // namespace nkz
